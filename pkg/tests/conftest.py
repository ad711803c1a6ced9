from hypothesis import assume, settings
from hypothesis import strategies as st

from locgentle.corpus import local_choices
from locgentle.quiver import GentlePresentation, build_quiver

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def gentle_presentations(draw, max_vertices: int = 4, max_arrows: int = 6):
    """A connected quiver with in/out degrees <= 2 and a random admissible relation set."""
    n = draw(st.integers(1, max_vertices))
    outdeg = [0] * n
    indeg = [0] * n
    edges = []

    def add(i, j):
        outdeg[i] += 1
        indeg[j] += 1
        edges.append((i, j))

    # spanning tree first so the quiver is connected
    for k in range(1, n):
        other = draw(st.integers(0, k - 1))
        i, j = (k, other) if draw(st.booleans()) else (other, k)
        assume(outdeg[i] < 2 and indeg[j] < 2)
        add(i, j)
    extra = draw(st.integers(0 if n > 1 else 1, max(0, max_arrows - len(edges))))
    for _ in range(extra):
        free = [(i, j) for i in range(n) for j in range(n) if outdeg[i] < 2 and indeg[j] < 2]
        if not free:
            break
        add(*draw(st.sampled_from(free)))
    verts = [str(i + 1) for i in range(n)]
    quiver = build_quiver(verts, [(f"x{k}", verts[i], verts[j]) for k, (i, j) in enumerate(edges)])
    rels = frozenset()
    for v in range(n):
        rels |= draw(st.sampled_from(local_choices(quiver, v)))
    return GentlePresentation(quiver, rels)
