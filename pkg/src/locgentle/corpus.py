"""Enumeration of all gentle relation sets on a quiver, and of small quivers."""

from __future__ import annotations

from itertools import combinations, product

from .quiver import GentlePresentation, Quiver, build_quiver


class RelationsPresent(ValueError):
    pass


def local_choices(quiver: Quiver, v: int) -> list[frozenset[tuple[int, int]]]:
    """Relation sets at v whose surviving compositions form an admissible matching.

    A composition ba (b into v, a out of v) survives when it is not a
    relation.  Survivors must form a partial matching that covers every
    outgoing arrow when two arrows come in, and every incoming arrow when two
    go out.
    """
    ins, outs = quiver.in_arrows(v), quiver.out_arrows(v)
    pairs = [(b, a) for b in ins for a in outs]
    choices = []
    for r in range(len(pairs) + 1):
        for kept in combinations(pairs, r):
            used_in = [b for b, _ in kept]
            used_out = [a for _, a in kept]
            if len(set(used_in)) != len(used_in) or len(set(used_out)) != len(used_out):
                continue
            if len(ins) == 2 and set(used_out) != set(outs):
                continue
            if len(outs) == 2 and set(used_in) != set(ins):
                continue
            choices.append(frozenset(pairs) - frozenset(kept))
    return choices


def enumerate_presentations(quiver: Quiver) -> list[GentlePresentation]:
    """All gentle presentations on ``quiver``, as the product of vertex-local choices."""
    per_vertex = [local_choices(quiver, v) for v in range(len(quiver.vertices))]
    return [GentlePresentation(quiver, frozenset().union(*combo)) for combo in product(*per_vertex)]


def small_quivers(num_vertices: int, max_arrows: int) -> list[Quiver]:
    """Connected quivers on exactly ``num_vertices`` labelled vertices with in/out degrees at most 2.

    Arrows between the same ordered pair of vertices are interchangeable, so
    each quiver appears once per multiplicity pattern.
    """
    verts = [str(i + 1) for i in range(num_vertices)]
    slots = [(i, j) for i in range(num_vertices) for j in range(num_vertices)]
    out = []
    for counts in product(range(3), repeat=len(slots)):
        total = sum(counts)
        if total == 0 or total > max_arrows:
            continue
        outdeg = [0] * num_vertices
        indeg = [0] * num_vertices
        for (i, j), c in zip(slots, counts):
            outdeg[i] += c
            indeg[j] += c
        if max(outdeg) > 2 or max(indeg) > 2:
            continue
        arrows = []
        for (i, j), c in zip(slots, counts):
            for k in range(c):
                arrows.append((f"x{i + 1}{j + 1}{'abc'[k]}", verts[i], verts[j]))
        try:
            out.append(build_quiver(verts, arrows))
        except ValueError:
            continue
    return out


def small_corpus(max_vertices: int = 2, max_arrows: int = 4) -> list[GentlePresentation]:
    pres = []
    for n in range(1, max_vertices + 1):
        for q in small_quivers(n, max_arrows):
            pres.extend(enumerate_presentations(q))
    return pres
