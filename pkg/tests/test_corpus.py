import pytest

from locgentle import catalog
from locgentle.corpus import enumerate_presentations, local_choices, small_corpus, small_quivers
from locgentle.maxpaths import koszul_dual
from locgentle.quiver import validate_presentation


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_cycle_counts(n):
    assert len(enumerate_presentations(catalog.cyclic(n).quiver)) == 2 ** (n + 1)


def test_kronecker_count():
    assert len(enumerate_presentations(catalog.kronecker().quiver)) == 1


def test_two_loops_gives_both_named_algebras():
    found = enumerate_presentations(catalog.two_loops_commutative().quiver)
    assert set(found) == {catalog.two_loops_commutative(), catalog.two_loops_exterior()}


def test_local_choices_at_double_vertex():
    q = catalog.hilb().quiver
    v2 = q.vertex_index["2"]
    # two in (a1, c), two out (a2, c): the survivors form a perfect matching
    assert len(local_choices(q, v2)) == 2


def test_small_quiver_listing():
    quivers = small_quivers(1, 2)
    assert len(quivers) == 2  # one loop, two loops
    assert all(max(q.outdeg(v) for v in range(len(q.vertices))) <= 2 for q in small_quivers(2, 4))


def test_corpus_validates_and_is_closed_under_duality():
    corpus = small_corpus()
    assert len(corpus) == len(set(corpus)) == 52
    members = set(corpus)
    for pres in corpus:
        assert validate_presentation(pres.quiver, pres.relations) == pres
        assert koszul_dual(pres) in members


def test_three_vertex_quivers_are_connected():
    for q in small_quivers(3, 3):
        assert len(q.vertices) == 3 and 2 <= len(q.arrows) <= 3
