from hypothesis import given

from conftest import gentle_presentations
from locgentle import catalog
from locgentle.maxpaths import (
    decompose_maximal_paths,
    forbidden_sets,
    gamma_l,
    gamma_r,
    koszul_dual,
    lprime_and_lplus,
)


def names(pres, paths):
    return [pres.name(p) for p in paths]


def test_hilb_maximal_paths():
    pres = catalog.hilb()
    dec = decompose_maximal_paths(pres)
    got = {(pres.name(m.as_path()), m.infinite) for m in dec.paths}
    assert got == {("a1.a2", False), ("c", True), ("b1", False), ("b2", False)}
    c = pres.quiver.arrow_index["c"]
    assert dec.of(c).infinite and dec.of(c).period == 1


def test_cycle_stored_in_canonical_rotation():
    pres = catalog.cyclic(2)
    (gamma,) = decompose_maximal_paths(pres).paths
    assert gamma.infinite and gamma.arrows == (0, 1, 2)


def test_gamma_walks():
    pres = catalog.loop_with_two_sinks()
    q = pres.quiver
    walk = gamma_r(pres, q.arrow_index["c"])
    assert pres.name(walk.path) == "c.a" and not walk.cycle
    back = gamma_l(pres, q.arrow_index["a"])
    assert pres.name(back.path) == "c.a"


def test_koszul_dual_pairs():
    assert koszul_dual(catalog.two_loops_commutative()) == catalog.two_loops_exterior()
    assert koszul_dual(catalog.cyclic(3)) == catalog.cyclic(3, all_relations=True)
    assert koszul_dual(catalog.kronecker()) == catalog.kronecker()


def test_forbidden_paths_from_vertex_3_of_hilb():
    pres = catalog.hilb()
    fs = forbidden_sets(pres, pres.quiver.vertex_index["3"], 4)
    assert set(names(pres, fs.right_maximal)) == {"a1.c.a2", "b1.b2"}
    assert fs.projective_dimension == 3
    assert [len(level) for level in fs.levels] == [1, 2, 2, 1, 0]
    assert fs.periodicity is None


def test_periodic_forbidden_paths():
    pres = catalog.two_loops_commutative()
    fs = forbidden_sets(pres, 0, 5)
    assert fs.projective_dimension == float("inf")
    assert fs.periodicity == (0, 2)
    assert set(names(pres, fs.levels[2])) == {"x.y", "y.x"}


def lplus_names(pres, v):
    data = lprime_and_lplus(pres)
    return {(pres.name(pair.p), pres.name(pair.w)) for pair in data.lplus[pres.quiver.vertex_index[v]]}


def test_lplus_loops_at_ends():
    pres = catalog.loops_at_ends()
    assert names(pres, lprime_and_lplus(pres).lprime) == ["c1.a1.a2.c2"]
    assert lplus_names(pres, "1") == set()
    assert lplus_names(pres, "2") == {("c1.a1.a2.c2", "a2")}
    assert lplus_names(pres, "3") == {("c1.a1.a2.c2", "e3")}


def test_lplus_arrow_into_two_cycle():
    pres = catalog.arrow_into_two_cycle()
    assert lplus_names(pres, "2") == {("a", "e2"), ("a", "b1.b2")}


def test_lplus_loop_with_two_sinks():
    pres = catalog.loop_with_two_sinks()
    assert lplus_names(pres, "1") == {("b", "a"), ("b", "c.a")}


@given(gentle_presentations())
def test_maximal_paths_partition_the_arrows(pres):
    dec = decompose_maximal_paths(pres)
    seen = [a for m in dec.paths for a in m.arrows]
    assert sorted(seen) == list(range(pres.num_arrows))
    for m in dec.paths:
        arrows = m.arrows + (m.arrows[:1] if m.infinite else ())
        assert all(pres.allowed(a, b) for a, b in zip(arrows, arrows[1:]))
        if not m.infinite:
            assert pres.next_arrow(m.arrows[-1]) is None
            assert pres.prev_arrow(m.arrows[0]) is None


@given(gentle_presentations())
def test_koszul_dual_is_an_involution(pres):
    dual = koszul_dual(pres)
    assert dual.quiver == pres.quiver
    assert koszul_dual(dual) == pres
    assert not (dual.relations & pres.relations)


@given(gentle_presentations())
def test_forbidden_paths_are_chains_of_relations(pres):
    for v in range(pres.num_vertices):
        fs = forbidden_sets(pres, v, 5)
        for level in fs.levels[1:]:
            for p in level:
                assert p.source == v
                assert all((a, b) in pres.relations for a, b in zip(p.arrows, p.arrows[1:]))
        for p in fs.right_maximal:
            nxt = [b for b in pres.quiver.out_arrows(p.target) if (p.last, b) in pres.relations]
            assert not nxt


@given(gentle_presentations())
def test_gamma_r_is_right_maximal_or_a_cycle(pres):
    for a in range(pres.num_arrows):
        walk = gamma_r(pres, a)
        assert walk.path.first == a
        if walk.cycle:
            assert pres.allowed(walk.path.last, a)
        else:
            assert pres.next_arrow(walk.path.last) is None
