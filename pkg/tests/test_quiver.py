import pytest
from hypothesis import given

from conftest import gentle_presentations
from locgentle import catalog
from locgentle.fileformat import (
    PresentationSyntaxError,
    format_presentation,
    parse_presentation,
    parse_quiver_text,
    presentation_from_dict,
    presentation_to_dict,
)
from locgentle.quiver import (
    DegreeExceeded,
    Disconnected,
    DuplicateName,
    EmptyQuiver,
    ExactlyOneViolated,
    Path,
    RelationNotLength2,
    UnknownEndpoint,
    build_quiver,
    make_presentation,
    path_basis,
    validate_presentation,
)


def test_paths_compose_left_to_right():
    q = catalog.hilb().quiver
    p = q.parse_path("a1.a2")
    assert (p.source, p.target) == (q.vertex_index["3"], q.vertex_index["1"])
    assert p.length == 2 and p.first == q.arrow_index["a1"] and p.last == q.arrow_index["a2"]
    assert q.parse_path("a1").concat(q.parse_path("a2")) == p
    assert q.parse_path("a1").is_prefix_of(p) and q.parse_path("a2").is_suffix_of(p)
    with pytest.raises(ValueError):
        q.path([q.arrow_index["a2"], q.arrow_index["a1"]])


def test_stationary_path_names():
    pres = catalog.hilb()
    e = pres.quiver.stationary(0)
    assert e.is_stationary and e.length == 0 and pres.name(e) == "e1"
    assert pres.quiver.parse_path("e:4") == pres.quiver.stationary(3)


def test_kinds():
    assert catalog.hilb().kind == "locally-gentle"
    assert catalog.kronecker().kind == "gentle"
    assert catalog.cyclic(2).kind == "locally-gentle"
    assert catalog.cyclic(2, all_relations=True).is_gentle


def test_structural_errors():
    with pytest.raises(EmptyQuiver):
        build_quiver([], [])
    with pytest.raises(EmptyQuiver):
        build_quiver(["1"], [])
    with pytest.raises(DuplicateName):
        build_quiver(["1", "1"], [("a", "1", "1")])
    with pytest.raises(DuplicateName):
        build_quiver(["1"], [("a", "1", "1"), ("a", "1", "1")])
    with pytest.raises(UnknownEndpoint):
        build_quiver(["1"], [("a", "1", "2")])
    with pytest.raises(Disconnected):
        build_quiver(["1", "2"], [("c", "1", "1"), ("d", "2", "2")])


def test_degree_condition():
    with pytest.raises(DegreeExceeded) as info:
        make_presentation(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")])
    assert info.value.vertex == "1" and info.value.outdeg == 3


def test_relations_must_be_paths():
    q = catalog.kronecker().quiver
    with pytest.raises(RelationNotLength2):
        validate_presentation(q, [(0, 1)])


def test_dropping_a_relation_names_condition_ii_at_vertex_2():
    with pytest.raises(ExactlyOneViolated) as info:
        make_presentation(
            ["1", "2", "3", "4", "5"],
            [("a2", "2", "1"), ("a1", "3", "2"), ("c", "2", "2"), ("b1", "3", "4"), ("b2", "4", "5")],
            [("a1", "c"), ("b1", "b2")],
        )
    err = info.value
    assert err.condition == "ii" and err.vertex == "2" and err.arrow == "a2"
    assert set(err.pair) == {"a1", "c"} and err.count == 0


def test_condition_iii_reported():
    # one loop in, two arrows out of vertex 1, both compositions killed
    with pytest.raises(ExactlyOneViolated) as info:
        make_presentation(["1", "2"], [("c", "1", "1"), ("a", "1", "2")], [("c", "c"), ("c", "a")])
    assert info.value.condition in ("ii", "iii") and info.value.count == 2


def test_path_basis_hilb():
    pres = catalog.hilb()
    assert [len(path_basis(pres, n)) for n in range(6)] == [5, 5, 2, 1, 1, 1]
    assert {pres.name(p) for p in path_basis(pres, 2)} == {"a1.a2", "c.c"}


@given(gentle_presentations())
def test_path_basis_consists_of_nonzero_paths(pres):
    for n in range(4):
        basis = path_basis(pres, n)
        assert len(set(basis)) == len(basis)
        for p in basis:
            assert p.length == n
            assert all(pres.allowed(a, b) for a, b in zip(p.arrows, p.arrows[1:]))


HILB_TEXT = """\
# five vertices, loop at 2
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
arrow a2 2 1
arrow a1 3 2
arrow c 2 2   # the loop
arrow b1 3 4
arrow b2 4 5
rel a1 c
rel c a2
rel b1 b2
"""


def test_parse_hilb_file():
    pres = parse_presentation(HILB_TEXT)
    assert pres == catalog.hilb()
    assert pres.kind == "locally-gentle"


def test_relation_with_three_arrows_is_a_syntax_error():
    text = HILB_TEXT.replace("rel b1 b2", "rel a1 c a2")
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert info.value.line == 14


@pytest.mark.parametrize(
    "line, bad",
    [(2, "vertex"), (2, "vertex 1 2"), (2, "loop x 1 1"), (2, "arrow a 1")],
)
def test_syntax_errors_carry_line_numbers(line, bad):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_quiver_text("vertex 0\n" + bad + "\n")
    assert info.value.line == line


def test_relation_that_is_not_a_path():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation(HILB_TEXT.replace("rel b1 b2", "rel b2 b1"))


@given(gentle_presentations())
def test_text_and_dict_round_trips(pres):
    assert parse_presentation(format_presentation(pres)) == pres
    assert presentation_from_dict(presentation_to_dict(pres)) == pres


def test_path_ordering_is_total():
    assert sorted([Path(1, 1), Path(0, 0)]) == [Path(0, 0), Path(1, 1)]
