"""Small named presentations used in tests, scripts and the CLI demos."""

from __future__ import annotations

from .quiver import GentlePresentation, make_presentation


def hilb() -> GentlePresentation:
    """Five vertices, a loop at 2, and two finite strands; series (5 - 3t^2 - t^3)/(1 - t)."""
    return make_presentation(
        ["1", "2", "3", "4", "5"],
        [("a2", "2", "1"), ("a1", "3", "2"), ("c", "2", "2"), ("b1", "3", "4"), ("b2", "4", "5")],
        [("a1", "c"), ("c", "a2"), ("b1", "b2")],
    )


def kronecker() -> GentlePresentation:
    return make_presentation(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


def two_loops_commutative() -> GentlePresentation:
    """k[x, y]/(xy, yx)."""
    return make_presentation(["1"], [("x", "1", "1"), ("y", "1", "1")], [("x", "y"), ("y", "x")])


def two_loops_exterior() -> GentlePresentation:
    """k<x, y>/(x^2, y^2)."""
    return make_presentation(["1"], [("x", "1", "1"), ("y", "1", "1")], [("x", "x"), ("y", "y")])


def chain_loops() -> GentlePresentation:
    """Loop a at 1, b: 1 -> 2, c: 2 -> 3, loop d at 3, relations ab and cd."""
    return make_presentation(
        ["1", "2", "3"],
        [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "3"), ("d", "3", "3")],
        [("a", "b"), ("c", "d")],
    )


def loops_at_ends() -> GentlePresentation:
    """Loops c1 at 1 and c2 at 3 joined by a1: 1 -> 2, a2: 2 -> 3, with c1a1, a1a2, a2c2 killed."""
    return make_presentation(
        ["1", "2", "3"],
        [("a1", "1", "2"), ("a2", "2", "3"), ("c1", "1", "1"), ("c2", "3", "3")],
        [("c1", "a1"), ("a1", "a2"), ("a2", "c2")],
    )


def arrow_into_two_cycle() -> GentlePresentation:
    """a: 1 -> 2 feeding the two-cycle b1: 2 -> 3, b2: 3 -> 2 with b2b1 killed."""
    return make_presentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b1", "2", "3"), ("b2", "3", "2")],
        [("b2", "b1")],
    )


def loop_with_two_sinks() -> GentlePresentation:
    """Loop c at 1 with c^2 = 0, a: 1 -> 2 and b: 3 -> 2."""
    return make_presentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("c", "1", "1"), ("b", "3", "2")],
        [("c", "c")],
    )


def cyclic(n: int, all_relations: bool = False) -> GentlePresentation:
    """The oriented cycle on n + 1 vertices, with no relations or with every length-two path killed."""
    verts = [str(i) for i in range(n + 1)]
    arrows = [(f"a{i}", str(i), str((i + 1) % (n + 1))) for i in range(n + 1)]
    rels = [(f"a{i}", f"a{(i + 1) % (n + 1)}") for i in range(n + 1)] if all_relations else []
    return make_presentation(verts, arrows, rels)


def truncated_loop() -> GentlePresentation:
    """k[c]/(c^2)."""
    return make_presentation(["1"], [("c", "1", "1")], [("c", "c")])


NAMED = {
    "hilb": hilb,
    "kronecker": kronecker,
    "two-loops-commutative": two_loops_commutative,
    "two-loops-exterior": two_loops_exterior,
    "chain-loops": chain_loops,
    "loops-at-ends": loops_at_ends,
    "arrow-into-two-cycle": arrow_into_two_cycle,
    "loop-with-two-sinks": loop_with_two_sinks,
    "truncated-loop": truncated_loop,
}
