"""Quivers, paths and validated quadratic monomial presentations.

Paths are composed left to right: ``ab`` means "first a, then b", so the
target of ``a`` must equal the source of ``b``.  Everything is indexed by
declaration order and immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PresentationError(ValueError):
    """Base class for malformed quivers and relation sets."""


class EmptyQuiver(PresentationError):
    pass


class DuplicateName(PresentationError):
    pass


class UnknownEndpoint(PresentationError):
    pass


class Disconnected(PresentationError):
    pass


class RelationNotLength2(PresentationError):
    pass


class DegreeExceeded(PresentationError):
    def __init__(self, vertex: str, indeg: int, outdeg: int):
        self.vertex = vertex
        self.indeg = indeg
        self.outdeg = outdeg
        super().__init__(
            f"condition (i) violated at vertex {vertex}: indeg {indeg}, outdeg {outdeg} (both must be <= 2)"
        )


class ExactlyOneViolated(PresentationError):
    """A pair of compositions through a vertex has zero or two relations.

    ``condition`` is ``"ii"`` when two arrows enter the vertex and the fixed
    arrow leaves it, ``"iii"`` when the fixed arrow enters and two leave.
    """

    def __init__(self, condition: str, vertex: str, arrow: str, pair: tuple[str, str], count: int):
        self.condition = condition
        self.vertex = vertex
        self.arrow = arrow
        self.pair = pair
        self.count = count
        if condition == "ii":
            comps = f"{pair[0]}{arrow}, {pair[1]}{arrow}"
        else:
            comps = f"{arrow}{pair[0]}, {arrow}{pair[1]}"
        super().__init__(
            f"condition ({condition}) violated at vertex {vertex}: "
            f"{count} of the compositions {comps} are relations, expected exactly one"
        )


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path given by its endpoints and arrow indices; no arrows means stationary."""

    source: int
    target: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_stationary(self) -> bool:
        return not self.arrows

    @property
    def first(self) -> int | None:
        return self.arrows[0] if self.arrows else None

    @property
    def last(self) -> int | None:
        return self.arrows[-1] if self.arrows else None

    def concat(self, other: "Path") -> "Path":
        if self.target != other.source:
            raise ValueError("paths do not compose")
        return Path(self.source, other.target, self.arrows + other.arrows)

    def is_prefix_of(self, other: "Path") -> bool:
        return self.source == other.source and other.arrows[: len(self.arrows)] == self.arrows

    def is_suffix_of(self, other: "Path") -> bool:
        n = len(self.arrows)
        return self.target == other.target and (n == 0 or other.arrows[-n:] == self.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def _outgoing(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i, a in enumerate(self.arrows) if a.source == v) for v in range(len(self.vertices)))

    @cached_property
    def _incoming(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i, a in enumerate(self.arrows) if a.target == v) for v in range(len(self.vertices)))

    def out_arrows(self, v: int) -> tuple[int, ...]:
        return self._outgoing[v]

    def in_arrows(self, v: int) -> tuple[int, ...]:
        return self._incoming[v]

    def outdeg(self, v: int) -> int:
        return len(self._outgoing[v])

    def indeg(self, v: int) -> int:
        return len(self._incoming[v])

    def source(self, a: int) -> int:
        return self.arrows[a].source

    def target(self, a: int) -> int:
        return self.arrows[a].target

    def stationary(self, v: int) -> Path:
        return Path(v, v, ())

    def path(self, arrows: Sequence[int]) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("use stationary() for length-zero paths")
        for a, b in zip(arrows, arrows[1:]):
            if self.target(a) != self.source(b):
                raise ValueError(f"arrows {self.arrows[a].name} and {self.arrows[b].name} do not compose")
        return Path(self.source(arrows[0]), self.target(arrows[-1]), arrows)

    def parse_path(self, names: str | Sequence[str]) -> Path:
        """Build a path from arrow names; ``"e:v"`` gives the stationary path at v."""
        if isinstance(names, str):
            if names.startswith("e:"):
                return self.stationary(self.vertex_index[names[2:]])
            names = names.split(".")
        return self.path([self.arrow_index[n] for n in names])

    def name(self, p: Path) -> str:
        if p.is_stationary:
            return f"e{self.vertices[p.source]}"
        return ".".join(self.arrows[a].name for a in p.arrows)

    def length_two_paths(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(len(self.arrows)) for b in self._outgoing[self.target(a)]]

    @property
    def is_oriented_cycle(self) -> bool:
        """True when every vertex has exactly one arrow in and one arrow out (the cyclic quiver)."""
        return all(self.indeg(v) == 1 and self.outdeg(v) == 1 for v in range(len(self.vertices)))


def build_quiver(vertex_names: Iterable[str], arrow_triples: Iterable[tuple[str, str, str]]) -> Quiver:
    vertex_names = [str(v) for v in vertex_names]
    arrow_triples = [tuple(str(x) for x in t) for t in arrow_triples]
    if not vertex_names or not arrow_triples:
        raise EmptyQuiver("a quiver needs at least one vertex and one arrow")
    seen: set[str] = set()
    for v in vertex_names:
        if v in seen:
            raise DuplicateName(f"vertex {v} declared twice")
        seen.add(v)
    index = {v: i for i, v in enumerate(vertex_names)}
    arrows = []
    names: set[str] = set()
    for name, src, tgt in arrow_triples:
        if name in names:
            raise DuplicateName(f"arrow {name} declared twice")
        names.add(name)
        for end in (src, tgt):
            if end not in index:
                raise UnknownEndpoint(f"arrow {name} uses undeclared vertex {end}")
        arrows.append(Arrow(name, index[src], index[tgt]))

    adj: list[set[int]] = [set() for _ in vertex_names]
    for a in arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    reached = {0}
    queue = deque([0])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != len(vertex_names):
        missing = [vertex_names[i] for i in range(len(vertex_names)) if i not in reached]
        raise Disconnected(f"vertices {', '.join(missing)} are not connected to {vertex_names[0]}")
    return Quiver(tuple(vertex_names), tuple(arrows))


def _check_conditions(quiver: Quiver, relations: frozenset[tuple[int, int]]) -> None:
    names = quiver.vertices
    arrow_name = lambda a: quiver.arrows[a].name  # noqa: E731
    for v in range(len(names)):
        if quiver.indeg(v) > 2 or quiver.outdeg(v) > 2:
            raise DegreeExceeded(names[v], quiver.indeg(v), quiver.outdeg(v))
    # (ii) is checked over all vertices before (iii) so that diagnostics are stable
    for v in range(len(names)):
        ins = quiver.in_arrows(v)
        if len(ins) == 2:
            for a in quiver.out_arrows(v):
                count = sum((b, a) in relations for b in ins)
                if count != 1:
                    raise ExactlyOneViolated("ii", names[v], arrow_name(a), (arrow_name(ins[0]), arrow_name(ins[1])), count)
    for v in range(len(names)):
        outs = quiver.out_arrows(v)
        if len(outs) == 2:
            for a in quiver.in_arrows(v):
                count = sum((a, b) in relations for b in outs)
                if count != 1:
                    raise ExactlyOneViolated("iii", names[v], arrow_name(a), (arrow_name(outs[0]), arrow_name(outs[1])), count)


@dataclass(frozen=True)
class GentlePresentation:
    """A quiver with length-two monomial relations satisfying the gentle conditions.

    Construction validates; use :func:`validate_presentation` or
    :func:`make_presentation` rather than calling this directly.
    """

    quiver: Quiver
    relations: frozenset[tuple[int, int]]

    def __post_init__(self):
        for a, b in self.relations:
            if self.quiver.target(a) != self.quiver.source(b):
                raise RelationNotLength2("relation is not a path")
        _check_conditions(self.quiver, self.relations)

    @property
    def num_vertices(self) -> int:
        return len(self.quiver.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.quiver.arrows)

    def allowed(self, a: int, b: int) -> bool:
        """Whether the composition ab is a nonzero path."""
        return self.quiver.target(a) == self.quiver.source(b) and (a, b) not in self.relations

    @cached_property
    def _next(self) -> tuple[int | None, ...]:
        out = []
        for a in range(self.num_arrows):
            nxt = [b for b in self.quiver.out_arrows(self.quiver.target(a)) if (a, b) not in self.relations]
            assert len(nxt) <= 1
            out.append(nxt[0] if nxt else None)
        return tuple(out)

    @cached_property
    def _prev(self) -> tuple[int | None, ...]:
        out = []
        for b in range(self.num_arrows):
            prv = [a for a in self.quiver.in_arrows(self.quiver.source(b)) if (a, b) not in self.relations]
            assert len(prv) <= 1
            out.append(prv[0] if prv else None)
        return tuple(out)

    def next_arrow(self, a: int) -> int | None:
        return self._next[a]

    def prev_arrow(self, b: int) -> int | None:
        return self._prev[b]

    def walk_forward(self, a: int) -> tuple[tuple[int, ...], bool]:
        """Follow the unique continuation from ``a``; report whether it closes up into a cycle at ``a``."""
        arrows = [a]
        seen = {a}
        while True:
            b = self._next[arrows[-1]]
            if b is None:
                return tuple(arrows), False
            if b in seen:
                # the walk can only re-enter at its start, since continuations are unique both ways
                assert b == a
                return tuple(arrows), True
            seen.add(b)
            arrows.append(b)

    def walk_backward(self, b: int) -> tuple[tuple[int, ...], bool]:
        arrows = [b]
        seen = {b}
        while True:
            a = self._prev[arrows[-1]]
            if a is None:
                return tuple(reversed(arrows)), False
            if a in seen:
                assert a == b
                return tuple(reversed(arrows)), True
            seen.add(a)
            arrows.append(a)

    @cached_property
    def kind(self) -> str:
        cyclic = any(self.walk_forward(a)[1] for a in range(self.num_arrows))
        return "locally-gentle" if cyclic else "gentle"

    @property
    def is_gentle(self) -> bool:
        return self.kind == "gentle"

    def is_nonzero_path(self, p: Path) -> bool:
        return all(self.allowed(a, b) for a, b in zip(p.arrows, p.arrows[1:]))

    def multiply(self, p: Path, q: Path) -> Path | None:
        """Product of two basis paths, or ``None`` when it vanishes."""
        if p.target != q.source:
            return None
        if p.arrows and q.arrows and not self.allowed(p.arrows[-1], q.arrows[0]):
            return None
        return p.concat(q)

    def name(self, p: Path) -> str:
        return self.quiver.name(p)

    def relation_names(self) -> list[tuple[str, str]]:
        arrows = self.quiver.arrows
        return [(arrows[a].name, arrows[b].name) for a, b in sorted(self.relations)]


def validate_presentation(quiver: Quiver, relations: Iterable) -> GentlePresentation:
    """Validate relations given as length-two :class:`Path` objects or arrow-index pairs."""
    rels = set()
    for r in relations:
        if isinstance(r, Path):
            if r.length != 2:
                raise RelationNotLength2(f"relation {quiver.name(r)} has length {r.length}")
            a, b = r.arrows
        else:
            r = tuple(r)
            if len(r) != 2:
                raise RelationNotLength2(f"relation of length {len(r)}")
            a, b = r
        if quiver.target(a) != quiver.source(b):
            raise RelationNotLength2(
                f"{quiver.arrows[a].name}{quiver.arrows[b].name} is not a path"
            )
        rels.add((a, b))
    return GentlePresentation(quiver, frozenset(rels))


def make_presentation(vertices: Iterable, arrows: Iterable[tuple], relations: Iterable[tuple[str, str]] = ()) -> GentlePresentation:
    """Convenience constructor working entirely with names."""
    quiver = build_quiver(vertices, arrows)
    idx = quiver.arrow_index
    pairs = []
    for rel in relations:
        if len(rel) != 2:
            raise RelationNotLength2(f"relation {' '.join(rel)} does not have length 2")
        for n in rel:
            if n not in idx:
                raise UnknownEndpoint(f"relation uses undeclared arrow {n}")
        pairs.append((idx[rel[0]], idx[rel[1]]))
    return validate_presentation(quiver, pairs)


def path_basis(pres: GentlePresentation, n: int) -> list[Path]:
    """All nonzero paths of length ``n``, ordered by their arrow sequences."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    q = pres.quiver
    if n == 0:
        return [q.stationary(v) for v in range(pres.num_vertices)]
    out = []
    for a in range(pres.num_arrows):
        arrows = [a]
        while len(arrows) < n:
            b = pres.next_arrow(arrows[-1])
            if b is None:
                break
            arrows.append(b)
        if len(arrows) == n:
            out.append(q.path(arrows))
    return out
