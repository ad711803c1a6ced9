"""Maximal paths, the Koszul dual, and forbidden-path combinatorics."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm

from .quiver import GentlePresentation, Path


@dataclass(frozen=True)
class MaximalPath:
    """A finite maximal path, or an infinite one stored as its primitive cycle.

    Cycles are kept in canonical rotation (starting at the smallest arrow
    index), so equality of infinite maximal paths is plain tuple equality.
    """

    arrows: tuple[int, ...]
    infinite: bool
    source: int
    target: int

    @property
    def length(self) -> float:
        return float("inf") if self.infinite else len(self.arrows)

    @property
    def period(self) -> int:
        return len(self.arrows)

    def as_path(self) -> Path:
        return Path(self.source, self.target, self.arrows)

    def vertices(self, pres: GentlePresentation) -> set[int]:
        q = pres.quiver
        vs = {self.source, self.target}
        vs.update(q.source(a) for a in self.arrows)
        return vs


@dataclass(frozen=True)
class ArrowWalk:
    """Outcome of walking from one arrow: a path plus whether it is a cycle."""

    path: Path
    cycle: bool


def _canonical_cycle(pres: GentlePresentation, arrows: tuple[int, ...]) -> MaximalPath:
    i = arrows.index(min(arrows))
    rot = arrows[i:] + arrows[:i]
    v = pres.quiver.source(rot[0])
    return MaximalPath(rot, True, v, v)


def gamma_r(pres: GentlePresentation, a: int) -> ArrowWalk:
    """The right-maximal path starting with ``a``, or the primitive cycle starting at ``a``."""
    arrows, cycle = pres.walk_forward(a)
    return ArrowWalk(pres.quiver.path(arrows), cycle)


def gamma_l(pres: GentlePresentation, a: int) -> ArrowWalk:
    """The left-maximal path ending with ``a``, or the primitive cycle ending at ``a``."""
    arrows, cycle = pres.walk_backward(a)
    return ArrowWalk(pres.quiver.path(arrows), cycle)


@dataclass(frozen=True)
class Decomposition:
    paths: tuple[MaximalPath, ...]
    assignment: tuple[int, ...]  # arrow index -> position in paths

    @property
    def finite(self) -> list[MaximalPath]:
        return [m for m in self.paths if not m.infinite]

    @property
    def infinite(self) -> list[MaximalPath]:
        return [m for m in self.paths if m.infinite]

    def of(self, a: int) -> MaximalPath:
        return self.paths[self.assignment[a]]


def _decompose(pres: GentlePresentation) -> Decomposition:
    paths: list[MaximalPath] = []
    assignment: list[int | None] = [None] * pres.num_arrows
    for a in range(pres.num_arrows):
        if assignment[a] is not None:
            continue
        fwd, cycle = pres.walk_forward(a)
        if cycle:
            m = _canonical_cycle(pres, fwd)
        else:
            back, _ = pres.walk_backward(a)
            arrows = back[:-1] + fwd
            m = MaximalPath(arrows, False, pres.quiver.source(arrows[0]), pres.quiver.target(arrows[-1]))
        for b in m.arrows:
            assert assignment[b] is None
            assignment[b] = len(paths)
        paths.append(m)
    return Decomposition(tuple(paths), tuple(assignment))


_decompose_cached = lru_cache(maxsize=4096)(_decompose)


def decompose_maximal_paths(pres: GentlePresentation) -> Decomposition:
    """Partition the arrows into maximal paths, ordered by their smallest arrow."""
    return _decompose_cached(pres)


def koszul_dual(pres: GentlePresentation) -> GentlePresentation:
    everything = frozenset(pres.quiver.length_two_paths())
    return GentlePresentation(pres.quiver, everything - pres.relations)


_dual_cached = lru_cache(maxsize=4096)(koszul_dual)


@dataclass(frozen=True)
class Thread:
    """The forbidden paths generated from one arrow leaving a vertex.

    ``arrows`` holds the walk in the dual up to termination (``periodic`` is
    False, and the full tuple is a right-maximal forbidden path) or one full
    turn of the dual cycle (``periodic`` is True).
    """

    arrows: tuple[int, ...]
    periodic: bool

    def at(self, k: int) -> tuple[int, ...] | None:
        """Arrow sequence of the length-k member, or None once the thread has stopped."""
        if k < 1:
            raise ValueError("threads start at length 1")
        if not self.periodic:
            return self.arrows[:k] if k <= len(self.arrows) else None
        n = len(self.arrows)
        return tuple(self.arrows[i % n] for i in range(k))


@dataclass(frozen=True)
class ForbiddenSlice:
    vertex: int
    threads: tuple[Thread, ...]
    levels: tuple[tuple[Path, ...], ...]
    right_maximal: tuple[Path, ...]

    @property
    def periodicity(self) -> tuple[int, int] | None:
        """(prefix, period) after which the degrees repeat, or None if every thread stops."""
        periods = [len(t.arrows) for t in self.threads if t.periodic]
        if not periods:
            return None
        prefix = max((len(t.arrows) for t in self.threads if not t.periodic), default=0)
        return prefix, lcm(*periods)

    @property
    def projective_dimension(self) -> float:
        if any(t.periodic for t in self.threads):
            return float("inf")
        return max((len(t.arrows) for t in self.threads), default=0)


def threads(pres: GentlePresentation, v: int) -> tuple[Thread, ...]:
    dual = _dual_cached(pres)
    out = []
    for a in pres.quiver.out_arrows(v):
        arrows, cycle = dual.walk_forward(a)
        out.append(Thread(arrows, cycle))
    return tuple(out)


def forbidden_sets(pres: GentlePresentation, v: int, max_k: int) -> ForbiddenSlice:
    """The forbidden paths of lengths 0..max_k starting at ``v``, grouped by thread."""
    q = pres.quiver
    ths = threads(pres, v)
    levels = [(q.stationary(v),)]
    for k in range(1, max_k + 1):
        level = []
        for t in ths:
            arrows = t.at(k)
            if arrows is not None:
                level.append(q.path(arrows))
        levels.append(tuple(level))
    right_max = tuple(q.path(t.arrows) for t in ths if not t.periodic)
    return ForbiddenSlice(v, ths, tuple(levels), right_max)


@dataclass(frozen=True)
class LPlusPair:
    """A pair (p, w): ``p`` a finite maximal forbidden path, ``w`` a path out of the vertex.

    ``via`` is None when w is stationary, otherwise the arrow whose
    right-maximal path w is.
    """

    p: Path
    w: Path
    via: int | None


@dataclass(frozen=True)
class ForbiddenData:
    lprime: tuple[Path, ...]
    lplus: dict[int, tuple[LPlusPair, ...]] = field(hash=False)


def _lprime_and_lplus(pres: GentlePresentation) -> ForbiddenData:
    q = pres.quiver
    dual_dec = decompose_maximal_paths(_dual_cached(pres))
    dec = decompose_maximal_paths(pres)
    lprime = tuple(m.as_path() for m in dual_dec.finite)
    lplus: dict[int, tuple[LPlusPair, ...]] = {}
    for v in range(pres.num_vertices):
        pairs = [LPlusPair(p, q.stationary(v), None) for p in lprime if p.target == v]
        for a in q.out_arrows(v):
            if dec.of(a).infinite:
                # no right-maximal path can start with an arrow on an infinite maximal path
                continue
            w = gamma_r(pres, a).path
            for p in lprime:
                if p.target == w.target and p.last != w.last:
                    pairs.append(LPlusPair(p, w, a))
        lplus[v] = tuple(pairs)
    return ForbiddenData(lprime, lplus)


_lplus_cached = lru_cache(maxsize=4096)(_lprime_and_lplus)


def lprime_and_lplus(pres: GentlePresentation) -> ForbiddenData:
    """Finite maximal forbidden paths and, per vertex, the pairs indexing injective resolutions."""
    return _lplus_cached(pres)
