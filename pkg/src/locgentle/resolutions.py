"""Graded projective resolutions of simples, injective resolutions of
indecomposable projectives, and Ext of simples against the algebra.

Shifts use the convention M[k]_i = M_{i+k}: the projective eA[-i] has its
generator in degree i, and I(v) lives in degrees <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maxpaths import decompose_maximal_paths, forbidden_sets, gamma_r, lprime_and_lplus
from .quiver import GentlePresentation, Path


@dataclass(frozen=True)
class ShiftedProjective:
    """e_vertex A[shift]; ``path`` is the forbidden path indexing the summand."""

    vertex: int
    shift: int
    path: Path
    thread: int | None = None


@dataclass(frozen=True)
class ShiftedInjective:
    """I(v)[shift] (kind "vertex") or I(a)[shift] (kind "arrow")."""

    kind: str
    index: int
    shift: int


@dataclass(frozen=True)
class MapEntry:
    """One component of a differential between two summands.

    label "mult": left multiplication by ``arrow``.
    label "iota": the generator of e_vA goes to ``path`` read inside the
      target (an inverse path for I(u) and finite-type I(a); the degree-0
      element when ``path`` is stationary and the target is cyclic-type).
    label "dual": the map induced by ``path`` between injectives.
    label "rho": the canonical map I(arrow) -> I(v).
    label "dual_rho": "dual" by ``path`` after "rho" for ``arrow``.
    """

    source: int
    target: int
    label: str
    path: Path | None = None
    arrow: int | None = None
    sign: int = 1


@dataclass(frozen=True)
class GradedComplex:
    """A resolution stored term by term.

    Projective orientation: ``terms[i]`` is P_i and ``maps[i]`` lists the
    components of P_{i+1} -> P_i.  Injective orientation: ``terms[j]`` is
    I^j, ``maps[0]`` lists the components of e_vA -> I^0 and ``maps[j]``
    those of I^{j-1} -> I^j.
    """

    orientation: str
    vertex: int
    terms: tuple[tuple, ...]
    maps: tuple[tuple[MapEntry, ...], ...]
    length: float
    complete: bool = True
    periodicity: tuple[int, int] | None = None
    iso_arrow: int | None = None

    def without_entry(self, position: int, index: int) -> "GradedComplex":
        """Copy with one differential component removed (for negative controls)."""
        maps = list(self.maps)
        entries = list(maps[position])
        del entries[index]
        maps[position] = tuple(entries)
        return GradedComplex(
            self.orientation, self.vertex, self.terms, tuple(maps), self.length,
            self.complete, self.periodicity, self.iso_arrow,
        )


def projective_resolution(pres: GentlePresentation, v: int, steps: int = 32) -> GradedComplex:
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    q = pres.quiver
    probe = forbidden_sets(pres, v, 0)
    pdim = probe.projective_dimension
    finite = pdim != float("inf")
    top = int(pdim) if finite else steps
    fs = forbidden_sets(pres, v, top)

    terms = [(ShiftedProjective(v, 0, q.stationary(v)),)]
    maps = []
    prev_index = {q.stationary(v): 0}
    for i in range(1, top + 1):
        level = []
        entries = []
        index = {}
        for t_idx, thread in enumerate(fs.threads):
            arrows = thread.at(i)
            if arrows is None:
                continue
            p = q.path(arrows)
            index[p] = len(level)
            level.append(ShiftedProjective(p.target, -i, p, t_idx))
            parent = q.path(arrows[:-1]) if i > 1 else q.stationary(v)
            entries.append(MapEntry(index[p], prev_index[parent], "mult", arrow=arrows[-1]))
        terms.append(tuple(level))
        maps.append(tuple(entries))
        prev_index = index
    return GradedComplex(
        "projective", v, tuple(terms), tuple(maps), pdim,
        complete=finite, periodicity=fs.periodicity,
    )


def injective_resolution(pres: GentlePresentation, v: int) -> GradedComplex:
    q = pres.quiver
    pairs = lprime_and_lplus(pres).lplus[v]
    outs = q.out_arrows(v)
    if not outs and not pairs:
        # every arrow into a sink ends a finite forbidden path, so this cannot happen
        raise RuntimeError(f"sink {q.vertices[v]} has no pairs indexing its resolution")
    m = max(pr.p.length for pr in pairs) if pairs else (1 if len(outs) == 2 else 0)

    if outs:
        term0 = tuple(ShiftedInjective("arrow", a, 0) for a in outs)
        iota = []
        for i, a in enumerate(outs):
            walk = gamma_r(pres, a)
            g = q.stationary(v) if walk.cycle else walk.path
            iota.append(MapEntry(0, i, "iota", path=g))
    else:
        term0 = (ShiftedInjective("vertex", v, 0),)
        iota = [MapEntry(0, 0, "iota", path=q.stationary(v))]
    terms = [term0]
    maps = [tuple(iota)]

    # position of each pair's summand in each term
    slot: list[dict[int, int]] = [{} for _ in range(m + 1)]
    for j in range(1, m + 1):
        level = []
        if j == 1 and len(outs) == 2:
            level.append(ShiftedInjective("vertex", v, 0))
        for k, pr in enumerate(pairs):
            if pr.p.length >= j:
                src = q.source(pr.p.arrows[-j])
                slot[j][k] = len(level)
                level.append(ShiftedInjective("vertex", src, j - pr.w.length))
        terms.append(tuple(level))

    if m >= 1:
        d0 = []
        if len(outs) == 2:
            for i, a in enumerate(outs):
                d0.append(MapEntry(i, 0, "rho", arrow=a, sign=1 if i == 0 else -1))
        for k, pr in enumerate(pairs):
            last = q.path([pr.p.arrows[-1]])
            if pr.via is not None:
                d0.append(MapEntry(outs.index(pr.via), slot[1][k], "dual", path=last))
            elif len(outs) == 1:
                d0.append(MapEntry(0, slot[1][k], "dual_rho", path=last, arrow=outs[0]))
            else:
                assert not outs, "a stationary witness needs outdeg at most 1"
                d0.append(MapEntry(0, slot[1][k], "dual", path=last))
        maps.append(tuple(d0))
        for j in range(1, m):
            dj = []
            for k, pr in enumerate(pairs):
                if pr.p.length > j:
                    arrow_path = q.path([pr.p.arrows[-(j + 1)]])
                    dj.append(MapEntry(slot[j][k], slot[j + 1][k], "dual", path=arrow_path))
            maps.append(tuple(dj))

    iso = outs[0] if m == 0 and len(outs) == 1 else None
    return GradedComplex("injective", v, tuple(terms), tuple(maps), m, iso_arrow=iso)


@dataclass(frozen=True)
class ExtDescriptor:
    """Ext^degree(S(vertex), A) as a graded left module.

    shape is one of Zero, LeftModuleVertex (A e_v), LeftModuleArrow (A a),
    Simple (S(v)), ShiftedQuotient and QuotientSum (sums of (A e_u / A b)[shift],
    listed in ``summands`` as (u, b, shift)), or OracleDims (``dims`` holds
    (internal degree, dimension) pairs computed by brute force).
    """

    vertex: int
    degree: int
    shape: str
    arrow: int | None = None
    summands: tuple[tuple[int, int, int], ...] = ()
    dims: tuple[tuple[int, int], ...] = ()

    @property
    def is_zero(self) -> bool:
        if self.shape == "OracleDims":
            return not any(d for _, d in self.dims)
        return self.shape == "Zero"


def ext_simple(pres: GentlePresentation, v: int, i: int, window: tuple[int, int] = (-6, 6), truncation: int = 12) -> ExtDescriptor:
    if i < 0:
        raise ValueError("degree must be nonnegative")
    q = pres.quiver
    outs = q.out_arrows(v)
    if i == 0:
        if not outs:
            return ExtDescriptor(v, 0, "LeftModuleVertex")
        if len(outs) == 1:
            for a in q.in_arrows(v):
                if (a, outs[0]) in pres.relations:
                    return ExtDescriptor(v, 0, "LeftModuleArrow", arrow=a)
        return ExtDescriptor(v, 0, "Zero")
    fs = forbidden_sets(pres, v, i)
    rmax = [p for p in fs.right_maximal if p.length == i]
    if i == 1:
        if len(outs) == 1 and rmax:
            a = outs[0]
            return ExtDescriptor(v, 1, "ShiftedQuotient", arrow=a, summands=((q.target(a), a, 1),))
        if not rmax:
            return ExtDescriptor(v, 1, "Simple" if len(outs) == 2 else "Zero")
        from .oracle import ext_dims_bruteforce

        dims = ext_dims_bruteforce(pres, v, 1, window, truncation)
        return ExtDescriptor(v, 1, "OracleDims", dims=tuple(sorted(dims.items())))
    if not rmax:
        return ExtDescriptor(v, i, "Zero")
    return ExtDescriptor(v, i, "QuotientSum", summands=tuple((p.target, p.last, i) for p in rmax))


def ext_nonzero(pres: GentlePresentation, v: int, i: int) -> bool:
    q = pres.quiver
    if i == 0:
        return any(not m.infinite and m.target == v for m in decompose_maximal_paths(pres).paths)
    if i == 1 and q.outdeg(v) == 2:
        return True
    return any(p.length == i for p in forbidden_sets(pres, v, i).right_maximal)
