"""Brute-force checks on a degree-truncated copy of the algebra.

Nothing here uses the closed formulas: dimensions come from explicit path
lists and every rank is computed with exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .invariants import CenterDescription, FreeWitness, hilbert_series
from .linalg import RationalMatrix, add_into, kernel, rank_of, same_span
from .maxpaths import decompose_maximal_paths, gamma_r
from .quiver import GentlePresentation, Path, path_basis
from .spectrum import central_power
from .resolutions import GradedComplex, MapEntry, ShiftedInjective, ShiftedProjective, projective_resolution


class VerificationError(Exception):
    pass


class ExactnessFailed(VerificationError):
    def __init__(self, position: int, degree: int, homology: int, detail: str = ""):
        self.position = position
        self.degree = degree
        self.homology = homology
        super().__init__(detail or f"homology of dimension {homology} at position {position}, internal degree {degree}")


class NotAComplex(ExactnessFailed):
    """Two consecutive maps do not compose to zero.

    Subclasses ExactnessFailed: a failed composite is one way for exactness to fail.
    """

    def __init__(self, position: int, degree: int):
        super().__init__(position, degree, -1, f"composite through position {position} is nonzero in internal degree {degree}")


class WindowTooWide(VerificationError):
    pass


class CentralityFailed(VerificationError):
    pass


class DimensionMismatch(VerificationError):
    def __init__(self, degree: int, got: int, expected: int):
        self.degree, self.got, self.expected = degree, got, expected
        super().__init__(f"degree {degree}: centralizer has dimension {got}, expected {expected}")


class NotFree(VerificationError):
    def __init__(self, degree: int, defect: str):
        self.degree = degree
        super().__init__(f"degree {degree}: {defect}")


class TruncatedAlgebra:
    """The algebra with everything above degree ``bound`` discarded."""

    def __init__(self, pres: GentlePresentation, bound: int):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.pres = pres
        self.bound = bound
        self.basis = [path_basis(pres, n) for n in range(bound + 1)]

    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    def require(self, n: int) -> None:
        if n > self.bound:
            raise WindowTooWide(f"needs paths of length {n} but the truncation stops at {self.bound}")

    def degree(self, n: int) -> list[Path]:
        if n < 0:
            return []
        self.require(n)
        return self.basis[n]

    @cached_property
    def _by_source(self) -> dict:
        out: dict = {}
        for n, paths in enumerate(self.basis):
            for p in paths:
                out.setdefault((p.source, n), []).append(p)
        return out

    @cached_property
    def _by_target(self) -> dict:
        out: dict = {}
        for n, paths in enumerate(self.basis):
            for p in paths:
                out.setdefault((p.target, n), []).append(p)
        return out

    def paths_from(self, u: int, n: int) -> list[Path]:
        if n < 0:
            return []
        self.require(n)
        return self._by_source.get((u, n), [])

    def paths_to(self, u: int, n: int) -> list[Path]:
        if n < 0:
            return []
        self.require(n)
        return self._by_target.get((u, n), [])

    def multiply(self, p: Path, q: Path) -> Path | None:
        self.require(p.length + q.length)
        return self.pres.multiply(p, q)

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for p, a in x.items():
            for q, b in y.items():
                r = self.multiply(p, q)
                if r is not None:
                    add_into(out, {r: a * b})
        return out


def truncate(pres: GentlePresentation, bound: int) -> TruncatedAlgebra:
    return TruncatedAlgebra(pres, bound)


# -- injective modules on the flagged-path representation -------------------
#
# A basis vector of I(u) is ("inv", q) standing for the formal inverse of q.
# The cyclic-type I(a) additionally has ("fwd", p) for p a prefix of a power
# of the cycle through a (p stationary gives its degree-0 vector).


@dataclass(frozen=True)
class _Resolved:
    kind: str  # "proj", "vertex" or "cyclic"
    index: int  # vertex, or arrow for "cyclic"
    shift: int
    cycle: tuple[int, ...] = ()


def _resolve(pres: GentlePresentation, s) -> _Resolved:
    if isinstance(s, ShiftedProjective):
        return _Resolved("proj", s.vertex, s.shift)
    if s.kind == "vertex":
        return _Resolved("vertex", s.index, s.shift)
    walk = gamma_r(pres, s.index)
    if walk.cycle:
        return _Resolved("cyclic", s.index, s.shift, walk.path.arrows)
    return _Resolved("vertex", walk.path.target, s.shift - walk.path.length)


def _cycle_prefix(pres: GentlePresentation, cycle: tuple[int, ...], n: int) -> Path:
    q = pres.quiver
    if n == 0:
        return q.stationary(q.source(cycle[0]))
    return q.path([cycle[i % len(cycle)] for i in range(n)])


def _cycle_suffix(pres: GentlePresentation, cycle: tuple[int, ...], n: int) -> Path:
    L = len(cycle)
    return pres.quiver.path([cycle[(L - n + i) % L] for i in range(n)])


def _module_basis(alg: TruncatedAlgebra, r: _Resolved, d: int) -> list:
    n = d + r.shift
    if r.kind == "proj":
        return [("path", p) for p in alg.paths_from(r.index, n)]
    if r.kind == "vertex":
        if n > 0:
            return []
        return [("inv", p) for p in alg.paths_to(r.index, -n)]
    alg.require(abs(n))
    if n >= 0:
        return [("fwd", _cycle_prefix(alg.pres, r.cycle, n))]
    return [("inv", _cycle_suffix(alg.pres, r.cycle, -n))]


def _act(alg: TruncatedAlgebra, r: _Resolved, key, w: Path):
    """Right action of the basis path w on a basis vector; returns a key or None."""
    tag, p = key
    if tag == "path":
        prod = alg.multiply(p, w)
        return None if prod is None else ("path", prod)
    if tag == "fwd":
        prod = alg.multiply(p, w)
        if prod is None or (prod.arrows and prod.arrows[0] != r.cycle[0]):
            return None
        return ("fwd", prod)
    # inverse path: strip w off the front of p when possible
    if w.is_prefix_of(p) and (r.kind == "vertex" or w.length < p.length):
        return ("inv", Path(w.target, p.target, p.arrows[w.length :]))
    if r.kind == "cyclic" and p.is_prefix_of(w):
        return ("fwd", Path(p.target, w.target, w.arrows[p.length :]))
    return None


def _dual(key, w: Path):
    """The map induced by w: the inverse of r.w goes to the inverse of r."""
    tag, p = key
    if tag != "inv" or not w.is_suffix_of(p) or p.length < w.length:
        return None
    return ("inv", Path(p.source, w.source, p.arrows[: p.length - w.length]))


def _rho(pres: GentlePresentation, r: _Resolved, arrow: int, key):
    if r.kind == "cyclic":
        tag, p = key
        if tag == "inv":
            return key
        if p.is_stationary:
            return ("inv", p)
        return None
    return _dual(key, gamma_r(pres, arrow).path)


def _apply_entry(alg: TruncatedAlgebra, entry: MapEntry, src: _Resolved, dst: _Resolved, key):
    if entry.label == "mult":
        return _left_mult(alg, entry.arrow, key)
    if entry.label == "iota":
        if dst.kind == "cyclic":
            generator = ("fwd", entry.path)
        else:
            generator = ("inv", entry.path)
        return _act(alg, dst, generator, key[1])
    if entry.label == "dual":
        return _dual(key, entry.path)
    if entry.label == "rho":
        return _rho(alg.pres, src, entry.arrow, key)
    if entry.label == "dual_rho":
        mid = _rho(alg.pres, src, entry.arrow, key)
        return None if mid is None else _dual(mid, entry.path)
    raise ValueError(f"unknown label {entry.label}")


def _left_mult(alg: TruncatedAlgebra, arrow: int, key):
    prod = alg.multiply(alg.pres.quiver.path([arrow]), key[1])
    return None if prod is None else ("path", prod)


def _build_matrix(alg, entries, src_terms, dst_terms, src_basis, dst_basis) -> RationalMatrix:
    rows = [(i, k) for i, b in enumerate(dst_basis) for k in b]
    cols = [(i, k) for i, b in enumerate(src_basis) for k in b]
    row_set = set(rows)
    mat = RationalMatrix(rows, cols)
    accum: dict = {c: {} for c in cols}
    for e in entries:
        for key in src_basis[e.source]:
            img = _apply_entry(alg, e, src_terms[e.source], dst_terms[e.target], key)
            if img is None:
                continue
            target = (e.target, img)
            if target not in row_set:
                raise AssertionError(f"map {e.label} leaves the expected internal degree")
            add_into(accum[(e.source, key)], {target: Fraction(e.sign)})
    for c, vec in accum.items():
        mat.set_column(c, vec)
    return mat


@dataclass
class DegreeRow:
    degree: int
    dims: list[int]
    ranks: list[int]


@dataclass
class VerificationReport:
    orientation: str
    vertex: int
    window: tuple[int, int]
    truncation: int
    rows: list[DegreeRow] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)


def verify_complex(
    pres: GentlePresentation,
    cx: GradedComplex,
    window: tuple[int, int] = (-6, 6),
    truncation: int = 12,
    skip_unsafe: bool = False,
) -> VerificationReport:
    """Check d^2 = 0 and exactness degree by degree; raise on the first failure.

    A degree that needs paths longer than ``truncation`` raises WindowTooWide,
    or is recorded in ``report.skipped`` when ``skip_unsafe`` is set.
    """
    alg = TruncatedAlgebra(pres, truncation)
    report = VerificationReport(cx.orientation, cx.vertex, window, truncation)
    terms = [[_resolve(pres, s) for s in term] for term in cx.terms]
    for d in range(window[0], window[1] + 1):
        try:
            row = _verify_degree(alg, cx, terms, d)
        except WindowTooWide:
            if not skip_unsafe:
                raise
            report.skipped.append(d)
            continue
        report.rows.append(row)
    return report


def _verify_degree(alg: TruncatedAlgebra, cx: GradedComplex, terms: list, d: int) -> DegreeRow:
    q = alg.pres.quiver
    bases = [[_module_basis(alg, r, d) for r in term] for term in terms]
    dims = [sum(len(b) for b in term) for term in bases]
    if cx.orientation == "projective":
        mats = [
            _build_matrix(alg, cx.maps[i], terms[i + 1], terms[i], bases[i + 1], bases[i])
            for i in range(len(cx.maps))
        ]
        # augmentation onto the simple module
        aug_rows = [0] if d == 0 else []
        aug = RationalMatrix(aug_rows, [(0, k) for k in bases[0][0]])
        if d == 0:
            aug.set_column((0, ("path", q.stationary(cx.vertex))), {0: 1})
        chain = [aug] + mats  # chain[i] leaves position i (position -1 is the simple)
        ranks = [m.rank() for m in chain]
        for i in range(len(chain) - 1):
            if not chain[i].compose(chain[i + 1]).is_zero():
                raise NotAComplex(i, d)
        if ranks[0] != len(aug_rows):
            raise ExactnessFailed(-1, d, len(aug_rows) - ranks[0])
        top = len(terms) - 1
        for i in range(len(terms)):
            incoming = ranks[i + 1] if i + 1 < len(chain) else 0
            if i == top and not cx.complete:
                continue
            homology = dims[i] - ranks[i] - incoming
            if homology:
                raise ExactnessFailed(i, d, homology)
    else:
        start = _Resolved("proj", cx.vertex, 0)
        start_basis = _module_basis(alg, start, d)
        src_terms = [[start]] + terms
        src_bases = [[start_basis]] + bases
        mats = [
            _build_matrix(alg, cx.maps[j], src_terms[j], terms[j], src_bases[j], bases[j])
            for j in range(len(cx.maps))
        ]
        ranks = [m.rank() for m in mats]
        for j in range(len(mats) - 1):
            if not mats[j + 1].compose(mats[j]).is_zero():
                raise NotAComplex(j, d)
        if ranks[0] != len(start_basis):
            raise ExactnessFailed(-1, d, len(start_basis) - ranks[0])
        for j in range(len(terms)):
            outgoing = ranks[j + 1] if j + 1 < len(mats) else 0
            homology = dims[j] - outgoing - ranks[j]
            if homology:
                raise ExactnessFailed(j, d, homology)
        dims = [len(start_basis)] + dims
    return DegreeRow(d, dims, ranks)


def ext_dims_bruteforce(pres: GentlePresentation, v: int, i: int, window: tuple[int, int] = (-6, 6), truncation: int = 12) -> dict[int, int]:
    """Cohomology of Hom(P, A) at position i, degree by degree."""
    alg = TruncatedAlgebra(pres, truncation)
    q = pres.quiver
    if window[1] + i + 1 > truncation:
        raise WindowTooWide(f"degree {window[1]} at position {i} needs paths of length {window[1] + i + 1}")
    cx = projective_resolution(pres, v, steps=i + 1)
    terms = list(cx.terms)

    def basis(k: int, d: int) -> list:
        if k >= len(terms):
            return []
        return [(s_idx, x) for s_idx, s in enumerate(terms[k]) for x in alg.paths_to(s.vertex, d - s.shift)]

    def dual_map(k: int, d: int) -> RationalMatrix:
        # from position k-1 to position k; entry (b) sends phi_x to phi_{x b}
        src, dst = basis(k - 1, d), basis(k, d)
        mat = RationalMatrix(dst, src)
        dst_set = set(dst)
        if k < len(terms):
            cols: dict = {c: {} for c in src}
            for e in cx.maps[k - 1]:
                b = q.path([e.arrow])
                for (s_idx, x) in src:
                    if s_idx != e.target:
                        continue
                    y = alg.multiply(x, b)
                    if y is None:
                        continue
                    key = (e.source, y)
                    assert key in dst_set
                    add_into(cols[(s_idx, x)], {key: Fraction(e.sign)})
            for c, vec in cols.items():
                mat.set_column(c, vec)
        return mat

    out = {}
    for d in range(window[0], window[1] + 1):
        here = basis(i, d)
        outgoing = dual_map(i + 1, d).rank()
        incoming = dual_map(i, d).rank() if i > 0 else 0
        out[d] = len(here) - outgoing - incoming
    return out


def _commutator_image(alg: TruncatedAlgebra, x: dict) -> dict:
    pres = alg.pres
    q = pres.quiver
    out: dict = {}
    gens = [{q.stationary(v): Fraction(1)} for v in range(pres.num_vertices)]
    gens += [{q.path([a]): Fraction(1)} for a in range(pres.num_arrows)]
    for gi, g in enumerate(gens):
        left = alg.mul(g, x)
        right = alg.mul(x, g)
        add_into(left, right, -1)
        for p, c in left.items():
            out[(gi, p)] = c
    return out


@dataclass
class CenterReport:
    dims: list[int]
    predicted: list[int]


def verify_center(pres: GentlePresentation, cd: CenterDescription, truncation: int = 10) -> CenterReport:
    if truncation < 2:
        raise ValueError("truncation must be at least 2")
    alg = TruncatedAlgebra(pres, truncation)
    for g in cd.generators(pres):
        deg = max(p.length for p in g)
        if deg + 1 > truncation:
            continue
        comm = _commutator_image(alg, g)
        if comm:
            raise CentralityFailed(f"generator of degree {deg} fails to commute: {sorted(comm)[0]}")
    dims, predicted = [], []
    for n in range(truncation):
        cols = alg.degree(n)
        mat = RationalMatrix([], cols)
        for p in cols:
            mat.set_column(p, _commutator_image(alg, {p: Fraction(1)}))
        got = len(kernel(mat))
        want = cd.predicted_dim(n)
        if got != want:
            raise DimensionMismatch(n, got, want)
        dims.append(got)
        predicted.append(want)
    return CenterReport(dims, predicted)


def verify_free_module(pres: GentlePresentation, witness: FreeWitness, truncation: int = 8, force: bool = False) -> list[int]:
    """Check that {b x^m} is a basis of each degree; returns the degreewise dimensions."""
    if not force and (pres.is_gentle or decompose_maximal_paths(pres).finite):
        raise ValueError("freeness over k[x] needs every maximal path to be infinite")
    alg = TruncatedAlgebra(pres, truncation)
    dims = []
    for n in range(truncation + 1):
        vectors = []
        for b in witness.basis:
            m = n - b.length
            if m < 0:
                continue
            vec: dict = {}
            for r in alg.degree(m):
                prod = alg.multiply(b, r)
                if prod is not None:
                    add_into(vec, {prod: Fraction(1)})
            vectors.append(vec)
        rank = rank_of(vectors)
        dim = len(alg.degree(n))
        if rank != len(vectors):
            raise NotFree(n, f"{len(vectors) - rank} linear relations among {len(vectors)} candidates")
        if rank != dim:
            raise NotFree(n, f"candidates span {rank} of {dim} dimensions")
        dims.append(dim)
    return dims


def ideal_degree_span(alg: TruncatedAlgebra, generators: list[dict], n: int) -> list[dict]:
    """Spanning vectors for the degree-n part of the two-sided ideal generated by homogeneous elements."""
    vecs = []
    for g in generators:
        deg = next(iter(g)).length
        for i in range(0, n - deg + 1):
            for a in alg.degree(i):
                left = alg.mul({a: Fraction(1)}, g)
                if not left:
                    continue
                for b in alg.degree(n - deg - i):
                    prod = alg.mul(left, {b: Fraction(1)})
                    if prod:
                        vecs.append(prod)
    return vecs


def _on_cycle(pres: GentlePresentation, gamma, p: Path) -> bool:
    if p.is_stationary:
        return p.source in gamma.vertices(pres)
    arrows = gamma.arrows
    succ = {arrows[i]: arrows[(i + 1) % len(arrows)] for i in range(len(arrows))}
    if any(a not in succ for a in p.arrows):
        return False
    return all(succ[a] == b for a, b in zip(p.arrows, p.arrows[1:]))


def verify_annihilator(pres: GentlePresentation, gamma, generators, truncation: int = 10) -> list[int]:
    """Compare the ideal generated by ``generators`` with the span of paths off ``gamma``.

    Also checks that each generator kills the central element of ``gamma`` on
    both sides.  Returns the degreewise dimensions of the ideal.
    """
    alg = TruncatedAlgebra(pres, truncation)
    gens = [{g: Fraction(1)} for g in generators]
    m = central_power(pres, gamma, 1)
    for g in gens:
        deg = next(iter(g)).length
        if deg + gamma.period <= truncation and (alg.mul(g, m) or alg.mul(m, g)):
            raise CentralityFailed(f"generator {pres.name(next(iter(g)))} does not annihilate the cycle element")
    dims = []
    for n in range(truncation + 1):
        got = ideal_degree_span(alg, gens, n)
        want = [{p: Fraction(1)} for p in alg.degree(n) if not _on_cycle(pres, gamma, p)]
        if not same_span(got, want):
            raise DimensionMismatch(n, rank_of(got), len(want))
        dims.append(len(want))
    return dims


def verify_hilbert(pres: GentlePresentation, truncation: int = 12) -> list[int]:
    """Compare the closed-form Hilbert series with path counts up to ``truncation``."""
    h = hilbert_series(pres)
    dims = TruncatedAlgebra(pres, truncation).dims()
    for n, got in enumerate(dims):
        if h.coefficient(n) != got:
            raise DimensionMismatch(n, got, h.coefficient(n))
    return dims
