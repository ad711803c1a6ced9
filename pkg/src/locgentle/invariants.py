"""Closed-form invariants read off from maximal paths and forbidden paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .maxpaths import MaximalPath, decompose_maximal_paths, gamma_r, koszul_dual, lprime_and_lplus
from .quiver import GentlePresentation, Path, path_basis

INF = float("inf")


def _poly_str(coeffs: list[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "t" if i == 1 else f"t^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class RationalHilbert:
    """numerator(t) / (1 - t)^denom_exponent with integer coefficients (index = power of t)."""

    numerator: tuple[int, ...]
    denom_exponent: int

    def coefficient(self, n: int) -> int:
        if n < 0:
            return 0
        if self.denom_exponent == 0:
            return self.numerator[n] if n < len(self.numerator) else 0
        return sum(self.numerator[: n + 1])

    def series(self, terms: int) -> list[int]:
        return [self.coefficient(n) for n in range(terms)]

    def evaluate(self, t: Fraction) -> Fraction:
        num = sum(Fraction(c) * t**i for i, c in enumerate(self.numerator))
        return num / (1 - t) ** self.denom_exponent

    def __str__(self) -> str:
        num = _poly_str(list(self.numerator))
        if self.denom_exponent == 0:
            return num
        if sum(1 for c in self.numerator if c) > 1:
            num = f"({num})"
        return f"{num}/(1 - t)"

    def series_str(self, terms: int) -> str:
        return f"{_poly_str(self.series(terms))} + O(t^{terms})"


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def finite_length_counts(pres: GentlePresentation) -> list[int]:
    """counts[n-1] is the number of finite maximal paths of length at least n."""
    lengths = [m.period for m in decompose_maximal_paths(pres).finite]
    top = max(lengths, default=0)
    return [sum(1 for l in lengths if l >= n) for n in range(1, top + 1)]


def hilbert_series(pres: GentlePresentation) -> RationalHilbert:
    nv, na = pres.num_vertices, pres.num_arrows
    counts = finite_length_counts(pres)
    num = [nv, na - nv] + [0] * len(counts)
    for n, k in enumerate(counts, start=1):
        num[n + 1] -= k
    if pres.is_gentle:
        # every arrow lies on a finite maximal path, so numerator(1) = 0 and (1 - t) divides it
        assert sum(num) == 0
        quotient = []
        running = 0
        for c in num[:-1]:
            running += c
            quotient.append(running)
        return RationalHilbert(_trim(quotient), 0)
    return RationalHilbert(_trim(num), 1)


@dataclass(frozen=True)
class Palindromy:
    holds: bool
    sign: int | None = None
    k: int | None = None


def palindromy_check(h: RationalHilbert) -> Palindromy:
    """Decide whether h(1/t) = sign * t^k * h(t) for some sign and integer k."""
    coeffs = list(h.numerator)
    support = [i for i, c in enumerate(coeffs) if c]
    if not support:
        return Palindromy(False)
    lo, hi = support[0], support[-1]
    core = coeffs[lo : hi + 1]
    if core == core[::-1]:
        sigma = 1
    elif core == [-c for c in core[::-1]]:
        sigma = -1
    else:
        return Palindromy(False)
    e = h.denom_exponent
    return Palindromy(True, (-1) ** e * sigma, e - lo - hi)


def is_cyclic_path_algebra(pres: GentlePresentation) -> bool:
    """The path algebra of an oriented cycle, with no relations."""
    return pres.quiver.is_oriented_cycle and not pres.relations


def is_cyclic_dual(pres: GentlePresentation) -> bool:
    """An oriented cycle with every length-two path killed."""
    return pres.quiver.is_oriented_cycle and pres.relations == frozenset(pres.quiver.length_two_paths())


def has_double_degrees(pres: GentlePresentation) -> bool:
    return pres.num_arrows == 2 * pres.num_vertices


def palindromic_shape(pres: GentlePresentation) -> str | None:
    """Which of the shapes with palindromic Hilbert series applies, if any."""
    if has_double_degrees(pres):
        return "double"
    if is_cyclic_path_algebra(pres):
        return "cyclic"
    q = pres.quiver
    cycle_graph = pres.num_arrows == pres.num_vertices and all(
        q.indeg(v) + q.outdeg(v) == 2 for v in range(pres.num_vertices)
    )
    if cycle_graph and pres.relations == frozenset(q.length_two_paths()):
        return "cycle-graph"
    return None


def gk_dim(pres: GentlePresentation) -> int:
    return 1 if decompose_maximal_paths(pres).infinite else 0


def depth(pres: GentlePresentation) -> int:
    return 0 if decompose_maximal_paths(pres).finite else 1


def global_dim(pres: GentlePresentation) -> float:
    dual = decompose_maximal_paths(koszul_dual(pres))
    if dual.infinite:
        return INF
    return max(m.period for m in dual.finite)


def injective_dim(pres: GentlePresentation) -> int:
    lprime = lprime_and_lplus(pres).lprime
    if lprime:
        return max(p.length for p in lprime)
    if is_cyclic_dual(pres):
        return 0
    return 1


@dataclass(frozen=True)
class CenterDescription:
    cyclic_finite: tuple[Path, ...]
    m_elements: tuple[tuple[MaximalPath, tuple[Path, ...]], ...]
    identity: bool = True
    # only filled in when the algebra has a single maximal path and it is infinite
    free_rank: int | None = None
    free_basis: tuple[Path, ...] | None = None

    def generators(self, pres: GentlePresentation) -> list[dict]:
        """Each generator as a sparse element {path: coefficient}."""
        one = {pres.quiver.stationary(v): Fraction(1) for v in range(pres.num_vertices)}
        gens = [one]
        gens += [{p: Fraction(1)} for p in self.cyclic_finite]
        gens += [{p: Fraction(1) for p in summands} for _, summands in self.m_elements]
        return gens

    def predicted_dim(self, n: int) -> int:
        """Dimension of the degree-n part of the center."""
        if n == 0:
            return 1
        count = sum(1 for p in self.cyclic_finite if p.length == n)
        count += sum(1 for g, _ in self.m_elements if n % g.period == 0)
        return count


def center(pres: GentlePresentation) -> CenterDescription:
    dec = decompose_maximal_paths(pres)
    cyclic = tuple(m.as_path() for m in dec.finite if m.source == m.target)
    m_elements = tuple((g, tuple(gamma_r(pres, a).path for a in g.arrows)) for g in dec.infinite)
    rank = basis = None
    if len(dec.paths) == 1 and dec.paths[0].infinite:
        q = pres.quiver
        basis_list = [p for n in range(pres.num_arrows) for p in path_basis(pres, n)]
        for v in range(pres.num_vertices):
            outs = q.out_arrows(v)
            if len(outs) == 2:
                basis_list.append(gamma_r(pres, min(outs)).path)
        rank = pres.num_arrows**2
        basis = tuple(basis_list)
        assert len(basis) == rank
    return CenterDescription(cyclic, m_elements, True, rank, basis)


def prime_radical(pres: GentlePresentation) -> list[int]:
    """Arrows generating the prime radical: those on finite maximal paths."""
    dec = decompose_maximal_paths(pres)
    return [a for a in range(pres.num_arrows) if not dec.of(a).infinite]


def is_semiprime(pres: GentlePresentation) -> bool:
    return not prime_radical(pres)


def is_prime(pres: GentlePresentation) -> bool:
    dec = decompose_maximal_paths(pres)
    return len(dec.paths) == 1 and dec.paths[0].infinite


@dataclass(frozen=True)
class FreeWitness:
    """x = sum of all arrows, and a proposed basis of A as a free k[x]-module."""

    x: dict
    basis: tuple[Path, ...]


def free_module_witness(pres: GentlePresentation) -> FreeWitness:
    q = pres.quiver
    dropped = {min(q.out_arrows(v)) for v in range(pres.num_vertices) if q.out_arrows(v)}
    basis = [q.stationary(v) for v in range(pres.num_vertices)]
    basis += [q.path([a]) for a in range(pres.num_arrows) if a not in dropped]
    x = {q.path([a]): Fraction(1) for a in range(pres.num_arrows)}
    return FreeWitness(x, tuple(basis))


@dataclass(frozen=True)
class CMResult:
    is_cm: bool
    witness: FreeWitness | None = None
    note: str = ""


def cohen_macaulay(pres: GentlePresentation) -> CMResult:
    dec = decompose_maximal_paths(pres)
    if pres.is_gentle:
        return CMResult(True, None, "finite-dimensional, d = 0")
    if dec.finite:
        return CMResult(False, None, "has both finite and infinite maximal paths")
    return CMResult(True, free_module_witness(pres), "free over k[x], x = sum of arrows")


@dataclass(frozen=True)
class ASStatus:
    """Artin-Schelter type.

    ``ell`` follows the table in which Ext^k(S, A) is concentrated in
    internal degree -ell.  ``alt_parameter`` records the other convention in
    use for these algebras, where any presentation on an oriented cycle has
    parameter 1; the two disagree for the cycle with all paths of length two
    killed.
    """

    kind: str  # "Regular", "Gorenstein" or "NotGorenstein"
    k: int | None = None
    ell: int | None = None
    alt_parameter: int | None = None

    @property
    def is_gorenstein(self) -> bool:
        return self.kind != "NotGorenstein"

    @property
    def is_regular(self) -> bool:
        return self.kind == "Regular"

    @property
    def ext_degree(self) -> int | None:
        return None if self.ell is None else -self.ell


def as_classification(pres: GentlePresentation) -> ASStatus:
    if is_cyclic_path_algebra(pres):
        return ASStatus("Regular", 1, 1, 1)
    if is_cyclic_dual(pres):
        return ASStatus("Gorenstein", 0, -1, 1)
    if has_double_degrees(pres):
        return ASStatus("Gorenstein", 1, 0, 0)
    return ASStatus("NotGorenstein")


@dataclass(frozen=True)
class StanleyRecord:
    as_gorenstein: bool
    palindromic: bool
    quiver_condition: bool
    verdict: str


def stanley_check(pres: GentlePresentation) -> StanleyRecord:
    gor = as_classification(pres).is_gorenstein
    pal = palindromy_check(hilbert_series(pres)).holds
    shape = pres.quiver.is_oriented_cycle or has_double_degrees(pres)
    agree = gor == pal == shape
    if not pres.is_gentle and cohen_macaulay(pres).is_cm:
        verdict = "theorem instance verified" if agree else "theorem violated"
    elif pres.is_gentle and not agree:
        verdict = "counterexample-to-naive-extension"
    else:
        verdict = "not applicable"
    return StanleyRecord(gor, pal, shape, verdict)


@dataclass(frozen=True)
class Classification:
    kind: str
    gk_dim: int
    depth: int
    global_dim: float
    injective_dim: int
    is_prime: bool
    is_semiprime: bool
    prime_radical: tuple[int, ...]
    cm: CMResult
    as_status: ASStatus
    stanley: StanleyRecord
    hilbert: RationalHilbert = field(repr=False)

    @property
    def is_cohen_macaulay(self) -> bool:
        return self.cm.is_cm

    def summary(self) -> str:
        if self.as_status.is_regular:
            head = "AS regular, dimension 1"
        elif self.as_status.is_gorenstein:
            head = f"AS Gorenstein, injdim {self.as_status.k}, (k, l) = ({self.as_status.k}, {self.as_status.ell})"
        else:
            head = "not AS Gorenstein"
        gl = "infinity" if self.global_dim == INF else str(self.global_dim)
        parts = [
            head,
            "CM" if self.cm.is_cm else "not CM",
            "prime" if self.is_prime else ("semiprime" if self.is_semiprime else "not semiprime"),
            f"gldim {gl}",
            f"injdim {self.injective_dim}",
            f"depth {self.depth}",
            f"GKdim {self.gk_dim}",
        ]
        return "; ".join(parts)


def classify(pres: GentlePresentation) -> Classification:
    return Classification(
        kind=pres.kind,
        gk_dim=gk_dim(pres),
        depth=depth(pres),
        global_dim=global_dim(pres),
        injective_dim=injective_dim(pres),
        is_prime=is_prime(pres),
        is_semiprime=is_semiprime(pres),
        prime_radical=tuple(prime_radical(pres)),
        cm=cohen_macaulay(pres),
        as_status=as_classification(pres),
        stanley=stanley_check(pres),
        hilbert=hilbert_series(pres),
    )
