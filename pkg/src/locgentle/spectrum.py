"""Prime ideals of a (locally) gentle algebra, described by generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .maxpaths import MaximalPath, decompose_maximal_paths, gamma_r
from .quiver import GentlePresentation, Path, validate_presentation, build_quiver


class NotInfinitePath(ValueError):
    pass


class DegreeZero(ValueError):
    pass


class VanishesAtZero(ValueError):
    pass


@dataclass(frozen=True)
class PrimeIdeal:
    """One prime, or one parametrised family of primes.

    kind "max": the maximal ideal at ``vertex``.
    kind "ann": the annihilator of the span of subpaths of ``gamma``.
    kind "poly": annihilator plus a polynomial in the central element of
    ``gamma``; ``polynomial`` is None while the family is uninstantiated.
    """

    kind: str
    generators: tuple[Path, ...]
    vertex: int | None = None
    gamma: MaximalPath | None = None
    height_zero: bool = False
    polynomial: tuple[Fraction, ...] | None = None
    poly_element: tuple[tuple[Path, Fraction], ...] | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind == "ann" and not self.generators

    def label(self, pres: GentlePresentation) -> str:
        if self.kind == "max":
            return f"m_{pres.quiver.vertices[self.vertex]}"
        g = pres.name(self.gamma.as_path())
        if self.kind == "ann":
            return f"ann(J_({g})^inf)"
        return f"p(({g})^inf, -)"


@dataclass(frozen=True)
class Spectrum:
    primes: tuple[PrimeIdeal, ...]
    is_prime: bool


def max_ideal_generators(pres: GentlePresentation, v: int) -> tuple[Path, ...]:
    q = pres.quiver
    gens = [q.stationary(u) for u in range(pres.num_vertices) if u != v]
    gens += [q.path([a]) for a in q.out_arrows(v) if q.target(a) == v]
    return tuple(gens)


def annihilator_generators(pres: GentlePresentation, gamma: MaximalPath) -> tuple[Path, ...]:
    q = pres.quiver
    on = gamma.vertices(pres)
    mine = set(gamma.arrows)
    gens = [q.stationary(u) for u in range(pres.num_vertices) if u not in on]
    gens += [
        q.path([a])
        for a in range(pres.num_arrows)
        if a not in mine and q.source(a) in on and q.target(a) in on
    ]
    return tuple(gens)


def prime_spectrum(pres: GentlePresentation) -> Spectrum:
    dec = decompose_maximal_paths(pres)
    covered: set[int] = set()
    for g in dec.infinite:
        covered |= g.vertices(pres)
    primes = [
        PrimeIdeal("max", max_ideal_generators(pres, v), vertex=v, height_zero=v not in covered)
        for v in range(pres.num_vertices)
    ]
    for g in dec.infinite:
        primes.append(PrimeIdeal("ann", annihilator_generators(pres, g), gamma=g, height_zero=True))
        primes.append(PrimeIdeal("poly", annihilator_generators(pres, g), gamma=g))
    unique_infinite = len(dec.paths) == 1 and dec.paths[0].infinite
    return Spectrum(tuple(primes), unique_infinite)


def _require_infinite(pres: GentlePresentation, gamma: MaximalPath) -> None:
    if not gamma.infinite or gamma not in decompose_maximal_paths(pres).infinite:
        raise NotInfinitePath("expected an infinite maximal path of this presentation")


def annihilator_decomposition(pres: GentlePresentation, gamma: MaximalPath):
    """Split off the subalgebra carried by ``gamma``.

    Returns the presentation on the vertices and arrows of ``gamma`` (with
    the relations among them) together with generators of the complement.
    """
    _require_infinite(pres, gamma)
    q = pres.quiver
    verts = sorted(gamma.vertices(pres))
    arrows = sorted(set(gamma.arrows))
    sub = build_quiver(
        [q.vertices[v] for v in verts],
        [(q.arrows[a].name, q.vertices[q.source(a)], q.vertices[q.target(a)]) for a in arrows],
    )
    new_index = {a: i for i, a in enumerate(arrows)}
    rels = [(new_index[a], new_index[b]) for a, b in pres.relations if a in new_index and b in new_index]
    return validate_presentation(sub, rels), annihilator_generators(pres, gamma)


def central_power(pres: GentlePresentation, gamma: MaximalPath, k: int) -> dict[Path, Fraction]:
    """The k-th power of the central element attached to ``gamma``, restricted to its vertices."""
    q = pres.quiver
    if k == 0:
        return {q.stationary(v): Fraction(1) for v in sorted(gamma.vertices(pres))}
    out = {}
    for a in gamma.arrows:
        cyc = gamma_r(pres, a).path
        out[q.path(cyc.arrows * k)] = Fraction(1)
    return out


def _has_rational_root(coeffs: list[Fraction]) -> bool:
    scale = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    lead, const = ints[-1], ints[0]

    def divisors(n: int) -> list[int]:
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0]

    for p in divisors(const):
        for qd in divisors(lead):
            for r in (Fraction(p, qd), Fraction(-p, qd)):
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def irreducibility(coeffs: list[Fraction]) -> str:
    deg = len(coeffs) - 1
    if deg == 1:
        return "irreducible"
    if deg <= 3:
        return "reducible" if _has_rational_root(coeffs) else "irreducible"
    return "unverified"


def instantiate_poly_prime(pres: GentlePresentation, gamma: MaximalPath, coeffs) -> tuple[PrimeIdeal, str]:
    """Coefficients are listed from the constant term upwards."""
    _require_infinite(pres, gamma)
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        raise DegreeZero("the polynomial must have degree at least 1")
    if cs[0] == 0:
        raise VanishesAtZero("the polynomial must not vanish at 0")
    element: dict[Path, Fraction] = {}
    for k, c in enumerate(cs):
        if c:
            for p, x in central_power(pres, gamma, k).items():
                element[p] = element.get(p, 0) + c * x
    ideal = PrimeIdeal(
        "poly",
        annihilator_generators(pres, gamma),
        gamma=gamma,
        polynomial=tuple(cs),
        poly_element=tuple(sorted(element.items())),
    )
    return ideal, irreducibility(cs)


def prime_inclusions(pres: GentlePresentation, spectrum: Spectrum) -> list[tuple[int, int]]:
    """Containments (smaller, larger) between entries of ``spectrum.primes``, by position."""
    primes = spectrum.primes
    edges = []
    for i, p in enumerate(primes):
        if p.kind != "ann":
            continue
        on = p.gamma.vertices(pres)
        for j, other in enumerate(primes):
            if other.kind == "max" and other.vertex in on:
                edges.append((i, j))
            elif other.kind == "poly" and other.gamma == p.gamma:
                edges.append((i, j))
    return edges
