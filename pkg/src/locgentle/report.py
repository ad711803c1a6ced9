"""Text and JSON renderings of computed results."""

from __future__ import annotations

from fractions import Fraction

from .fileformat import presentation_to_dict
from .invariants import INF, Classification, CenterDescription, RationalHilbert, palindromy_check
from .maxpaths import Decomposition, gamma_r
from .quiver import GentlePresentation, Path
from .resolutions import ExtDescriptor, GradedComplex, MapEntry, ShiftedInjective, ShiftedProjective
from .spectrum import PrimeIdeal, Spectrum, prime_inclusions


def jnum(x):
    """JSON-safe number: infinity becomes the string "infinity"."""
    return "infinity" if x == INF else int(x)


def shifted(base: str, shift: int) -> str:
    return base if shift == 0 else f"{base}[{shift}]"


def summand_text(pres: GentlePresentation, s) -> str:
    q = pres.quiver
    if isinstance(s, ShiftedProjective):
        return shifted(f"e{q.vertices[s.vertex]}A", s.shift)
    if s.kind == "vertex":
        return shifted(f"I({q.vertices[s.index]})", s.shift)
    return shifted(f"I({q.arrows[s.index].name})", s.shift)


def summand_dict(pres: GentlePresentation, s) -> dict:
    q = pres.quiver
    if isinstance(s, ShiftedProjective):
        return {"kind": "projective", "vertex": q.vertices[s.vertex], "shift": s.shift, "path": pres.name(s.path)}
    if s.kind == "vertex":
        return {"kind": "injective-vertex", "vertex": q.vertices[s.index], "shift": s.shift}
    walk = gamma_r(pres, s.index)
    out = {"kind": "injective-arrow", "arrow": q.arrows[s.index].name, "shift": s.shift}
    if walk.cycle:
        out["type"] = "cyclic"
    else:
        out["type"] = "finite"
        out["equals"] = {"vertex": q.vertices[walk.path.target], "shift": s.shift - walk.path.length}
    return out


def label_text(pres: GentlePresentation, e: MapEntry) -> str:
    q = pres.quiver
    if e.label == "mult":
        return q.arrows[e.arrow].name
    if e.label == "iota":
        return "1" if e.path.is_stationary else f"({pres.name(e.path)})^-1"
    if e.label == "dual":
        return f"({pres.name(e.path)})^*"
    if e.label == "rho":
        return f"rho_{q.arrows[e.arrow].name}"
    return f"({pres.name(e.path)})^* rho_{q.arrows[e.arrow].name}"


def complex_text(pres: GentlePresentation, cx: GradedComplex) -> str:
    q = pres.quiver
    v = q.vertices[cx.vertex]
    terms = [" + ".join(summand_text(pres, s) for s in t) or "0" for t in cx.terms]
    if cx.orientation == "projective":
        chain = list(reversed(terms)) + [f"S({v})", "0"]
        head = "..." if not cx.complete else "0"
        lines = [f"{head} -> " + " -> ".join(chain)]
        dim = "infinity" if cx.length == INF else str(int(cx.length))
        lines.append(f"pdim S({v}) = {dim}")
        if cx.periodicity:
            lines.append(f"periodic after {cx.periodicity[0]} steps with period {cx.periodicity[1]}")
        for i, entries in enumerate(cx.maps, start=1):
            for e in entries:
                lines.append(f"  d{i}: {summand_text(pres, cx.terms[i][e.source])} -> {summand_text(pres, cx.terms[i - 1][e.target])} by {label_text(pres, e)}")
    else:
        lines = [f"0 -> e{v}A -> " + " -> ".join(terms) + " -> 0"]
        lines.append(f"length {int(cx.length)}")
        if cx.iso_arrow is not None:
            lines.append(f"e{v}A is isomorphic to I({q.arrows[cx.iso_arrow].name})")
        for j, entries in enumerate(cx.maps):
            for e in entries:
                src = f"e{v}A" if j == 0 else summand_text(pres, cx.terms[j - 1][e.source])
                sign = "-" if e.sign < 0 else ""
                name = "iota" if j == 0 else f"d{j - 1}"
                lines.append(f"  {name}: {src} -> {summand_text(pres, cx.terms[j][e.target])} by {sign}{label_text(pres, e)}")
    return "\n".join(lines)


def complex_dict(pres: GentlePresentation, cx: GradedComplex) -> dict:
    def entry(e: MapEntry) -> dict:
        return {"from": e.source, "to": e.target, "label": label_text(pres, e), "kind": e.label, "sign": e.sign}

    out = {
        "orientation": cx.orientation,
        "vertex": pres.quiver.vertices[cx.vertex],
        "length": jnum(cx.length),
        "complete": cx.complete,
        "periodicity": list(cx.periodicity) if cx.periodicity else None,
        "terms": [],
    }
    for i, t in enumerate(cx.terms):
        if cx.orientation == "projective":
            maps = [entry(e) for e in cx.maps[i - 1]] if i >= 1 else []
        else:
            maps = [entry(e) for e in cx.maps[i + 1]] if i + 1 < len(cx.maps) else []
        out["terms"].append({"degree": i, "summands": [summand_dict(pres, s) for s in t], "maps": maps})
    if cx.orientation == "injective":
        out["coaugmentation"] = [entry(e) for e in cx.maps[0]]
        if cx.iso_arrow is not None:
            out["isomorphic_to"] = pres.quiver.arrows[cx.iso_arrow].name
    return out


def hilbert_dict(h: RationalHilbert, terms: int) -> dict:
    pal = palindromy_check(h)
    return {
        "numerator": list(h.numerator),
        "denom_exponent": h.denom_exponent,
        "text": str(h),
        "series": h.series(terms),
        "palindromic": {"holds": pal.holds, "sign": pal.sign, "k": pal.k},
    }


def maximal_dict(pres: GentlePresentation, dec: Decomposition) -> list[dict]:
    return [
        {"path": pres.name(m.as_path()), "infinite": m.infinite, "length": jnum(m.length)}
        for m in dec.paths
    ]


def center_dict(pres: GentlePresentation, cd: CenterDescription) -> dict:
    out = {
        "identity": cd.identity,
        "cyclic_finite": [pres.name(p) for p in cd.cyclic_finite],
        "m": [
            {"gamma": pres.name(g.as_path()), "summands": [pres.name(p) for p in summands]}
            for g, summands in cd.m_elements
        ],
    }
    if cd.free_rank is not None:
        out["free_rank"] = cd.free_rank
        out["free_basis"] = [pres.name(p) for p in cd.free_basis]
    return out


def center_text(pres: GentlePresentation, cd: CenterDescription) -> str:
    gens = ["1"] + [pres.name(p) for p in cd.cyclic_finite]
    gens += [" + ".join(pres.name(p) for p in summands) for _, summands in cd.m_elements]
    lines = ["center generated by: " + ", ".join(gens)]
    if cd.free_rank is not None:
        lines.append(f"free over the center of rank {cd.free_rank}, basis " + ", ".join(pres.name(p) for p in cd.free_basis))
    return "\n".join(lines)


def prime_dict(pres: GentlePresentation, p: PrimeIdeal) -> dict:
    out = {
        "kind": {"max": "MaxAtVertex", "ann": "AnnInfinite", "poly": "PolyFamily"}[p.kind],
        "label": p.label(pres),
        "generators": [pres.name(g) for g in p.generators],
        "height_zero": p.height_zero,
    }
    if p.vertex is not None:
        out["vertex"] = pres.quiver.vertices[p.vertex]
    if p.gamma is not None:
        out["gamma"] = pres.name(p.gamma.as_path())
    if p.kind == "ann":
        out["zero"] = p.is_zero
    if p.polynomial is not None:
        out["polynomial"] = [str(c) for c in p.polynomial]
        out["element"] = [[pres.name(q), str(c)] for q, c in p.poly_element]
    return out


def spectrum_dict(pres: GentlePresentation, spectrum: Spectrum) -> dict:
    return {
        "is_prime": spectrum.is_prime,
        "primes": [prime_dict(pres, p) for p in spectrum.primes],
        "inclusions": [list(e) for e in prime_inclusions(pres, spectrum)],
    }


def spectrum_text(pres: GentlePresentation, spectrum: Spectrum) -> str:
    lines = []
    for p in spectrum.primes:
        gens = ", ".join(pres.name(g) for g in p.generators) or "0"
        if p.kind == "poly":
            gens += ", p(m) for p irreducible with p(0) != 0"
        mark = "  (height 0)" if p.height_zero else ""
        lines.append(f"{p.label(pres)} = <{gens}>{mark}")
    labels = [p.label(pres) for p in spectrum.primes]
    for i, j in prime_inclusions(pres, spectrum):
        lines.append(f"{labels[i]} < {labels[j]}")
    lines.append("A is prime" if spectrum.is_prime else "A is not prime")
    return "\n".join(lines)


def ext_dict(pres: GentlePresentation, e: ExtDescriptor) -> dict:
    q = pres.quiver
    out = {"vertex": q.vertices[e.vertex], "degree": e.degree, "shape": e.shape, "zero": e.is_zero}
    if e.arrow is not None:
        out["arrow"] = q.arrows[e.arrow].name
    if e.summands:
        out["summands"] = [{"vertex": q.vertices[u], "arrow": q.arrows[b].name, "shift": s} for u, b, s in e.summands]
    if e.dims:
        out["dims"] = {str(d): n for d, n in e.dims}
    return out


def ext_text(pres: GentlePresentation, e: ExtDescriptor) -> str:
    q = pres.quiver
    v = q.vertices[e.vertex]
    head = f"Ext^{e.degree}(S({v}), A) = "
    if e.shape == "Zero":
        return head + "0"
    if e.shape == "LeftModuleVertex":
        return head + f"Ae{v}"
    if e.shape == "LeftModuleArrow":
        return head + f"A{q.arrows[e.arrow].name}"
    if e.shape == "Simple":
        return head + f"S({v})"
    if e.shape in ("ShiftedQuotient", "QuotientSum"):
        parts = [shifted(f"(Ae{q.vertices[u]}/A{q.arrows[b].name})", s) for u, b, s in e.summands]
        return head + " + ".join(parts)
    dims = ", ".join(f"{d}: {n}" for d, n in e.dims if n)
    return head + f"dimensions by internal degree {{{dims}}}"


def classification_dict(pres: GentlePresentation, c: Classification) -> dict:
    q = pres.quiver
    st = c.as_status
    cm = {"is_cm": c.cm.is_cm, "note": c.cm.note}
    if c.cm.witness is not None:
        cm["witness"] = {"x": "sum of arrows", "basis": [pres.name(p) for p in c.cm.witness.basis]}
    return {
        "kind": c.kind,
        "gk_dim": c.gk_dim,
        "depth": c.depth,
        "global_dim": jnum(c.global_dim),
        "injective_dim": c.injective_dim,
        "is_prime": c.is_prime,
        "is_semiprime": c.is_semiprime,
        "prime_radical": [q.arrows[a].name for a in c.prime_radical],
        "cohen_macaulay": cm,
        "as_status": {
            "kind": st.kind,
            "k": st.k,
            "ell": st.ell,
            "ext_degree": st.ext_degree,
            "alt_parameter": st.alt_parameter,
        },
        "stanley": {
            "as_gorenstein": c.stanley.as_gorenstein,
            "palindromic": c.stanley.palindromic,
            "quiver_condition": c.stanley.quiver_condition,
            "verdict": c.stanley.verdict,
        },
        "summary": c.summary(),
    }


def fraction_str(x: Fraction) -> str:
    return str(x)


def base_document(pres: GentlePresentation) -> dict:
    return {"presentation": presentation_to_dict(pres), "kind": pres.kind}
