"""Command line front end: ``locgentle COMMAND FILE [flags]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import report
from .corpus import RelationsPresent, enumerate_presentations
from .fileformat import format_presentation, parse_presentation, parse_quiver_text, presentation_to_dict
from .invariants import center, classify, cohen_macaulay, hilbert_series, injective_dim
from .maxpaths import decompose_maximal_paths, koszul_dual
from .oracle import (
    VerificationError,
    ext_dims_bruteforce,
    verify_annihilator,
    verify_center,
    verify_complex,
    verify_free_module,
    verify_hilbert,
)
from .quiver import GentlePresentation, PresentationError
from .resolutions import ext_nonzero, ext_simple, injective_resolution, projective_resolution
from .spectrum import annihilator_generators, prime_spectrum

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64

COMMANDS = (
    "validate",
    "invariants",
    "hilbert",
    "dual",
    "maximal",
    "center",
    "spectrum",
    "resolve-proj",
    "resolve-inj",
    "ext",
    "classify",
    "verify",
    "enumerate",
)


class UsageError(Exception):
    pass


class UnknownCommand(UsageError):
    pass


class MissingFlag(UsageError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="locgentle", description="Invariants of (locally) gentle quiver presentations.")
    p.add_argument("command", help="one of: " + ", ".join(COMMANDS))
    p.add_argument("file", help="presentation file (quiver only for enumerate)")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.add_argument("--vertex", help="vertex name for resolve-proj, resolve-inj and ext")
    p.add_argument("--degree", type=int, help="cohomological degree for ext")
    p.add_argument("--steps", type=int, default=32, help="projective resolution steps when infinite")
    p.add_argument("--truncation", type=int, default=12, help="path length bound for oracle checks")
    p.add_argument("--terms", type=int, default=20, help="number of Hilbert series terms to print")
    p.add_argument("--classify", action="store_true", help="with enumerate, classify each presentation")
    return p


def _vertex(pres: GentlePresentation, args) -> int:
    if args.vertex is None:
        raise MissingFlag(f"{args.command} needs --vertex")
    try:
        return pres.quiver.vertex_index[args.vertex]
    except KeyError:
        raise UsageError(f"no vertex named {args.vertex}") from None


def _emit(args, doc: dict, text: str, out) -> None:
    if args.json:
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_validate(pres, args, out):
    q = pres.quiver
    text = f"valid {pres.kind} presentation: {len(q.vertices)} vertices, {len(q.arrows)} arrows, {len(pres.relations)} relations"
    _emit(args, report.base_document(pres), text, out)


def cmd_hilbert(pres, args, out):
    h = hilbert_series(pres)
    doc = report.base_document(pres)
    doc["hilbert"] = report.hilbert_dict(h, args.terms)
    _emit(args, doc, f"{h} = {h.series_str(args.terms)}", out)


def cmd_dual(pres, args, out):
    dual = koszul_dual(pres)
    doc = report.base_document(pres)
    doc["dual"] = presentation_to_dict(dual)
    doc["dual_kind"] = dual.kind
    _emit(args, doc, format_presentation(dual), out)


def _maximal_text(pres) -> str:
    lines = []
    for m in decompose_maximal_paths(pres).paths:
        if m.infinite:
            lines.append(f"{pres.name(m.as_path())}  infinite (repeats with period {m.period})")
        else:
            lines.append(f"{pres.name(m.as_path())}  finite, length {m.length}")
    return "\n".join(lines)


def cmd_maximal(pres, args, out):
    doc = report.base_document(pres)
    doc["maximal_paths"] = report.maximal_dict(pres, decompose_maximal_paths(pres))
    _emit(args, doc, _maximal_text(pres), out)


def cmd_center(pres, args, out):
    cd = center(pres)
    doc = report.base_document(pres)
    doc["center"] = report.center_dict(pres, cd)
    _emit(args, doc, report.center_text(pres, cd), out)


def cmd_spectrum(pres, args, out):
    spectrum = prime_spectrum(pres)
    doc = report.base_document(pres)
    doc["spectrum"] = report.spectrum_dict(pres, spectrum)
    _emit(args, doc, report.spectrum_text(pres, spectrum), out)


def cmd_classify(pres, args, out):
    c = classify(pres)
    doc = report.base_document(pres)
    doc["classification"] = report.classification_dict(pres, c)
    text = c.summary() + f"\nStanley check: {c.stanley.verdict}"
    _emit(args, doc, text, out)


def cmd_invariants(pres, args, out):
    h = hilbert_series(pres)
    cd = center(pres)
    spectrum = prime_spectrum(pres)
    c = classify(pres)
    dual = koszul_dual(pres)
    doc = report.base_document(pres)
    doc["invariants"] = {"hilbert": report.hilbert_dict(h, args.terms)}
    doc["maximal_paths"] = report.maximal_dict(pres, decompose_maximal_paths(pres))
    doc["dual"] = presentation_to_dict(dual)
    doc["center"] = report.center_dict(pres, cd)
    doc["spectrum"] = report.spectrum_dict(pres, spectrum)
    doc["classification"] = report.classification_dict(pres, c)
    doc["stanley"] = doc["classification"]["stanley"]
    text = "\n\n".join(
        [
            f"kind: {pres.kind}",
            f"Hilbert series: {h} = {h.series_str(args.terms)}",
            "maximal paths:\n" + _maximal_text(pres),
            "Koszul dual relations: " + (", ".join(f"{a}.{b}" for a, b in dual.relation_names()) or "none"),
            report.center_text(pres, cd),
            "prime spectrum:\n" + report.spectrum_text(pres, spectrum),
            c.summary() + f"\nStanley check: {c.stanley.verdict}",
        ]
    )
    _emit(args, doc, text, out)


def cmd_resolve_proj(pres, args, out):
    cx = projective_resolution(pres, _vertex(pres, args), steps=args.steps)
    doc = report.base_document(pres)
    doc["complex"] = report.complex_dict(pres, cx)
    _emit(args, doc, report.complex_text(pres, cx), out)


def cmd_resolve_inj(pres, args, out):
    cx = injective_resolution(pres, _vertex(pres, args))
    doc = report.base_document(pres)
    doc["complex"] = report.complex_dict(pres, cx)
    _emit(args, doc, report.complex_text(pres, cx), out)


def cmd_ext(pres, args, out):
    v = _vertex(pres, args)
    if args.degree is None:
        raise MissingFlag("ext needs --degree")
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    e = ext_simple(pres, v, args.degree, truncation=args.truncation)
    doc = report.base_document(pres)
    doc["ext"] = report.ext_dict(pres, e)
    _emit(args, doc, report.ext_text(pres, e), out)


def run_verification(pres: GentlePresentation, truncation: int) -> list[tuple[str, str]]:
    """Run the oracle suite; raises VerificationError on the first failed check."""
    done = []
    q = pres.quiver
    verify_hilbert(pres, truncation)
    done.append(("hilbert", f"closed form matches path counts to degree {truncation}"))
    dual = koszul_dual(pres)
    if koszul_dual(dual).relations != pres.relations:
        raise VerificationError("Koszul dual is not involutive")
    done.append(("dual", "Koszul dual validates and is involutive"))
    cd = center(pres)
    verify_center(pres, cd, truncation=max(2, min(truncation, 10)))
    done.append(("center", "generators central, centralizer dimensions match"))
    window = (-6, 6)
    inj = 0
    for v in range(pres.num_vertices):
        pr = verify_complex(pres, projective_resolution(pres, v, steps=min(12, truncation)), window, truncation, skip_unsafe=True)
        cx = injective_resolution(pres, v)
        inj = max(inj, int(cx.length))
        ir = verify_complex(pres, cx, window, truncation, skip_unsafe=True)
        skipped = sorted(set(pr.skipped) | set(ir.skipped))
        note = f", degrees {skipped} skipped by truncation" if skipped else ""
        done.append((f"resolutions at {q.vertices[v]}", f"exact on [{window[0]}, {window[1]}]{note}"))
    if inj != injective_dim(pres):
        raise VerificationError(f"injective resolutions have length {inj}, formula gives {injective_dim(pres)}")
    done.append(("injdim", f"{inj} from constructed resolutions"))
    for v in range(pres.num_vertices):
        for i in range(4):
            hi = min(4, truncation - i - 1)
            if hi < 0:
                break
            dims = ext_dims_bruteforce(pres, v, i, (-i - 1, hi), truncation)
            if ext_nonzero(pres, v, i) != any(dims.values()):
                raise VerificationError(f"Ext^{i}(S({q.vertices[v]}), A): formula and cohomology disagree")
    done.append(("ext", "nonvanishing agrees with cohomology for degrees 0 to 3"))
    cm = cohen_macaulay(pres)
    if cm.witness is not None and not pres.is_gentle and not decompose_maximal_paths(pres).finite:
        verify_free_module(pres, cm.witness, truncation=min(truncation, 8))
        done.append(("cohen-macaulay", "witness basis is free over k[x]"))
    for g in decompose_maximal_paths(pres).infinite:
        verify_annihilator(pres, g, annihilator_generators(pres, g), truncation=min(truncation, 10))
    done.append(("annihilators", "ideal spans match paths off each infinite maximal path"))
    return done


def cmd_verify(pres, args, out):
    doc = report.base_document(pres)
    try:
        done = run_verification(pres, args.truncation)
    except VerificationError as err:
        doc["verification"] = {"passed": False, "error": type(err).__name__, "message": str(err)}
        _emit(args, doc, f"verification FAILED: {type(err).__name__}: {err}", out)
        return EXIT_VERIFY
    doc["verification"] = {"passed": True, "checks": [{"check": k, "detail": d} for k, d in done]}
    text = "\n".join(f"ok  {k}: {d}" for k, d in done) + "\nall checks passed"
    _emit(args, doc, text, out)
    return EXIT_OK


def cmd_enumerate(text: str, args, out):
    quiver, pairs = parse_quiver_text(text)
    if pairs:
        raise RelationsPresent("enumerate expects a quiver without relations")
    rows, lines = [], []
    for i, pres in enumerate(enumerate_presentations(quiver)):
        row = {"index": i, "presentation": presentation_to_dict(pres), "kind": pres.kind}
        rels = ", ".join(f"{a}.{b}" for a, b in pres.relation_names()) or "none"
        line = f"{i}: relations {{{rels}}}  {pres.kind}"
        if args.classify:
            c = classify(pres)
            row["classification"] = report.classification_dict(pres, c)
            line += f"  |  {c.summary()}"
        rows.append(row)
        lines.append(line)
    lines.append(f"{len(rows)} presentations")
    _emit(args, {"count": len(rows), "presentations": rows}, "\n".join(lines), out)


HANDLERS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "hilbert": cmd_hilbert,
    "dual": cmd_dual,
    "maximal": cmd_maximal,
    "center": cmd_center,
    "spectrum": cmd_spectrum,
    "resolve-proj": cmd_resolve_proj,
    "resolve-inj": cmd_resolve_inj,
    "ext": cmd_ext,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command not in COMMANDS:
            raise UnknownCommand(f"unknown command {args.command!r}")
        if args.truncation < 2 or args.steps < 1 or args.terms < 1:
            raise UsageError("--truncation must be at least 2, --steps and --terms at least 1")
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        if args.command == "enumerate":
            cmd_enumerate(text, args, out)
            return EXIT_OK
        pres = parse_presentation(text)
        code = HANDLERS[args.command](pres, args, out)
        return EXIT_OK if code is None else code
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (PresentationError, RelationsPresent) as exc:
        err.write(f"invalid presentation: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
