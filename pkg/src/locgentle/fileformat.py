"""The line-oriented presentation file format.

    # comment
    vertex NAME
    arrow NAME SRC TGT
    rel A B
"""

from __future__ import annotations

from .quiver import (
    DuplicateName,
    GentlePresentation,
    PresentationError,
    Quiver,
    UnknownEndpoint,
    build_quiver,
    validate_presentation,
)


class PresentationSyntaxError(PresentationError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_quiver_text(text: str) -> tuple[Quiver, list[tuple[int, int]]]:
    """Parse a file into a quiver and raw relation pairs, without the gentle checks."""
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    rels: list[tuple[str, str, int]] = []
    arrow_names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key, args = tokens[0], tokens[1:]
        if key == "vertex":
            if len(args) != 1:
                raise PresentationSyntaxError(lineno, "expected 'vertex NAME'")
            if args[0] in vertices:
                raise DuplicateName(f"line {lineno}: vertex {args[0]} declared twice")
            vertices.append(args[0])
        elif key == "arrow":
            if len(args) != 3:
                raise PresentationSyntaxError(lineno, "expected 'arrow NAME SRC TGT'")
            name, src, tgt = args
            if name in arrow_names:
                raise DuplicateName(f"line {lineno}: arrow {name} declared twice")
            for end in (src, tgt):
                if end not in vertices:
                    raise UnknownEndpoint(f"line {lineno}: arrow {name} uses undeclared vertex {end}")
            arrow_names.add(name)
            arrows.append((name, src, tgt))
        elif key == "rel":
            if len(args) != 2:
                raise PresentationSyntaxError(lineno, "relations are written 'rel A B' with exactly two arrows")
            for n in args:
                if n not in arrow_names:
                    raise PresentationSyntaxError(lineno, f"unknown arrow {n}")
            rels.append((args[0], args[1], lineno))
        else:
            raise PresentationSyntaxError(lineno, f"unknown keyword {key!r}")
    quiver = build_quiver(vertices, arrows)
    idx = quiver.arrow_index
    pairs = []
    for a, b, lineno in rels:
        if quiver.target(idx[a]) != quiver.source(idx[b]):
            raise PresentationSyntaxError(lineno, f"{a} {b} is not a path")
        pairs.append((idx[a], idx[b]))
    return quiver, pairs


def parse_presentation(text: str) -> GentlePresentation:
    quiver, pairs = parse_quiver_text(text)
    return validate_presentation(quiver, pairs)


def format_presentation(pres: GentlePresentation) -> str:
    q = pres.quiver
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.name} {q.vertices[a.source]} {q.vertices[a.target]}" for a in q.arrows]
    lines += [f"rel {a} {b}" for a, b in pres.relation_names()]
    return "\n".join(lines) + "\n"


def presentation_to_dict(pres: GentlePresentation) -> dict:
    q = pres.quiver
    return {
        "vertices": list(q.vertices),
        "arrows": [[a.name, q.vertices[a.source], q.vertices[a.target]] for a in q.arrows],
        "relations": [list(r) for r in pres.relation_names()],
    }


def presentation_from_dict(doc: dict) -> GentlePresentation:
    quiver = build_quiver(doc["vertices"], [tuple(a) for a in doc["arrows"]])
    idx = quiver.arrow_index
    return validate_presentation(quiver, [(idx[a], idx[b]) for a, b in doc["relations"]])
