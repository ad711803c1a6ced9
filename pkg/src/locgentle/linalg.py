"""Exact sparse linear algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict  # column label -> Fraction, zero entries omitted


def add_into(target: dict, source: Mapping, scale=1) -> None:
    for k, c in source.items():
        v = target.get(k, 0) + scale * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)


@dataclass
class RationalMatrix:
    """A matrix stored column by column: column j is a sparse dict over row labels.

    Row and column labels are arbitrary hashables (basis paths, summand keys);
    ``rows`` and ``cols`` fix their order.
    """

    rows: list[Hashable]
    cols: list[Hashable]
    columns: dict = field(default_factory=dict)

    def set_column(self, col: Hashable, vec: Mapping) -> None:
        clean = {k: Fraction(v) for k, v in vec.items() if v}
        if clean:
            self.columns[col] = clean
        else:
            self.columns.pop(col, None)

    def column(self, col: Hashable) -> dict:
        return self.columns.get(col, {})

    def apply(self, vec: Mapping) -> dict:
        out: dict = {}
        for c, x in vec.items():
            add_into(out, self.column(c), x)
        return out

    def compose(self, first: "RationalMatrix") -> "RationalMatrix":
        """self after first."""
        out = RationalMatrix(self.rows, first.cols)
        for c in first.cols:
            out.set_column(c, self.apply(first.column(c)))
        return out

    def is_zero(self) -> bool:
        return not self.columns

    def rank(self) -> int:
        return rank_of(self.columns.values())


def rank_of(vectors: Iterable[Mapping]) -> int:
    """Rank of a family of sparse vectors by incremental elimination."""
    return len(_echelon(vectors))


def _echelon(vectors: Iterable[Mapping]) -> dict:
    pivots: dict = {}  # pivot label -> reduced vector with that pivot equal to 1
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for piv, row in pivots.items():
            c = v.get(piv)
            if c:
                add_into(v, row, -c)
        if not v:
            continue
        piv = min(v, key=repr)
        scale = v[piv]
        v = {k: c / scale for k, c in v.items()}
        for other, row in pivots.items():
            c = row.get(piv)
            if c:
                add_into(row, v, -c)
        pivots[piv] = v
    return pivots


def in_span(vec: Mapping, vectors: Iterable[Mapping]) -> bool:
    pivots = _echelon(vectors)
    v = {k: Fraction(c) for k, c in vec.items() if c}
    for piv, row in pivots.items():
        c = v.get(piv)
        if c:
            add_into(v, row, -c)
    return not v


def same_span(u: list[Mapping], w: list[Mapping]) -> bool:
    r = rank_of(u)
    return r == rank_of(w) and r == rank_of(list(u) + list(w))


def kernel(m: RationalMatrix) -> list[dict]:
    """A basis of the null space, as sparse vectors over the column labels."""
    # reduce columns one at a time, remembering which combination produced each
    basis = []
    pivots: dict = {}
    for col in m.cols:
        img = dict(m.column(col))
        comb = {col: Fraction(1)}
        for piv, (pimg, pcomb) in pivots.items():
            c = img.get(piv)
            if c:
                add_into(img, pimg, -c)
                add_into(comb, pcomb, -c)
        if not img:
            basis.append(comb)
            continue
        piv = min(img, key=repr)
        scale = img[piv]
        img = {k: c / scale for k, c in img.items()}
        comb = {k: c / scale for k, c in comb.items()}
        pivots[piv] = (img, comb)
    return basis
