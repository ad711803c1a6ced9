"""Print the invariants and resolutions of the named example presentations, checking each complex.

    python3 scripts/reproduce_examples.py [name ...]
"""

from __future__ import annotations

import sys

from locgentle import catalog
from locgentle.invariants import classify, hilbert_series
from locgentle.oracle import verify_complex
from locgentle.report import complex_text, spectrum_text
from locgentle.resolutions import injective_resolution, projective_resolution
from locgentle.spectrum import prime_spectrum

EXAMPLES = dict(catalog.NAMED)
EXAMPLES["cyclic-1"] = lambda: catalog.cyclic(1)
EXAMPLES["cyclic-1-all-relations"] = lambda: catalog.cyclic(1, all_relations=True)


def show(name: str) -> None:
    pres = EXAMPLES[name]()
    q = pres.quiver
    h = hilbert_series(pres)
    print(f"=== {name} ({pres.kind})")
    print(f"H(t) = {h} = {h.series_str(8)}")
    print(classify(pres).summary())
    print(spectrum_text(pres, prime_spectrum(pres)))
    for v in range(pres.num_vertices):
        for cx in (projective_resolution(pres, v, steps=4), injective_resolution(pres, v)):
            report = verify_complex(pres, cx, (-6, 6), 12, skip_unsafe=True)
            status = "exact" if not report.skipped else f"exact, skipped degrees {report.skipped}"
            print(complex_text(pres, cx).split("\n")[0] + f"   [{status}]")
    print()


def main(argv: list[str]) -> None:
    names = argv or sorted(EXAMPLES)
    for name in names:
        if name not in EXAMPLES:
            sys.exit(f"unknown example {name}; choose from {', '.join(sorted(EXAMPLES))}")
        show(name)


if __name__ == "__main__":
    main(sys.argv[1:])
