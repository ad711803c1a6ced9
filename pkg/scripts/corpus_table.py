"""Classify every gentle presentation on small quivers and tabulate the results.

    python3 scripts/corpus_table.py --max-vertices 3 --max-arrows 5 --verify
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from locgentle.corpus import enumerate_presentations, small_quivers
from locgentle.invariants import center, classify
from locgentle.oracle import verify_center, verify_complex
from locgentle.resolutions import injective_resolution


@dataclass
class TableConfig:
    max_vertices: int = 2
    max_arrows: int = 4
    verify: bool = False
    truncation: int = 8
    show_rows: bool = False


def run(cfg: TableConfig) -> Counter:
    counts: Counter = Counter()
    for n in range(1, cfg.max_vertices + 1):
        for quiver in small_quivers(n, cfg.max_arrows):
            for pres in enumerate_presentations(quiver):
                c = classify(pres)
                key = (pres.kind, c.as_status.kind, c.cm.is_cm, c.stanley.verdict)
                counts[key] += 1
                if cfg.verify:
                    verify_center(pres, center(pres), cfg.truncation)
                    for v in range(pres.num_vertices):
                        verify_complex(pres, injective_resolution(pres, v), (-3, 3), cfg.truncation)
                if cfg.show_rows:
                    rels = ", ".join(f"{a}.{b}" for a, b in pres.relation_names()) or "none"
                    print(f"{len(quiver.vertices)}v {len(quiver.arrows)}a  {{{rels}}}  {c.summary()}")
    return counts


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-vertices", type=int, default=TableConfig.max_vertices)
    p.add_argument("--max-arrows", type=int, default=TableConfig.max_arrows)
    p.add_argument("--verify", action="store_true", help="also run the center and injective-resolution oracles")
    p.add_argument("--truncation", type=int, default=TableConfig.truncation)
    p.add_argument("--rows", action="store_true", help="print one line per presentation")
    a = p.parse_args()
    cfg = TableConfig(a.max_vertices, a.max_arrows, a.verify, a.truncation, a.rows)
    start = time.perf_counter()
    counts = run(cfg)
    print(f"{'kind':16} {'AS type':14} {'CM':5} {'Stanley check':36} count")
    for (kind, as_kind, cm, verdict), n in sorted(counts.items()):
        print(f"{kind:16} {as_kind:14} {str(cm):5} {verdict:36} {n}")
    print(f"{sum(counts.values())} presentations in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
