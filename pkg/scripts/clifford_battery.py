"""Clifford-set statistics over the double-covering battery.

    python scripts/clifford_battery.py --max-n 5 --max-order 8
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from thingeom.battery import double_cover_battery


@dataclass(frozen=True)
class Config:
    max_n: int = 6
    max_order: int = 12


def survey(cfg: Config) -> list[tuple[str, int, int, int, int]]:
    """Rows of (group, n, coverings, orientable, not orientable)."""
    counts: Counter = Counter()
    orientable: Counter = Counter()
    odd: Counter = Counter()
    order: list[tuple[str, int]] = []
    for name, n, cov in double_cover_battery(cfg.max_n, cfg.max_order):
        C = cov.clifford
        assert len(C) == 2 ** n
        key = (name, n)
        if key not in counts:
            order.append(key)
        counts[key] += 1
        orientable[key] += C.is_orientable
        odd[key] += not C.is_orientable
    return [(g, n, counts[g, n], orientable[g, n], odd[g, n]) for g, n in order]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    a = ap.parse_args()
    cfg = Config(a.max_n, a.max_order)
    start = time.perf_counter()
    rows = survey(cfg)
    print(f"{'group':<10} {'n':>2} {'covers':>7} {'orientable':>11} {'non-orientable':>15}")
    for g, n, c, o, s in rows:
        print(f"{g:<10} {n:>2} {c:>7} {o:>11} {s:>15}")
    total = sum(r[2] for r in rows)
    print(f"{total} coverings in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
