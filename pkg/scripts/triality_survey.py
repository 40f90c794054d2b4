"""Triality orbit lengths for oriented 8/4 coverings over small groups.

Also compares the shipped orientation convention with the naive one, which
labels the new vector class by the index of the half-Clifford set.

    python scripts/triality_survey.py --max-order 8
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from thingeom.battery import oriented_d4_objects
from thingeom.covering import oriented_isomorphism
from thingeom.d4 import CONVENTIONS, triality_c1_plus, triality_orbit


@dataclass(frozen=True)
class Config:
    max_order: int = 8
    conventions: tuple[str, ...] = tuple(sorted(CONVENTIONS))


def period_three_failures(obj, convention: str) -> int:
    x = obj
    for _ in range(3):
        x = triality_c1_plus(x, convention)
    return int(oriented_isomorphism(x, obj) is None)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    cfg = Config(ap.parse_args().max_order)
    start = time.perf_counter()
    lengths: dict[str, Counter] = {}
    failures = Counter()
    for name, obj in oriented_d4_objects(cfg.max_order):
        lengths.setdefault(name, Counter())[triality_orbit(obj, 3).orbit_length] += 1
        for conv in cfg.conventions:
            failures[conv] += period_three_failures(obj, conv)
    print(f"{'group':<10} orbit lengths")
    for name, c in lengths.items():
        print(f"{name:<10} " + ", ".join(f"{k}: {v}" for k, v in sorted(c.items())))
    total = sum(sum(c.values()) for c in lengths.values())
    for conv in cfg.conventions:
        print(f"convention {conv!r}: {failures[conv]} of {total} objects fail (C1+)^3 = id")
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
