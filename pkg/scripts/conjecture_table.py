"""Exhaustive Q2/Q3 scan over every (n, r) with n up to a bound; prints one row per case."""

import argparse
import time
from dataclasses import dataclass

from snrmaps.formal import conjecture_scan
from snrmaps.snr import SnrParams


@dataclass
class ScanConfig:
    max_n: int = 5
    min_n: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=ScanConfig.max_n)
    args = ap.parse_args()
    cfg = ScanConfig(max_n=args.max_n)
    print(f"{'n':>2} {'r':>2} {'which':>5} {'W(n,r)':>7} {'FC':>5} {'compat':>6}  verdict  secs")
    for n in range(cfg.min_n, cfg.max_n + 1):
        for r in range(1, n + 1):
            for which in ("q2", "q3"):
                t0 = time.perf_counter()
                rep = conjecture_scan(SnrParams(n, r), which)
                dt = time.perf_counter() - t0
                print(f"{n:>2} {r:>2} {which:>5} {rep.family_count:>7} {rep.fc_count:>5} "
                      f"{rep.compatible_count:>6}  {rep.verdict}  {dt:.2f}")


if __name__ == "__main__":
    main()
