"""Check the positive/negative local criteria on every W+(n,r) and W-(n,r) map for small n.

For each map the verdict on the weighted core system is compared with the
verdict on the full total system, and a core solution is tested on the
total system.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from snrmaps.cores import enumerate_family
from snrmaps.maps import MapFamily
from snrmaps.snr import SnrParams, build_lattice
from snrmaps.systems import nlc_check, plc_check


@dataclass
class LocalConfig:
    max_n: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=LocalConfig.max_n)
    cfg = LocalConfig(ap.parse_args().max_n)
    for n in range(2, cfg.max_n + 1):
        for r in range(1, n + 1):
            lat = build_lattice(SnrParams(n, r))
            for fam, check, tag in ((MapFamily.W_PLUS_NR, plc_check, "+"), (MapFamily.W_MINUS_NR, nlc_check, "-")):
                tally = Counter()
                for a in enumerate_family(lat, fam):
                    rep = check(a)
                    tally["maps"] += 1
                    tally["compatible"] += rep.total_feasible
                    tally["disagree"] += not rep.agrees
                    tally["no_lift"] += rep.solution_lifts is False
                print(f"S({n},{r}) {tag}: " + " ".join(f"{k}={tally[k]}" for k in ("maps", "compatible", "disagree", "no_lift")))


if __name__ == "__main__":
    main()
