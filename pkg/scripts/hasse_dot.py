"""Write the Hasse diagram of S(n, r) as DOT, colored by a map file when one is given."""

import argparse
from pathlib import Path

from snrmaps.dot import hasse_dot
from snrmaps.maps import parse_map
from snrmaps.snr import SnrParams, build_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--map", help="color nodes by this map (its header overrides --n/--r)")
    ap.add_argument("--out", default="hasse.dot")
    args = ap.parse_args()
    if args.map:
        a = parse_map(Path(args.map).read_text())
        text = hasse_dot(a.space, a)
    else:
        text = hasse_dot(build_lattice(SnrParams(args.n, args.r)))
    Path(args.out).write_text(text)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
