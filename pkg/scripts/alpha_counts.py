"""Pos/alpha statistics for the (6, 2) weight functions f, g and for solutions of a system.

    python3 scripts/alpha_counts.py
    python3 scripts/alpha_counts.py --weights data/f_6_2.wf data/g_6_2.wf --system data/generative_6_2.sys
"""

import argparse
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from snrmaps.systems import compatible, parse_system
from snrmaps.weights import alpha_minus, alpha_plus, format_weights, parse_weights, pos_set

DATA = Path(__file__).resolve().parent.parent / "data"


@dataclass
class AlphaConfig:
    weights: list[str] = field(default_factory=lambda: [str(DATA / "f_6_2.wf"), str(DATA / "g_6_2.wf")])
    system: str | None = str(DATA / "generative_6_2.sys")
    offsets: tuple[int, ...] = (1, 2, 3)


def run(cfg: AlphaConfig) -> dict:
    out = {"weights": [], "system": None}
    fs = [parse_weights(Path(p).read_text()) for p in cfg.weights]
    for path, f in zip(cfg.weights, fs):
        out["weights"].append({"file": Path(path).name, "alpha_plus": alpha_plus(f), "alpha_minus": alpha_minus(f)})
    if len(fs) >= 2:
        out["pos_sets_equal"] = pos_set(fs[0]) == pos_set(fs[1])
    if cfg.system:
        s = parse_system(Path(cfg.system).read_text())
        sols = []
        for offset in cfg.offsets:
            for order in (None, list(range(s.params.n))):
                res = compatible(s, order=order, offset=offset)
                if res.feasible:
                    sols.append(res.solution)
        out["system"] = {
            "file": Path(cfg.system).name,
            "solutions": len({format_weights(f) for f in sols}),
            "alpha_plus": sorted({alpha_plus(f) for f in sols}),
            "single_pos_set": len({frozenset(pos_set(f)) for f in sols}) == 1,
        }
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weights", nargs="*")
    ap.add_argument("--system")
    args = ap.parse_args()
    cfg = AlphaConfig()
    if args.weights:
        cfg.weights = args.weights
    if args.system:
        cfg.system = args.system
    print(json.dumps({"config": asdict(cfg), "result": run(cfg)}, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
