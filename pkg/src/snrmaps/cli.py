"""Command-line interface: ``snrmaps <command> [flags]``.

Map and system files use the plain text formats of the library: an
``snr <n> <r>`` header, then one assignment or row per line. A basis file
is a map file. JSON output has sorted keys so that repeated runs are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cores import CorePair, basis_violation, enumerate_family, fundamental_core, span
from .dot import hasse_dot
from .errors import SnrError
from .feasibility import variable_names
from .formal import conjecture_scan, is_complemented_pointwise, pointwise_witness
from .maps import MapFamily, PartialMap, Sign, classify, format_map, full_sign, in_bnr, parse_map
from .snr import SnrParams, build_lattice, format_string
from .systems import chi, compatible, format_system, is_generative, parse_system, tau

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2

FAMILIES = {
    "wplus": MapFamily.W_PLUS,
    "wminus": MapFamily.W_MINUS,
    "wplus-nr": MapFamily.W_PLUS_NR,
    "wminus-nr": MapFamily.W_MINUS_NR,
}


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_map(path: str) -> PartialMap:
    return parse_map(_read(path))


def cmd_lattice(args) -> int:
    lat = build_lattice(SnrParams(args.n, args.r))
    out = {"n": args.n, "r": args.r, "size": lat.size,
           "min": format_string(lat.minimum()), "max": format_string(lat.maximum())}
    if args.list:
        out["strings"] = lat.names(range(lat.size))
    if args.dot:
        Path(args.dot).write_text(hasse_dot(lat), encoding="utf-8")
        out["dot"] = args.dot
    _dump(out)
    return EXIT_OK


def cmd_core(args) -> int:
    a = _load_map(args.map)
    s = full_sign(a)
    if s is None:
        raise SnrError("the full string is not assigned; cannot pick W+ or W-")
    plus = s == Sign.P
    family = MapFamily.W_PLUS if plus else MapFamily.W_MINUS
    if not classify(a, family):
        raise SnrError(f"map is not in {family.value} although its full string is {s}")
    sys.stdout.write(format_map(fundamental_core(a, plus).core))
    return EXIT_OK


def _plus(family: str) -> bool:
    return family == "wplus"


def cmd_span(args) -> int:
    b = _load_map(args.basis)
    sys.stdout.write(format_map(span(CorePair.from_map(b), b.space, _plus(args.family))))
    return EXIT_OK


def cmd_basis_check(args) -> int:
    b = _load_map(args.basis)
    bad = basis_violation(CorePair.from_map(b), b.space, _plus(args.family))
    _dump({"family": args.family, "valid": bad is None, "failing_axiom": bad})
    return EXIT_OK if bad is None else EXIT_NEGATIVE


def cmd_system(args) -> int:
    sys.stdout.write(format_system(tau(_load_map(args.map))))
    return EXIT_OK


def cmd_chi(args) -> int:
    sys.stdout.write(format_map(chi(parse_system(_read(args.system)))))
    return EXIT_OK


def cmd_feasible(args) -> int:
    s = parse_system(_read(args.system))
    res = compatible(s).result
    out = {"verdict": res.verdict.name, "trace_len": len(res.trace)}
    if args.witness and res.feasible:
        out["witness"] = {k: str(v) for k, v in zip(variable_names(s.params), res.witness)}
    _dump(out)
    return EXIT_OK if res.feasible else EXIT_NEGATIVE


def cmd_generative(args) -> int:
    s = parse_system(_read(args.system))
    g = is_generative(s)
    out = {"verdict": "GENERATIVE" if g.generative else "NOT_GENERATIVE"}
    if g.generative:
        out["rows"] = len(g.total)
        if args.out:
            Path(args.out).write_text(format_system(g.total), encoding="utf-8")
            out["total_system"] = args.out
    else:
        out["witness"] = format_string(g.witness)
    _dump(out)
    return EXIT_OK if g.generative else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    a = _load_map(args.map)
    out = {"total": a.is_total, "in_bnr": in_bnr(a)}
    for fam in MapFamily:
        if fam not in (MapFamily.B_NR, MapFamily.BT_NR):
            out[fam.value] = classify(a, fam)
    out["pointwise"] = is_complemented_pointwise(a)
    if not out["pointwise"]:
        out["pointwise_witness"] = str(pointwise_witness(a))
    _dump(out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lat = build_lattice(SnrParams(args.n, args.r))
    maps = enumerate_family(lat, FAMILIES[args.family])
    if args.count_only:
        _dump({"family": args.family, "n": args.n, "r": args.r, "count": sum(1 for _ in maps)})
        return EXIT_OK
    sys.stdout.write("\n".join(format_map(a) for a in maps))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    _dump(conjecture_scan(SnrParams(args.n, args.r), args.which).to_json())
    return EXIT_OK


def cmd_dot(args) -> int:
    a = _load_map(args.map)
    Path(args.out).write_text(hasse_dot(a.space, a), encoding="utf-8")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share exit status 1 with every other failure; 2 means "negative answer"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="snrmaps", description="Boolean maps on S(n, r) and (n, r)-systems.")
    sub = ap.add_subparsers(dest="command", required=True)

    def nr(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("lattice", help="size and bounds of S(n, r), optionally with all strings")
    nr(p)
    p.add_argument("--list", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("core", help="fundamental core of a W+ or W- map")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_core)

    for name, func in (("span", cmd_span), ("basis-check", cmd_basis_check)):
        p = sub.add_parser(name)
        p.add_argument("--basis", required=True)
        p.add_argument("--family", choices=["wplus", "wminus"], required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("system", help="map file -> system file")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("chi", help="system file -> map file")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("feasible", help="exact compatibility check (exit 2 when infeasible)")
    p.add_argument("--system", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("generative")
    p.add_argument("--system", required=True)
    p.add_argument("--out", metavar="PATH", help="write the generated total system here")
    p.set_defaults(func=cmd_generative)

    p = sub.add_parser("classify")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate")
    nr(p)
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("conjecture")
    nr(p)
    p.add_argument("--which", choices=["q2", "q3"], required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("dot", help="Hasse diagram colored by sign (unassigned nodes gray)")
    p.add_argument("--map", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SnrError, OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
