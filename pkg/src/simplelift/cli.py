"""Command line interface.

Exit codes: 0 success, 1 invalid input, 2 degree search exhausted its cap.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .covers import NotFoundUpTo, enumerate_covers, hall_count, min_simple_lift_degree, write_catalog
from .growth import (CapExceeded, NotReached, TooSmallL, compact_witness, cusped_witness,
                     f_S_lower, find_threshold_n0, growth_table, length_defect, table_to_csv)
from .hyperbolic import (Elliptic, PantsMetric, geodesic_length, pants_holonomy,
                         thrice_punctured_holonomy, trace_to_length)
from .intersection import NonPrimitive, self_intersection
from .ribbon import pants_base
from .words import WordError, gamma_n, parse

DEFAULT_CATALOG = "./covers-catalog"


class InvalidConfig(ValueError):
    pass


def _emit(payload: dict, args) -> None:
    payload = dict(payload)
    payload["config"] = _config(args)
    payload["version"] = __version__
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def cmd_intersect(args) -> int:
    w = parse(args.word)
    n = self_intersection(w, pants_base())
    _emit({"word": str(w), "intersection": n, "simple": n == 0}, args)
    return 0


def cmd_degree(args) -> int:
    w = parse(args.word)
    base = pants_base()
    cap = args.cap if args.cap is not None else self_intersection(w, base) + 2
    if cap < 1:
        raise InvalidConfig("--cap must be positive")
    args.cap = cap
    try:
        hit = min_simple_lift_degree(w, cap, base, catalog=args.catalog, jobs=args.jobs)
    except NotFoundUpTo:
        _emit({"word": str(w), "degree": None, "not_found_up_to": cap}, args)
        return 2
    record = hit.witness_record()
    if args.witness:
        with open(args.witness, "w") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    _emit({"word": str(w), "degree": hit.degree, "witness": record}, args)
    return 0


def cmd_covers(args) -> int:
    d = args.degree
    if d < 1:
        raise InvalidConfig("--degree must be positive")
    out = {"degree": d, "rank": 2, "hall_count": hall_count(d)}
    if args.count:
        out["count"] = enumerate_covers(d, jobs=args.jobs)
    if args.emit:
        out["catalog"] = write_catalog(args.catalog, d)
    _emit(out, args)
    return 0


def _rep(args):
    if args.cusps:
        return thrice_punctured_holonomy(), "three-punctured sphere"
    if args.cuffs is None:
        raise InvalidConfig("give --cusps or --cuffs L1 L2 L3")
    return pants_holonomy(PantsMetric(*args.cuffs)), "custom-pants mode"


def cmd_length(args) -> int:
    rep, label = _rep(args)
    if args.n_max is not None:
        rows = []
        for n in range(args.n_max + 1):
            t = rep.image(gamma_n(n)).trace
            rows.append((n, str(gamma_n(n)) if n <= 20 else f"ab^{n}", t, trace_to_length(t)))
        if args.format == "csv":
            sys.stdout.write("n,word,trace,length\n")
            for n, word, t, length in rows:
                sys.stdout.write(f"{n},{word},{t!r},{length!r}\n")
        else:
            _emit({"metric": label, "rows": [dict(zip(("n", "word", "trace", "length"), r)) for r in rows]}, args)
        return 0
    if args.word is None:
        raise InvalidConfig("give --word or --n-max")
    w = parse(args.word)
    M = rep.image(w)
    _emit({"word": str(w), "metric": label, "trace": M.trace, "length": geodesic_length(rep, w)}, args)
    return 0


def cmd_growth(args) -> int:
    mode = args.mode
    if mode == "table":
        metric = PantsMetric(*args.cuffs) if args.cuffs else None
        table_mode = args.metric
        rows = growth_table(args.n_max, table_mode, metric, exhaustive_cap=args.exhaustive_cap,
                            s=args.s, B=args.B if args.B is not None else 0.0,
                            catalog=args.catalog, jobs=args.jobs)
        if args.format == "csv":
            sys.stdout.write(table_to_csv(rows))
        else:
            label = {"cusps": "three-punctured sphere", "pants": "custom-pants mode",
                     "cusped": "cusped pants"}[table_mode]
            _emit({"metric": label, "rows": [r.__dict__ for r in rows]}, args)
        return 0
    if mode == "f_S":
        bound, word = f_S_lower(args.n)
        _emit({"n": args.n, "f_S_lower": bound, "word": str(word)}, args)
        return 0
    if mode == "threshold":
        _require(args, "eps")
        n0 = find_threshold_n0(args.eps)
        _emit({"eps": args.eps, "n0": n0, "defect_at_1e6": float(length_defect(10 ** 6))}, args)
        return 0
    try:
        if mode == "compact":
            _require(args, "L", "B", "eps", "la", "lb", "D")
            wit = compact_witness(args.L, args.B, args.eps, args.la, args.lb, args.D)
        else:
            _require(args, "L", "eps")
            if args.exact:
                wit = cusped_witness(args.L, args.eps, exact=True)
            else:
                _require(args, "s", "B")
                wit = cusped_witness(args.L, args.eps, args.s, args.B)
    except TooSmallL as exc:
        _emit({"too_small": True, "L": args.L, "min_L": exc.min_L, "stable_L": exc.stable_L}, args)
        return 0
    out = wit.to_dict()
    if wit.n > 64:
        out["word"] = f"ab^{wit.n}"
    out["valid"] = wit.verify()
    out["too_small"] = False
    _emit(out, args)
    return 0


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidConfig("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplelift", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("intersect", help="self-intersection number on the pair of pants")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("degree", help="least degree of a cover with a simple closed lift")
    s.add_argument("--word", required=True)
    s.add_argument("--cap", type=int, default=None, help="largest degree searched (default: intersection + 2)")
    s.add_argument("--witness", default=None, help="write the witness record to this file")
    s.add_argument("--catalog", default=None, help="read/write cover catalogs in this directory")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_degree)

    s = sub.add_parser("covers", help="enumerate connected covers of the rank-2 rose")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--count", action="store_true")
    s.add_argument("--emit", action="store_true", help="write the JSON Lines catalog")
    s.add_argument("--catalog", default=DEFAULT_CATALOG)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_covers)

    s = sub.add_parser("length", help="geodesic lengths on a hyperbolic pair of pants")
    s.add_argument("--word")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--cusps", action="store_true", help="three-punctured sphere")
    g.add_argument("--cuffs", type=float, nargs=3, metavar=("L1", "L2", "L3"))
    s.add_argument("--n-max", type=int, default=None, help="tabulate a b^n for n <= N")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_length)

    s = sub.add_parser("growth", help="growth tables and witnesses")
    s.add_argument("--mode", choices=("table", "f_S", "compact", "cusped", "threshold"), required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--exhaustive-cap", type=int, default=-1)
    s.add_argument("--metric", choices=("cusps", "pants", "cusped"), default="cusps")
    s.add_argument("--cuffs", type=float, nargs=3, metavar=("L1", "L2", "L3"))
    s.add_argument("--L", type=float)
    s.add_argument("--B", type=float)
    s.add_argument("--eps", type=float)
    s.add_argument("--la", type=float)
    s.add_argument("--lb", type=float)
    s.add_argument("--D", type=float)
    s.add_argument("--s", type=float, default=None)
    s.add_argument("--exact", action="store_true", help="three-punctured sphere lengths")
    s.add_argument("--format", choices=("json", "csv"), default="csv")
    s.add_argument("--catalog", default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_growth)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (WordError, NonPrimitive, InvalidConfig, Elliptic, CapExceeded, NotReached, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
