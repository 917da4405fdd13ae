"""Command-line front door.

One binary, subcommand style, no randomness anywhere.  Exit codes: 0 the
property holds or the construction succeeded, 1 the property fails (witness
printed in the payload), 2 input or usage error.  Payload goes to stdout as
JSON by default when piped, as text on a terminal; DM_WORKERS overrides the
search parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .core import InputError, default_ground
from .delta import DeltaMatroid, _decode_family, construct_sandwich, is_pairable
from .matroids import AxiomError
from .rigidity import CORPUS, verify_cone_quotient
from .search import (
    PROPERTY_IDS,
    delta_codes,
    enumerate_matroids,
    find_unpairable_pair,
    resolve_workers,
    verify_property,
)
from .serialize import (
    delta_from_json,
    delta_to_json,
    graph_from_json,
    load_json,
    matroid_from_json,
    matroid_to_json,
)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="deltamatroids",
        description="Checks, constructions, and exhaustive searches for matroids and delta-matroids.",
    )
    p.add_argument(
        "--format",
        choices=("json", "text"),
        default=None,
        help="output format (default: json when piped, text on a terminal)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="certify a basis or feasible family")
    c.add_argument("kind", choices=("matroid", "delta"))
    c.add_argument("file")

    ul = sub.add_parser("upper-lower", help="extract the upper and lower matroids")
    ul.add_argument("file")

    pr = sub.add_parser("pair", help="test whether two matroids are pairable")
    pr.add_argument("upper_file")
    pr.add_argument("lower_file")
    pr.add_argument("--construct", action="store_true", help="also emit the sandwich delta-matroid")

    cc = sub.add_parser("cone-check", help="verify the cone identities for a graph")
    cc.add_argument("graph_file", nargs="?")
    cc.add_argument("--corpus", action="store_true", help="run the whole built-in graph corpus")

    v = sub.add_parser("verify", help="run a registered exhaustive property check")
    v.add_argument("property_id")
    v.add_argument("--n", type=int, default=4)

    s = sub.add_parser("search", help="search for witnesses")
    s.add_argument("target", choices=("unpairable",))
    s.add_argument("--n", type=int, default=5)

    e = sub.add_parser("enumerate", help="enumerate all matroids or delta-matroids at size n")
    e.add_argument("kind", choices=("matroid", "delta"))
    e.add_argument("--n", type=int, default=3)

    return p


def _emit(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_check(args, fmt: str) -> int:
    obj = load_json(args.file)
    try:
        if args.kind == "matroid":
            m = matroid_from_json(obj)
            payload = {"ok": True, "kind": "matroid", "rank": m.rank, "bases": len(m.bases)}
            _emit(payload, fmt, f"matroid: rank {m.rank}, {len(m.bases)} bases")
        else:
            d = delta_from_json(obj)
            payload = {"ok": True, "kind": "delta", "feasibles": len(d.feasibles)}
            _emit(payload, fmt, f"delta-matroid: {len(d.feasibles)} feasible sets")
        return 0
    except AxiomError as e:
        payload = {"ok": False, "witness": e.violation.to_json()}
        _emit(payload, fmt, e.violation.describe())
        return 1


def _cmd_upper_lower(args, fmt: str) -> int:
    obj = load_json(args.file)
    try:
        d = delta_from_json(obj)
    except AxiomError as e:
        _emit({"ok": False, "witness": e.violation.to_json()}, fmt, e.violation.describe())
        return 1
    payload = {"upper": matroid_to_json(d.upper), "lower": matroid_to_json(d.lower)}
    _emit(
        payload,
        fmt,
        f"upper: rank {d.upper.rank}, {len(d.upper.bases)} bases\n"
        f"lower: rank {d.lower.rank}, {len(d.lower.bases)} bases",
    )
    return 0


def _cmd_pair(args, fmt: str) -> int:
    mu = matroid_from_json(load_json(args.upper_file))
    ml = matroid_from_json(load_json(args.lower_file))
    rep = is_pairable(mu, ml)
    payload = rep.to_json()
    if rep.pairable and args.construct:
        fam = construct_sandwich(mu, ml)
        d = DeltaMatroid.certify(fam)
        payload["sandwich"] = delta_to_json(d)
    text = "pairable" if rep.pairable else f"not pairable; offending circuit {payload['offending_circuit']}"
    _emit(payload, fmt, text)
    return 0 if rep.pairable else 1


def _cmd_cone_check(args, fmt: str) -> int:
    if args.corpus:
        results = {}
        all_ok = True
        for name, g in CORPUS.items():
            rep = verify_cone_quotient(g)
            results[name] = rep.to_json()
            all_ok = all_ok and rep.both_hold
        _emit(
            {"ok": all_ok, "graphs": results},
            fmt,
            "\n".join(f"{name}: {'pass' if r['deletion_identity'] and r['contraction_identity'] else 'FAIL'}" for name, r in results.items()),
        )
        return 0 if all_ok else 1
    if args.graph_file is None:
        raise InputError("cone-check needs a graph file or --corpus")
    g = graph_from_json(load_json(args.graph_file))
    if not g.is_connected():
        raise InputError("cone-check requires a connected graph")
    rep = verify_cone_quotient(g)
    _emit(
        {"ok": rep.both_hold, **rep.to_json()},
        fmt,
        f"deletion identity: {'pass' if rep.deletion_identity else 'FAIL'}\n"
        f"contraction identity: {'pass' if rep.contraction_identity else 'FAIL'}",
    )
    return 0 if rep.both_hold else 1


def _cmd_verify(args, fmt: str) -> int:
    report = verify_property(args.property_id, args.n, workers=resolve_workers())
    _emit(
        report.to_json(),
        fmt,
        f"{report.property_id} at n={args.n}: "
        f"{'holds' if report.holds else 'FAILS'} over {report.universe_size} cases",
    )
    return 0 if report.holds else 1


def _cmd_search(args, fmt: str) -> int:
    report = find_unpairable_pair(args.n, workers=resolve_workers())
    _emit(
        report.to_json(),
        fmt,
        f"unpairable pair at n={args.n}: {'found' if report.holds else 'none'}",
    )
    return 0 if report.holds else 1


def _cmd_enumerate(args, fmt: str) -> int:
    if args.kind == "matroid":
        items = [matroid_to_json(m) for m in enumerate_matroids(args.n, workers=resolve_workers())]
    else:
        g = default_ground(args.n)
        items = [
            {"ground": list(g.labels), "feasibles": [list(g.labels_of(m)) for m in _decode_family(c)]}
            for c in delta_codes(args.n, workers=resolve_workers())
        ]
    _emit({"count": len(items), "items": items}, fmt, f"{len(items)} structures at n={args.n}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    fmt = args.format or ("text" if sys.stdout.isatty() else "json")
    handlers = {
        "check": _cmd_check,
        "upper-lower": _cmd_upper_lower,
        "pair": _cmd_pair,
        "cone-check": _cmd_cone_check,
        "verify": _cmd_verify,
        "search": _cmd_search,
        "enumerate": _cmd_enumerate,
    }
    try:
        return handlers[args.command](args, fmt)
    except AxiomError as e:
        print(json.dumps({"ok": False, "witness": e.violation.to_json()}, indent=2))
        return 1
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
