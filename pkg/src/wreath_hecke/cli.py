"""
Command line front end.

Every command prints a JSON report (or DOT for ``crystal graph --format dot``)
carrying a ``schema_version`` field.  Exit status: 0 when all checks pass,
1 when some check fails, 2 for usage errors and 3 for invalid parameter
combinations; errors are reported as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_weight(text, p):
    from .cyclotomic import CycloWeight
    text = text.strip()
    if text.startswith("Lambda"):
        return CycloWeight.fundamental(p, int(text[len("Lambda"):] or 0))
    try:
        return CycloWeight.from_json(p, json.loads(text))
    except (ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"cannot parse weight {text!r}: {exc}") from exc


def _group(spec):
    from .groups import build_group
    try:
        return build_group(spec)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"unknown group {spec!r}: {exc}") from exc


def _field(args):
    from .scalars import FieldSpec
    return FieldSpec(args.p)


# --- commands ----------------------------------------------------------------------

def cmd_classes(args):
    from .wreath import brute_force_p_regular_count, class_count_series, p_regular_type_count
    G = _group(args.group)
    types = p_regular_type_count(G, args.p, args.n)
    out = {"group": G.name, "p": args.p, "n": args.n, "p_regular_types": types,
           "series": class_count_series(G, args.p, args.n)[args.n]}
    ok = out["series"] == types
    if args.brute:
        out["brute_force"] = brute_force_p_regular_count(G, args.p, args.n)
        ok = ok and out["brute_force"] == types
    return out, ok


def cmd_series(args):
    from .wreath import class_count_series
    G = _group(args.group)
    return {"group": G.name, "p": args.p, "series": class_count_series(G, args.p, args.max)}, True


def cmd_jm(args):
    from .wreath import verify_jm_identities
    r = verify_jm_identities(_group(args.group), args.n, _field(args))
    return r, r["pass"]


def _hecke(args):
    from .hecke import HeckeAlgebra
    return HeckeAlgebra(_group(args.group), args.n, _field(args))


def cmd_hecke(args):
    from . import suites
    if args.action == "mul":
        H = _hecke(args)
        if len(args.files) < 2:
            raise UsageError("hecke mul needs two element files")
        prod = None
        for path in args.files:
            with open(path) as fh:
                el = H.from_json(json.load(fh))
            prod = el if prod is None else prod * el
        return {"group": H.G.name, "n": H.n, "p": args.p, "product": prod.to_json()}, True
    G = _group(args.group)
    if args.action == "relations":
        r = suites.relations_point(G, args.n, args.p, args.seed)
    else:
        r = suites.pbw_point(G, args.n, args.p, args.pairs, args.pairs, args.seed)
    return r, r["pass"]


def cmd_center(args):
    from . import suites
    r = suites.center_point(_group(args.group), args.n, args.p, args.candidates, args.seed)
    return r, r["pass"]


def cmd_scalars(args):
    from . import suites
    G = _group(args.group)
    if G.order % args.p == 0:
        raise ValueError(f"p={args.p} divides |G|={G.order}")
    r = suites.scalars_point(G, args.p)
    return r, r["pass"]


def cmd_cyclo(args):
    from .cyclotomic import cyclo_dimension_report, cyclo_vs_group_algebra
    G = _group(args.group)
    F = _field(args)
    if args.action == "dim":
        r = cyclo_dimension_report(G, args.n, parse_weight(args.weight, args.p), F)
        return {k: r[k] for k in ("group", "n", "p", "weight", "dim", "expected", "pass")}, r["pass"]
    r = cyclo_vs_group_algebra(G, args.n, F)
    return {"group": G.name, "n": args.n, "p": args.p, "checks": r["checks"],
            "pass": r["pass"]}, r["pass"]


def cmd_branch(args):
    from . import crystal
    from .repmod import branch_verify
    G = _group(args.group)
    if G.order % args.p == 0:
        raise ValueError(f"p={args.p} divides |G|={G.order}")
    if args.crystal:
        r = crystal.crystal_vs_branching(G, args.p, args.n)
        return r, r["pass"]
    r = branch_verify(G, args.p, args.n)
    return r.to_json(), r.ok


def cmd_crystal(args):
    from . import crystal, suites
    if args.action == "check":
        r = suites.crystal_grid((args.p,), args.depth)
        return r, r["pass"]
    from .groups import irreps as group_irreps, splitting_field
    from .hecke import c_scalars
    G = _group(args.group)
    if G.order % args.p == 0:
        raise ValueError(f"p={args.p} divides |G|={G.order}")
    F = splitting_field(G, args.p)
    cs = [c["c"] for c in c_scalars(G, F, group_irreps(G, F))]
    graph = crystal.build_crystal(parse_weight(args.weight, args.p), cs, args.depth)
    if args.format == "dot":
        return graph.to_dot(), True
    return dict(graph.to_json(), counts=graph.counts()), True


# --- parser ---------------------------------------------------------------------------

def build_parser():
    ap = _Parser(prog="wreath-hecke", description="Wreath Hecke algebras over finite fields.")
    ap.add_argument("--out", help="write the report to this path instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, n=True, group=True, prime=True):
        if group:
            p.add_argument("--group", default="trivial",
                           help="trivial, cyclic:r, dihedral:r or symmetric:m")
        if prime:
            p.add_argument("--p", type=int, required=True)
        if n:
            p.add_argument("--n", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("classes", help="p-regular conjugacy class count of G_n")
    common(p)
    p.add_argument("--brute", action="store_true", help="also count by brute force")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("series", help="generating function coefficients")
    common(p, n=False)
    p.add_argument("--max", type=int, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("jm", help="Jucys-Murphy identities in FG_n")
    common(p)
    p.set_defaults(func=cmd_jm)

    p = sub.add_parser("hecke", help="multiply elements or run the relation / PBW suites")
    p.add_argument("action", choices=["mul", "relations", "pbw"])
    p.add_argument("files", nargs="*")
    common(p)
    p.add_argument("--pairs", type=int, default=200)
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("center", help="central elements versus the coefficient criterion")
    common(p)
    p.add_argument("--candidates", type=int, default=50)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("scalars", help="the scalars c_k and the t-action on tensor modules")
    common(p, n=False)
    p.set_defaults(func=cmd_scalars)

    p = sub.add_parser("cyclo", help="cyclotomic quotients")
    p.add_argument("action", choices=["dim", "iso"])
    common(p)
    p.add_argument("--weight", default="Lambda0")
    p.set_defaults(func=cmd_cyclo)

    p = sub.add_parser("branch", help="socle branching of simple FG_n-modules")
    common(p)
    p.add_argument("--crystal", action="store_true", help="compare with the crystal graph")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("crystal", help="crystal graphs and axiom checks")
    p.add_argument("action", choices=["graph", "check"])
    common(p, n=False)
    p.add_argument("--weight", default="Lambda0")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_crystal)
    return ap


def validate(args):
    """Reject inconsistent parameter combinations before dispatch."""
    from .scalars import is_prime
    if getattr(args, "p", None) is not None and not is_prime(args.p):
        raise UsageError(f"--p must be a prime, got {args.p}")
    for name in ("n", "max", "depth", "candidates", "pairs"):
        if getattr(args, name, 0) < 0:
            raise UsageError(f"--{name} must be non-negative")
    if getattr(args, "group", None) is not None:
        _group(args.group)


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"schema_version": SCHEMA_VERSION, "error": kind,
                                 "message": message}, sort_keys=True) + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        validate(args)
        result, ok = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except (ValueError, ArithmeticError, KeyError) as exc:
        return _fail(type(exc).__name__, str(exc), 3)
    if isinstance(result, str):
        _emit(result, args.out)
    else:
        report = {"schema_version": SCHEMA_VERSION, "command": args.command,
                  "result": result, "pass": bool(ok)}
        _emit(json.dumps(report, sort_keys=True, default=_json_default) + "\n", args.out)
    return 0 if ok else 1


def _json_default(obj):
    import numpy as np
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


if __name__ == "__main__":
    sys.exit(main())
