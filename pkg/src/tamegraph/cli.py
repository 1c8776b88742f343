"""Command-line interface.

Exit status: 0 on success, 1 when a check fails (a required bound is
violated, an induced path is found by ``check-free``, a structural
certificate fails), 2 on usage, input or oracle-limit errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .bounds import verify_bounds
from .errors import BoundViolationError, GraphInputError, LemmaViolationError
from .generators import GenSpec
from .modular import connected_modules, maximal_proper_strong_modules, strong_modules
from .mwis import WeightedGraph, mwis_brute, mwis_pmc
from .pmc import enumerate_pmcs_brute, enumerate_pmcs_from_minseps
from .recognition import clique_number, find_induced_path
from .separators import enumerate_minseps_brute, enumerate_minseps_generic, enumerate_minseps_p6free

ALGOS = ("brute", "generic", "p6free")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args):
    if args.input and args.family:
        raise UsageError("use either --input or --family, not both")
    if args.family:
        return GenSpec.parse(args.family, seed=args.seed).build()
    if args.input:
        return io.parse_graph(_read(args.input), args.format)
    raise UsageError("one of --input or --family is required")


def _minseps(g, args):
    if args.algo == "brute":
        return enumerate_minseps_brute(g)
    if args.algo == "generic":
        return enumerate_minseps_generic(g)
    k = args.k if args.k is not None else clique_number(g)
    return enumerate_minseps_p6free(g, k)


def _emit_sets(sets, as_json: bool) -> str:
    sets = [list(s) for s in sets]
    if as_json:
        return json.dumps(sets)
    return "\n".join(" ".join(map(str, s)) for s in sets)


def cmd_minseps(g, args):
    return 0, _emit_sets([r.separator for r in _minseps(g, args)], args.json)


def cmd_pmcs(g, args):
    if args.algo == "brute":
        pmcs = enumerate_pmcs_brute(g)
    else:
        pmcs = enumerate_pmcs_from_minseps(g, _minseps(g, args))
    return 0, _emit_sets([p.members for p in pmcs], args.json)


def cmd_modules(g, args):
    if g.n == 0:
        return 0, _emit_sets([], args.json)
    if args.kind == "strong":
        mods = strong_modules(g)
    elif args.kind == "maximal":
        mods = maximal_proper_strong_modules(g)
    else:
        k = args.k if args.k is not None else clique_number(g)
        mods = connected_modules(g, k)
    return 0, _emit_sets(mods, args.json)


def cmd_verify_bounds(g, args):
    report = verify_bounds(g)
    out = report.to_json() if args.json else report.to_text()
    return (0 if report.ok else 1), out


def cmd_mwis(g, args):
    if args.weights:
        weights = io.parse_weights(_read(args.weights), g.n)
    else:
        weights = (1,) * g.n
    wg = WeightedGraph(g, weights)
    if args.algo == "brute":
        weight, chosen = mwis_brute(wg)
    else:
        seps = _minseps(g, args)
        weight, chosen = mwis_pmc(wg, enumerate_pmcs_from_minseps(g, seps), seps)
    if args.json:
        return 0, json.dumps({"weight": weight, "set": list(chosen)})
    return 0, f"weight {weight}\nset {' '.join(map(str, chosen))}".rstrip()


def cmd_check_free(g, args):
    found = find_induced_path(g, args.pt)
    if args.json:
        return (0 if found is None else 1), json.dumps({"t": args.pt, "free": found is None, "path": found})
    if found is None:
        return 0, "FREE"
    return 1, "PATH " + " ".join(map(str, found))


def cmd_generate(g, args):
    return 0, io.format_graph(g, args.format).rstrip("\n")


COMMANDS = {
    "minseps": cmd_minseps,
    "pmcs": cmd_pmcs,
    "modules": cmd_modules,
    "verify-bounds": cmd_verify_bounds,
    "mwis": cmd_mwis,
    "check-free": cmd_check_free,
    "generate": cmd_generate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("graph source")
    src.add_argument("--input", metavar="PATH", help="graph file ('-' for stdin)")
    src.add_argument("--family", metavar="SPEC", help="generated graph, family:size[:p:seed]")
    src.add_argument("--format", choices=io.FORMATS, default=io.EDGELIST, help="graph file format")
    src.add_argument("--seed", type=lambda s: int(s, 0), help="seed for gnp specs without one")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(prog="tamegraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    for name, help_ in (("minseps", "list minimal separators"), ("pmcs", "list potential maximal cliques")):
        p = add(name, help_)
        p.add_argument("--algo", choices=ALGOS, default="generic")
        p.add_argument("--k", type=int, help="clique bound for --algo p6free (default: exact)")
    p = add("modules", "list strong, maximal proper strong, or connected modules")
    p.add_argument("--kind", choices=("strong", "maximal", "connected"), default="strong")
    p.add_argument("--k", type=int, help="clique bound for connected modules (default: exact)")
    add("verify-bounds", "count separators, PMCs and modules and check the bounds")
    p = add("mwis", "maximum weight independent set")
    p.add_argument("--algo", choices=ALGOS, default="generic", help="separator source, or brute force")
    p.add_argument("--k", type=int)
    p.add_argument("--weights", metavar="PATH", help="one integer weight per line (default: all 1)")
    p = add("check-free", "search for an induced path")
    p.add_argument("--pt", type=int, default=6, help="path length in vertices (default 6)")
    add("generate", "print a graph in the chosen --format")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        g = _load_graph(args)
        code, out = COMMANDS[args.command](g, args)
    except (UsageError, GraphInputError, OSError) as exc:
        print(f"tamegraph: error: {exc}", file=sys.stderr)
        return 2
    except (BoundViolationError, LemmaViolationError) as exc:
        print(f"tamegraph: check failed: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
