"""Command-line entry point: ``mostar <subcommand> ...``.

graph6 is the pipe format on stdin/stdout; reports are JSON, range
summaries CSV. Exit status 1 means a domain error (bad graph, bad range),
2 a usage error. A report that disagrees with a claimed bound still exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import graph6
from .enumeration import enumerate_kind
from .families import FAMILY_KINDS, FamilySpec
from .graph import Graph, GraphError
from .indices import edge_mostar, edge_split_table, mostar, split_table_csv
from .transforms import MOVES, check_move
from . import verification as ver


def _family_arg(values: Sequence[str]) -> Graph:
    kind, *params = values
    return FamilySpec(kind, tuple(int(p) for p in params)).build()


def _input_graphs(args, stdin: TextIO) -> list[Graph]:
    if args.family:
        return [_family_arg(args.family)]
    return list(graph6.read_lines(stdin))


def _emit_json(obj, path: str | None, out: TextIO) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_index(args, stdin, out) -> int:
    fn = mostar if args.mostar else edge_mostar
    for g in _input_graphs(args, stdin):
        out.write(f"{graph6.encode(g)},{fn(g)}\n")
        out.flush()
    return 0


def cmd_psi(args, stdin, out) -> int:
    graphs = _input_graphs(args, stdin)
    if len(graphs) != 1:
        raise GraphError(f"psi expects exactly one graph, got {len(graphs)}")
    out.write(split_table_csv(edge_split_table(graphs[0])))
    return 0


def cmd_family(args, stdin, out) -> int:
    out.write(graph6.encode(FamilySpec(args.kind, tuple(args.params)).build()) + "\n")
    return 0


def cmd_enumerate(args, stdin, out) -> int:
    for g in enumerate_kind(args.kind, args.size, args.jobs):
        out.write(graph6.encode(g) + "\n")
    out.flush()
    return 0


def _sizes(args) -> list[int]:
    if args.size is not None:
        return [args.size]
    if args.lo is None or args.hi is None:
        raise GraphError("give --size, or both --from and --to")
    return list(range(args.lo, args.hi + 1))


def cmd_verify(args, stdin, out) -> int:
    what = args.what
    if what in ("bicyclic", "unicyclic"):
        fn = ver.verify_bicyclic_theorem if what == "bicyclic" else ver.verify_unicyclic_lemma
        sizes = _sizes(args)
        reports = [fn(m, args.jobs) for m in sizes]
        if args.size is not None:
            _emit_json(reports[0].to_json(), args.json, out)
        else:
            if args.json:
                _emit_json([r.to_json() for r in reports], args.json, out)
            out.write(ver.summary_csv(reports))
        return 0
    if what == "joins":
        budget = args.size if args.size is not None else 9
        _emit_json(ver.verify_join_lemmas(budget).to_json(), args.json, out)
        return 0
    if what == "cases":
        reports = [ver.verify_case_bounds(m, args.jobs).to_json() for m in _sizes(args)]
        _emit_json(reports[0] if args.size is not None else reports, args.json, out)
        return 0
    if what == "shifts":
        rows = []
        for region in (False, True):
            for mv in MOVES:
                chk = check_move(mv, args.trials, args.seed, region=region)
                rows.append({
                    "brace": list(mv.brace), "move": mv.name,
                    "mode": "sign-region" if region else "stated-hypothesis",
                    "hypothesis": mv.hypothesis_text, "delta": mv.delta_text,
                    "trials": chk.trials, "failures": len(chk.failures),
                    "examples": [{"counts": list(c), "predicted": p, "observed": o}
                                 for c, p, o in chk.failures[:3]],
                })
        _emit_json({"seed": args.seed, "moves": rows}, args.json, out)
        return 0
    raise GraphError(f"unknown verification {what!r}")


def cmd_disprove(args, stdin, out) -> int:
    out.write(ver.disproof_csv(ver.disprove_conjecture(args.lo, args.hi)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mostar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_family_input(sp):
        sp.add_argument("--family", nargs="+", metavar="ARG",
                        help="build the input graph from a family (KIND PARAMS...) "
                             "instead of reading graph6 from stdin")

    sp = sub.add_parser("index", help="index value per graph6 line on stdin")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--mostar", action="store_true", help="vertex Mostar index")
    grp.add_argument("--edge-mostar", action="store_true", help="edge Mostar index (default)")
    add_family_input(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("psi", help="per-edge split table (CSV) for one graph")
    add_family_input(sp)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("family", help="emit one family member as graph6")
    sp.add_argument("kind", choices=FAMILY_KINDS)
    sp.add_argument("params", type=int, nargs="+")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("enumerate", help="stream all graphs of a kind as graph6")
    sp.add_argument("--kind", required=True, choices=("tree", "unicyclic", "bicyclic"))
    sp.add_argument("--size", type=int, required=True,
                    help="vertex count for trees, edge count otherwise")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="exhaustive / randomized checks of the extremal bounds")
    sp.add_argument("what", choices=("bicyclic", "unicyclic", "joins", "cases", "shifts"))
    sp.add_argument("--size", type=int, help="size m (size budget for joins)")
    sp.add_argument("--from", dest="lo", type=int)
    sp.add_argument("--to", dest="hi", type=int)
    sp.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sp.add_argument("--trials", type=int, default=200)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("disprove", help="B_m versus B5_m table (CSV)")
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.set_defaults(func=cmd_disprove)
    return p


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stdin, stdout)
    except GraphError as exc:
        print(f"mostar: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
