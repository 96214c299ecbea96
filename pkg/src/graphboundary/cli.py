"""Command-line front end.

    graphboundary analyze  <graph6|file> [--json]
    graphboundary classify <graph6|file>
    graphboundary generate <family> <params...> [--g6 | --dot] [--coords-json PATH]
    graphboundary verify   --laws <ids|all> --max-n <k> [--corpus file.g6] [--workers N] [--timing]
    graphboundary selftest

Exit codes: 0 success / all laws pass, 1 law violation (or selftest miss),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from . import families as F
from .boundary import full_analysis
from .classify import classify
from .graph import Graph, GraphError
from .graph6 import decode, encode, read_file
from .laws import LAWS, MUTATIONS, VerifyConfig, resolve_laws, selftest, verify_laws


class UsageError(Exception):
    pass


def _ints(params: Sequence[str], count: Optional[int] = None, name: str = "") -> list[int]:
    try:
        vals = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{name}: parameters must be integers, got {' '.join(params)}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"{name}: expected {count} integer parameter(s), got {len(vals)}")
    return vals


def _core(params: Sequence[str]) -> Graph:
    if not params:
        raise UsageError(f"core: expected a name ({', '.join(F.CORE_NAMES)}) and optional c")
    name, rest = params[0], params[1:]
    c = _ints(rest, 1, "core")[0] if rest else None
    return F.fig2_core(name, c)


def _double_spider(params: Sequence[str]) -> Graph:
    vals = _ints(params, None, "double_spider")
    if len(vals) not in (4, 5):
        raise UsageError("double_spider: expected a1 a2 b1 b2 [bridge]")
    return F.double_spider(vals[:2], vals[2:4], *(vals[4:] or [1]))


# family name -> builder from the raw parameter strings
FAMILIES: dict[str, Callable[[Sequence[str]], Graph]] = {
    "path": lambda p: F.path(*_ints(p, 1, "path")),
    "cycle": lambda p: F.cycle(*_ints(p, 1, "cycle")),
    "complete": lambda p: F.complete(*_ints(p, 1, "complete")),
    "star": lambda p: F.star(*_ints(p, 1, "star")),
    "spider": lambda p: F.spider(*_ints(p, None, "spider")),
    "double_spider": _double_spider,
    "tripod": lambda p: F.tripod(*_ints(p, 3, "tripod")),
    "barbell": lambda p: F.barbell(*_ints(p, 1, "barbell")),
    "grid": lambda p: F.grid(*_ints(p, 2, "grid")),
    "N": lambda p: F.n_graph(*_ints(p, 2, "N")),
    "X": lambda p: F.x_graph(*_ints(p, 2, "X")),
    "T": lambda p: F.t_graph(*_ints(p, 2, "T")),
    "D": lambda p: F.d_graph(*_ints(p, 2, "D")),
    "L": lambda p: F.l_graph(*_ints(p, 2, "L")),
    "core": _core,
    "fixture": lambda p: F.base_case_fixture(*_ints(p, 1, "fixture"))[0],
    "tailed_clique_claw": lambda p: (_ints(p, 0, "tailed_clique_claw"), F.tailed_clique_claw())[1],
}


_ALIASES = {f"{k.lower()}{suffix}": k for k in "NXTDL" for suffix in ("", "_graph")}


def build_family(name: str, params: Sequence[str]) -> Graph:
    key = _ALIASES.get(name, name)
    if key not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    return FAMILIES[key](params)


def load_graphs(source: str) -> list[Graph]:
    """A graph6 string, or a path to a file with one graph6 line per graph."""
    if os.path.exists(source):
        with open(source) as fh:
            graphs = list(read_file(fh))
        if not graphs:
            raise UsageError(f"{source}: no graphs")
        return graphs
    return [decode(source)]


def to_dot(g: Graph) -> str:
    """Graphviz DOT with beta beside each vertex; boundary vertices red."""
    a = full_analysis(g)
    lines = ["graph G {", "  node [shape=circle, style=filled, fontcolor=white];"]
    for x in a.vertices:
        colour = "red" if x.in_steinerberger else "blue"
        attrs = [f'label="{x.id}"', f'xlabel="{x.beta}"', f"fillcolor={colour}"]
        if g.coords is not None:
            px, py = g.coord(x.id)
            attrs.append(f'pos="{float(px):g},{float(py):g}!"')
        lines.append(f"  {x.id} [{', '.join(attrs)}];")
    for v, w in g.edges():
        lines.append(f"  {v} -- {w};")
    lines.append("}")
    return "\n".join(lines)


def coords_json(g: Graph) -> str:
    if g.coords is None:
        raise UsageError("this family carries no coordinates")
    rows = [[p.numerator, p.denominator, q.numerator, q.denominator] for p, q in g.coords]
    return json.dumps({"coords": rows})


def _analysis_text(g: Graph) -> str:
    a = full_analysis(g)
    out = [f"n={a.n} diameter={a.diameter} max_degree={a.max_degree} "
           f"|dG|={len(a.steinerberger)} |(dG)'|={len(a.cejz)}"]
    out.append("  v  ecc  beta  steinerberger  cejz  witnesses")
    for x in a.vertices:
        out.append(f"{x.id:>3} {x.ecc:>4} {x.beta:>5}  {str(x.in_steinerberger):>13} {str(x.in_cejz):>5}  "
                   f"{sorted(x.beta_witnesses)}")
    return "\n".join(out)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphboundary", description="Graph boundaries and boundary stability numbers.")
    sub = p.add_subparsers(dest="cmd", required=True)

    a = sub.add_parser("analyze", help="boundary analysis of graph6 input")
    a.add_argument("source", help="graph6 string or file of graph6 lines")
    a.add_argument("--json", action="store_true", help="emit JSON (one object per line)")

    c = sub.add_parser("classify", help="family recognition for |dG| <= 4")
    c.add_argument("source", help="graph6 string or file of graph6 lines")

    g = sub.add_parser("generate", help="build a named family member")
    g.add_argument("family", help=", ".join(FAMILIES))
    g.add_argument("params", nargs="*")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--g6", action="store_true", help="graph6 output (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT output labelled with beta")
    g.add_argument("--coords-json", metavar="PATH", help="also write lattice coordinates as JSON")

    v = sub.add_parser("verify", help="check laws over a corpus")
    v.add_argument("--laws", default="all", help=f"'all' or comma list of: {', '.join(LAWS)}")
    v.add_argument("--max-n", type=int, default=7, help="largest n (built-in corpus: 1..7)")
    v.add_argument("--corpus", help="graph6 file to use instead of the built-in enumeration")
    v.add_argument("--pair-max-n", type=int, default=5, help="largest n in edge-join pairs")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--mutation", choices=MUTATIONS, help="corrupt beta on purpose (negative control)")
    v.add_argument("--timing", action="store_true", help="include wall time in the report")

    s = sub.add_parser("selftest", help="confirm the laws catch corrupted beta")
    s.add_argument("--max-n", type=int, default=5)
    return p


def _run(args: argparse.Namespace) -> int:
    if args.cmd == "analyze":
        for g in load_graphs(args.source):
            print(full_analysis(g).to_json() if args.json else _analysis_text(g))
        return 0
    if args.cmd == "classify":
        for g in load_graphs(args.source):
            print(classify(g).to_json())
        return 0
    if args.cmd == "generate":
        g = build_family(args.family, args.params)
        if args.coords_json:
            with open(args.coords_json, "w") as fh:
                fh.write(coords_json(g) + "\n")
        print(to_dot(g) if args.dot else encode(g))
        return 0
    if args.cmd == "verify":
        cfg = VerifyConfig(
            laws=resolve_laws(args.laws),
            max_n=args.max_n,
            corpus_path=args.corpus,
            pair_max_n=args.pair_max_n,
            workers=args.workers,
            mutation=args.mutation,
        )
        report = verify_laws(cfg)
        print(report.to_json(timing=args.timing))
        return 0 if report.passed else 1
    if args.cmd == "selftest":
        caught = selftest(args.max_n)
        for mutation, ok in caught.items():
            print(f"{mutation}: {'caught' if ok else 'NOT caught'}")
        return 0 if all(caught.values()) else 1
    raise UsageError(f"unknown command {args.cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return _run(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
