"""Command line front end: ``domgames {value,verify,scan,corpus,play}``.

Exit codes: 0 success / claims hold, 1 claim violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import verify
from .corpus import enumerate_trees, random_corpus, read_graph6, trees_up_to, write_graph6
from .engine import (
    IllegalMoveError,
    IsolatedVertexError,
    Player,
    Variant,
    apply,
    format_set,
    illegal_reason,
    legal_moves,
    new_state,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    bits,
    cartesian_product,
    construct_family,
    parse_graph6,
    to_graph6,
    to_mask,
    y_corona,
)
from .solver import Solver, StateLimitExceeded

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

_FAMILY_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "complete": "complete",
    "leafy": "leafy_clique",
}


class UsageError(Exception):
    pass


def _graph6_length(s: str) -> int:
    """Number of characters the graph6 string at the start of ``s`` occupies."""
    if not s:
        raise UsageError("missing graph6 operand")
    if s[0] != "~":
        n = ord(s[0]) - 63
        head = 1
    else:
        if len(s) < 4:
            raise UsageError(f"truncated graph6 header in {s!r}")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        head = 4
    return head + (n * (n - 1) // 2 + 5) // 6


def parse_family(spec: str) -> Graph:
    """Parse ``path:N``, ``cycle:N``, ``star:K``, ``complete:N``, ``leafy:N``,
    ``ycorona:<g6>`` or ``cartesian:<g6>x<g6>``."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise UsageError(f"family spec {spec!r} needs the form name:arg")
    if kind in _FAMILY_NAMES:
        try:
            param = int(arg)
        except ValueError:
            raise UsageError(f"{kind} needs an integer parameter, got {arg!r}") from None
        return construct_family(_FAMILY_NAMES[kind], param)
    if kind == "ycorona":
        return y_corona(parse_graph6(arg))
    if kind == "cartesian":
        cut = _graph6_length(arg)
        left, rest = arg[:cut], arg[cut:]
        if not rest.startswith("x"):
            raise UsageError(f"cartesian spec must be <g6>x<g6>, got {arg!r}")
        return cartesian_product(parse_graph6(left), parse_graph6(rest[1:]))
    raise UsageError(f"unknown family {kind!r}")


def parse_predominated(text: str | None, n: int) -> int:
    if not text:
        return 0
    try:
        verts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"predominated set must be comma-separated integers: {text!r}") from None
    bad = [v for v in verts if not 0 <= v < n]
    if bad:
        raise UsageError(f"predominated vertices out of range 0..{n - 1}: {bad}")
    return to_mask(verts)


def _input_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "graph6", None) and getattr(args, "family", None):
        raise UsageError("give either --graph6 or --family, not both")
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    if getattr(args, "family", None):
        return parse_family(args.family)
    raise UsageError("a graph is required (--graph6 or --family)")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph in graph6 format")
    p.add_argument("--family", help="path:N cycle:N star:K complete:N leafy:N ycorona:<g6> cartesian:<g6>x<g6>")
    p.add_argument("--variant", default="d", type=str.lower, choices=["d", "t", "z", "l", "ll"])
    p.add_argument("--predominated", help="comma-separated pre-dominated vertices")


# -- value ----------------------------------------------------------------------


def cmd_value(args: argparse.Namespace, out: TextIO) -> int:
    g = _input_graph(args)
    variant = Variant.parse(args.variant)
    starter = Player.parse(args.starter)
    a = parse_predominated(args.predominated, g.n)
    solver = Solver(g, variant, max_states=args.max_states)
    res = solver.solve(starter, a)
    if args.json:
        payload = {
            "graph": to_graph6(g),
            "variant": variant.label,
            "starter": starter.value,
            "predominated": list(bits(a)),
            "length": res.length,
            "optimal_first": res.optimal_first_list,
            "states_visited": res.states_visited,
        }
        if args.line:
            payload["line"] = [[p.value, v] for p, v in solver.optimal_line(starter, a)]
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"length {res.length}\n")
        out.write(f"optimal first moves {format_set(res.optimal_first)}\n")
        if args.line:
            line = solver.optimal_line(starter, a)
            out.write("line " + " ".join(f"{p.short}:{v}" for p, v in line) + "\n")
    return EXIT_OK


# -- verify / scan --------------------------------------------------------------


def _corpus(args: argparse.Namespace) -> list[Graph]:
    graphs: list[Graph] = []
    if args.trees_up_to:
        graphs.extend(trees_up_to(args.trees_up_to))
    if args.random:
        graphs.extend(random_corpus(args.random, 2, args.random_n_max, args.seed))
    if args.graph6_file:
        with open(args.graph6_file) as fh:
            graphs.extend(read_graph6(fh))
    return graphs


def _emit_reports(reports: list[verify.Report], args: argparse.Namespace, out: TextIO) -> int:
    for r in reports:
        out.write(r.summary() + "\n")
        for note in r.notes:
            out.write(f"  note: {note}\n")
        for v in r.violations[:20]:
            out.write(f"  violation {v.claim} on {v.graph6}: {v.values}\n")
    if args.out:
        data = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports]}
        Path(args.out).write_text(json.dumps(data, indent=2) + "\n")
    if getattr(args, "csv", None):
        Path(args.csv).write_text(verify.reports_to_csv(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


CORPUS_SUITES = list(verify.SUITES)
OTHER_SUITES = ["paths", "theta", "families"]


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    names = CORPUS_SUITES + OTHER_SUITES if args.suite == "all" else [args.suite]
    needs_corpus = any(s in CORPUS_SUITES for s in names)
    corpus = _corpus(args) if needs_corpus else []
    if needs_corpus and not corpus and args.suite != "all":
        raise UsageError("corpus suites need --trees-up-to, --random or --graph6-file")
    reports = []
    for name in names:
        if name == "continuation":
            reports.append(verify.check_continuation_suite(corpus, args.samples, args.seed, jobs=args.jobs))
        elif name in verify.SUITES:
            reports.append(verify.SUITES[name](corpus, jobs=args.jobs))
        elif name == "paths":
            reports.append(verify.check_path_formulas(args.n_max or 15))
        elif name == "theta":
            reports.append(verify.check_theta(args.n_max or 16))
        elif name == "families":
            reports.append(verify.check_special_families(args.extended))
    return _emit_reports(reports, args, out)


def cmd_scan(args: argparse.Namespace, out: TextIO) -> int:
    if args.kind == "distinct":
        report = verify.scan_distinct_values(args.n_max, jobs=args.jobs, n_min=args.n_min)
    else:
        report = verify.scan_conjectures(args.n_max, jobs=args.jobs, n_min=args.n_min)
    return _emit_reports([report], args, out)


# -- corpus ---------------------------------------------------------------------


def cmd_corpus(args: argparse.Namespace, out: TextIO) -> int:
    if args.trees:
        graphs = enumerate_trees(args.trees)
    elif args.trees_up_to:
        graphs = trees_up_to(args.trees_up_to, n_min=1)
    elif args.random:
        graphs = random_corpus(args.random, args.n_min, args.n_max, args.seed)
    else:
        raise UsageError("choose --trees, --trees-up-to or --random")
    if args.out:
        with open(args.out, "w") as fh:
            count = write_graph6(graphs, fh)
        out.write(f"wrote {count} graphs to {args.out}\n")
    else:
        write_graph6(graphs, out)
    return EXIT_OK


# -- play -----------------------------------------------------------------------


def cmd_play(args: argparse.Namespace, out: TextIO, inp: TextIO) -> int:
    g = _input_graph(args)
    variant = Variant.parse(args.variant)
    human = Player.parse(args.human)
    starter = Player.parse(args.starter)
    a = parse_predominated(args.predominated, g.n)
    solver = Solver(g, variant)
    optimum = solver.length(starter, a)
    state = new_state(g, variant, a, starter)
    out.write(
        f"{variant.name}-game on {to_graph6(g)} (n={g.n}), {starter.value} starts, "
        f"you are {human.value}; optimal length {optimum}\n"
    )
    while legal_moves(state):
        if state.to_move is human:
            out.write(f"covered {format_set(state.covered)}; your move> ")
            out.flush()
            line = inp.readline()
            if not line:
                out.write("\ninput ended\n")
                return EXIT_USAGE
            text = line.strip()
            try:
                v = int(text)
            except ValueError:
                out.write(f"not a vertex index: {text!r}\n")
                continue
            reason = illegal_reason(state, v)
            if reason is not None:
                out.write(f"illegal: {reason}\n")
                continue
        else:
            best = solver.solve_state(state).optimal_first
            v = (best & -best).bit_length() - 1
            out.write(f"engine ({state.to_move.value}) plays {v}\n")
        state = apply(state, v)
    out.write(f"game over after {state.moves_made} moves; optimal play gives {optimum}\n")
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domgames", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="game length and optimal first moves")
    _add_graph_args(p)
    p.add_argument("--starter", default="dominator", type=str.lower, choices=["dominator", "staller", "d", "s"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--line", action="store_true", help="also print an optimal line of play")
    p.add_argument("--max-states", type=int, default=20_000_000)

    def corpus_args(q: argparse.ArgumentParser) -> None:
        q.add_argument("--trees-up-to", type=int, metavar="N")
        q.add_argument("--random", type=int, metavar="K", help="K seeded random connected graphs")
        q.add_argument("--random-n-max", type=int, default=9)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--graph6-file")

    p = sub.add_parser("verify", help="run a claim suite")
    p.add_argument("--suite", required=True, choices=CORPUS_SUITES + OTHER_SUITES + ["all"])
    corpus_args(p)
    p.add_argument("--samples", type=int, default=20, help="continuation chains per graph")
    p.add_argument("--n-max", type=int, help="path length limit for paths/theta")
    p.add_argument("--extended", action="store_true", help="larger special-family cases")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--csv", help="write CSV summary rows here")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("scan", help="exhaustive tree scans")
    p.add_argument("kind", choices=["distinct", "conjectures"])
    p.add_argument("--n-max", type=int, default=11)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--out")
    p.add_argument("--csv")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("corpus", help="export a corpus as graph6 lines")
    p.add_argument("--trees", type=int, metavar="N", help="all free trees on N vertices")
    p.add_argument("--trees-up-to", type=int, metavar="N")
    p.add_argument("--random", type=int, metavar="K")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("play", help="play against the optimal engine")
    _add_graph_args(p)
    p.add_argument("--human", default="staller", type=str.lower, choices=["dominator", "staller", "d", "s"])
    p.add_argument("--starter", default="dominator", type=str.lower, choices=["dominator", "staller", "d", "s"])
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "value":
            return cmd_value(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "scan":
            return cmd_scan(args, out)
        if args.command == "corpus":
            return cmd_corpus(args, out)
        return cmd_play(args, out, inp)
    except (UsageError, Graph6Error, GraphError, IsolatedVertexError, IllegalMoveError, ValueError) as exc:
        sys.stderr.write(f"domgames: error: {exc}\n")
        return EXIT_USAGE
    except StateLimitExceeded as exc:
        sys.stderr.write(f"domgames: resource limit: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
