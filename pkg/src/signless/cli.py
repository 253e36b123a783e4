"""Command-line front end.

    signless eval FILE [--format graph6|edges]
    signless enumerate --n N [--connected-only]
    signless family NAME --n LO:HI

Exit codes: 0 when every lemma and catalog bound holds, 1 when one fails
(or a family expectation is not met), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from fractions import Fraction
from typing import BinaryIO, Callable, Iterator, Optional

from . import bounds as bd
from .graph import FAMILIES, Graph, generate
from .graphio import DEFAULT_MAX_N, ParseError, emit_report, read_corpus
from .sweep import (
    DEFAULT_ALPHAS,
    DEFAULT_REAL_KS,
    MAX_ENUM_N,
    GraphResult,
    RunConfig,
    SweepSummary,
    default_tol,
    labeled_graphs,
    run,
)


class UsageError(ValueError):
    pass


def _reals(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(Fraction(t.strip())) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of reals, got {text!r}")


def _k_policy(text: str) -> Optional[tuple[int, ...]]:
    if text.strip().lower() == "all":
        return None
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'all' or a comma-separated list of integers, got {text!r}")


def _n_range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--alpha", type=_reals, default=DEFAULT_ALPHAS,
                   help="comma-separated alpha grid, fractions allowed (default -1,-1/2,1/2,3/2,2)")
    p.add_argument("--k", type=_k_policy, default=None, dest="ks",
                   help="'all' (default) or comma-separated integer k values")
    p.add_argument("--real-k", type=_reals, default=DEFAULT_REAL_KS,
                   help="real k grid for the product bounds (default 0,1/2,1,2)")
    p.add_argument("--tol", type=float, default=None,
                   help="equality tolerance (default 1e-9 or $SIGNLESS_TOL)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest accepted order")
    p.add_argument("--out", choices=("csv", "jsonl"), default="csv", help="report format")
    p.add_argument("--report", metavar="FILE", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signless", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate every graph in a file")
    p.add_argument("path")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    _add_common(p)

    p = sub.add_parser("enumerate", help="sweep all labelled graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected-only", action="store_true")
    _add_common(p)

    p = sub.add_parser("family", help="run a named family and check its equality cases")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("--n", type=_n_range, required=True, help="N or LO:HI (inclusive)")
    _add_common(p)
    return parser


def config_from(args) -> RunConfig:
    try:
        return RunConfig(alphas=tuple(args.alpha), ks=args.ks, real_ks=tuple(args.real_k),
                         tol=args.tol if args.tol is not None else default_tol(),
                         jobs=args.jobs, max_n=args.max_n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _records(result: GraphResult):
    return [(result.locator, r) for r in result.records]


def _write_results(results, fmt: str, sink: BinaryIO, on_result: Callable = None) -> bool:
    """Stream results to ``sink``; return True when nothing fatal failed."""
    ok = True
    sink.write(emit_report([], fmt))
    for res in results:
        sink.write(emit_report(_records(res), fmt, header=False))
        ok = ok and res.ok
        if on_result is not None:
            on_result(res)
    return ok


def _open_sink(args):
    if args.report:
        return open(args.report, "wb")
    return nullcontext(sys.stdout.buffer)


def cmd_eval(args) -> int:
    config = config_from(args)
    records = read_corpus(args.path, args.format, max_n=config.max_n)
    items = ((rec.source, rec.graph) for rec in records)
    with _open_sink(args) as sink:
        ok = _write_results(run(items, config), args.out, sink)
        sink.flush()
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    if not 2 <= args.n <= MAX_ENUM_N:
        raise UsageError(f"--n must be between 2 and {MAX_ENUM_N}, got {args.n}")
    config = config_from(args)
    summary = SweepSummary()
    results = run(labeled_graphs(args.n, args.connected_only), config)
    if args.report:
        with open(args.report, "wb") as sink:
            _write_results(results, args.out, sink, summary.add)
    else:
        for res in results:
            summary.add(res)
    sys.stdout.write(summary.render())
    sys.stdout.flush()
    return 0 if summary.fatal_count == 0 else 1


# Family runs: members for one order n, and the equality flags each member must show.

def family_members(name: str, n: int) -> Iterator[tuple[str, Graph]]:
    if name == "complete_bipartite":
        for p in range(1, n // 2 + 1):
            yield f"complete_bipartite({p},{n - p})", generate(name, p, n - p)
        return
    minimum = {"cycle": 3, "star": 2, "double_star": 4, "path": 1}.get(name, 0)
    if n < minimum or (name == "double_star" and n % 2):
        return
    yield f"{name}({n})", generate(name, n)


def _find(records, tag: str, alpha=None, k=None):
    for r in records:
        if isinstance(r, bd.BoundReport):
            if r.bound.tag == tag and (alpha is None or r.alpha == alpha) and (k is None or r.k == k):
                return r
        elif r.lemma == tag:
            return r
    return None


def _expect_equal(records, tag: str, alpha=None, k=None) -> tuple[str, bool]:
    r = _find(records, tag, alpha, k)
    where = tag + (f" alpha={alpha:g}" if alpha is not None else "") + (f" k={k:g}" if k is not None else "")
    return f"{where} equality", r is not None and r.holds and r.equality


def _expect_pass(records, tag: str) -> tuple[str, bool]:
    r = _find(records, tag)
    return f"{tag} passes", r is not None and r.status == "pass"


def family_expectations(name: str, result: GraphResult, config: RunConfig,
                        extra: list) -> list[tuple[str, bool]]:
    n = result.summary.n
    records = result.records + extra
    checks = []
    if name == "complete" and n >= 3:
        checks.append(_expect_equal(records, "EQ5", k=1))
        for a in config.bound_alphas:
            if a < 0:
                checks.append(_expect_equal(records, "EQ12", alpha=a, k=1))
        checks.append(_expect_equal(records, "degree_squares"))
        checks.append(_expect_equal(records, "equal_laplacian"))
    elif name == "star" and n >= 2:
        if n >= 3:
            checks.append(_expect_equal(records, "EQ4", k=1))
        checks.append(_expect_equal(records, "q1_lower"))
    elif name in ("complete_bipartite", "double_star") and n >= 3:
        checks.append(_expect_equal(records, "mu2_lower"))
    elif name == "cycle":
        checks.append(_expect_pass(records, "tree_products"))
    elif name == "empty" and n >= 3:
        for a in config.bound_alphas:
            if a > 0:
                for k in range(1, n - 1):
                    checks.append(_expect_equal(records, "EQ7" if a < 1 else "EQ8", alpha=a, k=k))
                for k in range(1, n):
                    checks.append(_expect_equal(records, "EQ10" if a < 1 else "EQ11", alpha=a, k=k))
    return checks


def _forced_general(result: GraphResult, config: RunConfig) -> list:
    """The non-bipartite power-sum formula evaluated on the empty graph."""
    s = result.summary
    out = []
    for a in config.bound_alphas:
        if a > 0:
            for k in range(1, s.n):
                out.append(bd.power_sum_bound(s, a, k, formula="nonbipartite", tol=config.tol))
    return out


def cmd_family(args) -> int:
    config = config_from(args)
    members = [m for n in args.n for m in family_members(args.name, n)]
    if not members:
        raise UsageError(f"no {args.name} graphs for n in {args.n.start}..{args.n.stop - 1}")
    ok = True
    lines = []
    with _open_sink(args) as sink:
        sink.write(emit_report([], args.out))
        for res in run(members, config):
            extra = _forced_general(res, config) if args.name == "empty" else []
            sink.write(emit_report(_records(res) + [(res.locator, r) for r in extra],
                                   args.out, header=False))
            ok = ok and res.ok and all(r.holds for r in extra)
            for what, met in family_expectations(args.name, res, config, extra):
                ok = ok and met
                lines.append(f"{res.locator}: {what}: {'ok' if met else 'NOT MET'}")
            if not res.ok:
                lines.append(f"{res.locator}: some lemma or bound failed")
        sink.flush()
    sys.stderr.write("\n".join(lines) + ("\n" if lines else ""))
    return 0 if ok else 1


COMMANDS = {"eval": cmd_eval, "enumerate": cmd_enumerate, "family": cmd_family}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, OSError) as e:
        sys.stderr.write(f"signless {args.command}: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
