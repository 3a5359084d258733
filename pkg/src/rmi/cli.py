"""Command-line front end: ``rmi gen``, ``rmi stats``, ``rmi show``.

Exit codes: 0 success, 1 runtime/data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys

from .invariants import ResolutionTooLarge
from .models import ModelParams, Output, Strategy, model_from_params, sample
from .monomials import render
from .stats import SELECTORS, mean_betti, proportion_stats, render_mean_betti, statistics
from .store import SampleFormatError, read_sample, write_sample


class UsageError(Exception):
    pass


def _number_list(text: str, cast):
    try:
        vals = [cast(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a comma-separated list") from None
    return vals[0] if len(vals) == 1 else tuple(vals)


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmi", description="Random monomial ideals: sample, store, summarize.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a sample and write it to a folder")
    gen.add_argument("--n", type=int, required=True, help="number of variables")
    gen.add_argument("--D", type=int, required=True, help="maximum degree")
    spec = gen.add_mutually_exclusive_group(required=True)
    spec.add_argument("--p", help="probability, or comma-separated list of D per-degree probabilities")
    spec.add_argument("--M", help="count, or comma-separated list of D per-degree counts")
    gen.add_argument("--N", type=int, required=True, help="sample size")
    gen.add_argument("--ideals", action="store_true", help="store minimal generating sets of the ideals")
    gen.add_argument("--minimal", action="store_true", help="use the Minimal strategy (implies --ideals)")
    gen.add_argument("--seed", type=_seed, default=None, help="64-bit seed (default: fresh entropy)")
    gen.add_argument("--out", required=True, help="output folder")

    st = sub.add_parser("stats", help="summarize an invariant over a stored sample")
    st.add_argument("--sample", required=True)
    st.add_argument("--invariant", required=True, help=f"one of: {', '.join(SELECTORS)}")
    st.add_argument("--show-tally", action="store_true")
    st.add_argument("--verbose", action="store_true")

    show = sub.add_parser("show", help="print a stored sample")
    show.add_argument("--sample", required=True)
    show.add_argument("--data", action="store_true", help="also print the draws")
    return parser


def cmd_gen(args) -> int:
    p = _number_list(args.p, float) if args.p is not None else None
    M = _number_list(args.M, int) if args.M is not None else None
    if args.N < 1:
        raise UsageError("--N must be at least 1")
    strategy = Strategy.MINIMAL if args.minimal else Strategy.PLAIN
    output = Output.IDEALS if (args.ideals or args.minimal) else Output.SETS
    try:
        params = ModelParams(args.n, args.D, p=p, M=M, strategy=strategy, output=output)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    seed = args.seed if args.seed is not None else secrets.randbits(64)
    s = sample(model_from_params(params), args.N, seed)
    write_sample(s, args.out)
    print(f"ModelName: {s.model_name}")
    print(f"Parameters: {s.parameters}")
    print(f"Seed: {s.seed}")
    print(f"SampleSize: {s.sample_size}")
    print(f"Written to: {args.out}")
    return 0


def cmd_stats(args) -> int:
    if args.invariant not in SELECTORS:
        raise UsageError(f"unknown invariant {args.invariant!r}; choose from {', '.join(SELECTORS)}")
    s = read_sample(args.sample)
    print(f"ModelName: {s.model_name}")
    print(f"Seed: {s.seed}")
    print(f"SampleSize: {s.sample_size}")
    print(f"Invariant: {args.invariant}")
    if args.invariant in ("borel", "cohen-macaulay"):
        print(proportion_stats(s, args.invariant).render(verbose=args.verbose))
        return 0
    summary = statistics(s, args.invariant, show_tally=args.show_tally)
    print(summary.render())
    if args.invariant == "betti-table" and args.verbose:
        print(render_mean_betti(*mean_betti(s)))
    return 0


def cmd_show(args) -> int:
    s = read_sample(args.sample)
    print(f"ModelName: {s.model_name}")
    print(f"Parameters: {s.parameters}")
    print(f"SampleSize: {s.sample_size}")
    print(f"Seed: {s.seed}")
    if args.data:
        for d in s.data:
            print(render(d))
    return 0


COMMANDS = {"gen": cmd_gen, "stats": cmd_stats, "show": cmd_show}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rmi: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except (SampleFormatError, ResolutionTooLarge, OSError, ValueError) as exc:
        print(f"rmi: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
