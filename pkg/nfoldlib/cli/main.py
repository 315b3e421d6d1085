import argparse
import logging
import sys

from nfoldlib import constants
from .run import run
from .run_config import COMMANDS, FORMATS, RunConfig


def build_parser():
    parser = argparse.ArgumentParser(
        prog="taufold",
        description="Torsion classes, n-fold torsion classes and tau-rigid modules of representation-finite "
                    "string algebras.")
    parser.add_argument("algebra", help="bundled algebra name (ex73, a2, ...) or path of an .alg file")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--fold", type=int, default=1, help="fold n for tors and closure")
    parser.add_argument("--side", choices=("tors", "torf"), default="tors")
    parser.add_argument("--mu", type=int, default=constants.MU, help="multiplicity bound of the censuses")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    parser.add_argument("--u", default="", help="summands of U, e.g. P1+P2")
    parser.add_argument("--n", type=int, default=1, help="k of cok_k")
    parser.add_argument("--subcat", default="", help="members of a subcategory, e.g. P2+S3")
    parser.add_argument("--which", choices=("air", "main", "hereditary"), default="main")
    parser.add_argument("--kind", choices=("ke", "ce", "tf", "ts"), default="ke")
    parser.add_argument("--seed", type=int, default=constants.SEED)
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker threads (default ${constants.THREADS_ENV} or 1)")
    parser.add_argument("--subset-guard", type=int, default=constants.SUBSET_GUARD)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def main(argv=None):
    """Entry point of the ``taufold`` command; returns the exit code."""
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")
    try:
        config = RunConfig(algebra=args.algebra, command=args.command, fold=args.fold, side=args.side,
                           mu=args.mu, fmt=args.fmt, u=args.u, subcat=args.subcat, n=args.n, which=args.which,
                           kind=args.kind, seed=args.seed, threads=args.threads, subset_guard=args.subset_guard,
                           verbose=args.verbose)
    except ValueError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
    return run(config)
