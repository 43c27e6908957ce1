"""Command line interface: ``hypermatch <command> ...``.

Exit codes: 0 success, 2 parse, domain or structural error, 3 capacity,
4 non-convergence.
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .config import config
from .core.bounds import interval_from_scaling, regular_matching_lower_bound
from .core.errors import DomainError, HypermatchError, ParseError, StructuralError
from .core.exact import partition_function_dp_partite, partition_function_exact
from .core.hypergraph import EdgeSublist, HypergraphKind, HypergraphSpec
from .core.scaling import balance_ratio, scale_to_k_stochastic
from .core.tester import test_hypergraph
from .core.weights import as_weight
from .utils import reporting
from .utils.generators import FIXTURES, fixture_weight, gen_balanced, gen_sublist
from .utils.instance_io import parse_instance, serialize_instance

logger = logging.getLogger(__name__)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"Cannot read instance: {exc.strerror}", path) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="scaling tolerance on vertex marginals")
    common.add_argument("--max-sweeps", type=int, help="scaling sweep limit")
    common.add_argument("--leaf-budget", type=int, help="exact enumeration budget")
    common.add_argument("--seed", type=int, help="random seed for generators")
    common.add_argument(
        "--format", dest="output_format", choices=["text", "machine"], help="output format"
    )
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="hypermatch",
        description="Perfect matchings of weighted hypergraphs: exact counts, "
        "k-stochastic scaling and polynomial sandwich estimates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    exact = commands.add_parser("exact", parents=[common], help="exact partition function")
    exact.add_argument("path", help="instance file, '-' for standard input")
    exact.add_argument("--method", choices=["expand", "dp"], default="expand")

    scale = commands.add_parser("scale", parents=[common], help="scale to k-stochastic")
    scale.add_argument("path")
    scale.add_argument("--stall-window", type=int)

    estimate = commands.add_parser("estimate", parents=[common], help="sandwich estimate")
    estimate.add_argument("path")
    estimate.add_argument("--alpha", type=float, help="balance ratio of the weight")

    test = commands.add_parser("test", parents=[common], help="matching dichotomy test")
    test.add_argument("path")
    test.add_argument("--delta", type=float, required=True)
    test.add_argument("--beta", type=float, required=True)
    test.add_argument("--gamma-override", type=float)

    phi = commands.add_parser("phi", parents=[common], help="perfect matchings of K^k_km")
    phi.add_argument("k", type=int)
    phi.add_argument("m", type=int)

    regular = commands.add_parser(
        "bound-regular", parents=[common], help="size-s matchings of a d-regular hypergraph"
    )
    for name in ("k", "m", "d", "s"):
        regular.add_argument(name, type=int)

    gen = commands.add_parser("gen", parents=[common], help="write a random instance")
    gen.add_argument("--kind", default="uniform")
    gen.add_argument("-k", type=int, default=2)
    gen.add_argument("-m", type=int, default=2)
    gen.add_argument("--alpha", type=float, default=2.0)
    gen.add_argument("--fixture", choices=FIXTURES)
    gen.add_argument("--sublist-density", type=float)
    return parser


def _run_config(args):
    overrides = {
        key: getattr(args, key)
        for key in ("tol", "max_sweeps", "leaf_budget", "seed", "output_format", "stall_window")
        if getattr(args, key, None) is not None
    }
    run = config.copy()
    try:
        run.update(verbose=args.verbose, **overrides)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    return run


def _load(path: str):
    return parse_instance(_read(path))


def run_command(args, run) -> str:
    """Execute one parsed command and return its rendered output."""
    if args.command == "exact":
        spec, payload = _load(args.path)
        weights = as_weight(payload)
        if args.method == "dp":
            result = partition_function_dp_partite(weights)
        else:
            result = partition_function_exact(weights, leaf_budget=run.leaf_budget)
        rows = reporting.exact_rows(spec, result)

    elif args.command == "scale":
        _, payload = _load(args.path)
        weights = as_weight(payload)
        outcome = scale_to_k_stochastic(
            weights, tol=run.tol, max_sweeps=run.max_sweeps, stall_window=run.stall_window
        )
        rows = reporting.scaling_rows(weights, outcome)

    elif args.command == "estimate":
        _, payload = _load(args.path)
        weights = as_weight(payload)
        measured = balance_ratio(weights)
        alpha = measured if args.alpha is None else args.alpha
        if alpha < measured * (1 - 1e-12):
            raise DomainError(f"--alpha {alpha} is below the balance ratio {measured:.6g}")
        outcome = scale_to_k_stochastic(weights, tol=run.tol, max_sweeps=run.max_sweeps)
        interval = interval_from_scaling(outcome, max(alpha, measured))
        rows = reporting.interval_rows(interval, alpha=max(alpha, measured))

    elif args.command == "test":
        _, payload = _load(args.path)
        if not isinstance(payload, EdgeSublist):
            raise StructuralError("test needs a document with sublist_members")
        report = test_hypergraph(
            payload,
            args.delta,
            args.beta,
            gamma_override=args.gamma_override,
            tol=run.tol,
            max_sweeps=run.max_sweeps,
            leaf_budget=run.leaf_budget,
        )
        rows = reporting.tester_rows(report)

    elif args.command == "phi":
        rows = reporting.phi_rows(args.k, args.m)

    elif args.command == "bound-regular":
        bound = regular_matching_lower_bound(args.k, args.m, args.d, args.s)
        rows = reporting.regular_rows(bound)

    else:
        spec = HypergraphSpec(HypergraphKind.parse(args.kind), args.k, args.m)
        if args.fixture is not None:
            payload = fixture_weight(args.fixture, spec)
        elif args.sublist_density is not None:
            payload = gen_sublist(spec, args.sublist_density, run.seed)
        else:
            payload = gen_balanced(spec, args.alpha, run.seed)
        return serialize_instance(spec, payload)

    return reporting.render(rows, run.output_format)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        package_logger = logging.getLogger("hypermatch")
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG)
    output_format = args.output_format or config.output_format
    try:
        run = _run_config(args)
        sys.stdout.write(run_command(args, run))
        return 0
    except HypermatchError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        sys.stderr.write(reporting.render(reporting.error_rows(exc), output_format))
        return exc.exit_code
    except Exception as exc:
        logger.error("command %s failed unexpectedly", args.command, exc_info=True)
        sys.stderr.write(reporting.render(reporting.error_rows(exc), output_format))
        return 1
    finally:
        if handler is not None:
            logging.getLogger("hypermatch").removeHandler(handler)
            logging.getLogger("hypermatch").setLevel(logging.NOTSET)


if __name__ == "__main__":
    sys.exit(main())
