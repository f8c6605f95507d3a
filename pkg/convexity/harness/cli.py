"""
cxh command line.

Usage:
    cxh graph stats FILE
    cxh graph convert IN OUT
    cxh graph generate FAMILY ORDER [ORDER] [--seed S] [-o OUT]
    cxh product --kind cartesian|strong|lex A B [-o OUT]
    cxh hull --convexity cc|p3 [--exact|--fastpath] [--kind K] FILE [FILE2]
    cxh cnum --convexity cc|p3 [--exact|--fastpath] [--kind K] FILE [FILE2]
    cxh alpha FILE
    cxh closure --convexity cc|p3 FILE --seed-set "0,1,2"
    cxh reduce p3cc FILE -k K [-o OUT.json]
    cxh reduce cart-k2 FILE -u U -k K [-o OUT.json]
    cxh verify [--suite all|ID[,ID...]] [--seed N] [--max-order N]
               [--report OUT.json] [--parallelism P] [--list] [--summary]

Exit codes: 0 success, 1 failed check or exhausted budget, 2 usage or
input error, 3 internal error.
"""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError

from convexity.gadgets.models import ReductionKind
from convexity.gadgets.reductions import build_cartesian_hardness, reduce_p3_to_cc, to_envelope
from convexity.graph_core.generators import generate
from convexity.graph_core.io import dump_graph, load_graph
from convexity.graph_core.models import FamilySpec, Graph, GraphFamily
from convexity.graph_core.tools import graph_stats
from convexity.harness.catalog import CATALOG, resolve_suite
from convexity.harness.runner import exit_code, render_summary, run_suite, suite_to_dict, write_report
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import closure
from convexity.products.models import ProductGraph, ProductKind
from convexity.products.tools import product
from convexity.shared.config import Settings, get_settings
from convexity.shared.exceptions import BudgetExceededError, ConvexityError
from convexity.shared.logging_setup import configure_logging
from convexity.solvers.convexity_number import convexity_number_exact
from convexity.solvers.fastpaths import convexity_fastpath, hull_fastpath
from convexity.solvers.hull import hull_number_exact
from convexity.solvers.independence import independence_number_exact
from convexity.solvers.models import SearchBudget

log = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

PRODUCT_KINDS = ("cartesian", "strong", "lex", "lexicographic")


class UsageError(Exception):
    """Arguments parsed but do not make sense together."""


Handler = Callable[[argparse.Namespace, Settings], int]


# =====================================================
# Helpers
# =====================================================


def _emit_json(document: Any, out: str | None = None) -> None:
    text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _parse_seed_set(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise UsageError(f"--seed-set must be comma-separated vertex ids, got {text!r}") from e


def _target(args: argparse.Namespace) -> tuple[Graph, ProductGraph | None]:
    """The graph a solver subcommand works on: one file, or the product of two."""
    files: list[str] = args.files
    if len(files) > 2:
        raise UsageError("expected one graph file, or two factor files with --kind")
    if len(files) == 1:
        if args.fastpath:
            raise UsageError("--fastpath needs two factor files and --kind")
        return load_graph(files[0]), None
    if args.kind is None:
        raise UsageError("two factor files need --kind")
    p = product(load_graph(files[0]), load_graph(files[1]), ProductKind.from_string(args.kind))
    return p.graph, p


# =====================================================
# Subcommands
# =====================================================


def _cmd_graph_stats(args: argparse.Namespace, settings: Settings) -> int:
    _emit_json(graph_stats(load_graph(args.file)).model_dump())
    return EXIT_OK


def _cmd_graph_convert(args: argparse.Namespace, settings: Settings) -> int:
    dump_graph(load_graph(args.input), args.output)
    return EXIT_OK


def _cmd_graph_generate(args: argparse.Namespace, settings: Settings) -> int:
    spec = FamilySpec(
        family=GraphFamily.from_string(args.family),
        orders=tuple(args.orders),
        seed=settings.default_seed if args.seed is None else args.seed,
    )
    dump_graph(generate(spec), args.output)
    return EXIT_OK


def _cmd_product(args: argparse.Namespace, settings: Settings) -> int:
    p = product(load_graph(args.a), load_graph(args.b), ProductKind.from_string(args.kind))
    dump_graph(p.graph, args.output)
    return EXIT_OK


def _cmd_hull(args: argparse.Namespace, settings: Settings) -> int:
    kind = ConvexityKind.from_string(args.convexity)
    g, p = _target(args)
    if args.fastpath:
        if kind is not ConvexityKind.CYCLE:
            raise UsageError("--fastpath applies to the cycle convexity only")
        result = hull_fastpath(p)
        if result is not None:
            _emit_json(result.to_dict())
            return EXIT_OK
        log.info("fastpath_unavailable", operation="hull", kind=p.kind.value)
    result = hull_number_exact(g, kind, SearchBudget.from_settings(settings, hull=True))
    _emit_json(result.to_dict())
    return EXIT_OK


def _cmd_cnum(args: argparse.Namespace, settings: Settings) -> int:
    kind = ConvexityKind.from_string(args.convexity)
    g, p = _target(args)
    budget = SearchBudget.from_settings(settings)
    if args.fastpath:
        if kind is not ConvexityKind.CYCLE:
            raise UsageError("--fastpath applies to the cycle convexity only")
        _emit_json(convexity_fastpath(p, budget=budget).to_dict())
        return EXIT_OK
    _emit_json(convexity_number_exact(g, kind, budget).to_dict())
    return EXIT_OK


def _cmd_alpha(args: argparse.Namespace, settings: Settings) -> int:
    g = load_graph(args.file)
    _emit_json(independence_number_exact(g, SearchBudget.from_settings(settings)).to_dict())
    return EXIT_OK


def _cmd_closure(args: argparse.Namespace, settings: Settings) -> int:
    g = load_graph(args.file)
    seed = g.vertex_set(_parse_seed_set(args.seed_set))
    _emit_json(closure(g, seed, ConvexityKind.from_string(args.convexity)).to_dict())
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace, settings: Settings) -> int:
    g = load_graph(args.file)
    reduction = ReductionKind.from_string(args.reduction)
    if reduction is ReductionKind.P3_TO_CC:
        instance = reduce_p3_to_cc(g, args.k)
    else:
        if args.u is None:
            raise UsageError("reduce cart-k2 needs -u")
        instance = build_cartesian_hardness(g, args.u, args.k)
    _emit_json(to_envelope(instance), args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    if args.list:
        for entry in CATALOG:
            marker = "" if entry.in_all else "  (not in all)"
            print(f"{entry.id:32} {entry.statement}{marker}")
        return EXIT_OK

    ids = resolve_suite(args.suite)
    suite = run_suite(
        ids,
        seed=settings.default_seed if args.seed is None else args.seed,
        max_order=settings.verify_max_order if args.max_order is None else args.max_order,
        parallelism=settings.parallelism if args.parallelism is None else args.parallelism,
        budget=SearchBudget.from_settings(settings),
    )
    if args.report:
        write_report(suite, args.report)
    if args.summary:
        sys.stdout.write(render_summary(suite))
    elif not args.report:
        _emit_json(suite_to_dict(suite))
    return exit_code(suite)


# =====================================================
# Parser
# =====================================================


def _add_solver_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--convexity", choices=["cc", "p3"], default="cc")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="Exhaustive search (default)")
    mode.add_argument("--fastpath", action="store_true", help="Product formula when one applies")
    parser.add_argument("--kind", choices=PRODUCT_KINDS, help="Product kind for two factor files")
    parser.add_argument("files", nargs="+", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cxh",
        description="Cycle and P3 convexity on graphs and graph products",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--log-format", choices=["console", "json"])
    parser.add_argument("--time-limit", type=float, help="Seconds per exact search (CXH_TIME_LIMIT)")
    commands = parser.add_subparsers(dest="command", required=True)

    graph = commands.add_parser("graph", help="Graph files and generators")
    graph_commands = graph.add_subparsers(dest="graph_command", required=True)
    stats = graph_commands.add_parser("stats", help="Print graph statistics as JSON")
    stats.add_argument("file")
    stats.set_defaults(handler=_cmd_graph_stats)
    convert = graph_commands.add_parser("convert", help="Convert between edge-list and graph6")
    convert.add_argument("input")
    convert.add_argument("output")
    convert.set_defaults(handler=_cmd_graph_convert)
    gen = graph_commands.add_parser("generate", help="Generate a family member")
    gen.add_argument("family", choices=[f.value for f in GraphFamily])
    gen.add_argument("orders", type=int, nargs="+", metavar="ORDER")
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output", default="-")
    gen.set_defaults(handler=_cmd_graph_generate)

    prod = commands.add_parser("product", help="Build a graph product")
    prod.add_argument("--kind", choices=PRODUCT_KINDS, required=True)
    prod.add_argument("a")
    prod.add_argument("b")
    prod.add_argument("-o", "--output", default="-")
    prod.set_defaults(handler=_cmd_product)

    hull = commands.add_parser("hull", help="Hull number with a minimum hull set")
    _add_solver_arguments(hull)
    hull.set_defaults(handler=_cmd_hull)

    cnum = commands.add_parser("cnum", help="Convexity number with a maximum proper convex set")
    _add_solver_arguments(cnum)
    cnum.set_defaults(handler=_cmd_cnum)

    alpha = commands.add_parser("alpha", help="Independence number")
    alpha.add_argument("file")
    alpha.set_defaults(handler=_cmd_alpha)

    clos = commands.add_parser("closure", help="Convex hull of a seed set with its trace")
    clos.add_argument("--convexity", choices=["cc", "p3"], default="cc")
    clos.add_argument("--seed-set", required=True)
    clos.add_argument("file")
    clos.set_defaults(handler=_cmd_closure)

    red = commands.add_parser("reduce", help="Build a reduction instance envelope")
    red.add_argument("reduction", choices=[r.value for r in ReductionKind])
    red.add_argument("file")
    red.add_argument("-k", type=int, required=True)
    red.add_argument("-u", type=int)
    red.add_argument("-o", "--output", default="-")
    red.set_defaults(handler=_cmd_reduce)

    verify = commands.add_parser("verify", help="Run theorem checks")
    verify.add_argument("--suite", default="all")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--max-order", type=int)
    verify.add_argument("--report")
    verify.add_argument("--parallelism", type=int)
    verify.add_argument("--list", action="store_true", help="List check ids and exit")
    verify.add_argument("--summary", action="store_true", help="Print a text summary")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def _settings_for(args: argparse.Namespace) -> Settings:
    overrides = {
        key: value
        for key, value in (
            ("log_level", args.log_level),
            ("log_format", args.log_format),
            ("time_limit", args.time_limit),
        )
        if value is not None
    }
    settings = get_settings()
    if overrides:
        settings = Settings.model_validate({**settings.model_dump(), **overrides})
    return settings


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors.
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = _settings_for(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings)

    handler: Handler = args.handler
    try:
        return handler(args, settings)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ConvexityError, UsageError, ValidationError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        log.exception("cli_internal_error", command=args.command)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
