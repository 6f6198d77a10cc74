"""rational-dyck command line: enumerate, convert, decompose, dot and verify."""
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import TypeAdapter

from src.application.conversions import (
    as_path,
    as_stirling,
    decomposition_to_json,
    format_ints,
    paths_to_json,
    read_object,
    render_object,
)
from src.application.module_registry import RegisteredModules, register_modules
from src.commons.enums.format_enums import DecompositionKind, DotKind, ObjectKind, OutputFormat
from src.commons.enums.order_enums import OrderKind, ReferencePath
from src.commons.exceptions import EnumerationBudgetError, InvalidObjectError, UsageError
from src.domain.bintrees.construction import build_bqp, tr
from src.domain.bintrees.models import bintree_to_dot
from src.domain.paren.presentation import alpha_I, alpha_II
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import word_to_height_seq, word_to_step_seq
from src.domain.stirling.maps import zeta
from src.domain.strips.decompositions import delta, theta
from src.domain.strips.multiperm import v_sequences
from src.domain.trees.ary_tree import ary_tree_to_dot, xi
from src.domain.trees.plane_tree import dyck_to_plane_tree, plane_tree_to_dot
from src.domain.verification.dtos.verification_report import VerificationReport

logger = logging.getLogger(__name__)

_reports_adapter = TypeAdapter(List[VerificationReport])

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ==================== HELPERS ====================


def _read_input(args: argparse.Namespace) -> str:
    text = args.input if args.input not in (None, "-") else sys.stdin.read()
    text = text.strip()
    if not text:
        raise UsageError("No input given (argument or stdin)")
    return text


def _emit(text: str, out: Optional[Path]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(text)} bytes to {out}")


def _one_if_missing(value: Optional[int]) -> int:
    return 1 if value is None else value


def _slope(args: argparse.Namespace) -> Slope:
    try:
        return Slope(_one_if_missing(args.a), _one_if_missing(args.b))
    except InvalidObjectError as e:
        raise UsageError(str(e))


def _sizes(args: argparse.Namespace) -> List[int]:
    if args.n is None and args.n_max is None:
        raise UsageError("Give --n or --n-max")
    first = args.n if args.n is not None else 1
    last = args.n_max if args.n_max is not None else first
    if last < first:
        raise UsageError(f"--n-max {last} is below --n {first}")
    return list(range(first, last + 1))


def _modules(args: argparse.Namespace) -> RegisteredModules:
    return register_modules(budget=args.budget, max_size=getattr(args, "max_size", None))


def _word_of(word: DyckWord, show: str) -> str:
    if show == "step":
        return format_ints(word_to_step_seq(word))
    if show == "height":
        return format_ints(word_to_height_seq(word))
    if show == "paren":
        return word.as_parens()
    return word.steps


# ==================== COMMANDS ====================


def cmd_enumerate(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    if fmt == OutputFormat.DOT:
        raise UsageError("enumerate prints words or JSON; use the dot command for graphs")
    slope = _slope(args)
    enumerator = _modules(args).paths.enumeration_service()
    paths = [p for n in _sizes(args) for p in enumerator.enumerate_paths(slope, n)]
    if fmt == OutputFormat.JSON:
        _emit(paths_to_json(paths), args.out)
    else:
        _emit("".join(f"{p.steps}\n" for p in paths), args.out)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    _slope(args)
    obj = read_object(args.source, _read_input(args), a=_one_if_missing(args.a), b=args.b)
    _emit(render_object(obj, args.target, args.format), args.out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    kind = DecompositionKind(args.kind)
    _slope(args)
    path = as_path(read_object(args.source, _read_input(args), a=_one_if_missing(args.a), b=args.b))
    as_json = OutputFormat(args.format) == OutputFormat.JSON

    if kind == DecompositionKind.V_SEQUENCES:
        parts = v_sequences(path, ReferencePath(args.reference)).parts
        if as_json:
            _emit(decomposition_to_json(kind.value, [list(p) for p in parts]), args.out)
        else:
            _emit("\n".join(format_ints(p) for p in parts), args.out)
        return EXIT_OK

    if kind == DecompositionKind.DELTA:
        t = delta(path)
    elif kind == DecompositionKind.THETA:
        t = theta(path)
    else:
        perm = zeta(word_to_step_seq(path), path.slope.b)
        t = alpha_I(perm) if kind == DecompositionKind.ALPHA_I else alpha_II(perm)

    if as_json:
        _emit(decomposition_to_json(kind.value, [_word_of(w, args.show) for w in t.words]), args.out)
    else:
        _emit("\n".join(_word_of(w, args.show) for w in t.words), args.out)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    kind = DotKind(args.kind)
    slope = _slope(args)
    if kind == DotKind.POSET:
        service = _modules(args).orders.poset_service()
        sizes = _sizes(args)
        if len(sizes) != 1:
            raise UsageError("A poset needs a single --n")
        _emit(service.build_poset(slope, sizes[0], args.order).to_dot(), args.out)
        return EXIT_OK

    text = _read_input(args)
    if kind == DotKind.ARYTREE:
        perm = as_stirling(read_object(args.source, text, a=_one_if_missing(args.a), b=args.b))
        _emit(ary_tree_to_dot(xi(perm)), args.out)
    elif kind == DotKind.PLANETREE:
        _emit(plane_tree_to_dot(dyck_to_plane_tree(DyckWord.dyck11(text))), args.out)
    else:
        words = [w for w in text.replace(",", " ").split() if w]
        if len(words) == 1:
            tree = tr(DyckWord.parse(words[0], slope))
        elif len(words) == 2:
            tree = build_bqp(DyckWord.parse(words[0], slope), DyckWord.parse(words[1], slope))
        else:
            raise UsageError("A binary tree needs one word P or a pair Q,P")
        _emit(bintree_to_dot(tree, modulus=args.modulus), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    service = _modules(args).verification.verification_service()
    if args.list:
        _emit(
            "\n".join(f"{c.name}\t{c.claim} [{c.reference}]" for c in service.list_checks()),
            args.out,
        )
        return EXIT_OK
    if args.check is None:
        raise UsageError("Give --check NAME, --check all or --list")

    slopes = None
    if args.a is not None or args.b is not None:
        slope = _slope(args)
        slopes = [(slope.a, slope.b)]
    start = time.perf_counter()
    try:
        if args.check == "all":
            reports = service.run_all(slopes=slopes, n=args.n, max_size=args.max_size)
        else:
            grid = service.grid_for(args.check, slopes=slopes, n=args.n, max_size=args.max_size)
            reports = [service.run(args.check, grid)]
    except KeyError as e:
        raise UsageError(e.args[0])

    if OutputFormat(args.format) == OutputFormat.JSON:
        _emit(_reports_adapter.dump_json(reports).decode(), args.out)
    else:
        _emit("\n".join(line for r in reports for line in r.summary_lines()), args.out)

    failed = [r.check for r in reports if r.status == "fail"]
    elapsed = time.perf_counter() - start
    print(f"{len(reports)} checks, {len(failed)} failed, {elapsed:.2f}s", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


# ==================== PARSER ====================


def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--a", type=int, default=None, help="Slope numerator (N steps per unit)")
    common.add_argument("--b", type=int, default=None, help="Slope denominator (E steps per unit)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.WORD.value)
    common.add_argument("--out", type=Path, default=None, help="Write to FILE instead of stdout")
    common.add_argument("--budget", type=int, default=None, help="Enumeration cap (overrides RDK_BUDGET)")

    sized = CliParser(add_help=False)
    sized.add_argument("--n", type=int, default=None)
    sized.add_argument("--n-max", type=int, default=None)

    kinds = [k.value for k in ObjectKind]

    parser = CliParser(prog="rational-dyck", description="Rational Dyck paths: orders, bijections and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_p = sub.add_parser("enumerate", parents=[common, sized], help="List every path of a family")
    enumerate_p.set_defaults(handler=cmd_enumerate)

    convert_p = sub.add_parser("convert", parents=[common], help="Convert between encodings")
    convert_p.add_argument("--from", dest="source", choices=kinds, required=True)
    convert_p.add_argument("--to", dest="target", choices=kinds, required=True)
    convert_p.add_argument("input", nargs="?", default=None)
    convert_p.set_defaults(handler=cmd_convert)

    decompose_p = sub.add_parser("decompose", parents=[common], help="Split a path into a tuple of Dyck words")
    decompose_p.add_argument("--kind", choices=[k.value for k in DecompositionKind], required=True)
    decompose_p.add_argument("--from", dest="source", choices=kinds, default=ObjectKind.WORD.value)
    decompose_p.add_argument("--show", choices=["word", "step", "height", "paren"], default="word")
    decompose_p.add_argument(
        "--reference", choices=[r.value for r in ReferencePath], default=ReferencePath.HIGHEST.value
    )
    decompose_p.add_argument("input", nargs="?", default=None)
    decompose_p.set_defaults(handler=cmd_decompose)

    dot_p = sub.add_parser("dot", parents=[common, sized], help="Export a poset or a tree as graphviz code")
    dot_p.add_argument("kind", choices=[k.value for k in DotKind])
    dot_p.add_argument("--order", choices=[k.value for k in OrderKind], default=OrderKind.ROTATION.value)
    dot_p.add_argument("--from", dest="source", choices=kinds, default=ObjectKind.STIRLING.value)
    dot_p.add_argument("--modulus", type=int, default=None, help="Label bintree edges by post-order mod this")
    dot_p.add_argument("input", nargs="?", default=None)
    dot_p.set_defaults(handler=cmd_dot)

    verify_p = sub.add_parser("verify", parents=[common], help="Run proposition checks")
    verify_p.add_argument("--check", default=None, help="Check name, or 'all'")
    verify_p.add_argument("--list", action="store_true")
    verify_p.add_argument("--n", type=int, default=None, help="Only this size")
    verify_p.add_argument("--max-size", type=int, default=None, help="Largest (a+b)·n")
    verify_p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as e:
        print(f"rational-dyck: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationBudgetError as e:
        logger.error(f"Enumeration stopped: {e}")
        print(f"rational-dyck: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidObjectError as e:
        print(f"rational-dyck: invalid object: {e}", file=sys.stderr)
        return EXIT_INVALID
