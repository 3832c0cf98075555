"""
Command handlers for the pp8 command line.

Each subcommand parses its arguments into library calls and prints the
result. Handlers return the process exit code: 0 on success, 1 on a negative
verdict (not a PP, not exceptional, a failed proof step), 2 on bad input.
"""

import argparse
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pytz

from pp8.algebra.equiv import is_exceptional_deg8, normalize
from pp8.algebra.field import FieldCtx, FieldElement, make_ctx
from pp8.algebra.hermite import hc
from pp8.algebra.octic import DEGREE, Octic
from pp8.algebra.pptest import is_pp_brute, is_pp_wan
from pp8.algebra.symring import NVARS, VARS, FieldPoly7, FieldPolyRing, SparsePoly7, SparsePolyRing
from pp8.core.config import get_settings
from pp8.core.errors import CoefficientSyntaxError, PP8Error, ProofStepFailed
from pp8.core.logger import logger
from pp8.models.records import ClassificationResult, ProofReport
from pp8.search.classify import classify, render_records
from pp8.search.proofs import verify

EXIT_OK: int = 0
EXIT_VERDICT: int = 1
EXIT_USAGE: int = 2


def parse_assignments(ctx: FieldCtx, items: Sequence[str]) -> Dict[int, FieldElement]:
    """
    Parse ``--set a5=e^3`` items.

    Args:
        ctx (FieldCtx): Field the values live in
        items (Sequence[str]): ``aN=value`` strings

    Returns:
        Dict[int, FieldElement]: Variable index -> value

    Raises:
        CoefficientSyntaxError: On malformed items
    """
    assigned = {}
    for item in items:
        name, sep, text = item.partition('=')
        name = name.strip()
        if not sep or len(name) != 2 or name[0] != 'a' or name[1] not in '1234567':
            raise CoefficientSyntaxError(f"bad assignment {item!r}: expected aN=value with N in 1..7")
        assigned[int(name[1])] = ctx.parse(text)
    return assigned


def hc_value(r: int, k: int, assigned: Dict[int, FieldElement]) -> Union[SparsePoly7, FieldPoly7, FieldElement]:
    """
    HC(r, k, a7, ..., a1) with the assigned variables fixed and the others symbolic.

    Returns an F2 polynomial when every fixed value is 0 or 1, a polynomial
    over GF(2^r) when other constants appear, and a field element when all
    seven variables are fixed.
    """
    indices = list(range(NVARS, 0, -1))
    if len(assigned) == NVARS:
        ctx = make_ctx(r)
        return hc(r, k, [assigned[i] for i in indices], ctx)
    if all(value in (0, 1) for value in assigned.values()):
        symbolic = [
            SparsePoly7.coerce(assigned[i]) if i in assigned else VARS[i - 1] for i in indices
        ]
        return hc(r, k, symbolic, SparsePolyRing())
    ctx = make_ctx(r)
    ring = FieldPolyRing(ctx)
    mixed = [
        FieldPoly7.constant(ctx, assigned[i]) if i in assigned else FieldPoly7.var(ctx, i) for i in indices
    ]
    return hc(r, k, mixed, ring)


def cmd_hc(args: argparse.Namespace) -> int:
    """Print HC(r, k, ...) for the ``hc`` subcommand."""
    assigned = {}
    if args.set:
        assigned = parse_assignments(make_ctx(args.r), args.set)
    value = hc_value(args.r, args.k, assigned)
    if isinstance(value, int):
        ctx = make_ctx(args.r)
        print(ctx.render(value, basis=True) if args.basis else ctx.to_log(value))
    else:
        print(value)
    return EXIT_OK


def _octic_arg(args: argparse.Namespace) -> Octic:
    return Octic.parse(make_ctx(args.r), args.coeffs)


def cmd_is_pp(args: argparse.Namespace) -> int:
    f = _octic_arg(args)
    verdict = is_pp_wan(f) if f.ctx.r >= 4 else is_pp_brute(f)
    print("PP" if verdict else "not PP")
    return EXIT_OK if verdict else EXIT_VERDICT


def cmd_is_exceptional(args: argparse.Namespace) -> int:
    verdict = is_exceptional_deg8(_octic_arg(args))
    print("exceptional" if verdict else "not exceptional")
    return EXIT_OK if verdict else EXIT_VERDICT


def cmd_normalize(args: argparse.Namespace) -> int:
    f = _octic_arg(args)
    form = normalize(f)
    print(f"{form.octic.to_log_tuple()} | {form.octic.render(args.basis)}")
    print(f"witness (s, t, u, v) = {form.witness.render(f.ctx, args.basis)}")
    return EXIT_OK


def _report_lines(report: ProofReport) -> List[str]:
    lines = [f"{step.status} [{step.kind}] {step.name}" for step in report.steps]
    lines.append(report.verdict)
    return lines


def _result_text(result: ClassificationResult, basis: bool) -> str:
    if result.proof_steps:
        report = ProofReport(
            r=result.r,
            steps=result.proof_steps,
            verdict=f"no non-exceptional degree-8 PP over F_{{2^{result.r}}}",
        )
        return "\n".join(_report_lines(report))
    return render_records(result.classes, basis)


def output_path(directory: Path, r: int, fmt: str) -> Path:
    """``<directory>/<UTC timestamp>_classify_r<r>.<json|txt>``."""
    stamp = datetime.now(pytz.UTC).strftime('%Y%m%dT%H%M%SZ')
    extension = 'json' if fmt == 'json' else 'txt'
    return directory / f"{stamp}_classify_r{r}.{extension}"


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        result = classify(args.r, threads=args.threads, frobenius_reduce=args.frobenius_reduce)
    except ProofStepFailed as e:
        if isinstance(e.report, ProofReport):
            print("\n".join(_report_lines(e.report)))
        return EXIT_VERDICT
    text = result.model_dump_json(indent=2) if args.format == 'json' else _result_text(result, args.basis)
    if args.out is None:
        print(text)
        return EXIT_OK
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    path = output_path(directory, args.r, args.format)
    path.write_text(text + "\n")
    logger.info(f"Wrote r = {args.r} classification to {path}")
    print(path)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = verify(args.r)
    except ProofStepFailed as e:
        if isinstance(e.report, ProofReport):
            print("\n".join(_report_lines(e.report)))
        return EXIT_VERDICT
    print("\n".join(_report_lines(report)))
    return EXIT_OK


def _add_field(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--r', type=int, required=True, help='extension degree of GF(2^r)')


def _add_coeffs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--coeffs', required=True,
                        help=f'a7,...,a1 ({DEGREE - 1} values) or a8,...,a0 ({DEGREE + 1} values): 0, 1, e or e^k')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pp8',
        description='Degree-8 permutation polynomials over GF(2^r)',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_hc = sub.add_parser('hc', help='Hermite-criterion sum HC(r, k, a7, ..., a1)')
    _add_field(p_hc)
    p_hc.add_argument('--k', type=int, required=True)
    p_hc.add_argument('--set', action='append', default=[], metavar='aN=VALUE')
    p_hc.add_argument('--basis', action='store_true', help='print field elements as basis hex')
    p_hc.set_defaults(handler=cmd_hc)

    p_pp = sub.add_parser('is-pp', help='permutation test')
    _add_field(p_pp)
    _add_coeffs(p_pp)
    p_pp.set_defaults(handler=cmd_is_pp)

    p_exc = sub.add_parser('is-exceptional', help='exceptionality test')
    _add_field(p_exc)
    _add_coeffs(p_exc)
    p_exc.set_defaults(handler=cmd_is_exceptional)

    p_norm = sub.add_parser('normalize', help='normal form and witness')
    _add_field(p_norm)
    _add_coeffs(p_norm)
    p_norm.add_argument('--basis', action='store_true')
    p_norm.set_defaults(handler=cmd_normalize)

    p_cls = sub.add_parser('classify', help='classification for r = 4..6, proof replay for r = 7..9')
    _add_field(p_cls)
    p_cls.add_argument('--format', choices=('json', 'text'), default='text')
    p_cls.add_argument('--frobenius-reduce', action='store_true')
    p_cls.add_argument('--out', nargs='?', const=str(get_settings().output_dir), default=None, metavar='DIR')
    p_cls.add_argument('--threads', type=int, default=None)
    p_cls.add_argument('--basis', action='store_true')
    p_cls.set_defaults(handler=cmd_classify)

    p_ver = sub.add_parser('verify', help='replay the nonexistence proof for r = 7..9')
    p_ver.add_argument('--r', type=int, required=True, choices=(7, 8, 9))
    p_ver.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name; sys.argv when None

    Returns:
        int: Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    handler = args.handler
    try:
        return handler(args)
    except PP8Error as e:
        logger.error(f"Error in {args.command}: {str(e)}", exc_info=True)
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
