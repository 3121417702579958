"""
Интерфейс командной строки fzeta.

Этот модуль содержит разбор аргументов и диспетчеризацию команд
check, habiro, class, tate, family, oracle и verify.

Коды выхода: 0 — условие выполнено / проверки пройдены, 1 — не выполнено,
2 — ошибка ввода или использования, 3 — не определено.
"""

from __future__ import annotations
import argparse
import csv
import io
import logging
import sys
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError

from fzeta import __version__
from fzeta.core.config import (
    DEFAULT_EVAL_POINT_CONVENTION,
    DEFAULT_KMAX,
    DEFAULT_LEVEL_MAX,
    DEFAULT_LMAX,
    DEFAULT_NMAX,
    DEFAULT_PROPERTY_SAMPLES,
    DEFAULT_SERIES_ORDER,
    DEFAULT_THREADS,
    LOG_FORMAT,
    LOG_LEVEL,
    METRICS_PATH,
)
from fzeta.core.exceptions import FZetaError, ParseError, TateRootError
from fzeta.core.models import SIGN_TABLE_CSV_HEADER, ConditionReport
from fzeta.core.types import ConditionId, EvalPointConvention, FamilyKind, Verdict
from fzeta.exactpoly.cyclotomic import CyclotomicInt, RootOfUnity
from fzeta.exactpoly.qanalog import q_binomial, q_int
from fzeta.families import (
    FamilySpec,
    carlitz_class,
    condition62_dual_report,
    gl_count,
    ind_spec,
    primary_mismatches,
    sigma_series_expansion,
    sigma_star_series_expansion,
    sign_table,
    statement_cutoff,
)
from fzeta.fforacle import count_gl, count_grassmannian, count_matrix_equation, count_projective
from fzeta.grothendieck import (
    CellDecomposition,
    GrothClass,
    check_counting_f1,
    check_dual_torification,
    check_eval_fzeta,
    check_interp_positivity,
    check_motivic_f1,
    check_partial_eval,
    to_torus_basis,
)
from fzeta.habiro import (
    HabiroElement,
    check_constructible_f1,
    check_ind_f1,
    check_ind_fzeta,
    ev_n,
    ev_zeta,
    frobenius,
    habiro_add,
    habiro_mul,
    inverse_identity_defect,
    inverse_lefschetz,
    make,
    normal_form,
    taylor_zeta,
)
from fzeta.tateroot import TateRootClass, is_integral, orbit_reduce, rescale, tate_root
from fzeta.cli.verify import TARGETS, VerifyOptions, run_verify
from fzeta.utils.json_helpers import dumps_canonical, int_map_to_json
from fzeta.utils.metrics import init_metrics
from fzeta.utils.text import format_poly, parse_int_matrix, parse_int_set, parse_laurent, parse_poly

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_UNDETERMINED = 3

VERDICT_EXIT = {
    Verdict.HOLDS: EXIT_OK,
    Verdict.FAILS: EXIT_FAILS,
    Verdict.UNDETERMINED: EXIT_UNDETERMINED,
}


def setup_logging(level: str = LOG_LEVEL) -> None:
    """Настройка логирования; вывод в stderr, stdout остаётся машиночитаемым."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


# ============================================================================
# ВЫВОД
# ============================================================================


def _emit(args: argparse.Namespace, payload: Any, text: Optional[str] = None) -> None:
    """Печатает JSON (или текст без --json) и при --out сохраняет JSON в файл."""
    rendered = dumps_canonical(payload)
    if args.json or text is None:
        print(rendered)
    else:
        print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(rendered + "\n")


def _report_text(report: ConditionReport) -> str:
    lines = [f"{report.condition.value}: {report.verdict.value}"]
    if report.witness:
        lines.append(f"  witness: {dumps_canonical(report.witness, indent=None)}")
    if report.bound is not None:
        lines.append(f"  bound: {report.bound}")
    return "\n".join(lines)


def _cyclotomic_json(z: CyclotomicInt) -> Dict[str, Any]:
    return {"order": z.order, "residue": format_poly(z.residue), "text": str(z)}


# ============================================================================
# check
# ============================================================================


def _ind_spec_from_args(args: argparse.Namespace):
    if not args.family:
        raise ParseError(f"Условие {args.cond} требует --family")
    return ind_spec(FamilyKind(args.family), alternating=not args.unsigned)


def _require_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise ParseError(f"Условие {args.cond} требует --n")
    return args.n


def cmd_check(args: argparse.Namespace) -> int:
    cond = ConditionId(args.cond)
    family_conditions = (ConditionId.IND_F1, ConditionId.IND_FZETA, ConditionId.CONSTRUCTIBLE_F1)
    needs_poly = cond not in family_conditions
    if needs_poly and args.poly is None:
        raise ParseError(f"Условие {cond.value} требует --poly")

    if cond is ConditionId.COUNTING_F1:
        report = check_counting_f1(parse_poly(args.poly))
    elif cond is ConditionId.MOTIVIC_F1:
        report = check_motivic_f1(GrothClass(parse_laurent(args.poly)))
    elif cond is ConditionId.EVAL_FZETA:
        report = check_eval_fzeta(GrothClass(parse_laurent(args.poly)), _require_n(args))
    elif cond is ConditionId.PARTIAL_EVAL:
        split = None
        if args.split_b is not None or args.split_p is not None:
            if args.split_b is None or args.split_p is None:
                raise ParseError("Разбиение задаётся парой --split-b и --split-p")
            split = (parse_poly(args.split_b), parse_poly(args.split_p))
        report = check_partial_eval(parse_poly(args.poly), _require_n(args), split)
    elif cond is ConditionId.INTERP_POSITIVITY:
        report = check_interp_positivity(parse_poly(args.poly), args.n)
    elif cond is ConditionId.DUAL_TORIFICATION:
        report = check_dual_torification(GrothClass(parse_laurent(args.poly)))
    elif cond is ConditionId.IND_F1:
        report = check_ind_f1(_ind_spec_from_args(args), args.N or _require_n(args))
    elif cond is ConditionId.IND_FZETA:
        report = check_ind_fzeta(
            _ind_spec_from_args(args), _require_n(args), args.eval_point_convention
        )
    else:
        if not args.term:
            raise ParseError("constructible-f1 требует хотя бы один --term")
        report = check_constructible_f1([[parse_laurent(t) for t in args.term]], labels=["input"])

    _emit(args, report.to_json_dict(), _report_text(report))
    return VERDICT_EXIT[report.verdict]


# ============================================================================
# habiro
# ============================================================================


def cmd_habiro(args: argparse.Namespace) -> int:
    op = args.op
    if op == "invert-L":
        inv = inverse_lefschetz(args.level)
        literal = inverse_identity_defect(args.level, one_minus_q=False)
        one = HabiroElement.one(args.level)
        payload: Dict[str, Any] = {
            "operation": op,
            "level": args.level,
            "element": inv.to_json(),
            "normal_form": normal_form(inv).to_json(one_minus_q=True),
            "verified": HabiroElement.q(args.level) * inv == one,
            "literal_convention_defect": format_poly(literal),
        }
        _emit(args, payload)
        return EXIT_OK

    a = make(args.level, parse_poly(args.poly))
    payload = {"operation": op, "level": args.level, "input": a.to_json()}
    if op == "normal-form":
        payload["normal_form"] = normal_form(a).to_json(one_minus_q=args.one_minus_q)
    elif op == "eval-n":
        payload["n"] = args.n
        payload["residue"] = format_poly(ev_n(a, args.n))
    elif op == "eval-zeta":
        payload["value"] = _cyclotomic_json(ev_zeta(a, RootOfUnity(args.order, args.numer)))
    elif op == "taylor":
        coeffs = taylor_zeta(a, RootOfUnity(args.order, args.numer), args.K)
        payload["coefficients"] = [_cyclotomic_json(c) for c in coeffs]
    elif op == "frobenius":
        payload["n"] = args.n
        payload["result"] = frobenius(a, args.n).to_json()
    elif op in ("add", "mul"):
        b = make(args.other_level or args.level, parse_poly(args.other))
        combine = habiro_add if op == "add" else habiro_mul
        payload["other"] = b.to_json()
        payload["result"] = combine(a, b, project=args.project).to_json()
    _emit(args, payload)
    return EXIT_OK


# ============================================================================
# class
# ============================================================================


def cmd_class(args: argparse.Namespace) -> int:
    c = GrothClass(parse_laurent(args.poly))
    dual = c.dual()
    payload: Dict[str, Any] = {
        "class": str(c),
        "lefschetz_coeffs": int_map_to_json(c.lefschetz_coeffs()),
        "dual": str(dual),
    }
    if c.is_polynomial:
        payload["torus_basis"] = int_map_to_json(to_torus_basis(c))
        poly = c.to_poly()
        payload["f1n_points"] = {str(n): str(poly.eval_int(n + 1)) for n in range(0, args.points)}
        if all(a >= 0 for a in poly.coeffs):
            cells = CellDecomposition.from_class(c)
            payload["cells"] = int_map_to_json(Counter(cells.cells))
            payload["cell_torification"] = cells.to_torus_decomposition().to_json()
    if dual.is_polynomial:
        payload["dual_torus_basis"] = int_map_to_json(to_torus_basis(dual))
    _emit(args, payload)
    return EXIT_OK


# ============================================================================
# tate
# ============================================================================


def cmd_tate(args: argparse.Namespace) -> int:
    value = parse_laurent(args.poly)
    payload: Dict[str, Any] = {"action": args.action}

    if args.action == "root":
        try:
            payload["result"] = tate_root(GrothClass(value), args.n).to_json()
        except TateRootError as e:
            payload["error"] = str(e)
            payload["witness"] = e.witness
            _emit(args, payload)
            return EXIT_FAILS
        _emit(args, payload)
        return EXIT_OK

    m = TateRootClass(args.n, value)
    payload["input"] = m.to_json()
    if args.action == "integral":
        ok, witness = is_integral(m)
        payload["integral"] = ok
        payload["witness_exponent"] = witness
        _emit(args, payload)
        return EXIT_OK if ok else EXIT_FAILS
    if args.action == "orbit":
        payload["result"] = orbit_reduce(m, args.period).to_json()
    else:
        try:
            r = Fraction(args.r)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Некорректный показатель r={args.r!r}") from e
        payload["r"] = str(r)
        payload["result"] = rescale(m, r).to_json()
    _emit(args, payload)
    return EXIT_OK


# ============================================================================
# family
# ============================================================================


def _sign_table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SIGN_TABLE_CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_row())
    return buf.getvalue().rstrip("\n")


def cmd_family(args: argparse.Namespace) -> int:
    kind = FamilyKind(args.kind)
    cutoff_rule = (lambda n: statement_cutoff(kind, n)) if args.statement_cutoff else None
    spec = FamilySpec(kind, alternating=not args.unsigned, cutoff_rule=cutoff_rule)
    payload: Dict[str, Any] = {
        "family": kind.value,
        "action": args.action,
        "alternating": spec.alternating,
    }

    if args.action == "terms":
        payload["terms"] = [format_poly(t) for t in spec.terms(args.count)]
    elif args.action == "partial-sum":
        payload["cutoff"] = args.cutoff
        payload["partial_sum"] = format_poly(spec.partial_sum(args.cutoff))
    elif args.action == "series":
        if kind is FamilyKind.SIGMA:
            series = sigma_series_expansion(args.order)
        elif kind is FamilyKind.SIGMA_STAR:
            series = sigma_star_series_expansion(args.order)
        else:
            raise ParseError("Разложение в ряд есть только у sigma и sigma-star")
        payload["order"] = args.order
        payload["coefficients"] = [str(c) for c in series.coeffs]
    elif args.action == "condition62":
        payload["rows"] = condition62_dual_report(spec, parse_int_set(args.n_values))
    else:
        n_values = parse_int_set(args.n_values)
        rows = sign_table(spec, n_values, args.eval_point_convention, args.threads)
        bad = primary_mismatches(rows)
        if args.csv:
            print(_sign_table_csv(rows))
            if args.out:
                with open(args.out, "w", encoding="utf-8") as f:
                    f.write(_sign_table_csv(rows) + "\n")
        else:
            _emit(args, [r.model_dump(mode="json") for r in rows])
        return EXIT_FAILS if bad else EXIT_OK

    _emit(args, payload)
    return EXIT_OK


# ============================================================================
# oracle
# ============================================================================


def cmd_oracle(args: argparse.Namespace) -> int:
    record: Dict[str, Any] = {"oracle": args.kind, "p": args.p}
    expected: Optional[int] = None
    if args.kind == "gl":
        count = count_gl(args.m, args.p, workers=args.threads)
        record["m"] = args.m
        expected = gl_count(args.m, args.p)
    elif args.kind == "mateq":
        A = parse_int_matrix(args.A)
        count = count_matrix_equation(A, args.p)
        record["A"] = args.A
        # Стандартная симплектическая форма 2×2: число решений равно E_2(p)
        reduced = tuple(tuple(x % args.p for x in row) for row in A)
        if reduced == ((0, 1), (args.p - 1, 0)):
            expected = carlitz_class(1).to_poly().eval_int(args.p)
    elif args.kind == "grass":
        count = count_grassmannian(args.n, args.j, args.p)
        record.update({"n": args.n, "j": args.j})
        expected = q_binomial(args.n, args.j).eval_int(args.p) if 0 <= args.j <= args.n else 0
    else:
        count = count_projective(args.n, args.p)
        record["n"] = args.n
        expected = q_int(args.n + 1).eval_int(args.p)

    record["count"] = count
    if expected is not None:
        record["formula"] = expected
        record["agrees"] = count == expected
    if not args.json:
        print(count)
    _emit(args, record, dumps_canonical(record, indent=None))
    return EXIT_FAILS if record.get("agrees") is False else EXIT_OK


# ============================================================================
# verify
# ============================================================================


def cmd_verify(args: argparse.Namespace, argv: Sequence[str]) -> int:
    opts = VerifyOptions(
        nmax=args.nmax,
        kmax=args.kmax,
        lmax=args.lmax,
        level_max=args.level_max,
        samples=args.samples,
        seed=args.seed,
        series_order=args.order,
        threads=args.threads,
        convention=args.eval_point_convention,
    )
    manifest = run_verify(args.target, opts, ["fzeta", *argv])
    lines = []
    for c in manifest.checks:
        status = "pass" if c.passed else "FAIL"
        note = " (info)" if c.informational else ""
        lines.append(f"{c.name}: {status}{note} [{c.wall_ms} ms]")
    lines.append(f"overall: {manifest.overall}")
    _emit(args, manifest.to_json_dict(), "\n".join(lines))
    return EXIT_OK if manifest.overall == "pass" else EXIT_FAILS


# ============================================================================
# РАЗБОР АРГУМЕНТОВ
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fzeta",
        description="Exact checks of F1 / F_zeta structures, Habiro-ring arithmetic "
        "and family verification.",
    )
    parser.add_argument("--version", action="version", version=f"fzeta {__version__}")
    parser.add_argument("--json", action="store_true", help="машиночитаемый вывод")
    parser.add_argument("--csv", action="store_true", help="CSV для таблиц знаков")
    parser.add_argument(
        "--eval-point-convention",
        choices=[c.value for c in EvalPointConvention],
        default=DEFAULT_EVAL_POINT_CONVENTION,
    )
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS)
    parser.add_argument("--log-level", default=LOG_LEVEL)
    parser.add_argument("--metrics", default=METRICS_PATH, help="CSV файл метрик")
    parser.add_argument("--out", default=None, help="сохранить JSON в файл")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="проверить условие на многочлен или класс")
    p.add_argument("--cond", required=True, choices=[c.value for c in ConditionId])
    p.add_argument("--poly")
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int, help="число слагаемых для ind-f1")
    p.add_argument("--split-b", dest="split_b")
    p.add_argument("--split-p", dest="split_p")
    p.add_argument("--family", choices=[k.value for k in FamilyKind])
    p.add_argument("--unsigned", action="store_true", help="sigma-star без знака (−1)^{k+1}")
    p.add_argument("--term", action="append", help="слагаемое для constructible-f1")

    p = sub.add_parser("habiro", help="вычисления в усечённом кольце Хабиро")
    p.add_argument(
        "op",
        choices=[
            "normal-form", "eval-n", "eval-zeta", "taylor", "frobenius", "invert-L", "add", "mul"
        ],
    )
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--poly", default="1:1")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--numer", type=int, default=1)
    p.add_argument("--K", type=int, default=1)
    p.add_argument("--one-minus-q", dest="one_minus_q", action="store_true")
    p.add_argument("--other", default="0", help="второй операнд для add / mul")
    p.add_argument("--other-level", dest="other_level", type=int, default=None)
    p.add_argument("--project", action="store_true", help="проекция на меньший уровень")

    p = sub.add_parser("class", help="класс Гротендика: базис T, двойственный класс, точки")
    p.add_argument("--poly", required=True)
    p.add_argument("--points", type=int, default=5)

    p = sub.add_parser("tate", help="классы с корнями Тейта")
    p.add_argument("action", choices=["root", "integral", "orbit", "rescale"])
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, default=1, help="порядок корня")
    p.add_argument("--period", type=int, default=1)
    p.add_argument("--r", default="1")

    p = sub.add_parser("family", help="семейства: слагаемые, частичные суммы, таблицы знаков, ряды")
    p.add_argument(
        "action", choices=["terms", "partial-sum", "sign-table", "series", "condition62"]
    )
    p.add_argument("--kind", required=True, choices=[k.value for k in FamilyKind])
    p.add_argument("--n", dest="n_values", default=f"1-{DEFAULT_NMAX}")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--cutoff", type=int, default=0)
    p.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    p.add_argument("--unsigned", action="store_true")
    p.add_argument("--statement-cutoff", dest="statement_cutoff", action="store_true")

    p = sub.add_parser("oracle", help="перебор над F_p")
    p.add_argument("kind", choices=["gl", "mateq", "grass", "proj"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--A", default="0,1;-1,0")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--j", type=int, default=0)

    p = sub.add_parser("verify", help="проверочные прогоны")
    p.add_argument("target", choices=[*TARGETS, "all"])
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p.add_argument("--lmax", type=int, default=DEFAULT_LMAX)
    p.add_argument("--level-max", dest="level_max", type=int, default=DEFAULT_LEVEL_MAX)
    p.add_argument("--samples", type=int, default=DEFAULT_PROPERTY_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Точка входа CLI.

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])

    Returns:
        Код выхода
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)
    init_metrics(args.metrics)
    logging.debug(f"[cli] {args.command}: {argv}")

    try:
        if args.command == "check":
            return cmd_check(args)
        if args.command == "habiro":
            return cmd_habiro(args)
        if args.command == "class":
            return cmd_class(args)
        if args.command == "tate":
            return cmd_tate(args)
        if args.command == "family":
            return cmd_family(args)
        if args.command == "oracle":
            return cmd_oracle(args)
        return cmd_verify(args, argv)
    except (FZetaError, ValidationError, ValueError) as e:
        logging.error(f"[cli] {type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
