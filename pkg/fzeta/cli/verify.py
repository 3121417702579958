"""
Проверочные прогоны: семейства, тождества, свойства кольца Хабиро и оракулы.

Этот модуль содержит цели команды verify. Каждая цель возвращает список
CheckResult; информационные проверки сообщают известные расхождения
и не влияют на общий вердикт.
"""

from __future__ import annotations
import logging
import platform
import random
from math import gcd
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pydantic

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
)
from fzeta.core.exceptions import VerificationError
from fzeta.core.models import CheckResult, RunManifest
from fzeta.core.types import FamilyKind
from fzeta.exactpoly.cyclotomic import CyclotomicInt, RootOfUnity, eval_root
from fzeta.exactpoly.poly import IntPoly
from fzeta.exactpoly.qanalog import pochhammer, q_binomial, q_int
from fzeta.families import (
    FamilySpec,
    carlitz_class,
    carlitz_product_class,
    carlitz_torus_decomposition,
    condition62_dual_report,
    gl_class,
    gl_count,
    ind_spec,
    kontsevich_constructible_report,
    kontsevich_pair_identity,
    numeric_aside_report,
    primary_mismatches,
    secondary_mismatches,
    sigma_series_expansion,
    sigma_star_pair_class,
    sigma_star_series_expansion,
    sign_table,
    statement_cutoff,
)
from fzeta.fforacle import count_gl, count_grassmannian, count_matrix_equation, count_projective
from fzeta.grothendieck import (
    GrothClass,
    TorusDecomposition,
    check_dual_torification,
    dual_certificate_matches,
    torify_punctured_affine,
)
from fzeta.habiro import (
    HabiroElement,
    check_ind_f1,
    ev_n,
    ev_zeta,
    frobenius,
    inverse_identity_defect,
    inverse_lefschetz,
    make,
    normal_form,
    taylor_zeta,
)
from fzeta.utils.metrics import Timer, log_metric
from fzeta.utils.text import format_poly

SIGMA_ORDER_8 = (1, 1, -1, 2, -2, 1, 0, 1, -2)
SIGMA_STAR_ORDER_10 = (0, -2, -2, -2, 0, 0, 0, 2, 2, 0, 2)

ORACLE_GL_CASES = (
    [(1, p) for p in (2, 3, 5, 7, 11, 13)]
    + [(2, p) for p in (2, 3, 5, 7)]
    + [(3, p) for p in (2, 3, 5)]
)
SYMPLECTIC_2 = ((0, 1), (-1, 0))
SYMMETRIC_2 = ((1, 0), (0, 1))


@dataclass
class VerifyOptions:
    """
    Параметры прогона.

    Attributes:
        nmax: Верхняя граница n в таблицах знаков
        kmax: Число пар Концевича
        lmax: Число ℓ для пары σ*
        level_max: Максимальный уровень в проверках кольца Хабиро
        samples: Число случайных экземпляров в проверке свойств
        seed: Начальное значение генератора
        series_order: Порядок сверки рядов σ и σ*
        threads: Потоки для таблиц знаков
        convention: Точка вычисления для таблиц знаков
    """

    nmax: int = DEFAULT_NMAX
    kmax: int = DEFAULT_KMAX
    lmax: int = DEFAULT_LMAX
    level_max: int = DEFAULT_LEVEL_MAX
    samples: int = DEFAULT_PROPERTY_SAMPLES
    seed: int = 0
    series_order: int = DEFAULT_SERIES_ORDER
    threads: int = DEFAULT_THREADS
    convention: str = DEFAULT_EVAL_POINT_CONVENTION


CheckBody = Callable[[], Tuple[bool, Optional[int], Dict[str, Any]]]


def run_check(name: str, body: CheckBody, informational: bool = False) -> CheckResult:
    """
    Выполняет одну проверку с замером времени.

    VerificationError внутри проверки превращается в непройденную проверку.

    Args:
        name: Имя проверки
        body: Функция, возвращающая (passed, count, details)
        informational: Не влияет на общий вердикт

    Returns:
        CheckResult
    """
    timer = Timer()
    try:
        passed, count, details = body()
    except VerificationError as e:
        logging.error(f"[verify] {name}: {e}")
        passed, count, details = False, None, {"error": str(e)}
    result = CheckResult(
        name=name,
        passed=passed,
        informational=informational,
        wall_ms=timer.ms(),
        count=count,
        details=details,
    )
    verdict = "pass" if passed else ("info" if informational else "fail")
    log_metric(name, result.wall_ms, count, verdict)
    logging.info(f"[verify] {name}: {verdict} ({result.wall_ms} ms)")
    return result


# ============================================================================
# ТАБЛИЦЫ ЗНАКОВ
# ============================================================================


def _rows_json(rows) -> List[Dict]:
    return [r.model_dump(mode="json") for r in rows]


def _family_checks(target: str, kind: FamilyKind, opts: VerifyOptions) -> List[CheckResult]:
    n_values = list(range(1, opts.nmax + 1))
    spec = FamilySpec(kind)
    rows = sign_table(spec, n_values, opts.convention, opts.threads)

    def primary():
        bad = primary_mismatches(rows)
        return not bad, len(rows), {"mismatches": bad, "rows": _rows_json(rows)}

    out = [run_check(f"{target}-primary", primary)]

    # дополнительные утверждения для σ* сверяются со слагаемыми без знака (−1)^{k+1}
    secondary_spec = FamilySpec(kind, alternating=False) if kind is FamilyKind.SIGMA_STAR else spec
    secondary_rows = rows
    if secondary_spec is not spec:
        secondary_rows = sign_table(secondary_spec, n_values, opts.convention, opts.threads)

    def secondary():
        bad = secondary_mismatches(secondary_rows)
        return not bad, len(secondary_rows), {
            "mismatches": bad,
            "alternating": secondary_spec.alternating,
        }

    out.append(run_check(f"{target}-secondary", secondary))

    if kind is FamilyKind.SIGMA_STAR:

        def display_secondary():
            bad = secondary_mismatches(rows)
            return not bad, len(rows), {"mismatches": bad, "alternating": True}

        out.append(run_check(f"{target}-secondary-display", display_secondary, informational=True))

    if kind is FamilyKind.GL:

        def statement_truncation():
            literal = FamilySpec(kind, cutoff_rule=lambda n: statement_cutoff(kind, n))
            lit_rows = sign_table(literal, n_values, opts.convention, opts.threads)
            bad = primary_mismatches(lit_rows)
            return not bad, len(lit_rows), {
                "mismatches": bad,
                "values": {str(r.n): str(r.value) for r in lit_rows if r.n in bad},
            }

        out.append(
            run_check(f"{target}-statement-truncation", statement_truncation, informational=True)
        )

    def asides():
        entries = [a for a in numeric_aside_report() if a["family"] == kind.value]
        return all(a["agrees"] for a in entries), len(entries), {"asides": entries}

    out.append(run_check(f"{target}-numeric-asides", asides, informational=True))
    return out


def _gl_ind_variety_check(opts: VerifyOptions) -> CheckResult:
    def body():
        spec = ind_spec(FamilyKind.GL)
        family = FamilySpec(FamilyKind.GL)
        for n in range(1, opts.level_max + 1):
            direct = IntPoly.zero()
            for m in range(n):
                direct = direct + gl_class(m).to_poly()
            if not (direct == spec.partial_sum(n) == family.partial_sum(n - 1)):
                return False, n, {"n": n}
        f1 = check_ind_f1(spec, opts.level_max)
        return f1.holds, opts.level_max, {"ind_f1": f1.verdict.value}

    return run_check("lemma32-gl-ind-variety", body)


def verify_prop71(opts: VerifyOptions) -> List[CheckResult]:
    return _family_checks("prop71", FamilyKind.GL, opts) + [_gl_ind_variety_check(opts)]


def verify_prop73(opts: VerifyOptions) -> List[CheckResult]:
    return _family_checks("prop73", FamilyKind.CARLITZ, opts) + verify_lemma72(opts)


def verify_prop75(opts: VerifyOptions) -> List[CheckResult]:
    return _family_checks("prop75", FamilyKind.SIGMA, opts)


def verify_prop76(opts: VerifyOptions) -> List[CheckResult]:
    return _family_checks("prop76", FamilyKind.SIGMA_STAR, opts)


# ============================================================================
# ТОЖДЕСТВА
# ============================================================================


def verify_prop77(opts: VerifyOptions) -> List[CheckResult]:
    def pairing():
        bad = [k for k in range(1, opts.kmax + 1) if not kontsevich_pair_identity(k)]
        return not bad, opts.kmax, {"failed_k": bad}

    def mutation_control():
        caught = not kontsevich_pair_identity(1, mutate=True)
        return caught, 1, {"mutated_identity_rejected": caught}

    def aggregate():
        report = kontsevich_constructible_report(4)
        return report.holds, 1, report.to_json_dict()

    return [
        run_check("prop77-pairing", pairing),
        run_check("prop77-mutation-control", mutation_control),
        run_check("prop77-constructible-aggregate", aggregate, informational=True),
    ]


def verify_lemma33(opts: VerifyOptions) -> List[CheckResult]:
    def inversion():
        for N in range(1, opts.level_max + 1):
            inverse_lefschetz(N)
        return True, opts.level_max, {"convention": "one-minus-q", "cutoff": "N-1"}

    def literal_defect():
        defects = {
            str(N): format_poly(inverse_identity_defect(N, one_minus_q=False))
            for N in range(1, opts.level_max + 1)
        }
        nonzero = [N for N, d in defects.items() if d != "0"]
        return not nonzero, opts.level_max, {"convention": "q-minus-one", "defects": defects}

    return [
        _gl_ind_variety_check(opts),
        run_check("lemma33-inversion", inversion),
        run_check("lemma33-literal-convention", literal_defect, informational=True),
    ]


def verify_lemma72(opts: VerifyOptions) -> List[CheckResult]:
    def product_class():
        bad = [m for m in range(0, 9) if carlitz_product_class(m) != carlitz_class(m)]
        return not bad, 9, {"failed_m": bad}

    def torification():
        bad = [
            m
            for m in range(0, 9)
            if carlitz_torus_decomposition(m) != TorusDecomposition.from_class(carlitz_class(m))
        ]
        return not bad, 9, {"failed_m": bad}

    return [
        run_check("lemma72-product-class", product_class),
        run_check("lemma72-torification", torification),
    ]


def verify_lemma74(opts: VerifyOptions) -> List[CheckResult]:
    def punctured():
        for k in range(1, 2 * opts.lmax + 2):
            dec = torify_punctured_affine(k)
            expected = GrothClass.punctured_affine(k)
            if dec.to_class() != expected or any(a < 0 for a in dec.counts.values()):
                return False, k, {"k": k}
        first = torify_punctured_affine(1).counts
        k1 = {str(k): v for k, v in first.items()}
        return dict(first) == {1: 1}, 2 * opts.lmax + 1, {"k1": k1}

    return [run_check("lemma74-punctured-affine", punctured)]


def verify_lemma76(opts: VerifyOptions) -> List[CheckResult]:
    reports = [sigma_star_pair_class(ell) for ell in range(1, opts.lmax + 1)]

    def difference_identity():
        bad = [r.ell for r in reports if not r.difference_identity]
        return not bad, len(reports), {"failed_ell": bad}

    def displayed_expansion():
        diffs = {str(r.ell): {str(k): v for k, v in r.diff.items()} for r in reports}
        return all(not r.diff for r in reports), len(reports), {"diff": diffs}

    return [
        run_check("lemma76-difference-identity", difference_identity),
        run_check("lemma76-displayed-expansion", displayed_expansion, informational=True),
    ]


def verify_series_sigma(opts: VerifyOptions) -> List[CheckResult]:
    def series():
        s = sigma_series_expansion(max(opts.series_order, 8))
        head = tuple(s.coeff(i) for i in range(9))
        return head == SIGMA_ORDER_8, opts.series_order, {"order_8": list(head)}

    return [run_check("series-sigma", series)]


def verify_series_sigma_star(opts: VerifyOptions) -> List[CheckResult]:
    def series():
        s = sigma_star_series_expansion(max(opts.series_order, 10))
        head = tuple(s.coeff(i) for i in range(11))
        return head == SIGMA_STAR_ORDER_10, opts.series_order, {"order_10": list(head)}

    return [run_check("series-sigma-star", series)]


# ============================================================================
# ОРАКУЛЫ
# ============================================================================


def verify_oracle_suite(opts: VerifyOptions) -> List[CheckResult]:
    def gl():
        bad = [
            {"m": m, "p": p}
            for m, p in ORACLE_GL_CASES
            if count_gl(m, p) != gl_count(m, p)
        ]
        return not bad, len(ORACLE_GL_CASES), {"mismatches": bad}

    def symplectic():
        expected = carlitz_class(1).to_poly()
        counts = {str(p): count_matrix_equation(SYMPLECTIC_2, p) for p in (2, 3, 5)}
        ok = all(c == expected.eval_int(int(p)) for p, c in counts.items())
        return ok, len(counts), {"counts": counts}

    def symmetric():
        expected = carlitz_class(1).to_poly()
        counts = {str(p): count_matrix_equation(SYMMETRIC_2, p) for p in (3, 5)}
        ok = all(c == expected.eval_int(int(p)) for p, c in counts.items())
        return ok, len(counts), {"counts": counts, "compared_with": "E_2"}

    def grassmannian():
        bad = []
        total = 0
        for p in (2, 3):
            for n in range(0, 6):
                for j in range(0, n + 1):
                    total += 1
                    if count_grassmannian(n, j, p) != q_binomial(n, j).eval_int(p):
                        bad.append({"n": n, "j": j, "p": p})
        return not bad, total, {"mismatches": bad}

    def projective():
        bad = [
            {"n": n, "p": p}
            for p in (2, 3)
            for n in range(0, 4)
            if count_projective(n, p) != q_int(n + 1).eval_int(p)
        ]
        return not bad, 8, {"mismatches": bad}

    return [
        run_check("oracle-gl", gl),
        run_check("oracle-symplectic", symplectic),
        run_check("oracle-symmetric", symmetric, informational=True),
        run_check("oracle-grassmannian", grassmannian),
        run_check("oracle-projective", projective),
    ]


# ============================================================================
# ПРОЧИЕ ЦЕЛИ
# ============================================================================


def verify_cond62(opts: VerifyOptions) -> List[CheckResult]:
    def dual_points():
        report = []
        for kind in FamilyKind:
            report.extend(condition62_dual_report(FamilySpec(kind), list(range(2, 11))))
        return all(r["signs_agree"] for r in report), len(report), {"rows": report}

    return [run_check("cond62-eval-point", dual_points, informational=True)]


def verify_example210(opts: VerifyOptions) -> List[CheckResult]:
    def dual_projective():
        bad = [
            N
            for N in range(1, 7)
            if not dual_certificate_matches(N)
            or not check_dual_torification(GrothClass.projective(2 * N)).holds
        ]
        return not bad, 6, {"failed_N": bad}

    return [run_check("example210-dual-projective", dual_projective)]


def _random_element(rng: random.Random, level: int) -> HabiroElement:
    degree = rng.randint(0, 3 * level)
    return make(level, IntPoly(tuple(rng.randint(-9, 9) for _ in range(degree + 1))))


def _check_taylor_product(a: HabiroElement, b: HabiroElement, z: RootOfUnity) -> None:
    """Коэффициенты Тейлора произведения равны свёртке коэффициентов сомножителей."""
    K = a.level // z.order
    ta, tb = taylor_zeta(a, z, K), taylor_zeta(b, z, K)
    if K and ta[0] != ev_zeta(a, z):
        raise VerificationError(f"Нулевой коэффициент Тейлора в ζ_{z.order} не равен ev_zeta")
    zero = CyclotomicInt.from_int(z.order, 0)
    for k, coeff in enumerate(taylor_zeta(a * b, z, K)):
        if coeff != sum((ta[i] * tb[k - i] for i in range(k + 1)), zero):
            raise VerificationError(f"Правило Коши нарушено при s^{k} в ζ_{z.order}")


def verify_habiro_props(opts: VerifyOptions) -> List[CheckResult]:
    rng = random.Random(opts.seed)
    top = min(opts.level_max, 8)

    def laws():
        for _ in range(opts.samples):
            level = rng.randint(1, top)
            a, b = _random_element(rng, level), _random_element(rng, level)
            shifted = make(level, a.rep + pochhammer(level) * IntPoly((rng.randint(-5, 5), 1)))
            if shifted != a:
                raise VerificationError(f"Класс вычета зависит от представителя (уровень {level})")
            if make(level, normal_form(a).reconstruct()) != a:
                raise VerificationError(
                    f"Нормальная форма не восстанавливает элемент (уровень {level})"
                )
            low = rng.randint(1, level)
            if (a * b).project(low) != a.project(low) * b.project(low):
                raise VerificationError(f"Проекция не мультипликативна ({level} -> {low})")
            n = rng.randint(1, level)
            lhs = ev_n(a + b, n)
            rhs = ev_n(make(level, ev_n(a, n) + ev_n(b, n)), n)
            if lhs != rhs:
                raise VerificationError(f"ev_{n} не аддитивно")
            lhs = ev_n(a * b, n)
            rhs = ev_n(make(level, ev_n(a, n) * ev_n(b, n)), n)
            if lhs != rhs:
                raise VerificationError(f"ev_{n} не мультипликативно")
            z = RootOfUnity(n, rng.choice([k for k in range(1, n + 1) if gcd(k, n) == 1]))
            if ev_zeta(a * b, z) != ev_zeta(a, z) * ev_zeta(b, z):
                raise VerificationError(f"ev_zeta порядка {n} не мультипликативно")
            if eval_root(ev_n(a, n), z) != ev_zeta(a, z):
                raise VerificationError(f"ev_zeta порядка {n} не пропускается через ev_{n}")
            if ev_zeta(a + b, z) != ev_zeta(a, z) + ev_zeta(b, z):
                raise VerificationError(f"ev_zeta порядка {n} не аддитивно")
            _check_taylor_product(a, b, z)
            k = rng.randint(1, 3)
            if frobenius(a * b, k) != frobenius(a, k) * frobenius(b, k):
                raise VerificationError(f"σ_{k} не мультипликативно")
            if frobenius(a + b, k) != frobenius(a, k) + frobenius(b, k):
                raise VerificationError(f"σ_{k} не аддитивно")
        return True, opts.samples, {"seed": opts.seed, "level_max": top}

    return [run_check("habiro-props", laws)]


TARGETS: Dict[str, Callable[[VerifyOptions], List[CheckResult]]] = {
    "prop71": verify_prop71,
    "prop73": verify_prop73,
    "prop75": verify_prop75,
    "prop76": verify_prop76,
    "prop77": verify_prop77,
    "lemma33": verify_lemma33,
    "lemma72": verify_lemma72,
    "lemma74": verify_lemma74,
    "lemma76": verify_lemma76,
    "series-sigma": verify_series_sigma,
    "series-sigma-star": verify_series_sigma_star,
    "oracle-suite": verify_oracle_suite,
    "cond62": verify_cond62,
    "example210": verify_example210,
    "habiro-props": verify_habiro_props,
}


def run_verify(target: str, opts: VerifyOptions, command: Sequence[str]) -> RunManifest:
    """
    Запускает цель (или все цели при target == "all") и собирает манифест.

    Args:
        target: Имя цели
        opts: Параметры прогона
        command: Аргументы командной строки для манифеста

    Returns:
        RunManifest
    """
    names = list(TARGETS) if target == "all" else [target]
    checks: List[CheckResult] = []
    seen = set()
    for name in names:
        logging.info(f"[verify] цель {name}")
        for check in TARGETS[name](opts):
            # общие проверки (lemma72-*, lemma32-*) входят в манифест один раз
            if check.name in seen:
                logging.debug(f"[verify] {check.name} уже в манифесте")
                continue
            seen.add(check.name)
            checks.append(check)
    return RunManifest(
        command=list(command),
        versions={
            "fzeta": __version__,
            "python": platform.python_version(),
            "pydantic": pydantic.VERSION,
        },
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        checks=checks,
    )
