"""
Проверка условий структуры над F₁ и F_ζ.

Этот модуль содержит функции, которые по классу или считающему многочлену
возвращают ConditionReport: вердикт, свидетель нарушения или сертификат.
Отрицательный вердикт исключением не является.
"""

from __future__ import annotations
import logging
from typing import Any, Dict, List, Optional, Tuple, Union

from fzeta.core.config import INTERP_SCAN_LIMIT
from fzeta.core.exceptions import FZetaError, PolynomialError, SplitError, VerificationError
from fzeta.core.models import ConditionReport
from fzeta.core.types import ConditionId, Sign, Verdict
from fzeta.exactpoly.laurent import LaurentPoly
from fzeta.exactpoly.poly import IntPoly, divrem_unit
from fzeta.grothendieck.classes import (
    CellDecomposition,
    GrothClass,
    TorusDecomposition,
    product_decomposition,
    to_torus_basis,
    torify_affine,
    union_decomposition,
)
from fzeta.utils.json_helpers import int_map_to_json
from fzeta.utils.text import format_poly

ClassInput = Union[GrothClass, LaurentPoly, IntPoly, int]

# Сколько свидетелей перечислять в отчёте
MAX_WITNESSES = 16


def _negative_exponent_report(condition: ConditionId, c: GrothClass) -> ConditionReport:
    k = c.value.min_exponent
    return ConditionReport(
        condition=condition,
        verdict=Verdict.FAILS,
        witness={"reason": "negative-exponent", "exponent": k, "coefficient": c.value.coeff(k)},
    )


def check_motivic_f1(c: ClassInput) -> ConditionReport:
    """
    Мотивная F₁-структура: все коэффициенты в базисе T = L − 1 неотрицательны.

    Args:
        c: Класс Гротендика

    Returns:
        holds с торификацией в сертификате или fails с первым отрицательным a_k
    """
    cls = GrothClass.coerce(c)
    if not cls.is_polynomial:
        return _negative_exponent_report(ConditionId.MOTIVIC_F1, cls)

    torus = to_torus_basis(cls)
    for k, a in sorted(torus.items()):
        if a < 0:
            return ConditionReport(
                condition=ConditionId.MOTIVIC_F1,
                verdict=Verdict.FAILS,
                witness={"k": k, "coefficient": a},
                details={"torus_basis": int_map_to_json(torus)},
            )

    dec = TorusDecomposition(torus)
    return ConditionReport(
        condition=ConditionId.MOTIVIC_F1,
        verdict=Verdict.HOLDS,
        certificate={"torification": dec.to_json(), "tori": dec.tori},
        details={"euler_characteristic": dec.euler_characteristic},
    )


def check_eval_fzeta(c: ClassInput, n: int) -> ConditionReport:
    """
    Вычислительная F_ζ-структура для ζ порядка n.

    Все ненулевые коэффициенты b_k в базисе L^k должны быть положительны и стоять
    при k, кратных n.

    Args:
        c: Класс или считающий многочлен
        n: Порядок корня из единицы

    Returns:
        holds с разбиением на клетки или fails с первым нарушающим показателем
    """
    if n < 1:
        raise FZetaError(f"Порядок корня из единицы должен быть >= 1, получено {n}")

    cls = GrothClass.coerce(c)
    for k, b in cls.value.terms():
        if b < 0 or k < 0 or k % n:
            return ConditionReport(
                condition=ConditionId.EVAL_FZETA,
                verdict=Verdict.FAILS,
                witness={"exponent": k, "coefficient": b, "n": n},
            )

    cells = CellDecomposition.from_class(cls)
    # ζ^k = 1 при n | k, поэтому N(ζ) = N(1)
    points = sum(b for _, b in cls.value.terms())
    return ConditionReport(
        condition=ConditionId.EVAL_FZETA,
        verdict=Verdict.HOLDS,
        certificate={"cells": list(cells.cells)},
        details={"n": n, "points_at_zeta": points},
    )


def eval_fzeta_orders(c: ClassInput, n_max: int) -> List[int]:
    """Все n <= n_max, для которых выполнена check_eval_fzeta."""
    return [n for n in range(1, n_max + 1) if check_eval_fzeta(c, n).holds]


# ============================================================================
# Положительность в целых точках
# ============================================================================


def dominance_bound(poly: IntPoly) -> int:
    """
    Граница B = 1 + ⌈max_{k<d} |b_k| / |b_d|⌉.

    Все вещественные корни лежат в (−B, B), поэтому знак poly постоянен
    при x >= B и при x <= −B.
    """
    if poly.degree <= 0:
        return 1
    lc = abs(poly.leading)
    top = max(abs(c) for c in poly.coeffs[:-1])
    return 1 + (top + lc - 1) // lc


def _scan_positive(poly: IntPoly, bound: int) -> Tuple[List[int], bool]:
    """Отрицательные значения при x = 1..B; второй элемент — полнота перебора."""
    limit = min(bound, INTERP_SCAN_LIMIT)
    witnesses = []
    for x in range(1, limit + 1):
        if poly.eval_int(x) < 0:
            witnesses.append(x)
            if len(witnesses) >= MAX_WITNESSES:
                return witnesses, True
    if limit < bound:
        if poly.leading < 0:
            witnesses.append(bound)
        return witnesses, False
    return witnesses, True


def _scan_nonpositive(poly: IntPoly, bound: int) -> Tuple[List[int], bool]:
    limit = min(bound, INTERP_SCAN_LIMIT)
    out = [x for x in range(0, -limit - 1, -1) if poly.eval_int(x) < 0]
    return out[:MAX_WITNESSES], limit == bound


def _positivity(poly: IntPoly) -> Dict[str, Any]:
    bound = dominance_bound(poly)
    if poly.is_zero:
        return {"bound": bound, "verdict": Verdict.HOLDS, "method": "zero", "witnesses": []}

    torus = to_torus_basis(poly)
    if all(a >= 0 for a in torus.values()):
        return {"bound": bound, "verdict": Verdict.HOLDS, "method": "torus-basis", "witnesses": []}

    witnesses, complete = _scan_positive(poly, bound)
    if witnesses:
        verdict = Verdict.FAILS
    elif complete:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.UNDETERMINED
    logging.debug(f"[positivity] {poly}: B={bound}, свидетели {witnesses}")
    return {"bound": bound, "verdict": verdict, "method": "dominance-bound", "witnesses": witnesses}


def check_interp_positivity(poly: IntPoly, n: Optional[int] = None) -> ConditionReport:
    """
    Положительность интерполяции: poly(x) >= 0 для всех целых x >= 1.

    Достаточное условие — неотрицательность в базисе T; иначе полный перебор
    до границы доминирования. Отрицательные значения среди x = 0, −1, ..., −B
    перечисляются в отчёте. Если задан n, дополнительно требуется poly(1 − n) >= 0.

    Args:
        poly: Считающий многочлен
        n: Порядок корня из единицы (опционально)

    Returns:
        ConditionReport с использованной границей в поле bound
    """
    info = _positivity(poly)
    bound = info["bound"]
    negatives, nonpositive_complete = _scan_nonpositive(poly, bound)
    tail = Sign.of(poly.leading * (-1) ** max(poly.degree, 0)).value

    details: Dict[str, Any] = {
        "method": info["method"],
        "negative_points_nonpositive": negatives,
        "nonpositive_scan_complete": nonpositive_complete,
        "tail_sign_below_bound": tail,
    }
    verdict: Verdict = info["verdict"]
    witnesses = list(info["witnesses"])

    if n is not None:
        x0 = 1 - n
        v = poly.eval_int(x0)
        details["value_at_one_minus_n"] = v
        if v < 0:
            witnesses.append(x0)
            verdict = Verdict.FAILS

    witness = None
    if witnesses:
        witness = {"x": witnesses, "values": [poly.eval_int(x) for x in witnesses]}
    return ConditionReport(
        condition=ConditionId.INTERP_POSITIVITY,
        verdict=verdict,
        witness=witness,
        bound=bound,
        details=details,
    )


def f1n_points(poly: IntPoly, n: int) -> int:
    """Число F_{1ⁿ}-точек N(n + 1); при n = 0 это #X(F₁) = N(1)."""
    if n < 0:
        raise FZetaError(f"Расширение F_{{1^n}} требует n >= 0, получено {n}")
    return poly.eval_int(n + 1)


def check_counting_f1(poly: IntPoly, table_size: int = 5) -> ConditionReport:
    """
    Считающая F₁-структура: N(m + 1) >= 0 для всех m >= 0.

    Args:
        poly: Считающий многочлен
        table_size: Сколько значений N(n + 1) привести в отчёте

    Returns:
        ConditionReport с таблицей F_{1ⁿ}-точек
    """
    info = _positivity(poly)
    table = {str(n): f1n_points(poly, n) for n in range(table_size + 1)}
    witness = None
    if info["witnesses"]:
        witness = {"x": info["witnesses"], "values": [poly.eval_int(x) for x in info["witnesses"]]}
    return ConditionReport(
        condition=ConditionId.COUNTING_F1,
        verdict=info["verdict"],
        witness=witness,
        bound=info["bound"],
        details={"method": info["method"], "f1_points": poly.eval_int(1), "f1n_points": table},
    )


# ============================================================================
# Частичная F_ζ-структура
# ============================================================================


def _b_part_ok(b: IntPoly, n: int) -> bool:
    return all(c > 0 and k % n == 0 for k, c in b.terms())


def _accept_split(n: int, b: IntPoly, p: IntPoly, source: str) -> Optional[ConditionReport]:
    positivity = check_interp_positivity(p)
    if not positivity.holds:
        return None
    p_torus = to_torus_basis(p)
    return ConditionReport(
        condition=ConditionId.PARTIAL_EVAL,
        verdict=Verdict.HOLDS,
        certificate={"b": format_poly(b), "P": format_poly(p), "split": source},
        bound=positivity.bound,
        details={"n": n, "p_torus_nonnegative": all(a >= 0 for a in p_torus.values())},
    )


def check_partial_eval(
    poly: ClassInput,
    n: int,
    split: Optional[Tuple[IntPoly, IntPoly]] = None,
) -> ConditionReport:
    """
    Частичная F_ζ-структура: N = Σ b_k q^{nk} + (qⁿ − 1)P, b_k >= 0, P(x) >= 0 при x >= 1.

    Необходимые условия проверяются точно: остаток N по модулю qⁿ − 1 должен быть
    неотрицательной константой (он равен Σ b_k), и N(x) >= 0 при x >= 1.
    Без явного разбиения применяется эвристика: b — мономы с n | k и положительным
    коэффициентом; если остаток не делится на qⁿ − 1 или P не проходит проверку,
    пробуется b = Σ b_k·q⁰. Неудача эвристики даёт undetermined.

    Args:
        poly: Считающий многочлен
        n: Порядок корня из единицы
        split: Явное разбиение (b, P)

    Returns:
        ConditionReport

    Raises:
        SplitError: Если явное разбиение не даёт N или b имеет недопустимый вид
    """
    if n < 1:
        raise FZetaError(f"Порядок корня из единицы должен быть >= 1, получено {n}")

    cls = GrothClass.coerce(poly)
    if not cls.is_polynomial:
        return _negative_exponent_report(ConditionId.PARTIAL_EVAL, cls)
    N = cls.to_poly()
    qn1 = IntPoly.monomial(n) - 1

    if split is not None:
        b, p = split
        if b + p * qn1 != N:
            raise SplitError(f"b + (q^{n} − 1)·P != N для b={b}, P={p}")
        if not _b_part_ok(b, n):
            raise SplitError(
                f"b={b} содержит показатели, не кратные {n}, или отрицательные коэффициенты"
            )
        accepted = _accept_split(n, b, p, "explicit")
        if accepted is not None:
            return accepted
        return ConditionReport(
            condition=ConditionId.PARTIAL_EVAL,
            verdict=Verdict.UNDETERMINED,
            details={"n": n, "reason": "explicit split rejected: P negative at a positive integer"},
        )

    _, rem = divrem_unit(N, qn1)
    if rem.degree > 0 or rem.constant_term < 0:
        return ConditionReport(
            condition=ConditionId.PARTIAL_EVAL,
            verdict=Verdict.FAILS,
            witness={"stage": "remainder", "remainder": format_poly(rem), "n": n},
        )

    counting = _positivity(N)
    if counting["verdict"] is Verdict.FAILS:
        xs = counting["witnesses"]
        return ConditionReport(
            condition=ConditionId.PARTIAL_EVAL,
            verdict=Verdict.FAILS,
            witness={"stage": "counting", "x": xs, "values": [N.eval_int(x) for x in xs]},
            bound=counting["bound"],
        )

    b = IntPoly.from_dict({k: c for k, c in N.terms() if k % n == 0 and c > 0})
    candidates = [(b, "divisible-monomials"), (IntPoly.constant(rem.constant_term), "constant")]
    for cand, source in candidates:
        p, r = divrem_unit(N - cand, qn1)
        if not r.is_zero:
            continue
        accepted = _accept_split(n, cand, p, source)
        if accepted is not None:
            return accepted

    return ConditionReport(
        condition=ConditionId.PARTIAL_EVAL,
        verdict=Verdict.UNDETERMINED,
        details={"n": n, "reason": "no split found by the canonical heuristic"},
    )


# ============================================================================
# Двойственная торификация
# ============================================================================


def check_dual_torification(c: ClassInput) -> ConditionReport:
    """
    Двойственная торификация: [X] и [X](−L) неотрицательны в базисе T.

    Двойственный класс вычисляется подстановкой L -> −L и сверяется
    с Σ a_k (−1)^k (L + 1)^k.

    Args:
        c: Класс Гротендика

    Returns:
        ConditionReport; свидетель указывает стадию (torification или dual)

    Raises:
        VerificationError: Если два способа вычисления двойственного класса разошлись
    """
    cls = GrothClass.coerce(c)
    first = check_motivic_f1(cls)
    if not first.holds:
        return ConditionReport(
            condition=ConditionId.DUAL_TORIFICATION,
            verdict=Verdict.FAILS,
            witness={"stage": "torification", **(first.witness or {})},
        )

    torus = to_torus_basis(cls)
    dual = cls.dual()
    signed = IntPoly.from_dict({k: (-a if k % 2 else a) for k, a in torus.items()})
    via_torus = GrothClass.from_poly(signed.compose(IntPoly((1, 1))))
    if via_torus != dual:
        raise VerificationError(f"Двойственный класс {dual} не совпал с {via_torus}")

    dual_torus = to_torus_basis(dual)
    for k, a in sorted(dual_torus.items()):
        if a < 0:
            return ConditionReport(
                condition=ConditionId.DUAL_TORIFICATION,
                verdict=Verdict.FAILS,
                witness={"stage": "dual", "k": k, "coefficient": a},
                details={"dual_class": str(dual), "dual_torus_basis": int_map_to_json(dual_torus)},
            )

    return ConditionReport(
        condition=ConditionId.DUAL_TORIFICATION,
        verdict=Verdict.HOLDS,
        certificate={
            "torification": int_map_to_json(torus),
            "dual_torification": int_map_to_json(dual_torus),
        },
        details={"dual_class": str(dual)},
    )


def projective_dual_certificate(N: int) -> TorusDecomposition:
    """
    Торифицированное двойственное многообразие для P^{2N}.

    X̂ = A⁰ ∪ ⋃_{k=1}^{N} G_m × A^{2k−1}; его класс равен [P^{2N}](−L).

    Args:
        N: Половина размерности (N >= 0)

    Returns:
        TorusDecomposition многообразия X̂
    """
    if N < 0:
        raise PolynomialError(f"P^{{2N}} требует N >= 0, получено {N}")
    parts = [TorusDecomposition({0: 1})]
    for k in range(1, N + 1):
        parts.append(product_decomposition(TorusDecomposition({1: 1}), torify_affine(2 * k - 1)))
    return union_decomposition(*parts)


def dual_certificate_matches(N: int) -> bool:
    """Совпадение класса X̂ с двойственным классом P^{2N}."""
    return projective_dual_certificate(N).to_class() == GrothClass.projective(2 * N).dual()

