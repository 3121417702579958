"""
Модели отчётов для fzeta.

Этот модуль содержит pydantic-модели результатов: отчёт о проверке условия,
строку таблицы знаков, результат отдельной проверки и манифест запуска.
Алгебраические значения описаны frozen-dataclass'ами в своих пакетах.
"""

from __future__ import annotations
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer, model_validator

from fzeta.core.types import Claim, ConditionId, FamilyKind, Sign, Verdict
from fzeta.utils.json_helpers import stringify_big_ints


class ConditionReport(BaseModel):
    """
    Итог проверки одного условия.

    Attributes:
        condition: Идентификатор условия
        verdict: holds / fails / undetermined
        witness: Свидетель нарушения (обязателен при fails)
        certificate: Сертификат выполнения (торификация, клетки, ...)
        bound: Использованная граница перебора, если была
        details: Дополнительные данные для отчёта
    """

    model_config = ConfigDict(frozen=True)

    condition: ConditionId
    verdict: Verdict
    witness: Optional[Dict[str, Any]] = None
    certificate: Optional[Dict[str, Any]] = None
    bound: Optional[int] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _fails_needs_witness(self) -> "ConditionReport":
        if self.verdict is Verdict.FAILS and not self.witness:
            raise ValueError(f"{self.condition.value}: вердикт fails без свидетеля")
        return self

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_json_dict(self) -> Dict[str, Any]:
        """Возвращает JSON-совместимый словарь без пустых полей."""
        return stringify_big_ints(self.model_dump(mode="json", exclude_none=True))


SIGN_TABLE_CSV_HEADER = ["n", "eval_point", "value", "sign", "claimed", "match"]


class SignTableRow(BaseModel):
    """
    Строка таблицы знаков частичной суммы семейства.

    Attributes:
        family: Семейство
        n: Порядок корня из единицы
        cutoff: Индекс последнего слагаемого частичной суммы
        eval_point: Точка вычисления (1 − n или −n)
        value: Точное значение частичной суммы
        sign: Знак value
        claimed_sign: Основное утверждение о знаке
        match: Совпадение с утверждением (None, если утверждения нет)
        secondary_claim: Дополнительное утверждение о знаке
        secondary_match: Совпадение со вторичным утверждением
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyKind
    n: int
    cutoff: int
    eval_point: int
    value: int
    sign: Sign
    claimed_sign: Claim
    match: Optional[bool] = None
    secondary_claim: Claim = Claim.UNCLAIMED
    secondary_match: Optional[bool] = None

    @classmethod
    def build(
        cls,
        family: FamilyKind,
        n: int,
        cutoff: int,
        eval_point: int,
        value: int,
        claimed: Claim,
        secondary: Claim = Claim.UNCLAIMED,
    ) -> "SignTableRow":
        """Собирает строку, вычисляя знак и совпадения."""
        return cls(
            family=family,
            n=n,
            cutoff=cutoff,
            eval_point=eval_point,
            value=value,
            sign=Sign.of(value),
            claimed_sign=claimed,
            match=claimed.matches(value),
            secondary_claim=secondary,
            secondary_match=secondary.matches(value),
        )

    @model_validator(mode="after")
    def _consistent(self) -> "SignTableRow":
        if self.sign is not Sign.of(self.value):
            raise ValueError(f"n={self.n}: знак {self.sign.value} не соответствует значению")
        if self.match != self.claimed_sign.matches(self.value):
            raise ValueError(f"n={self.n}: поле match не соответствует утверждению")
        return self

    @field_serializer("value")
    def _value_as_str(self, value: int) -> str:
        return str(value)

    def csv_row(self) -> List[str]:
        match = "" if self.match is None else str(self.match).lower()
        return [
            str(self.n),
            str(self.eval_point),
            str(self.value),
            self.sign.value,
            self.claimed_sign.value,
            match,
        ]


class CheckResult(BaseModel):
    """
    Результат одной проверки внутри запуска verify.

    Attributes:
        name: Имя проверки
        passed: Прошла ли проверка
        informational: Не влияет на общий вердикт
        wall_ms: Время выполнения в миллисекундах
        count: Число проверенных экземпляров
        details: Данные для отчёта
    """

    name: str
    passed: bool
    informational: bool = False
    wall_ms: int = 0
    count: Optional[int] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class RunManifest(BaseModel):
    """
    Манифест запуска проверок.

    Attributes:
        command: Аргументы командной строки
        versions: Версии пакета и окружения
        timestamp: Время запуска (ISO 8601)
        checks: Результаты проверок
    """

    command: List[str]
    versions: Dict[str, str]
    timestamp: str
    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def overall(self) -> str:
        blocking = [c for c in self.checks if not c.informational]
        return "pass" if all(c.passed for c in blocking) else "fail"

    def to_json_dict(self) -> Dict[str, Any]:
        return stringify_big_ints(self.model_dump(mode="json", exclude_none=True))
