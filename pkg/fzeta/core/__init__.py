"""
Модуль core: модели отчётов, типы, исключения и конфигурация.
"""

from fzeta.core.models import (
    ConditionReport,
    SignTableRow,
    CheckResult,
    RunManifest,
    SIGN_TABLE_CSV_HEADER,
)
from fzeta.core.types import (
    Verdict,
    ConditionId,
    EvalPointConvention,
    FamilyKind,
    Sign,
    Claim,
)
from fzeta.core.exceptions import (
    FZetaError,
    ParseError,
    PolynomialError,
    TruncationLevelError,
    LevelMismatchError,
    SplitError,
    TateRootError,
    OracleBudgetError,
    OracleInputError,
    VerificationError,
)

__all__ = [
    # Models
    "ConditionReport",
    "SignTableRow",
    "CheckResult",
    "RunManifest",
    "SIGN_TABLE_CSV_HEADER",
    # Types
    "Verdict",
    "ConditionId",
    "EvalPointConvention",
    "FamilyKind",
    "Sign",
    "Claim",
    # Exceptions
    "FZetaError",
    "ParseError",
    "PolynomialError",
    "TruncationLevelError",
    "LevelMismatchError",
    "SplitError",
    "TateRootError",
    "OracleBudgetError",
    "OracleInputError",
    "VerificationError",
]
