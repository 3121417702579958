"""
Конфигурация fzeta.

Этот модуль содержит все константы конфигурации и настройки окружения.
Значения читаются из переменных окружения; файл .env в рабочем каталоге
подгружается заранее.
"""

import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return int(raw)


# ============================================================================
# Exact Arithmetic Configuration
# ============================================================================

# Φ_n с n <= лимита кэшируются на весь процесс
CYCLOTOMIC_CACHE_LIMIT = _env_int("FZETA_CYCLOTOMIC_CACHE_LIMIT", 512)

# Ниже этого размера множители перемножаются «в столбик»
KARATSUBA_THRESHOLD = _env_int("FZETA_KARATSUBA_THRESHOLD", 64)


# ============================================================================
# Condition Checking Configuration
# ============================================================================

# Максимальная длина прямого перебора x = 1..B в проверке положительности
INTERP_SCAN_LIMIT = _env_int("FZETA_INTERP_SCAN_LIMIT", 200_000)


# ============================================================================
# Finite Field Oracle Configuration
# ============================================================================

ORACLE_BUDGET = _env_int("FZETA_ORACLE_BUDGET", 10**8)
ORACLE_MAX_PRIME = _env_int("FZETA_ORACLE_MAX_PRIME", 13)


# ============================================================================
# Sign Table / Verification Configuration
# ============================================================================

DEFAULT_NMAX = _env_int("FZETA_DEFAULT_NMAX", 40)
DEFAULT_KMAX = 25
DEFAULT_LMAX = 4
DEFAULT_LEVEL_MAX = 10
DEFAULT_SERIES_ORDER = 40
DEFAULT_PROPERTY_SAMPLES = 200

# "one-minus-n" (x = 1 − n) или "minus-n" (x = −n)
DEFAULT_EVAL_POINT_CONVENTION = os.environ.get(
    "FZETA_EVAL_POINT_CONVENTION", "one-minus-n"
)


# ============================================================================
# Runtime Configuration
# ============================================================================

DEFAULT_THREADS = _env_int("FZETA_THREADS", 1)
LOG_LEVEL = os.environ.get("FZETA_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
METRICS_PATH: Optional[str] = os.environ.get("FZETA_METRICS_PATH") or None
