"""
Модуль utils: вспомогательные функции (JSON, метрики, текстовые форматы).
"""

from fzeta.utils.json_helpers import (
    allow_long_int_strings,
    dumps_canonical,
    stringify_big_ints,
    strip_volatile,
    int_map_to_json,
)
from fzeta.utils.metrics import Timer, init_metrics, log_metric

__all__ = [
    # JSON
    "allow_long_int_strings",
    "dumps_canonical",
    "stringify_big_ints",
    "strip_volatile",
    "int_map_to_json",
    # Metrics
    "Timer",
    "init_metrics",
    "log_metric",
]
