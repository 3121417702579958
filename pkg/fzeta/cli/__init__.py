"""
Модуль cli: командная строка и проверочные прогоны.
"""

from fzeta.cli.app import main, build_parser, setup_logging
from fzeta.cli.verify import TARGETS, VerifyOptions, run_verify, run_check

__all__ = [
    "main",
    "build_parser",
    "setup_logging",
    "TARGETS",
    "VerifyOptions",
    "run_verify",
    "run_check",
]
