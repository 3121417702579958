"""
Точка входа для fzeta.

Запускает командную строку; эквивалентно консольному скрипту fzeta.
"""

from __future__ import annotations
import os
import sys

if sys.platform == "win32":
    os.environ["PYTHONIOENCODING"] = "utf-8"


def main() -> None:
    """Главная функция запуска."""
    from fzeta.cli.app import main as cli_main

    sys.exit(cli_main())


if __name__ == "__main__":
    main()
