"""
fzeta: точная проверка условий F₁ / F_ζ для классов Гротендика и элементов кольца Хабиро.
"""

from fzeta.utils.json_helpers import allow_long_int_strings

__version__ = "0.3.0"

# Точные значения сериализуются целиком, без ограничения на число цифр
allow_long_int_strings()

__all__ = ["__version__"]
