"""
Модуль tateroot: корни Тейта, орбитные фактор-кольца и действие Q₊.
"""

from fzeta.tateroot.classes import (
    TateRootClass,
    OrbitClass,
    tate_root,
    tate_root_from_cells,
    tate_root_habiro,
    is_integral,
    orbit_reduce,
    ev_root_orbit,
    rational_power_mul,
    rescale,
)

__all__ = [
    "TateRootClass",
    "OrbitClass",
    "tate_root",
    "tate_root_from_cells",
    "tate_root_habiro",
    "is_integral",
    "orbit_reduce",
    "ev_root_orbit",
    "rational_power_mul",
    "rescale",
]
