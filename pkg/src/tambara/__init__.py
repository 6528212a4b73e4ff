"""Finite Tambara functors: ideals, Nakaoka spectra, radicals and bispans."""

__version__ = "0.1.0"

from .functors import BurnsideFunctor, Element, FixedPointFunctor, TableFunctor, TambaraFunctor
from .groups import FiniteGroup, builtin_group
from .io import load_functor, parse_element
from .rings import FiniteRing, builtin_ring

__all__ = [
    "BurnsideFunctor", "Element", "FiniteGroup", "FiniteRing", "FixedPointFunctor", "TableFunctor",
    "TambaraFunctor", "builtin_group", "builtin_ring", "load_functor", "parse_element",
]
