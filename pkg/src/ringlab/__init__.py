"""Exhaustive computation of reflexivity-type properties of finite rings."""

from .constructors import build
from .core import FiniteRing, all_ideals, jacobson_radical, quotient, verify_axioms
from .errors import RingLabError
from .expr import parse
from .predicates import PROPERTY_NAMES, PropertyVerdict, decide, replay

__all__ = [
    "FiniteRing", "PropertyVerdict", "PROPERTY_NAMES", "RingLabError",
    "all_ideals", "build", "decide", "jacobson_radical", "parse", "quotient", "replay", "verify_axioms",
]
