"""Constructive algorithms for Bezout rings: gcd certificates, stable-range
witnesses, Toeplitz reductions, Smith forms and neat/clean decompositions."""

from .errors import BezoutLabError
from .rings import INTEGERS, Element, GFx, RingDescriptor, Zloc, Zmod, parse_element, parse_ring
from .ringcore import bezout_certificate, gcd, is_unit, solve_linear

__version__ = "0.1.0"

__all__ = [
    "BezoutLabError", "Element", "GFx", "INTEGERS", "RingDescriptor", "Zloc", "Zmod",
    "bezout_certificate", "gcd", "is_unit", "parse_element", "parse_ring", "solve_linear",
]
