"""Named ideals used throughout the tests, the harness and the CLI fixtures."""

from __future__ import annotations

from typing import Dict

from .groebner import Ideal
from .polynomial import Lex, PolynomialRing

SIX = ("y", "z", "s", "x", "w", "r")


def cubic_six() -> Ideal:
    """⟨y(zs − x²), ywr, wr(z² + zx + wr + s²)⟩: GVD, reg 3, e 8."""
    return Ideal(PolynomialRing(SIX), ["y*(z*s - x^2)", "y*w*r", "w*r*(z^2 + z*x + w*r + s^2)"])


def quadric_six() -> Ideal:
    """Same shape with the quadric x² + z² + wr + s²; the N-ideal is not GVD."""
    return Ideal(PolynomialRing(SIX), ["y*(z*s - x^2)", "y*w*r", "w*r*(x^2 + z^2 + w*r + s^2)"])


def nonradical_four() -> Ideal:
    """⟨yz − xw, xy⟩ in K[x, y, z, w]: not radical, hence not GVD."""
    return Ideal(PolynomialRing(("x", "y", "z", "w")), ["y*z - x*w", "x*y"])


NONRADICAL_ORDER = Lex()
"""Lex with x > y > z > w, the ring order of ``nonradical_four``."""


def irrelevant_c() -> Ideal:
    """⟨yz, x + z⟩ in K[y, x, z]: GVD with a = 0, never C-saturated."""
    return Ideal(PolynomialRing(("y", "x", "z")), ["y*z", "x + z"])


def triangle_boundary() -> Ideal:
    """⟨xyz⟩: Stanley–Reisner ideal of the boundary of a triangle."""
    return Ideal(PolynomialRing(("x", "y", "z")), ["x*y*z"])


NAMED: Dict[str, callable] = {
    "cubic_six": cubic_six,
    "quadric_six": quadric_six,
    "nonradical_four": nonradical_four,
    "irrelevant_c": irrelevant_c,
    "triangle_boundary": triangle_boundary,
}
