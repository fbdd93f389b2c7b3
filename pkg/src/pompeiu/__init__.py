"""Exact Pompeiu-property and mean-value decisions on free groups and abelian groups."""
from .decision import (
    RadialSetFamily,
    free_pompeiu_check,
    mvp_hypothesis_check,
    mvp_scan,
    two_circle_check,
)
from .free_group import BallFunction, GroupRingElement, ReducedWord
from .polyalg import IntPolynomial
from .radial import RadialElement, chi, hat, p_poly, spherical

__all__ = [
    "BallFunction",
    "GroupRingElement",
    "IntPolynomial",
    "RadialElement",
    "RadialSetFamily",
    "ReducedWord",
    "chi",
    "free_pompeiu_check",
    "hat",
    "mvp_hypothesis_check",
    "mvp_scan",
    "p_poly",
    "spherical",
    "two_circle_check",
]
