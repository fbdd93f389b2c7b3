"""Pompeiu, two-circle and mean-value decisions for radial families in F_k.

A family of radial sets is Pompeiu exactly when the hat transforms of its
characteristic functions have no common complex zero, i.e. when their integer
gcd is constant.  A common zero ``z0`` yields the spherical function
``phi_{z0}`` as a nonzero function killed by every set.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import free_group as fg
from .numbers import QQi, format_exact, is_exact
from .polyalg import (
    DEFAULT_TOL,
    IntPolynomial,
    Root,
    backward_residual,
    gcd,
    gcd_many,
    roots,
)
from .radial import RadialElement, chi, from_radii, hat, p_poly, spherical

NUMERIC_WITNESS_TOL = 1e-8


class VerificationError(RuntimeError):
    """A constructed witness failed its own brute-force check."""


@dataclass(frozen=True)
class RadialSetFamily:
    k: int
    sets: tuple

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("free group rank k must be >= 2")
        sets = tuple(frozenset(int(r) for r in s) for s in self.sets)
        if not sets:
            raise ValueError("family must contain at least one set")
        for s in sets:
            if not s:
                raise ValueError("every radial set must have at least one radius")
            if min(s) < 0:
                raise ValueError("radii must be nonnegative")
        object.__setattr__(self, "sets", sets)

    @property
    def max_radius(self) -> int:
        return max(max(s) for s in self.sets)

    def elements(self) -> list:
        return [from_radii(self.k, s) for s in self.sets]

    def transforms(self) -> list:
        return [hat(a) for a in self.elements()]

    def as_json(self):
        return [sorted(s) for s in self.sets]


@dataclass(frozen=True)
class AnnihilationReport:
    conv_residual: object
    translate_residual: object
    inner_radius: int
    exact: bool
    passed: bool

    def as_json(self):
        return {
            "convResidual": _num_json(self.conv_residual),
            "translateResidual": _num_json(self.translate_residual),
            "innerRadius": self.inner_radius,
        }


@dataclass
class DecisionReport:
    k: int
    family: list
    pompeiu: bool
    gcd: IntPolynomial
    root: Root | None = None
    witness_radius: int | None = None
    verification: AnnihilationReport | None = None
    witness: fg.BallFunction | None = field(default=None, repr=False)

    @property
    def decision(self) -> str:
        return "pompeiu" if self.pompeiu else "not-pompeiu"

    def as_json(self) -> dict:
        return {
            "group": "free",
            "k": self.k,
            "family": self.family,
            "decision": self.decision,
            "gcd": self.gcd.to_json(),
            "commonRoot": root_json(self.root),
            "witness": None
            if self.root is None
            else {"type": "spherical", "z": root_json(self.root), "radius": self.witness_radius},
            "verification": None if self.verification is None else self.verification.as_json(),
        }


def _num_json(x):
    if isinstance(x, (int, Fraction, QQi)):
        return format_exact(x)
    return float(x)


def root_json(root: Root | None):
    if root is None:
        return None
    if root.exact is not None:
        return {"re": format_exact(root.exact), "im": "0/1", "exact": True}
    return {"re": float(root.value.real), "im": float(root.value.imag), "exact": False}


def root_value(root: Root):
    return root.exact if root.exact is not None else root.value


def choose_root(rs) -> Root:
    """Deterministic witness root: exact roots first, then least magnitude, then argument."""
    def key(r):
        v = r.value
        return (r.exact is None, round(abs(v), 9), round(cmath.phase(v), 9) if abs(v) > 1e-300 else 0.0)

    return min(rs, key=key)


# ---------------------------------------------------------------------------
# brute-force verification


def _as_group_ring(alpha, k: int) -> fg.GroupRingElement:
    if isinstance(alpha, RadialElement):
        return alpha.expand()
    if isinstance(alpha, fg.GroupRingElement):
        return alpha
    raise TypeError(f"cannot verify against {type(alpha).__name__}")


def _residual(b: fg.BallFunction):
    return b.max_abs()


def verify_annihilation(alpha, f: fg.BallFunction, tol: float | None = None) -> AnnihilationReport:
    """Brute-force check that ``alpha`` kills ``f`` on the inner ball.

    Reports two independent residuals: the group-ring convolution
    ``alpha * f~`` and the direct translate sums ``sum_y alpha(y) f(g y)``.
    Exact ball functions are checked with zero tolerance.
    """
    a = _as_group_ring(alpha, f.k)
    if a.k != f.k:
        raise fg.GroupMismatchError(f"F_{a.k} vs F_{f.k}")
    m = a.support_radius()
    if f.radius < m:
        raise ValueError(f"ball radius {f.radius} is smaller than support radius {m}")
    conv = fg.convolve_on_ball(a, f.tilde())
    trans = fg.right_sphere_sums(f, m, weights=a.terms)
    exact_mode = f.is_exact()
    rc, rt = _residual(conv), _residual(trans)
    if exact_mode:
        passed = all(v == 0 for v in conv.values) and all(v == 0 for v in trans.values)
    else:
        tol = NUMERIC_WITNESS_TOL if tol is None else tol
        passed = rc <= tol and rt <= tol
    return AnnihilationReport(rc, rt, f.radius - m, exact_mode, passed)


def laplacian(f: fg.BallFunction) -> fg.BallFunction:
    """``(1/2k) sum_{y in E_1} f(x y) - f(x)`` on the radius ``R - 1`` ball."""
    if f.radius < 1:
        raise ValueError("laplacian needs a ball of radius >= 1")
    sums = fg.right_sphere_sums(f, 1)
    c = Fraction(1, 2 * f.k) if f.is_exact() else 1.0 / (2 * f.k)
    inner = f.restrict(f.radius - 1)
    return fg.BallFunction(f.k, sums.radius, tuple(c * s - v for s, v in zip(sums.values, inner.values)))


def is_harmonic(f: fg.BallFunction, tol: float = 0) -> bool:
    lap = laplacian(f)
    if lap.is_exact() and tol == 0:
        return all(v == 0 for v in lap.values)
    return lap.max_abs() <= tol


class MeanValueResult(NamedTuple):
    holds: bool
    residual: object


def mvp_check(f: fg.BallFunction, n: int, tol: float = 0) -> MeanValueResult:
    """Mean-value property over spheres of radius ``n`` on the inner ball."""
    if f.radius < n:
        raise ValueError(f"ball radius {f.radius} is smaller than {n}")
    sums = fg.right_sphere_sums(f, n)
    e_n = fg.sphere_size(f.k, n)
    inner = f.restrict(f.radius - n)
    diff = fg.BallFunction(f.k, sums.radius, tuple(s - e_n * v for s, v in zip(sums.values, inner.values)))
    res = diff.max_abs()
    if diff.is_exact() and tol == 0:
        return MeanValueResult(all(v == 0 for v in diff.values), res)
    return MeanValueResult(res <= tol, res)


# ---------------------------------------------------------------------------
# decisions


BALL_BUDGET = 400_000


def default_radius(family: RadialSetFamily, budget: int = BALL_BUDGET) -> int:
    """``max(6, 2m)`` for the largest radius ``m``, shrunk to fit ``budget`` ball cells.

    Never goes below ``m + 3`` so the verification region keeps radius >= 3.
    """
    m = family.max_radius
    R = max(6, 2 * m)
    while R > m + 3 and fg.ball_size(family.k, R) > budget:
        R -= 1
    return R


def free_pompeiu_check(
    family: RadialSetFamily, radius: int | None = None, tol: float = DEFAULT_TOL, verify: bool = True
) -> DecisionReport:
    g = gcd_many(family.transforms())
    if g.degree < 1:
        return DecisionReport(family.k, family.as_json(), True, g)
    root = choose_root(roots(g, tol))
    R = default_radius(family) if radius is None else radius
    if R < family.max_radius:
        raise ValueError(f"witness radius {R} is below the family's largest radius {family.max_radius}")
    witness = construct_counterexample(family, root_value(root), R, tol=tol)
    report = DecisionReport(family.k, family.as_json(), False, g, root, R, witness=witness)
    if verify:
        report.verification = verify_family(family.elements(), witness)
    return report


def verify_family(elements, witness: fg.BallFunction) -> AnnihilationReport:
    """Worst-case residuals over every set; raises if any check fails."""
    reps = [verify_annihilation(a, witness) for a in elements]
    worst = AnnihilationReport(
        max(r.conv_residual for r in reps),
        max(r.translate_residual for r in reps),
        min(r.inner_radius for r in reps),
        all(r.exact for r in reps),
        all(r.passed for r in reps),
    )
    if not worst.passed:
        raise VerificationError(
            f"witness failed verification (conv {worst.conv_residual}, translate {worst.translate_residual})"
        )
    return worst


def two_circle_check(k: int, r: int, s: int, **kw) -> DecisionReport:
    if r < 1 or s < 1:
        raise ValueError("two-circle radii must be >= 1")
    return free_pompeiu_check(RadialSetFamily(k, ({r}, {s})), **kw)


def construct_counterexample(family, z0, radius: int, tol: float = DEFAULT_TOL) -> fg.BallFunction:
    """``phi_{z0}`` on the ball, after checking ``z0`` is a common root.

    ``family`` is a :class:`RadialSetFamily` or a sequence of radial elements.
    """
    if isinstance(family, RadialSetFamily):
        k, elements = family.k, family.elements()
    else:
        elements = list(family)
        k = elements[0].k
    for a in elements:
        p = hat(a)
        if is_exact(z0):
            if p.eval(z0) != 0:
                raise ValueError(f"{z0} is not a root of {p}")
        elif backward_residual(p, complex(z0)) >= tol:
            raise ValueError(f"{z0} is not a root of {p} (residual {backward_residual(p, complex(z0)):.3g})")
    return spherical(k, z0, radius)


# ---------------------------------------------------------------------------
# two-radius mean value


def mean_value_poly(k: int, n: int) -> IntPolynomial:
    """Hat transform of ``chi_n - e_n``: ``p_n(z) - e_n``."""
    return p_poly(k, n) - fg.sphere_size(k, n)


class HypothesisResult(NamedTuple):
    holds: bool
    gcd: IntPolynomial


def mvp_hypothesis_check(k: int, n: int, m: int) -> HypothesisResult:
    """True iff ``z = 2k`` is the only common solution of ``p_n/e_n = 1 = p_m/e_m``.

    Both polynomials have ``2k`` as a simple root, so this is the case exactly
    when their primitive gcd equals ``z - 2k``.
    """
    if n < 1 or m < 1:
        raise ValueError("radii must be >= 1")
    g = gcd(mean_value_poly(k, n), mean_value_poly(k, m))
    return HypothesisResult(g == IntPolynomial((-2 * k, 1)), g)


MVP_SCAN_LIMIT = 20


@dataclass
class ScanResult:
    k: int
    max_radius: int
    table: dict
    gcds: dict

    def parity_summary(self) -> dict:
        out = {}
        for (n, m), ok in self.table.items():
            cls = "-".join(sorted(("even" if n % 2 == 0 else "odd", "even" if m % 2 == 0 else "odd"), reverse=True))
            c = out.setdefault(cls, {"pass": 0, "total": 0})
            c["total"] += 1
            c["pass"] += int(ok)
        coprime = [ok for (n, m), ok in self.table.items() if math.gcd(n, m) == 1]
        out["coprime"] = {"pass": sum(coprime), "total": len(coprime)}
        return dict(sorted(out.items()))

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "maxRadius": self.max_radius,
            "pairs": [
                {"n": n, "m": m, "holds": ok, "gcd": self.gcds[(n, m)].to_json()}
                for (n, m), ok in sorted(self.table.items())
            ],
            "summary": self.parity_summary(),
        }


def mvp_scan(k: int, max_radius: int = 10, limit: int = MVP_SCAN_LIMIT) -> ScanResult:
    if max_radius > limit:
        raise ValueError(f"max_radius {max_radius} exceeds the scan limit {limit}")
    table, gcds = {}, {}
    for n in range(1, max_radius + 1):
        for m in range(n + 1, max_radius + 1):
            res = mvp_hypothesis_check(k, n, m)
            table[(n, m)] = res.holds
            gcds[(n, m)] = res.gcd
    return ScanResult(k, max_radius, table, gcds)


def harmonic_constraint(k: int) -> RadialElement:
    """``chi_1 - 2k``: a function is harmonic iff this kills it."""
    return chi(k, 1) - 2 * k
