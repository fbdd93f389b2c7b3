"""Pompeiu decisions for Z, finite abelian groups, and Z x (finite).

Annihilating characters play the role of maximal ideals: for Z a character is
``m -> z0^m`` with ``z0 != 0``, for a finite group it is an exponent tuple.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .polyalg import IntPolynomial, Root, gcd_many, roots

CHAR_TOL = 1e-9
MAX_GROUP_ORDER = 10**6


class UnsupportedGroupError(ValueError):
    """Raised for groups outside the supported classes (e.g. Z^d, d >= 2)."""


# ---------------------------------------------------------------------------
# Z


def z_transform(K):
    """``(sum_{g in K} z^(g - min K), min K)``; the polynomial has nonzero constant term."""
    K = sorted(set(int(g) for g in K))
    if not K:
        raise ValueError("empty subset of Z")
    shift = K[0]
    coeffs = [0] * (K[-1] - shift + 1)
    for g in K:
        coeffs[g - shift] = 1
    return IntPolynomial(coeffs), shift


@dataclass
class ZReport:
    sets: list
    pompeiu: bool
    gcd: IntPolynomial
    root: Root | None = None
    residual: float | None = None
    window: tuple = (-50, 50)

    @property
    def decision(self):
        return "pompeiu" if self.pompeiu else "not-pompeiu"

    def as_json(self):
        from .decision import root_json

        return {
            "group": "z",
            "family": self.sets,
            "decision": self.decision,
            "gcd": self.gcd.to_json(),
            "commonRoot": root_json(self.root),
            "witness": None
            if self.root is None
            else {"type": "exponential", "z": root_json(self.root), "range": list(self.window)},
            "verification": None
            if self.residual is None
            else {"translateResidual": self.residual, "range": list(self.window)},
        }


def _least_root(rs):
    return min(rs, key=lambda r: (round(abs(r.value), 9), round(cmath.phase(r.value), 9)))


def z_pompeiu_check(sets, window=(-50, 50), tol: float = CHAR_TOL) -> ZReport:
    sets = [sorted(set(int(g) for g in K)) for K in sets]
    if not sets:
        raise ValueError("empty family")
    g = gcd_many([z_transform(K)[0] for K in sets])
    if g.degree < 1:
        return ZReport(sets, True, g, window=tuple(window))
    # transforms have nonzero constant terms, so every root of g is nonzero
    root = _least_root(roots(g))
    z0 = root.exact if root.exact is not None else root.value
    res = exponential_witness_check(z0, sets, window, relative=abs(abs(complex(z0)) - 1) > 1e-12)
    if res >= tol:
        from .decision import VerificationError

        raise VerificationError(f"exponential witness residual {res:.3g} exceeds {tol}")
    return ZReport(sets, False, g, root, res, tuple(window))


def exponential_witness_check(z0, sets, window=(-50, 50), relative: bool = False) -> float:
    """Max ``|sum_{x in g + K} z0^x|`` over translates that stay inside ``window``.

    With ``relative=True`` each sum is divided by ``sum |z0^x|`` so that roots
    off the unit circle are judged on a comparable scale.
    """
    if z0 == 0:
        raise ValueError("z0 must be nonzero")
    lo, hi = window
    exact_mode = isinstance(z0, (int, Fraction))
    worst = 0.0
    for K in sets:
        K = sorted(set(K))
        for g in range(lo - K[0], hi - K[-1] + 1):
            if exact_mode:
                terms = [Fraction(z0) ** (g + x) for x in K]
                s = abs(float(sum(terms)))
                scale = float(sum(abs(t) for t in terms))
            else:
                terms = [complex(z0) ** (g + x) for x in K]
                s = abs(sum(terms))
                scale = sum(abs(t) for t in terms)
            worst = max(worst, s / scale if relative else s)
    return worst


# ---------------------------------------------------------------------------
# finite abelian groups


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise ValueError("need at least one cyclic factor")
        for n in orders:
            if n < 2:
                raise ValueError(f"cyclic orders must be >= 2, got {n}")
        object.__setattr__(self, "orders", orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def element(self, g) -> tuple:
        g = (g,) if isinstance(g, int) else tuple(int(x) for x in g)
        if len(g) != len(self.orders):
            raise ValueError(f"element {g} has wrong arity for orders {self.orders}")
        for x, n in zip(g, self.orders):
            if not 0 <= x < n:
                raise ValueError(f"coordinate {x} out of range 0..{n - 1}")
        return g

    def add(self, a, b) -> tuple:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def elements(self):
        return itertools.product(*(range(n) for n in self.orders))

    def characters(self):
        """Exponent tuples in lexicographic order."""
        return itertools.product(*(range(n) for n in self.orders))

    def char_value(self, m, g) -> complex:
        phase = sum(Fraction(mi * gi, n) for mi, gi, n in zip(m, g, self.orders))
        return cmath.exp(2j * math.pi * float(phase % 1))

    def char_sum(self, m, K) -> complex:
        return sum((self.char_value(m, g) for g in K), 0j)


@dataclass
class FiniteReport:
    orders: tuple
    sets: list
    pompeiu: bool
    character: tuple | None = None
    residual: float | None = None
    real_witness: dict | None = field(default=None)

    @property
    def decision(self):
        return "pompeiu" if self.pompeiu else "not-pompeiu"

    def as_json(self):
        return {
            "group": "finite-abelian",
            "orders": list(self.orders),
            "family": [[list(g) for g in K] for K in self.sets],
            "decision": self.decision,
            "gcd": None,
            "commonRoot": None,
            "witness": None
            if self.character is None
            else {
                "type": "character",
                "exponents": list(self.character),
                "real": None
                if self.real_witness is None
                else [[list(g), str(v)] for g, v in sorted(self.real_witness.items())],
            },
            "verification": None if self.residual is None else {"translateResidual": self.residual},
        }


def _normalize_sets(G: FiniteAbelianGroup, sets):
    out = []
    for K in sets:
        K = sorted(set(G.element(g) for g in K))
        if not K:
            raise ValueError("empty subset")
        out.append(K)
    if not out:
        raise ValueError("empty family")
    return out


def character_translate_residual(G: FiniteAbelianGroup, m, sets) -> float:
    """Max over translates ``g + K`` of ``|sum chi_m|`` computed pointwise."""
    vals = {g: G.char_value(m, g) for g in G.elements()}
    worst = 0.0
    for K in sets:
        for g in G.elements():
            s = sum((vals[G.add(g, x)] for x in K), 0j)
            worst = max(worst, abs(s))
    return worst


def real_character_witness(G: FiniteAbelianGroup, m):
    """For a character of order <= 2 the values are +-1: an exact integer witness."""
    vals = {}
    for g in G.elements():
        phase = sum(Fraction(mi * gi, n) for mi, gi, n in zip(m, g, G.orders)) % 1
        if phase == 0:
            vals[g] = 1
        elif phase == Fraction(1, 2):
            vals[g] = -1
        else:
            return None
    return vals


def exact_translate_check(G: FiniteAbelianGroup, f: dict, sets) -> bool:
    return all(sum(f.get(G.add(g, x), 0) for x in K) == 0 for K in sets for g in G.elements())


def finite_abelian_pompeiu_check(G: FiniteAbelianGroup, sets, tol: float = CHAR_TOL, max_order: int = MAX_GROUP_ORDER):
    if G.order > max_order:
        raise UnsupportedGroupError(f"group order {G.order} exceeds the bound {max_order}")
    sets = _normalize_sets(G, sets)
    for m in G.characters():
        if all(abs(G.char_sum(m, K)) < tol for K in sets):
            res = character_translate_residual(G, m, sets)
            if res >= tol:
                from .decision import VerificationError

                raise VerificationError(f"character {m} residual {res:.3g} exceeds {tol}")
            real = real_character_witness(G, m)
            if real is not None and not exact_translate_check(G, real, sets):
                from .decision import VerificationError

                raise VerificationError("real witness failed exact translate check")
            return FiniteReport(G.orders, sets, False, tuple(m), res, real)
    return FiniteReport(G.orders, sets, True)


def cyclic_gcd_criterion(n: int, sets) -> bool:
    """Exact Pompeiu test on Z_n: no n-th root of unity kills every transform.

    Equivalent to ``gcd(z^n - 1, transforms...)`` being constant.
    """
    polys = [IntPolynomial([-1] + [0] * (n - 1) + [1])]
    for K in sets:
        coeffs = [0] * n
        for g in K:
            coeffs[g % n] += 1
        polys.append(IntPolynomial(coeffs))
    return gcd_many(polys).degree < 1


# ---------------------------------------------------------------------------
# group-ring elements over a finite abelian group


@dataclass(frozen=True)
class AbelianGroupRingElement:
    group: FiniteAbelianGroup
    terms: dict

    def __post_init__(self):
        clean = {}
        for g, c in self.terms.items():
            g = self.group.element(g)
            c = clean.get(g, 0) + Fraction(c)
            if c:
                clean[g] = c
            else:
                clean.pop(g, None)
        object.__setattr__(self, "terms", clean)

    def convolve(self, other: "AbelianGroupRingElement") -> "AbelianGroupRingElement":
        if other.group != self.group:
            raise ValueError("different groups")
        out: dict = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                x = self.group.add(g, h)
                out[x] = out.get(x, 0) + a * b
        return AbelianGroupRingElement(self.group, out)

    def coefficient_table(self):
        return [(g, self.terms.get(g, Fraction(0))) for g in self.group.elements()]

    def is_zero(self) -> bool:
        return not self.terms


def torsion_annihilator(n: int):
    """``(1 + g + ... + g^(n-1), 1 - g)`` in the group ring of Z_n; their product is 0."""
    if n < 2:
        raise ValueError("order must be >= 2")
    G = FiniteAbelianGroup((n,))
    a = AbelianGroupRingElement(G, {(j,): 1 for j in range(n)})
    b = AbelianGroupRingElement(G, {(0,): 1, (1,): -1})
    prod = a.convolve(b)
    if not prod.is_zero():
        raise ArithmeticError("torsion identity failed")  # cannot happen
    return a, b


# ---------------------------------------------------------------------------
# Z x finite


@dataclass
class ProductReport:
    orders: tuple
    sets: list
    pompeiu: bool
    character: tuple | None = None
    z0: complex | None = None
    residual: float | None = None

    @property
    def decision(self):
        return "pompeiu" if self.pompeiu else "not-pompeiu"

    def as_json(self):
        return {
            "group": "z-times-finite",
            "orders": [0] + list(self.orders),
            "family": [[list(g) for g in K] for K in self.sets],
            "decision": self.decision,
            "gcd": None,
            "commonRoot": None if self.z0 is None else {"re": self.z0.real, "im": self.z0.imag, "exact": False},
            "witness": None
            if self.character is None
            else {"type": "product-character", "exponents": list(self.character), "z": [self.z0.real, self.z0.imag]},
            "verification": None if self.residual is None else {"translateResidual": self.residual},
        }


def _weighted_poly(G, m, K, tol):
    lo = min(g[0] for g in K)
    hi = max(g[0] for g in K)
    coeffs = np.zeros(hi - lo + 1, dtype=complex)
    for g in K:
        coeffs[g[0] - lo] += G.char_value(m, g[1:])
    coeffs[np.abs(coeffs) < tol] = 0
    nz = np.nonzero(coeffs)[0]
    if len(nz) == 0:
        return None
    # roots at 0 are not characters: drop the z^j factor
    return coeffs[nz[0] : nz[-1] + 1]


def _eval(coeffs, z):
    return np.polyval(coeffs[::-1], z)


def product_pompeiu_check(orders, sets, window=(-10, 10), tol: float = CHAR_TOL):
    """Z x (Z_n1 x ... x Z_nd): per finite character, a common nonzero root in z.

    Floating point throughout; tolerance ``tol`` decides vanishing.
    """
    G = FiniteAbelianGroup(orders)
    if G.order > MAX_GROUP_ORDER:
        raise UnsupportedGroupError(f"group order {G.order} exceeds the bound {MAX_GROUP_ORDER}")
    norm = []
    for K in sets:
        K = sorted(set((int(g[0]),) + G.element(g[1:]) for g in K))
        if not K:
            raise ValueError("empty subset")
        norm.append(K)
    if not norm:
        raise ValueError("empty family")
    for m in G.characters():
        polys = [p for p in (_weighted_poly(G, m, K, tol) for K in norm) if p is not None]
        if not polys:
            cands = [1 + 0j]
        elif any(len(p) == 1 for p in polys):
            continue
        else:
            base = min(polys, key=len)
            cands = sorted(np.roots(base[::-1]), key=lambda z: (round(abs(z), 9), round(cmath.phase(z), 9)))
        for z0 in cands:
            scale = [np.sum(np.abs(p) * np.abs(z0) ** np.arange(len(p))) for p in polys]
            if all(abs(_eval(p, z0)) / s < 1e-8 for p, s in zip(polys, scale)):
                res = _product_residual(G, m, complex(z0), norm, window)
                return ProductReport(G.orders, norm, False, tuple(m), complex(z0), res)
    return ProductReport(G.orders, norm, True)


def _product_residual(G, m, z0, sets, window):
    lo, hi = window
    worst = 0.0
    for K in sets:
        for t in G.elements():
            for a in range(lo, hi + 1):
                terms = [z0 ** (a + g[0]) * G.char_value(m, G.add(t, g[1:])) for g in K]
                worst = max(worst, abs(sum(terms)) / sum(abs(x) for x in terms))
    return worst


def check_rank(dim: int):
    if dim >= 2:
        raise UnsupportedGroupError(
            f"Z^{dim} needs multivariate elimination to decide common zeros; only rank <= 1 is supported"
        )
