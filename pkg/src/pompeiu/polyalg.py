"""Exact univariate polynomials, GCD certificates and root isolation.

Coefficients are stored lowest degree first. Integral coefficients are kept as
``int``; rationals as ``Fraction``; complex rationals as :class:`QQi`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .numbers import QQi, exact

DEFAULT_TOL = 1e-10
MAX_ITER = 200


class InexactDivisionError(ArithmeticError):
    pass


class RootFindingError(RuntimeError):
    pass


def _norm(c):
    c = exact(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class IntPolynomial:
    """Immutable polynomial in ``z``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # construction helpers
    @classmethod
    def z(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_rational(self) -> bool:
        return all(not isinstance(c, QQi) for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QQi)):
            return self == IntPolynomial.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    # ring operations
    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPolynomial((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; exact for exact ``x``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def scale(self, c) -> "IntPolynomial":
        return IntPolynomial(c * a for a in self.coeffs)

    def monic(self) -> "IntPolynomial":
        if self.is_zero():
            return self
        lc = self.lc if isinstance(self.lc, QQi) else Fraction(self.lc)
        return self.scale(1 / lc)

    def divmod(self, other):
        """Field division (over the coefficients' fraction field)."""
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPolynomial(), self
        quot = [0] * (dq + 1)
        lc = other.lc
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1]
            if c == 0:
                continue
            q = Fraction(c) / lc if not isinstance(c, QQi) and not isinstance(lc, QQi) else c / lc
            quot[shift] = q
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def to_json(self):
        return [str(c) if isinstance(c, int) else _exact_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items):
        return cls(exact(str(s)) for s in items)


def _exact_str(c):
    from .numbers import format_exact

    return format_exact(c)


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    return IntPolynomial.const(x)


def format_poly(p: IntPolynomial, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if isinstance(c, QQi):
            mag, neg = f"({c})", False
        else:
            neg = c < 0
            mag = str(abs(c))
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and mag == "1":
            term = mono
        elif mono:
            term = f"{mag}*{mono}"
        else:
            term = mag
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# exact division helpers


def divide_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    quot, rem = p.divmod(q)
    if not rem.is_zero():
        raise InexactDivisionError(f"{q} does not divide {p}")
    return quot


def synthetic_division(p: IntPolynomial, r):
    """Divide by ``z - r``; returns ``(quotient, remainder)`` with remainder ``p(r)``."""
    if p.is_zero():
        return IntPolynomial(), 0
    acc = 0
    out = []
    for c in reversed(p.coeffs):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    return IntPolynomial(reversed(out)), rem


def is_simple_root(p: IntPolynomial, r) -> bool:
    """True iff ``p(r) == 0`` and ``p'(r) != 0``, decided exactly."""
    quot, rem = synthetic_division(p, r)
    if rem != 0:
        return False
    # p = (z - r) q  =>  p'(r) = q(r)
    return quot.eval(r) != 0


# ---------------------------------------------------------------------------
# gcd


def content(p: IntPolynomial) -> int:
    return reduce(math.gcd, (abs(c) for c in p.coeffs), 0)


def primitive_part(p: IntPolynomial) -> IntPolynomial:
    """Content-free integer polynomial with positive leading coefficient."""
    if p.is_zero():
        return p
    p = _clear_denominators(p)
    c = content(p)
    if p.lc < 0:
        c = -c
    return IntPolynomial(a // c for a in p.coeffs)


def _clear_denominators(p: IntPolynomial) -> IntPolynomial:
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    if den == 1:
        return p
    return IntPolynomial(int(c * den) for c in p.coeffs)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``lc(b)^(deg a - deg b + 1) * a mod b`` computed in the integers."""
    db, lb = b.degree, b.lc
    rem = list(a.coeffs)
    e = a.degree - db + 1
    while len(rem) - 1 >= db:
        lr = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, c in enumerate(b.coeffs):
            rem[shift + j] -= lr * c
        rem.pop()
        e -= 1
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPolynomial(c * lb**e for c in rem)


def gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient.

    Rational inputs go through the subresultant pseudo-remainder sequence;
    complex-rational inputs fall back to monic Euclid over Q(i).
    """
    p, q = _as_poly(p), _as_poly(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if not (p.is_rational() and q.is_rational()):
        return _field_gcd(p, q)
    if p.is_zero():
        return primitive_part(q)
    if q.is_zero():
        return primitive_part(p)
    a, b = primitive_part(p), primitive_part(q)
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return IntPolynomial((1,))
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        if r.degree == 0:
            return IntPolynomial((1,))
        a, b = b, IntPolynomial(c // (g * h**delta) for c in r.coeffs)
        g = a.lc
        h = g**delta // h ** (delta - 1) if delta > 0 else h
    return primitive_part(b)


def gcd_many(polys) -> IntPolynomial:
    return reduce(gcd, polys)


def _field_gcd(p, q):
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def bezout(p: IntPolynomial, q: IntPolynomial):
    """Extended Euclid over Q: returns ``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = IntPolynomial((1,)), IntPolynomial()
    t0, t1 = IntPolynomial(), IntPolynomial((1,))
    while not r1.is_zero():
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = Fraction(1) / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_decomposition(p: IntPolynomial):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with primitive factors."""
    if p.degree < 1:
        return []
    p = primitive_part(p)
    out = []
    dp = p.derivative()
    a = gcd(p, dp)
    b = divide_exact(p, a)
    c = divide_exact(dp, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d) if not d.is_zero() else b
        if a.degree > 0:
            out.append((primitive_part(a), i))
        b = divide_exact(b, a)
        c = divide_exact(d, a)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    exact: Fraction | None = None


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    certified: bool

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def values(self):
        return [r.value for r in self.roots]

    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)


def _divisors(n: int, limit: int = 10**12):
    n = abs(n)
    if n > limit:
        return None
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def backward_residual(p: IntPolynomial, x: complex) -> float:
    """``|p(x)| / sum |a_i| |x|^i``, a scale-free residual."""
    num = 0j
    den = 0.0
    ax = abs(x)
    for c in reversed(p.coeffs):
        num = num * x + complex(c)
    for i, c in enumerate(p.coeffs):
        den += abs(complex(c)) * ax**i
    return abs(num) / den if den else 0.0


def _aberth(coeffs: np.ndarray, z0: np.ndarray, tol: float, max_iter: int):
    """Simultaneous Aberth-Ehrlich refinement; ``coeffs`` highest degree first."""
    dcoeffs = np.polyder(coeffs)
    z = z0.astype(complex).copy()
    n = len(z)
    for it in range(max_iter):
        pz = np.polyval(coeffs, z)
        dpz = np.polyval(dcoeffs, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            s = (1.0 / diff).sum(axis=1) - 1.0  # remove diagonal contribution
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        w = np.where(pz == 0, 0.0, w)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            return z, it + 1
    if n == 0:
        return z, 0
    return z, max_iter


def _numeric_roots(p: IntPolynomial, tol: float, max_iter: int):
    coeffs = np.array([complex(c) for c in reversed(p.coeffs)])
    if p.degree == 1:
        return np.array([-coeffs[1] / coeffs[0]])
    comp = np.zeros((p.degree, p.degree), dtype=complex)
    comp[0, :] = -coeffs[1:] / coeffs[0]
    comp[1:, :-1] = np.eye(p.degree - 1)
    start = np.linalg.eigvals(comp)
    z, _ = _aberth(coeffs, start, 1e-15, max_iter)
    return z


def _root_key(r: Root):
    v = r.value
    return (round(abs(v), 9), round(cmath.phase(v), 9) if abs(v) > 0 else 0.0)


def roots(p: IntPolynomial, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> RootSet:
    """All complex roots of a rational polynomial, with multiplicities.

    Rational roots are certified exactly (numerically guided rational root
    test, confirmed by exact evaluation); the rest are approximations with
    backward residual below ``tol``.
    """
    if p.degree < 1:
        raise ValueError("roots() needs a polynomial of degree >= 1")
    if not p.is_rational():
        raise TypeError("roots() requires rational coefficients")
    found: list[Root] = []
    for factor, mult in squarefree_decomposition(p):
        rest = factor
        exact_roots = []
        if rest[0] == 0:
            exact_roots.append(Fraction(0))
            rest = divide_exact(rest, IntPolynomial((0, 1)))
        if rest.degree >= 1:
            approx = _numeric_roots(rest, tol, max_iter)
            denoms = _divisors(rest.lc) or [1]
            for a in approx:
                if abs(a.imag) > 1e-6 * max(1.0, abs(a)):
                    continue
                for q in denoms:
                    cand = Fraction(round(a.real * q), q)
                    if cand not in exact_roots and rest.eval(cand) == 0:
                        exact_roots.append(cand)
                        break
        for r in exact_roots:
            if r != 0:
                rest = divide_exact(rest, IntPolynomial((-r, 1)))
            found.append(Root(complex(r), mult, r))
        if rest.degree >= 1:
            approx = _numeric_roots(primitive_part(rest), tol, max_iter)
            for a in approx:
                if backward_residual(rest, a) >= tol:
                    raise RootFindingError(
                        f"root refinement for {rest} did not converge (residual "
                        f"{backward_residual(rest, a):.3g} at {a})"
                    )
                found.append(Root(complex(a), mult, None))
    found.sort(key=_root_key)
    return RootSet(tuple(found), all(r.exact is not None for r in found))


def expand_roots(rs: RootSet) -> np.ndarray:
    """Monic coefficient vector (lowest first) rebuilt from a RootSet."""
    vals = [r.value for r in rs for _ in range(r.multiplicity)]
    return np.poly(np.array(vals, dtype=complex))[::-1]
