"""The radial subalgebra of the group ring of F_k.

A radial element ``sum a_n chi_n`` is stored as its coefficient sequence.  The
hat transform sends ``chi_n`` to the recurrence polynomial ``p_n`` and is a ring
isomorphism onto C[z], so radial products are computed as polynomial products.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import free_group as fg
from .numbers import exact, format_exact, is_exact, parse_exact
from .polyalg import IntPolynomial


def _trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _coerce(c):
    return exact(c) if is_exact(c) else c


@dataclass(frozen=True)
class RadialElement:
    k: int
    coeffs: tuple = ()

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("radial algebra needs k >= 2")
        object.__setattr__(self, "coeffs", _trim(_coerce(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other):
        if not isinstance(other, RadialElement):
            raise TypeError(f"expected RadialElement, got {type(other).__name__}")
        if other.k != self.k:
            raise fg.GroupMismatchError(f"F_{self.k} vs F_{other.k}")

    def __add__(self, other):
        if not isinstance(other, RadialElement):
            other = RadialElement(self.k, (other,))
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RadialElement(self.k, tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return RadialElement(self.k, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, RadialElement):
            other = RadialElement(self.k, (other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return RadialElement(self.k, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RadialElement):
            return radial_convolve(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def expand(self) -> fg.GroupRingElement:
        """``sum a_n chi_n`` as an explicit group-ring element."""
        terms = {}
        for n, a in enumerate(self.coeffs):
            if a != 0:
                for w in fg._sphere(self.k, n):
                    terms[w] = a
        return fg.GroupRingElement(self.k, terms)

    def on_ball(self, radius: int) -> fg.BallFunction:
        return fg.BallFunction.from_radial(self.k, radius, [self[n] for n in range(radius + 1)])

    def to_json(self) -> str:
        return json.dumps([format_exact(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, k: int, text: str) -> "RadialElement":
        return cls(k, tuple(parse_exact(s) for s in json.loads(text)))

    def __repr__(self):
        return f"RadialElement(k={self.k}, {[str(c) for c in self.coeffs]})"


def chi(k: int, n: int) -> RadialElement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return RadialElement(k, (0,) * n + (1,))


def from_radii(k: int, radii) -> RadialElement:
    """Characteristic function of the radial set ``union_{n in radii} E_n``."""
    radii = set(radii)
    if not radii or min(radii) < 0:
        raise ValueError("radii must be a nonempty set of nonnegative integers")
    return RadialElement(k, tuple(1 if n in radii else 0 for n in range(max(radii) + 1)))


@lru_cache(maxsize=None)
def _p_table(k: int, n: int) -> tuple:
    # p_2 = z^2 - 2k is NOT z*p_1 - (2k-1)*p_0; the uniform recurrence starts at n = 2
    z = IntPolynomial.z()
    if n == 0:
        return (IntPolynomial((1,)),)
    if n == 1:
        return _p_table(k, 0) + (z,)
    if n == 2:
        return _p_table(k, 1) + (IntPolynomial((-2 * k, 0, 1)),)
    prev = _p_table(k, n - 1)
    w2 = 2 * k - 1
    return prev + (z * prev[-1] - prev[-2].scale(w2),)


def p_poly(k: int, n: int) -> IntPolynomial:
    """``p_0 = 1, p_1 = z, p_2 = z^2 - 2k, p_{n+1} = z p_n - (2k-1) p_{n-1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 2:
        raise ValueError("k must be >= 2")
    return _p_table(k, n)[n]


def p_value(k: int, n: int, z):
    """``p_n(z)`` via the recurrence directly on values (works for floats)."""
    if n == 0:
        return 1 + 0 * z
    if n == 1:
        return z
    a, b = z, z * z - 2 * k
    for _ in range(2, n):
        a, b = b, z * b - (2 * k - 1) * a
    return b


def hat(alpha: RadialElement) -> IntPolynomial:
    """``sum a_j p_j``."""
    out = IntPolynomial()
    for j, a in enumerate(alpha.coeffs):
        if a != 0:
            out = out + p_poly(alpha.k, j).scale(a)
    return out


def from_hat(k: int, poly: IntPolynomial) -> RadialElement:
    """Inverse of :func:`hat`: expand ``poly`` in the monic ``p_n`` basis."""
    coeffs = [0] * (poly.degree + 1)
    rest = poly
    while not rest.is_zero():
        d = rest.degree
        c = rest.lc
        coeffs[d] = c
        rest = rest - p_poly(k, d).scale(c)
    return RadialElement(k, tuple(coeffs))


def radial_convolve(alpha: RadialElement, beta: RadialElement) -> RadialElement:
    alpha._same(beta)
    return from_hat(alpha.k, hat(alpha) * hat(beta))


def polynomial_in_chi1(k: int, poly: IntPolynomial) -> RadialElement:
    """``poly(chi_1)`` evaluated by Horner's rule inside the radial algebra."""
    chi1 = chi(k, 1)
    acc = RadialElement(k, ())
    for c in reversed(poly.coeffs):
        acc = radial_convolve(acc, chi1) + RadialElement(k, (c,))
    return acc


def spherical_profile(k: int, z, radius: int) -> list:
    """``[p_n(z) / e_n for n in 0..radius]``; exact for exact ``z``.

    Uses the normalized recurrence ``q_{n+1} = (z q_n - q_{n-1}) / (2k-1)``
    (valid from ``n = 1`` on), which avoids overflow for float ``z``.
    """
    if is_exact(z):
        z = exact(z)
        one = Fraction(1)
    else:
        z = complex(z)
        one = 1 + 0j
    out = [one, z / (2 * k)]
    w2 = 2 * k - 1
    while len(out) <= radius:
        out.append((z * out[-1] - out[-2]) / w2)
    return [exact(v) if is_exact(v) else v for v in out[: radius + 1]]


def spherical(k: int, z, radius: int) -> fg.BallFunction:
    """Truncation of ``phi_z = sum p_n(z)/e_n chi_n`` to the radius-``R`` ball."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return fg.BallFunction.from_radial(k, radius, spherical_profile(k, z, radius))


def radialize(f: fg.BallFunction) -> RadialElement:
    """Sphere averages: coefficient ``n`` is the mean of ``f`` over ``E_n``."""
    sums = [0] * (f.radius + 1)
    exact_mode = f.is_exact()
    if exact_mode:
        sums = [Fraction(0)] * (f.radius + 1)
    for w, v in f.items():
        sums[len(w)] += v
    return RadialElement(
        f.k,
        tuple(
            (s / fg.sphere_size(f.k, n)) if exact_mode else complex(s) / fg.sphere_size(f.k, n)
            for n, s in enumerate(sums)
        ),
    )


def radialize_profile(f: fg.BallFunction) -> list:
    """Like :func:`radialize` but keeps trailing zeros (one entry per radius)."""
    r = radialize(f)
    return [r[n] for n in range(f.radius + 1)]
