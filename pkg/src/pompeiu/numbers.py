"""Exact complex-rational scalars.

Values with a zero imaginary part are kept as plain :class:`fractions.Fraction`
(or ``int``) so the common real case stays cheap; :class:`QQi` only appears when
an imaginary part is present.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QQi:
    """A Gaussian rational ``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return make(self.re, -self.im)

    def __add__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        c, d = o
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("complex rational division by zero")
        a, b = self.re, self.im
        return make((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return QQi(*o) / self

    def __eq__(self, other):
        o = _parts(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o[0] and self.im == o[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        return f"QQi({self.re}, {self.im})"

    def __str__(self):
        return format_exact(self)


def _parts(x):
    if isinstance(x, QQi):
        return x.re, x.im
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return Fraction(x), Fraction(0)
    return None


def make(re, im=0):
    """Canonical exact scalar: a Fraction when ``im == 0``, else a QQi."""
    if im == 0:
        return Fraction(re)
    return QQi(re, im)


def exact(x):
    """Coerce ``int``/``Fraction``/``QQi`` (or a numeric string) to canonical form."""
    if isinstance(x, QQi):
        return make(x.re, x.im)
    if isinstance(x, str):
        return parse_exact(x)
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact scalar: {x!r}")


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QQi)) and not isinstance(x, bool)


def conj(x):
    if isinstance(x, QQi):
        return x.conjugate()
    if isinstance(x, complex):
        return x.conjugate()
    return x


def _fmt_frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_exact(x) -> str:
    """Serialize as ``num/den`` or ``num/den+num/den i``."""
    if isinstance(x, QQi):
        re, im = x.re, x.im
    else:
        re, im = Fraction(x), Fraction(0)
    if im == 0:
        return _fmt_frac(re)
    sign = "+" if im >= 0 else "-"
    return f"{_fmt_frac(re)}{sign}{_fmt_frac(abs(im))}i"


def parse_exact(s: str):
    """Inverse of :func:`format_exact`; also accepts plain integers."""
    s = s.strip().replace(" ", "")
    if not s.endswith("i"):
        return Fraction(s)
    body = s[:-1]
    # split at the sign that separates real and imaginary parts (not a leading sign)
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "eE/":
            return make(Fraction(body[:pos]), Fraction(body[pos:]))
    return make(0, Fraction(body) if body not in ("", "+", "-") else Fraction(body + "1"))
