"""Reduced words, Cayley spheres/balls, group-ring arithmetic and convolution in F_k.

A word is a tuple of nonzero ints: ``+i`` is generator ``i`` (1-based), ``-i``
its inverse.  ``()`` is the identity.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numbers import conj, exact, format_exact, is_exact, make

MAX_GENERATORS = 26


class GroupMismatchError(ValueError):
    pass


def sphere_size(k: int, n: int) -> int:
    """``e_n = 2k (2k-1)^(n-1)`` for ``n >= 1``, ``e_0 = 1``."""
    if n < 0:
        raise ValueError("negative radius")
    return 1 if n == 0 else 2 * k * (2 * k - 1) ** (n - 1)


def ball_size(k: int, radius: int) -> int:
    return sum(sphere_size(k, n) for n in range(radius + 1))


def _check_k(k: int):
    if not 2 <= k <= MAX_GENERATORS:
        raise ValueError(f"generator count must be in 2..{MAX_GENERATORS}, got {k}")


def _check_letters(letters, k):
    for a in letters:
        if a == 0 or abs(a) > k:
            raise ValueError(f"generator index {abs(a)} out of range 1..{k}")


class ReducedWord(tuple):
    """A freely reduced word; construct via :func:`reduce`."""

    __slots__ = ()

    def length(self) -> int:
        return len(self)

    def inverse(self) -> "ReducedWord":
        return ReducedWord(-a for a in reversed(self))

    def __repr__(self):
        return f"ReducedWord({format_word(self)!r})"


IDENTITY = ReducedWord()


def _letter_pairs(letters):
    """Accept signed ints or ``(index, sign)`` pairs."""
    out = []
    for a in letters:
        if isinstance(a, tuple):
            i, s = a
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
            a = i * s
        out.append(int(a))
    return out


def reduce(letters, k: int | None = None) -> ReducedWord:
    """Free reduction by a single stack pass; idempotent."""
    letters = _letter_pairs(letters)
    if k is not None:
        _check_letters(letters, k)
    elif any(a == 0 for a in letters):
        raise ValueError("generator index 0 is not allowed")
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return ReducedWord(stack)


def _mul(x: tuple, y: tuple) -> tuple:
    # both inputs reduced: cancellation only happens at the junction
    i = 0
    n = min(len(x), len(y))
    lx = len(x)
    while i < n and x[lx - 1 - i] == -y[i]:
        i += 1
    return x[: lx - i] + y[i:]


def multiply(x, y, k: int | None = None) -> ReducedWord:
    if k is not None:
        _check_letters(x, k)
        _check_letters(y, k)
    return ReducedWord(_mul(tuple(x), tuple(y)))


def invert(x) -> ReducedWord:
    return ReducedWord(-a for a in reversed(x))


def _letters(k: int):
    out = []
    for i in range(1, k + 1):
        out += [i, -i]
    return out


@lru_cache(maxsize=None)
def _sphere(k: int, n: int) -> tuple:
    if n == 0:
        return ((),)
    letters = _letters(k)
    prev = _sphere(k, n - 1)
    if n == 1:
        return tuple((a,) for a in letters)
    return tuple(w + (a,) for w in prev for a in letters if a != -w[-1])


def sphere(k: int, n: int) -> list:
    """All words of length exactly ``n`` in lexicographic order (a < A < b < B ...)."""
    _check_k(k)
    if n < 0:
        raise ValueError("radius must be nonnegative")
    return [ReducedWord(w) for w in _sphere(k, n)]


@lru_cache(maxsize=None)
def _ball(k: int, radius: int) -> tuple:
    words = []
    for n in range(radius + 1):
        words.extend(_sphere(k, n))
    return tuple(words)


@lru_cache(maxsize=None)
def _ball_index(k: int, radius: int) -> dict:
    return {w: i for i, w in enumerate(_ball(k, radius))}


def ball(k: int, radius: int) -> list:
    _check_k(k)
    return [ReducedWord(w) for w in _ball(k, radius)]


# ---------------------------------------------------------------------------
# word serialization: a..z generators, A..Z inverses, "e" (or "1") identity


def identity_token(k: int) -> str:
    # 'e' doubles as the fifth generator once k >= 5
    return "1" if k >= 5 else "e"


def format_word(w, k: int | None = None) -> str:
    if not w:
        return identity_token(k or 1)
    return "".join(chr(ord("a") + a - 1) if a > 0 else chr(ord("A") - a - 1) for a in w)


def parse_word(s: str, k: int | None = None) -> ReducedWord:
    s = s.strip()
    if s == "1" or (s == "e" and (k is None or k < 5)):
        return IDENTITY
    letters = []
    for ch in s:
        if "a" <= ch <= "z":
            letters.append(ord(ch) - ord("a") + 1)
        elif "A" <= ch <= "Z":
            letters.append(-(ord(ch) - ord("A") + 1))
        else:
            raise ValueError(f"bad letter {ch!r} in word {s!r}")
    return reduce(letters, k)


# ---------------------------------------------------------------------------
# group ring


@dataclass(frozen=True)
class GroupRingElement:
    """Finitely supported exact function on F_k, ``terms: word -> coefficient``."""

    k: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_k(self.k)
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            _check_letters(w, self.k)
            if reduce(w) != w:
                raise ValueError(f"word {w} is not reduced")
            c = exact(c)
            if c != 0:
                clean[ReducedWord(w)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def delta(cls, k: int, w=()):
        return cls(k, {reduce(w, k): 1})

    @classmethod
    def indicator(cls, k: int, words, weight=1):
        return cls(k, {reduce(w, k): weight for w in words})

    def __getitem__(self, w):
        return self.terms.get(tuple(w), 0)

    def __call__(self, w):
        return self[w]

    def support_radius(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if other.k != self.k:
            raise GroupMismatchError(f"F_{self.k} vs F_{other.k}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(self.k, out)

    def __neg__(self):
        return GroupRingElement(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GroupRingElement(self.k, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return convolve(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(
            f"{format_exact(c)}*{format_word(w, self.k)}" for w, c in sorted(self.terms.items(), key=lambda t: word_key(t[0]))
        )
        return f"GroupRingElement(k={self.k}, {body or '0'})"


def word_key(w):
    """Sort key: by length, then lexicographic with a < A < b < B ..."""
    return (len(w), tuple((abs(a), a < 0) for a in w))


def convolve(alpha: GroupRingElement, f: GroupRingElement) -> GroupRingElement:
    """``(alpha * f)(g) = sum_h alpha(g h^-1) f(h)``."""
    alpha._same(f)
    out: dict = {}
    for x, a in alpha.terms.items():
        for h, b in f.terms.items():
            g = _mul(x, h)
            out[g] = out.get(g, 0) + a * b
    return GroupRingElement(alpha.k, out)


def left_translate(g, f: GroupRingElement) -> GroupRingElement:
    """``(L_g f)(x) = f(g x)``: the support moves to ``g^-1 supp f``."""
    g = reduce(g, f.k)
    gi = tuple(invert(g))
    return GroupRingElement(f.k, {_mul(gi, w): c for w, c in f.terms.items()})


def tilde(f: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(f.k, {tuple(invert(w)): c for w, c in f.terms.items()})


def conjugate(f: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(f.k, {w: conj(c) for w, c in f.terms.items()})


def pairing(alpha: GroupRingElement, f: GroupRingElement):
    """``<alpha, f> = sum_g alpha(g) * conj(f(g))``."""
    alpha._same(f)
    acc = Fraction(0)
    for w, a in alpha.terms.items():
        b = f.terms.get(w)
        if b is not None:
            acc = acc + a * conj(b)
    return exact(acc)


# ---------------------------------------------------------------------------
# functions on a Cayley ball


@dataclass(frozen=True)
class BallFunction:
    """Values on every word of length <= radius, stored in ball order.

    ``values`` holds exact scalars (Fraction/QQi) or floats/complex.
    """

    k: int
    radius: int
    values: tuple

    def __post_init__(self):
        _check_k(self.k)
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        vals = tuple(self.values)
        if len(vals) != ball_size(self.k, self.radius):
            raise ValueError(
                f"expected {ball_size(self.k, self.radius)} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, k: int, radius: int, fn):
        return cls(k, radius, tuple(fn(ReducedWord(w)) for w in _ball(k, radius)))

    @classmethod
    def constant(cls, k: int, radius: int, c):
        return cls(k, radius, (c,) * ball_size(k, radius))

    @classmethod
    def from_radial(cls, k: int, radius: int, profile):
        """``profile[n]`` is the value on words of length ``n``."""
        return cls(k, radius, tuple(profile[len(w)] for w in _ball(k, radius)))

    @classmethod
    def from_element(cls, f: GroupRingElement, radius: int):
        return cls(f.k, radius, tuple(f.terms.get(w, Fraction(0)) for w in _ball(f.k, radius)))

    @property
    def words(self):
        return _ball(self.k, self.radius)

    @property
    def index(self) -> dict:
        return _ball_index(self.k, self.radius)

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def __getitem__(self, w):
        return self.values[self.index[tuple(w)]]

    def __len__(self):
        return len(self.values)

    def items(self):
        return zip(self.words, self.values)

    def restrict(self, radius: int) -> "BallFunction":
        if radius > self.radius:
            raise ValueError("cannot extend a ball function")
        return BallFunction(self.k, radius, self.values[: ball_size(self.k, radius)])

    def tilde(self) -> "BallFunction":
        idx = self.index
        return BallFunction(
            self.k, self.radius, tuple(self.values[idx[tuple(-a for a in reversed(w))]] for w in self.words)
        )

    def map(self, fn) -> "BallFunction":
        return BallFunction(self.k, self.radius, tuple(fn(v) for v in self.values))

    def __sub__(self, other):
        _same_ball(self, other)
        return BallFunction(self.k, self.radius, tuple(a - b for a, b in zip(self.values, other.values)))

    def __add__(self, other):
        _same_ball(self, other)
        return BallFunction(self.k, self.radius, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "BallFunction":
        return self.map(lambda v: c * v)

    def max_abs(self):
        """Max |value|; exact when all values are rational."""
        if not self.values:
            return 0
        if all(isinstance(v, (int, Fraction)) for v in self.values):
            return max(abs(v) for v in self.values)
        return max(abs(complex(v)) for v in self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["word", "re", "im"])
        exact_mode = self.is_exact()
        for word, v in self.items():
            if exact_mode:
                re, im = _exact_parts(v)
                w.writerow([format_word(word, self.k), _frac(re), _frac(im)])
            else:
                c = complex(v)
                w.writerow([format_word(word, self.k), repr(c.real), repr(c.imag)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, k: int) -> "BallFunction":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [c.strip() for c in rows[0]] != ["word", "re", "im"]:
            raise ValueError("ball CSV must start with header word,re,im")
        data = {}
        exact_mode = True
        parsed = []
        for row in rows[1:]:
            if not row:
                continue
            word, re, im = row
            parsed.append((parse_word(word, k), re.strip(), im.strip()))
            if "/" not in re or "/" not in im:
                exact_mode = False
        for word, re, im in parsed:
            if exact_mode:
                v = make(Fraction(re), Fraction(im))
            else:
                v = complex(float(re), float(im))
            data[tuple(word)] = v
        radius = max((len(w) for w in data), default=0)
        if len(data) != ball_size(k, radius):
            raise ValueError(f"CSV has {len(data)} rows, a radius-{radius} ball of F_{k} has {ball_size(k, radius)}")
        return cls(k, radius, tuple(data[w] for w in _ball(k, radius)))


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _exact_parts(v):
    v = exact(v)
    if isinstance(v, Fraction):
        return v, Fraction(0)
    return v.re, v.im


def _same_ball(a: BallFunction, b: BallFunction):
    if (a.k, a.radius) != (b.k, b.radius):
        raise GroupMismatchError("ball functions live on different balls")


def _zero_like(values):
    return Fraction(0) if all(is_exact(v) for v in values) else 0j


def _integerize(values):
    """Rationals as ``(numerators, common denominator)``; denominator ``None`` otherwise."""
    if not all(isinstance(v, (int, Fraction)) for v in values):
        return values, None
    den = 1
    for v in values:
        den = math.lcm(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in values], den


def _weighted_sums(f: BallFunction, inner: int, terms, left: bool) -> BallFunction:
    # left: g -> sum c f(y g); right: g -> sum c f(g y).  Terms are grouped by
    # coefficient so the inner sums run on plain integers where possible.
    vals, den = _integerize(f.values)
    idx = f.index
    groups: dict = {}
    for y, c in terms:
        groups.setdefault(c, []).append(tuple(y))
    groups = list(groups.items())
    zero = 0 if den is not None else _zero_like(f.values)
    out = []
    for g in _ball(f.k, inner):
        acc = zero
        for c, ys in groups:
            if left:
                s = sum(vals[idx[_mul(y, g)]] for y in ys)
            else:
                s = sum(vals[idx[_mul(g, y)]] for y in ys)
            acc = acc + (s if c == 1 else c * s)
        out.append(acc)
    if den is not None:
        out = [exact(Fraction(a) / den) for a in out]
    return BallFunction(f.k, inner, tuple(out))


def convolve_on_ball(alpha: GroupRingElement, f: BallFunction) -> BallFunction:
    """``alpha * f`` evaluated on the inner ball of radius ``R - m``.

    ``m`` is the longest word in ``supp(alpha)``; every ``x^-1 g`` needed lies in
    the radius-``R`` ball.
    """
    if alpha.k != f.k:
        raise GroupMismatchError(f"F_{alpha.k} vs F_{f.k}")
    m = alpha.support_radius()
    if f.radius < m:
        raise ValueError(f"ball radius {f.radius} is smaller than support radius {m}")
    terms = [(tuple(-a for a in reversed(x)), c) for x, c in alpha.terms.items()]
    return _weighted_sums(f, f.radius - m, terms, left=True)


def right_sphere_sums(f: BallFunction, n: int, weights=None) -> BallFunction:
    """``x -> sum_{y in E_n} f(x y)`` (or a weighted sum over a finite set) on radius ``R - n``.

    With ``weights`` given as ``{word: coeff}``, computes ``sum_y w(y) f(x y)``
    and ``n`` must be the support radius of the weights.
    """
    if f.radius < n:
        raise ValueError(f"ball radius {f.radius} is smaller than {n}")
    if weights is None:
        terms = [(y, 1) for y in _sphere(f.k, n)]
    else:
        terms = list(weights.items())
    return _weighted_sums(f, f.radius - n, terms, left=False)
