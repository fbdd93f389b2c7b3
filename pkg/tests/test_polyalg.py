from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from pompeiu.free_group import sphere_size
from pompeiu.polyalg import (
    InexactDivisionError,
    IntPolynomial,
    RootFindingError,
    bezout,
    content,
    divide_exact,
    expand_roots,
    format_poly,
    gcd,
    gcd_many,
    is_simple_root,
    primitive_part,
    roots,
    squarefree_decomposition,
)
from pompeiu.radial import p_poly

Z = sympy.Symbol("z")
z = IntPolynomial.z()


def P(*coeffs):
    return IntPolynomial(coeffs)


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], Z, domain="QQ")


def sympy_primitive_gcd(p, q):
    g = sympy.Poly(sympy.gcd(to_sympy(p).as_expr(), to_sympy(q).as_expr()), Z, domain="ZZ")
    _, prim = g.primitive()
    coeffs = [int(c) for c in reversed(prim.all_coeffs())]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return IntPolynomial(coeffs)


def normalized(p):
    p = primitive_part(p)
    return p.scale(-1) if p.lc < 0 else p


small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(IntPolynomial)


def test_basic_arithmetic():
    p = P(0, -7, 0, 1)
    assert p.degree == 3 and p.lc == 1
    assert P().degree == -1
    assert p.derivative() == P(-7, 0, 3)
    assert (z * z - 4).eval(4) == 12 == sphere_size(2, 2)
    assert divide_exact(P(-36, -7, 0, 1), z - 4) == P(9, 4, 1)
    with pytest.raises(InexactDivisionError):
        divide_exact(z * z + 1, z - 1)
    assert P(Fraction(4, 2), 1).coeffs == (2, 1)


def test_format_and_json():
    assert format_poly(z * z - 16) == "z^2 - 16"
    assert format_poly(z - 4) == "z - 4"
    assert format_poly(P(0, -7, 0, 1)) == "z^3 - 7*z"
    assert format_poly(P()) == "0"
    p = P(-36, -7, 0, 1)
    assert p.to_json() == ["-36", "-7", "0", "1"]
    assert IntPolynomial.from_json(p.to_json()) == p


def test_gcd_examples():
    assert gcd(z, z * z - 4) == P(1)
    assert gcd(z, P(0, -7, 0, 1)) == z
    assert gcd(z * z - 16, P(-96, 0, -10, 0, 1)) == z * z - 16
    assert gcd(z * z - 16, P(-36, -7, 0, 1)) == z - 4


def test_gcd_normalization():
    assert gcd(P(6, 6), P(-4, -4)) == P(1, 1)
    assert gcd(P(0), P(0, -3)) == z
    assert gcd(P(0), P(5)) == P(1)
    with pytest.raises(ValueError):
        gcd(P(), P())


@given(small_polys, small_polys)
def test_gcd_matches_sympy(p, q):
    assume(not (p.is_zero() and q.is_zero()))
    g = gcd(p, q)
    assert g == sympy_primitive_gcd(p, q)
    assert content(g) == 1 and g.lc > 0
    for x in (p, q):
        if not x.is_zero():
            divide_exact(x, g)


@given(small_polys, small_polys, small_polys)
def test_gcd_common_factor(p, q, g):
    assume(not p.is_zero() and not q.is_zero() and not g.is_zero())
    assert gcd(p * g, q * g) == normalized(g * gcd(p, q))


@given(small_polys, small_polys)
def test_bezout(p, q):
    assume(not (p.is_zero() and q.is_zero()))
    g, s, t = bezout(p, q)
    assert s * p + t * q == g
    assert normalized(g) == gcd(p, q)


def test_gcd_many():
    assert gcd_many([z * (z - 1), z * (z + 1), z * z]) == z
    assert gcd_many([z - 1]) == z - 1


def test_roots_examples():
    rs = roots(z * z - 4)
    assert sorted(r.exact for r in rs) == [-2, 2] and rs.certified
    rs = roots(P(0, -7, 0, 1))
    assert rs.roots[0].exact == 0
    assert sorted(round(r.value.real, 12) for r in rs) == [-2.645751311065, 0.0, 2.645751311065]
    assert not rs.certified
    rs = roots((z - 1) * (z - 1))
    assert [(r.exact, r.multiplicity) for r in rs] == [(1, 2)]
    with pytest.raises(ValueError):
        roots(P(3))


def test_roots_rational_with_denominator():
    rs = roots(P(-3, 2) * P(1, 3) * (z * z + 1))
    exact = sorted(r.exact for r in rs if r.exact is not None)
    assert exact == [Fraction(-1, 3), Fraction(3, 2)]
    assert rs.total_multiplicity() == 4


def test_roots_nonconvergence_is_reported():
    with pytest.raises(RootFindingError):
        roots(P(1, 0, 0, 0, 0, 1, 3, 7, 11, 1), tol=0)


def test_roots_deterministic():
    p = P(5, -3, 0, 2, 1, 7, -1)
    assert roots(p) == roots(p)


@settings(max_examples=30)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.lists(st.integers(1, 3), min_size=6, max_size=6), st.integers(0, 2))
def test_roots_reexpand(rts, mults, extra):
    # products of linear and irreducible-ish quadratic factors, degree <= 12
    p = IntPolynomial((1,))
    for r, m in zip(sorted(set(rts)), mults):
        p = p * (z - r) ** m
    for j in range(extra):
        p = p * (z * z + z + 2 + j)
    assume(p.degree <= 12)
    rs = roots(p)
    assert rs.total_multiplicity() == p.degree
    assert sorted((r.exact, r.multiplicity) for r in rs if r.exact is not None) == sorted(
        (Fraction(r), m) for r, m in zip(sorted(set(rts)), mults)
    )
    rebuilt = expand_roots(rs)
    expect = np.array([float(c) for c in p.coeffs]) / float(p.lc)
    assert np.allclose(rebuilt, expect, rtol=1e-6, atol=1e-6 * np.abs(expect).max())


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.lists(st.integers(1, 3), min_size=5, max_size=5))
def test_squarefree_decomposition(rts, mults):
    p = IntPolynomial((2,))
    for r, m in zip(sorted(set(rts)), mults):
        p = p * (z - r) ** m
    parts = squarefree_decomposition(p)
    prod = IntPolynomial((1,))
    for f, m in parts:
        assert gcd(f, f.derivative()).degree == 0
        prod = prod * f**m
    assert primitive_part(prod) == primitive_part(p)


def test_is_simple_root_examples():
    assert is_simple_root(P(-36, -7, 0, 1), 4)
    assert not is_simple_root((z - 1) * (z - 1), 1)
    assert not is_simple_root(z * z - 16, 3)
    assert is_simple_root(P(-1, 2), Fraction(1, 2))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_recurrence_values(k):
    for n in range(51):
        p = p_poly(k, n)
        assert p.eval(2 * k) == sphere_size(k, n)
        if n % 2 == 0:
            assert p.eval(-2 * k) == sphere_size(k, n)
        else:
            assert p.eval(0) == 0
        if n >= 1:
            assert is_simple_root(p - sphere_size(k, n), 2 * k)
        if 1 <= n <= 49:
            assert p_poly(k, n + 1).derivative().eval(2 * k) > p.derivative().eval(2 * k)


@given(st.integers(2, 4), st.integers(1, 30))
def test_p_poly_matches_symbolic_recurrence(k, n):
    w2 = 2 * k - 1
    q = [sympy.Integer(1), Z, Z**2 - 2 * k]
    while len(q) <= n:
        q.append(sympy.expand(Z * q[-1] - w2 * q[-2]))
    assert to_sympy(p_poly(k, n)) == sympy.Poly(q[n], Z, domain="QQ")
