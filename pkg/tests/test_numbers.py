from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from pompeiu.numbers import QQi, conj, exact, format_exact, is_exact, make, parse_exact

from conftest import rationals

gaussian = st.builds(QQi, rationals, rationals)


@given(gaussian, gaussian, gaussian)
def test_field_axioms(x, y, w):
    assert (x + y) * w == x * w + y * w
    assert x * y == y * x
    assert x - x == 0
    if x != 0:
        assert (y / x) * x == y


@given(gaussian, gaussian)
def test_agrees_with_complex(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9
    assert complex(conj(x)) == complex(x).conjugate()


@given(gaussian)
def test_format_round_trip(x):
    assert parse_exact(format_exact(x)) == x


def test_make_and_exact():
    assert make(Fraction(1, 2), 0) == Fraction(1, 2)
    assert isinstance(make(1, 0), Fraction)
    assert make(1, 2) == QQi(1, 2)
    assert exact("3/4") == Fraction(3, 4)
    assert exact(2) == 2 and is_exact(QQi(1, 1)) and not is_exact(0.5)
    assert format_exact(Fraction(-3, 4)) == "-3/4"
    assert format_exact(2) == "2/1"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQi(1, 1) / 0
