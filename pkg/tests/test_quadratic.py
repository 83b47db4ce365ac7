"""Exact arithmetic on quadratic irrationals."""

import pytest
from hypothesis import given, strategies as st

from splythoff.quadratic import (
    GOLDEN_RATIO,
    QuadraticIrrational,
    sqrt_of,
    squarefree_split,
)


def test_squarefree_split():
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(12) == (3, 2)
    assert squarefree_split(360) == (10, 6)
    assert squarefree_split(49) == (1, 7)
    with pytest.raises(ValueError):
        squarefree_split(-4)


def test_canonical_form():
    x = QuadraticIrrational(2, 3, 12, -4)  # (2 + 3*sqrt(12)) / -4
    assert (x.p, x.q, x.d, x.r) == (-1, -3, 3, 2)
    y = QuadraticIrrational(5, 2, 4, 3)  # sqrt(4) collapses to rational
    assert (y.p, y.q, y.d, y.r) == (3, 0, 1, 1)
    assert y.is_integer
    with pytest.raises(ZeroDivisionError):
        QuadraticIrrational(1, 1, 5, 0)


def test_golden_ratio_identities():
    phi = GOLDEN_RATIO
    assert phi * phi == phi + 1
    assert 1 / phi == phi - 1
    assert phi.floor() == 1
    assert (phi * phi).floor() == 2
    assert not phi.is_rational


def test_sqrt_arithmetic():
    r2 = sqrt_of(2)
    assert r2 * r2 == 2
    assert (r2 + r2) / 2 == r2
    assert (1 / r2) * 2 == r2
    assert r2.floor() == 1
    assert (-r2).floor() == -2
    with pytest.raises(ValueError):
        r2 + sqrt_of(3)  # incompatible radicals
    with pytest.raises(ZeroDivisionError):
        1 / QuadraticIrrational(0)


def test_comparisons_and_int_coercion():
    phi = GOLDEN_RATIO
    assert 1 < phi < 2
    assert phi > QuadraticIrrational(8, 0, 1, 5)  # 8/5
    assert phi < QuadraticIrrational(13, 0, 1, 8)  # 13/8
    assert QuadraticIrrational(7) == 7
    assert hash(QuadraticIrrational(7, 0, 3, 1)) == hash(QuadraticIrrational(7))


@st.composite
def quadratics(draw):
    p = draw(st.integers(min_value=-200, max_value=200))
    q = draw(st.integers(min_value=-200, max_value=200))
    d = draw(st.integers(min_value=1, max_value=60))
    r = draw(st.integers(min_value=1, max_value=40))
    return QuadraticIrrational(p, q, d, r)


@given(quadratics())
def test_floor_bracketing(x):
    f = x.floor()
    assert QuadraticIrrational(f) <= x < QuadraticIrrational(f + 1)


@given(quadratics())
def test_sign_matches_float(x):
    value = float(x)
    if abs(value) > 1e-6:
        assert x.sign() == (1 if value > 0 else -1)
    if x.sign() == 0:
        assert x == 0


@given(quadratics(), quadratics())
def test_field_operations_exact(x, y):
    try:
        x._common_d(y)
    except ValueError:
        return  # incompatible radicals by construction
    assert x + y - y == x
    assert x - x == 0
    if y != 0:
        assert (x * y) / y == x


@given(quadratics())
def test_double_negation_and_inverse(x):
    assert -(-x) == x
    if x != 0:
        assert x * x.inverse() == 1
