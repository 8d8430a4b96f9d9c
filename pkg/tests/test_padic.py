import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lsarith.exactnum.padic import PAdicScalar, PrecisionError, vp

primes = st.sampled_from([2, 3, 5, 7])
nonzero = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4).filter(lambda x: x != 0)


def Q(x, p, prec=20):
    return PAdicScalar.from_rational(x, p, prec)


def test_valuations():
    assert vp(48, 2) == 4
    assert Q(Fraction(9, 2), 3).valuation == 2
    assert Q(Fraction(9, 2), 2).valuation == -1
    assert Q(0, 5).valuation == math.inf
    assert Q(7, 5).is_unit()


def test_residue_matches_modular_arithmetic():
    x = Q(Fraction(5, 7), 3, 10)
    assert x.residue(4) == 5 * pow(7, -1, 81) % 81
    with pytest.raises(ValueError):
        Q(Fraction(1, 3), 3).residue(1)


def test_precision_is_tracked():
    x = Q(1, 2, 10)
    y = Q(1 + 2**12, 2, 10)
    # they agree to the working precision
    assert x == y
    d = Q(3, 3, 5) - Q(3 + 3**6, 3, 5)
    assert d.is_zero() and d.abs_prec == 6
    with pytest.raises(PrecisionError):
        Q(1, 2, 4).unit_residue(5)


def test_unhashable():
    with pytest.raises(TypeError):
        hash(Q(1, 2))


@settings(max_examples=200, deadline=None)
@given(primes, nonzero, nonzero)
def test_field_operations_agree_with_rationals(p, x, y):
    X, Y = Q(x, p), Q(y, p)
    assert X + Y == Q(x + y, p)
    assert X - Y == Q(x - y, p)
    assert X * Y == Q(x * y, p)
    assert X / Y == Q(x / y, p)
    assert (X * Y).valuation == X.valuation + Y.valuation


@settings(max_examples=100, deadline=None)
@given(primes, nonzero, st.integers(1, 8))
def test_residue_oracle(p, x, k):
    assume(vp(x.numerator, p) >= vp(x.denominator, p) or x.numerator == 0)
    assume(x.denominator % p != 0)
    want = x.numerator * pow(x.denominator, -1, p**k) % p**k
    assert Q(x, p).residue(k) == want
