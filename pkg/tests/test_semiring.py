import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import zsemiring as zs
from zsemiring import Scalar, Semiring, sr_add, sr_mul, sr_try_div


def S(v, sr):
    return Scalar(v, sr)


@pytest.mark.parametrize(
    "sr, a, b, expected",
    [
        ("max-times", 2, 3, 3),
        ("nonnegative", 2, 3, 5),
        ("lukasiewicz", 0.4, 0.9, 0.9),
        ("max-min", 0.2, 0.7, 0.7),
    ],
)
def test_add(sr, a, b, expected):
    assert sr_add(S(a, sr), S(b, sr)).value == expected


@pytest.mark.parametrize(
    "sr, a, b, expected",
    [
        ("max-min", 0.7, 0.3, 0.3),
        ("max-times", 2, 3, 6),
        ("nonnegative", 2, 3, 6),
    ],
)
def test_mul(sr, a, b, expected):
    assert sr_mul(S(a, sr), S(b, sr)).value == expected


def test_lukasiewicz_product():
    assert sr_mul(S(0.7, "lukasiewicz"), S(0.6, "lukasiewicz")).value == pytest.approx(0.3, abs=1e-15)
    assert sr_mul(S(0.3, "lukasiewicz"), S(0.6, "lukasiewicz")).value == 0.0


@pytest.mark.parametrize("sr", list(Semiring))
def test_zero_absorbs_and_one_is_unit(sr):
    for a in (0.0, 0.3, 1.0):
        assert sr_mul(S(a, sr), S(0, sr)).value == 0.0
        assert sr_mul(S(a, sr), S(1, sr)).value == a
        assert sr_add(S(a, sr), S(0, sr)).value == a


def test_try_div():
    assert sr_try_div(S(6, "max-times"), S(2, "max-times")).value == 3
    assert sr_try_div(S(6, "nonnegative"), S(2, "nonnegative")).value == 3
    assert sr_try_div(S(0.5, "max-min"), S(1, "max-min")).value == 0.5
    with pytest.raises(zs.NotInvertibleError):
        sr_try_div(S(0.5, "max-min"), S(0.7, "max-min"))
    with pytest.raises(zs.NotInvertibleError):
        sr_try_div(S(0.5, "lukasiewicz"), S(0.5, "lukasiewicz"))
    with pytest.raises(zs.NotInvertibleError):
        sr_try_div(S(1, "max-times"), S(0, "max-times"))


def test_context_and_domain_errors():
    with pytest.raises(zs.ContextError):
        sr_add(S(1, "max-times"), S(1, "nonnegative"))
    with pytest.raises(zs.DomainError):
        S(-1, "max-times")
    with pytest.raises(zs.DomainError):
        S(1.5, "max-min")
    with pytest.raises(zs.DomainError):
        S(math.inf, "nonnegative")
    with pytest.raises(ValueError):
        zs.as_semiring("tropical-min")


def test_aliases_and_order():
    assert zs.as_semiring("Max-Plus") is Semiring.MAX_TIMES
    assert zs.as_semiring("łukasiewicz") is Semiring.LUKASIEWICZ
    a, b = S(0.2, "max-min"), S(0.5, "max-min")
    assert a <= b and a < b and b >= a and b > a
    # canonical order a <= b iff a + b = b
    assert (a + b).value == b.value


def test_nonnegative_not_idempotent():
    a = S(0.5, "nonnegative")
    assert (a + a).value == 1.0
    assert not Semiring.NONNEGATIVE.idempotent
    assert all(sr.idempotent for sr in Semiring if sr is not Semiring.NONNEGATIVE)


unit_floats = st.floats(0.0, 1.0, allow_nan=False)
pos_floats = st.floats(0.0, 1e6, allow_nan=False)


@given(unit_floats, unit_floats, unit_floats)
def test_maxmin_laws(a, b, c):
    sr = Semiring.MAX_MIN
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.add(a, sr.mul(b, c)) == sr.mul(sr.add(a, b), sr.add(a, c))  # lattice dual law


@given(unit_floats, unit_floats, unit_floats)
def test_lukasiewicz_laws_to_roundoff(a, b, c):
    sr = Semiring.LUKASIEWICZ
    lhs = sr.mul(sr.mul(a, b), c)
    rhs = sr.mul(a, sr.mul(b, c))
    assert abs(lhs - rhs) <= 1e-12
    # distributivity is exact: rounding of a + b - 1 is monotone in b
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))


@given(pos_floats, pos_floats, pos_floats)
def test_maxtimes_distributive_exact(a, b, c):
    sr = Semiring.MAX_TIMES
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))


@given(pos_floats, pos_floats, pos_floats)
def test_nonnegative_laws_to_roundoff(a, b, c):
    sr = Semiring.NONNEGATIVE
    lhs, rhs = sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c))
    assert np.isclose(lhs, rhs, rtol=1e-12, atol=0)


@given(pos_floats, pos_floats, pos_floats, pos_floats)
def test_monotone(a, a2, b, b2):
    lo_a, hi_a = sorted((a, a2))
    lo_b, hi_b = sorted((b, b2))
    for sr in (Semiring.MAX_TIMES, Semiring.NONNEGATIVE):
        assert sr.add(lo_a, lo_b) <= sr.add(hi_a, hi_b)
        assert sr.mul(lo_a, lo_b) <= sr.mul(hi_a, hi_b)
