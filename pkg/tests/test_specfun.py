import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from bohrradius.errors import DomainError
from bohrradius.specfun import PI2_6, dilog, li2, log_inv1m


def brute_li2(x, terms=200):
    return sum(x ** k / k ** 2 for k in range(1, terms + 1))


def test_endpoints():
    assert dilog(0, 1e-12).value == 0.0
    assert dilog(1, 1e-12).value == PI2_6
    assert math.isclose(PI2_6, 1.6449340668, abs_tol=1e-10)


def test_half_against_partial_sum():
    res = dilog(0.5, 1e-12)
    assert abs(res.value - brute_li2(0.5)) <= res.tail_bound + 1e-15
    assert abs(res.value - 0.5822405265) < 1e-10
    assert abs(li2(0.5) - brute_li2(0.5)) < 2e-15
    assert res.tail_bound <= 1e-12
    assert res.terms_used > 0


@pytest.mark.parametrize("x", [1e-6, 0.1, 0.3, 0.49, 0.5, 0.51, 0.75, 0.9, 0.99, 0.999999])
def test_matches_mpmath(x):
    assert abs(li2(x) - float(mpmath.polylog(2, x))) < 5e-14


def test_reflection_identity(rng):
    for _ in range(50):
        x = rng.uniform(1e-6, 1 - 1e-6)
        lhs = li2(x) + li2(1 - x)
        rhs = PI2_6 - math.log(x) * math.log(1 - x)
        assert abs(lhs - rhs) <= 2e-13


@pytest.mark.parametrize("x", [-0.1, 1.0000001, float("nan")])
def test_domain(x):
    with pytest.raises(DomainError):
        dilog(x)


def test_bad_tol():
    with pytest.raises(DomainError):
        dilog(0.3, tol=0)


@settings(max_examples=200)
@given(st.floats(0, 1), st.floats(0, 1))
def test_monotone(x1, x2):
    if x1 < x2:
        assert li2(x1) <= li2(x2)
    if x2 - x1 > 1e-9:
        assert li2(x1) < li2(x2)


def test_log_inv1m_small_argument():
    assert log_inv1m(1e-17) == 1e-17
