import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrradius.coefficients import (
    constant_sequence,
    f0_sequence,
    f0_taylor_oracle,
    f0_value,
    finite_sequence,
    koebe_coeff,
    koebe_sequence,
    lemma_a_bound,
    lk_extremal_coeff,
    lk_extremal_sequence,
    omega_boundary,
    omega_contains,
    series_divide,
)
from bohrradius.errors import DomainError

a_strat = st.floats(0.001, 0.999)
g_strat = st.floats(0.0, 0.999)


def test_extremal_coefficients():
    assert lk_extremal_coeff(1) == 2
    assert lk_extremal_coeff(2) == 1
    assert lk_extremal_coeff(100) == 0.02
    assert koebe_coeff(1) == 1
    assert koebe_coeff(5) == 5
    for bad in (0, -3):
        with pytest.raises(DomainError):
            koebe_coeff(bad)
        with pytest.raises(DomainError):
            lk_extremal_coeff(bad)


def test_sequences_vectorised_agree_with_scalar():
    for seq in (koebe_sequence(), lk_extremal_sequence(), f0_sequence(0.7, 0.2),
                constant_sequence(0.3), finite_sequence([1, 0.5, 0.25])):
        vec = seq.moduli(12)
        assert vec.shape == (12,)
        assert np.allclose(vec, [seq.modulus(n) for n in range(12)], rtol=1e-15, atol=0)


def test_f0_examples():
    assert f0_sequence(0.4, 0.4).modulus(0) == 0.0
    seq = f0_sequence(0.5, 0.0)
    assert [seq.modulus(n) for n in range(3)] == pytest.approx([0.5, 0.75, 0.375], abs=1e-15)
    assert f0_sequence(0.9, 0.5).modulus(0) == pytest.approx(0.4 / 0.55, abs=1e-15)


@pytest.mark.parametrize("a,g", [(0.0, 0.1), (1.0, 0.1), (0.5, 1.0), (0.5, -0.1)])
def test_f0_domain(a, g):
    with pytest.raises(DomainError):
        f0_sequence(a, g)


def test_oracle_examples():
    assert f0_taylor_oracle(0.5, 0.0, 3) == pytest.approx([0.5, -0.75, -0.375, -0.1875], abs=1e-15)
    assert f0_taylor_oracle(0.3, 0.3, 1)[0] == 0.0


def test_series_divide_geometric():
    assert series_divide([1.0], [1.0, -0.5], 5) == [1.0, 0.5, 0.25, 0.125, 0.0625]


def test_oracle_agreement_random(rng):
    for _ in range(100):
        a, g = rng.uniform(0.01, 0.99), rng.uniform(0.0, 0.99)
        seq = f0_sequence(a, g)
        oracle = f0_taylor_oracle(a, g, 30)
        for n in range(31):
            assert abs(abs(oracle[n]) - seq.modulus(n)) <= 1e-12


@settings(max_examples=200)
@given(a_strat, g_strat)
def test_lemma_a_saturated_at_first_coefficient(a, g):
    seq = f0_sequence(a, g)
    bound = lemma_a_bound(g, seq.modulus(0))
    assert abs(bound - seq.modulus(1)) <= 1e-12
    assert all(seq.modulus(n) <= bound + 1e-12 for n in range(2, 31))


def test_lemma_a_bound_examples():
    assert lemma_a_bound(0, 0) == 1
    assert lemma_a_bound(0, 0.5) == 0.75
    assert lemma_a_bound(0.5, 0.5) == 0.5
    with pytest.raises(DomainError):
        lemma_a_bound(0, 1.0)


def test_omega_contains():
    assert omega_contains(0, 0.5)
    assert not omega_contains(0, 1)
    assert omega_contains(0.5, -1.5)
    assert not omega_contains(0.5, -3.01)


@settings(max_examples=100)
@given(a_strat, g_strat)
def test_f0_is_unimodular_on_the_boundary(a, g):
    pts = omega_boundary(g, 64)
    vals = np.array([f0_value(a, g, z) for z in pts])
    assert np.allclose(np.abs(vals), 1.0, atol=1e-9)
    inner = omega_boundary(g, 64, shrink=0.9)
    assert all(omega_contains(g, z) for z in inner)
    assert all(abs(f0_value(a, g, z)) < 1.0 for z in inner)


@settings(max_examples=50)
@given(a_strat, st.floats(0.0, 0.9))
def test_taylor_sum_matches_closed_form_where_it_converges(a, g):
    seq = f0_taylor_oracle(a, g, 200)
    q = a * (1 - g) / (1 - a * g)
    rho = min(0.5 / q, 1 / (1 - g)) if q > 0 else 1.0
    for z in rho * np.exp(2j * np.pi * np.arange(16) / 16):
        partial = sum(c * z ** n for n, c in enumerate(seq))
        assert abs(partial - f0_value(a, g, z)) <= 1e-9


def test_taylor_sum_on_unit_circle_for_unit_disk():
    coeffs = f0_taylor_oracle(0.6, 0.0, 400)
    for z in omega_boundary(0.0, 32):
        partial = sum(c * z ** n for n, c in enumerate(coeffs))
        assert abs(abs(partial) - 1.0) <= 1e-9


def test_sequence_bounds():
    seq = f0_sequence(0.8, 0.3)
    assert seq.sup_after(0) == pytest.approx(seq.modulus(1))
    assert seq.total() == pytest.approx(sum(seq.moduli(400)), abs=1e-12)
    assert lk_extremal_sequence().sup_after(5) == pytest.approx(2 / 6)
    assert finite_sequence([0.2, 0.9, 0.1]).sup_all() == 0.9
    with pytest.raises(DomainError):
        finite_sequence([1.0, -0.1])
