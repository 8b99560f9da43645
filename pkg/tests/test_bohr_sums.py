import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrradius.bohr_sums import (
    capital_phi_gamma,
    fourier_bound,
    fourier_majorant,
    fourier_upper_envelope,
    koebe_majorant_closed,
    koebe_square_sum_closed,
    laplace_bound,
    laplace_coefficients,
    laplace_majorant,
    laplace_phi_small,
    laplace_upper_bound_fn,
    laplace_weight_closed,
    lk_majorant_closed,
    lk_square_sum_closed,
    majorant_sum,
    phi_gamma_a,
    phi_gamma_a_at_radius,
    phi_gamma_a_derivative,
    phi_gamma_a_printed,
    refined_sum,
)
from bohrradius.coefficients import (
    constant_sequence,
    f0_sequence,
    finite_sequence,
    koebe_sequence,
    lk_extremal_sequence,
)
from bohrradius.errors import ConvergenceError, DomainError
from bohrradius.radius import classical_radius
from bohrradius.specfun import li2

R_GRID = [round(0.05 * k, 2) for k in range(1, 19)]


def partial(terms):
    return math.fsum(terms)


def test_majorant_examples():
    assert majorant_sum(constant_sequence(), 0.5).value == 1.0
    ev = majorant_sum(lk_extremal_sequence(), 0.5)
    assert abs(ev.value + 2 * math.log(0.5)) < 1e-12
    assert ev.tail_bound <= 1e-13
    assert abs(majorant_sum(koebe_sequence(), 0.25).value - 0.25 / 0.5625) < 1e-12


@pytest.mark.parametrize("r", R_GRID)
def test_closed_forms_against_partial_sums(r):
    n = range(1, 3000)
    assert abs(lk_majorant_closed(r) - partial(2 / k * r ** k for k in n)) < 1e-10
    assert abs(koebe_majorant_closed(r) - partial(k * r ** k for k in n)) < 1e-10
    assert abs(lk_square_sum_closed(r) - partial((2 / k) ** 2 * r ** (2 * k) for k in range(2, 3000))) < 1e-10
    assert abs(koebe_square_sum_closed(r) - partial(k * k * r ** (2 * k) for k in range(2, 3000))) < 1e-10
    assert abs(laplace_weight_closed(r) - partial(r ** k / (k * (k + 1)) for k in n)) < 1e-10


def test_closed_form_examples():
    assert lk_square_sum_closed(0) == 0
    assert koebe_square_sum_closed(0) == 0
    assert abs(lk_square_sum_closed(0.5) - 4 * (li2(0.25) - 0.25)) < 1e-15
    assert abs(lk_square_sum_closed(0.5) - 0.0706106) < 1e-6
    assert abs(koebe_square_sum_closed(0.5) - 0.490741) < 1e-6


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_truncated_sums_match_closed_forms(r):
    assert abs(majorant_sum(lk_extremal_sequence(), r).value - lk_majorant_closed(r)) < 1e-10
    assert abs(majorant_sum(koebe_sequence(), r).value - koebe_majorant_closed(r)) < 1e-10
    lk = refined_sum(lk_extremal_sequence(), r, "1")
    assert abs(lk.value - lk_majorant_closed(r) - lk_square_sum_closed(r)) < 1e-10
    s = refined_sum(koebe_sequence(), r, "1")
    assert abs(s.value - koebe_majorant_closed(r) - koebe_square_sum_closed(r)) < 1e-10


def test_refined_sum_lambda_zero_is_bit_identical():
    for seq in (lk_extremal_sequence(), koebe_sequence(), f0_sequence(0.7, 0.1)):
        for r in (0.2, 0.6):
            assert refined_sum(seq, r, "0") == majorant_sum(seq, r)


def test_refined_sum_square_start():
    seq = finite_sequence([0.5, 0.5, 0.5])
    s1 = refined_sum(seq, 0.5, "1", square_start=1).value
    s2 = refined_sum(seq, 0.5, "1", square_start=2).value
    assert abs(s1 - s2 - 0.25 * 0.25) < 1e-15
    with pytest.raises(DomainError):
        refined_sum(seq, 0.5, "1", square_start=0)


def test_refined_sum_at_table_radii():
    assert abs(refined_sum(lk_extremal_sequence(), 0.390504, "r").value - 1) < 1e-4
    assert abs(refined_sum(koebe_sequence(), 0.374675, "r").value - 1) < 1e-4


def test_fourier_examples():
    assert fourier_majorant(constant_sequence(), 0.5).value == pytest.approx(2.0, abs=1e-12)
    want = 2.8 / 0.6 - 1.9 / 0.64
    ev = fourier_majorant(f0_sequence(0.9, 0.0), 0.4)
    assert abs(ev.value - want) < 1e-10
    brute = partial(sum(f0_sequence(0.9, 0.0).moduli(n + 1)) * 0.4 ** n for n in range(400))
    assert abs(ev.value - brute) < 1e-10


def test_fourier_identity_random(rng):
    for _ in range(200):
        g, a, r = rng.uniform(0, 0.99), rng.uniform(0.01, 0.99), rng.uniform(0, 0.95)
        ev = fourier_majorant(f0_sequence(a, g), r)
        assert abs(ev.value - (1 - phi_gamma_a(g, a, r)) / (1 - r)) < 1e-9


def test_phi_examples():
    assert abs(phi_gamma_a(0, 0.9, 1 / 3) - 0.0095238) < 1e-7
    assert abs(phi_gamma_a(0, 0.9, 1 / 3) - 0.02 / 2.1) < 1e-14
    assert abs(phi_gamma_a(0, 0.9, 0.4) + 0.01875) < 1e-12


@settings(max_examples=200)
@given(st.floats(0.0, 0.99), st.floats(0.01, 0.99))
def test_phi_at_radius_closed_form(g, a):
    if a < g:
        g, a = a, g
    if a == g or a >= 1:
        return
    r0 = classical_radius(g)
    assert abs(phi_gamma_a(g, a, r0) - phi_gamma_a_at_radius(g, a)) < 1e-12


def test_phi_at_radius_tends_to_zero():
    for g in (0.0, 0.3, 0.7):
        vals = [phi_gamma_a(g, a, classical_radius(g)) for a in (0.9, 0.99, 0.999)]
        assert vals[0] > vals[1] > vals[2] > 0
        assert vals[2] < 1e-4


def test_printed_phi_differs_from_the_identity():
    g, a, r = 0.0, 0.9, 0.4
    fm = fourier_majorant(f0_sequence(a, g), r).value
    assert abs(phi_gamma_a(g, a, r) - (1 - (1 - r) * fm)) < 1e-12
    assert abs(phi_gamma_a_printed(g, a, r) - (1 - (1 - r) * fm)) > 0.1


@settings(max_examples=200)
@given(st.floats(0.0, 0.95), st.floats(0.05, 0.95), st.floats(0.05, 0.9))
def test_phi_derivative_finite_difference(g, a, r):
    h = 1e-6
    fd = (phi_gamma_a(g, a, r + h) - phi_gamma_a(g, a, r - h)) / (2 * h)
    assert abs(fd - phi_gamma_a_derivative(g, a, r)) < 1e-6 * max(1.0, abs(fd))
    assert phi_gamma_a_derivative(g, a, r) < 0


def test_violation_threshold_unit_disk():
    a_grid = np.linspace(0.05, 0.95, 20)
    r_grid = np.linspace(0.05, 0.95, 20)
    for a in a_grid:
        for r in r_grid:
            threshold = 1 / (1 + 2 * a)
            if abs(r - threshold) < 1e-9:
                continue
            fm = fourier_majorant(f0_sequence(a, 0.0), r).value
            assert (fm > fourier_bound(r)) == (r > threshold)


def test_laplace_examples():
    assert abs(laplace_majorant(constant_sequence(), 0.5).value - 2 * math.log(2)) < 1e-12
    assert laplace_majorant(constant_sequence(), 0.0).value == 1.0
    assert abs(laplace_majorant(constant_sequence(), 1e-9).value - 1) < 1e-8
    near = laplace_majorant(f0_sequence(0.999, 0.0), 0.5).value
    assert abs(near - 2 * math.log(2)) < 0.02
    assert laplace_bound(0.0) == 1.0


def test_laplace_coefficients_double_sum():
    seq = f0_sequence(0.6, 0.2)
    mod = seq.moduli(30)
    want = [math.fsum(mod[k] / (n + 1) ** (k + 1) for k in range(n + 1)) for n in range(30)]
    assert np.allclose(laplace_coefficients(seq, 30), want, rtol=1e-14, atol=0)


@settings(max_examples=50)
@given(st.floats(0.01, 0.99), st.floats(0.0, 0.99), st.floats(0.01, 0.9))
def test_laplace_majorant_against_truncated_double_sum(a, g, r):
    seq = f0_sequence(a, g)
    terms = 800
    brute = math.fsum(laplace_coefficients(seq, terms) * r ** np.arange(terms))
    assert abs(laplace_majorant(seq, r).value - brute) < 1e-10


@pytest.mark.parametrize("seq", [lk_extremal_sequence(), koebe_sequence(), f0_sequence(0.8, 0.3),
                                 finite_sequence([0.2, 0.3])], ids=lambda s: s.family)
def test_sums_increase_in_r(seq):
    rs = np.linspace(0.02, 0.9, 30)
    for fn in (majorant_sum, fourier_majorant, laplace_majorant,
               lambda s, r: refined_sum(s, r, "r")):
        vals = [fn(seq, float(r)).value for r in rs]
        assert all(x < y for x, y in zip(vals, vals[1:]))


def test_capital_phi_examples():
    assert abs(capital_phi_gamma(0, 0.940599)) < 1e-5
    assert abs(capital_phi_gamma(0, 1e-7) + 1) < 1e-6
    assert abs(capital_phi_gamma(0.4, 1e-7) + 1.4) < 1e-6
    assert capital_phi_gamma(0, 0.99) > 0
    for r in (0.0, 1.0):
        with pytest.raises(DomainError):
            capital_phi_gamma(0, r)


def test_capital_phi_decreases_in_gamma():
    for r in (0.3, 0.9, 0.97):
        vals = [capital_phi_gamma(g, r) for g in (0.0, 0.2, 0.5)]
        assert vals[0] > vals[1] > vals[2]


def test_envelopes():
    for g in (0.0, 0.5):
        for r in (0.1, 0.3):
            assert fourier_upper_envelope(g, r, 1.0) == pytest.approx(1 / (1 - r), abs=1e-15)
    assert fourier_upper_envelope(0, 0.5, 0) == 2.0
    for g in (0.0, 0.4, 0.8):
        r0 = classical_radius(g)
        for r in np.linspace(0.01, r0, 10):
            xs = np.linspace(0, 1, 50)
            vals = [fourier_upper_envelope(g, float(r), float(x)) for x in xs]
            assert all(u <= v + 1e-14 for u, v in zip(vals, vals[1:]))


def test_laplace_phi_small():
    assert laplace_phi_small(0, 0) == 0
    assert abs(laplace_phi_small(0, 0.5) - (-2 * math.log(0.5) - 1)) < 1e-14
    for g in (0.0, 0.5, 0.9):
        vals = [laplace_phi_small(g, float(r)) for r in np.linspace(0.01, 0.99, 50)]
        assert vals[0] > 0
        assert all(x < y for x, y in zip(vals, vals[1:]))


def test_laplace_upper_bound_fn():
    for r in (0.2, 0.5, 0.9):
        assert laplace_upper_bound_fn(0.3, r, 1.0) == pytest.approx(laplace_bound(r), abs=1e-15)
    value = laplace_upper_bound_fn(0, 0.5, 0.0)
    assert abs(value - (2 * math.log(2) - 2 * li2(0.5))) < 1e-14
    assert abs(value - 0.2218133) < 1e-7


def test_tolerance_budget():
    with pytest.raises(ConvergenceError):
        majorant_sum(koebe_sequence(), 0.999999, tol=1e-13, max_terms=1000)
    with pytest.raises(DomainError):
        majorant_sum(koebe_sequence(), 1.0)
    with pytest.raises(DomainError):
        majorant_sum(koebe_sequence(), 0.5, tol=0)
