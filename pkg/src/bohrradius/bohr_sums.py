"""Majorant series, refined Bohr sums and the discrete transform majorants.

Every truncated series returns a :class:`SeriesEvaluation` whose
``tail_bound`` is a proven upper bound on the neglected terms.  The number of
terms is the smallest N for which that bound is <= tol; the search never goes
past ``max_terms`` and raises :class:`ConvergenceError` instead of returning
an uncertified value.

The second half of the module holds closed forms: the square sums behind the
refined radius equations and the auxiliary functions from the sharpness
arguments for the Fourier and Laplace majorants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientSequence, _check_f0, _check_gamma
from .errors import ConvergenceError, DomainError
from .lambda_dsl import as_lambda, eval_lambda
from .specfun import li2, log_inv1m

DEFAULT_TOL = 1e-13
MAX_TERMS = 10 ** 6


@dataclass(frozen=True)
class SeriesEvaluation:
    value: float
    tail_bound: float
    terms_used: int


def _check_r(r):
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    return r


def _check_tol(tol):
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")


def _last_index(tail, tol, max_terms, what):
    """Smallest N with tail(N) <= tol, where tail(N) bounds the terms n > N."""
    if tail(0) <= tol:
        return 0
    lo, hi = 0, 1
    while tail(hi) > tol:
        lo, hi = hi, 2 * hi
        if lo + 1 >= max_terms:
            raise ConvergenceError(
                f"{what}: tail bound still above tol={tol} after {max_terms} terms"
            )
    hi = min(hi, max_terms - 1)
    if tail(hi) > tol:
        raise ConvergenceError(f"{what}: tail bound still above tol={tol} after {max_terms} terms")
    # invariant: tail(lo) > tol >= tail(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail(mid) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


# --- tail bounds -----------------------------------------------------------


def _majorant_tail(seq, r):
    """N -> bound on sum_{n>N} |a_n| r^n."""
    support = seq.support
    if seq.family == "koebe":
        # exact: sum_{n>N} n r^n = r^(N+1) (N+1 - N r) / (1-r)^2
        return lambda N: r ** (N + 1) * (N + 1 - N * r) / (1.0 - r) ** 2

    def tail(N):
        if support is not None and N >= support - 1:
            return 0.0
        return seq.sup_after(N) * r ** (N + 1) / (1.0 - r)

    return tail


def _square_tail(seq, r):
    """N -> bound on sum_{n>N} |a_n|^2 r^(2n)."""
    s = r * r
    support = seq.support
    if seq.family == "koebe":

        def tail(N):
            # term ratio for n > N is ((n+1)/n)^2 s <= ((N+2)/(N+1))^2 s
            rho = ((N + 2) / (N + 1)) ** 2 * s
            if rho >= 1.0:
                return math.inf
            return (N + 1) ** 2 * s ** (N + 1) / (1.0 - rho)

        return tail

    def tail(N):
        if support is not None and N >= support - 1:
            return 0.0
        return seq.sup_after(N) ** 2 * s ** (N + 1) / (1.0 - s)

    return tail


def _fourier_tail(seq, r):
    """N -> bound on sum_{n>N} S_n r^n with S_n = |a_0| + ... + |a_n|."""
    total = seq.total()
    if math.isfinite(total):
        return lambda N: total * r ** (N + 1) / (1.0 - r)
    if seq.family == "koebe":

        def tail(N):
            # S_n = n(n+1)/2; term ratio for n > N is (n+2) r / n <= (N+3) r / (N+1)
            rho = (N + 3) / (N + 1) * r
            if rho >= 1.0:
                return math.inf
            return (N + 1) * (N + 2) / 2.0 * r ** (N + 1) / (1.0 - rho)

        return tail

    def tail(N):
        # S_n <= S_N + (n - N) M for n > N, with M = sup_{k>N} |a_k|
        s_n = float(seq.moduli(N + 1).sum())
        m = seq.sup_after(N)
        rn = r ** (N + 1)
        return s_n * rn / (1.0 - r) + m * rn / (1.0 - r) ** 2

    return tail


def _laplace_tail(seq, r):
    """N -> bound on sum_{n>N} c_n r^n, c_n = sum_{k<=n} |a_k| / (n+1)^(k+1)."""
    if seq.family == "koebe":
        # c_n <= sum_k k (n+1)^-(k+1) = 1/n^2
        return lambda N: r ** (N + 1) / ((N + 1) ** 2 * (1.0 - r))
    m = seq.sup_all()
    # c_n <= M sum_{k>=0} (n+1)^-(k+1) = M/n
    return lambda N: m / (N + 1) * r ** (N + 1) / (1.0 - r)


# --- truncated series ------------------------------------------------------


def _powers(r, count):
    return np.power(r, np.arange(count, dtype=float))


def majorant_sum(seq: CoefficientSequence, r: float, tol: float = DEFAULT_TOL,
                 max_terms: int = MAX_TERMS) -> SeriesEvaluation:
    """M(r) = sum_{n>=0} |a_n| r^n."""
    r = _check_r(r)
    _check_tol(tol)
    tail = _majorant_tail(seq, r)
    N = _last_index(tail, tol, max_terms, "majorant_sum")
    value = float(np.sum(seq.moduli(N + 1) * _powers(r, N + 1)))
    return SeriesEvaluation(value, tail(N), N + 1)


def refined_sum(seq: CoefficientSequence, r: float, lam, square_start: int = 2,
                tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesEvaluation:
    """sum_{n>=0} |a_n| r^n + lambda(r) sum_{n>=square_start} |a_n|^2 r^(2n).

    ``lam`` is lambda source text or a parsed expression.  ``square_start``
    is 1 for the sum exactly as defined and 2 for the form used by the radius
    equations.
    """
    if square_start not in (1, 2):
        raise DomainError(f"square_start must be 1 or 2, got {square_start}")
    r = _check_r(r)
    _check_tol(tol)
    weight = eval_lambda(as_lambda(lam), r)
    maj_tail = _majorant_tail(seq, r)
    if weight == 0.0:
        tail = maj_tail
    else:
        sq_tail = _square_tail(seq, r)
        tail = lambda N: maj_tail(N) + abs(weight) * sq_tail(N)  # noqa: E731
    N = _last_index(tail, tol, max_terms, "refined_sum")
    mod = seq.moduli(N + 1)
    powers = _powers(r, N + 1)
    value = float(np.sum(mod * powers))
    if weight != 0.0:
        sq = mod[square_start:] ** 2 * powers[square_start:] ** 2
        value = value + weight * float(np.sum(sq))
    return SeriesEvaluation(value, tail(N), N + 1)


def fourier_majorant(seq: CoefficientSequence, r: float, tol: float = DEFAULT_TOL,
                     max_terms: int = MAX_TERMS) -> SeriesEvaluation:
    """Majorant of the discrete Fourier transform of the coefficients.

    The kernel exp(-2 pi i n k/(n+1)) has unit modulus, so the n-th
    coefficient is simply the partial sum |a_0| + ... + |a_n|.
    """
    r = _check_r(r)
    _check_tol(tol)
    tail = _fourier_tail(seq, r)
    N = _last_index(tail, tol, max_terms, "fourier_majorant")
    partial = np.cumsum(seq.moduli(N + 1))
    value = float(np.sum(partial * _powers(r, N + 1)))
    return SeriesEvaluation(value, tail(N), N + 1)


def laplace_coefficients(seq: CoefficientSequence, count: int) -> np.ndarray:
    """c_n = sum_{k=0}^{n} |a_k| / (n+1)^(k+1) for n < count."""
    mod = seq.moduli(count)
    k = np.arange(count, dtype=float)
    out = np.empty(count)
    for n in range(count):
        # (n+1)^-(k+1) underflows to 0 long before k reaches n for large n
        weights = np.power(float(n + 1), -(k[: n + 1] + 1.0))
        out[n] = np.sum(mod[: n + 1] * weights)
    return out


def laplace_majorant(seq: CoefficientSequence, r: float, tol: float = DEFAULT_TOL,
                     max_terms: int = MAX_TERMS) -> SeriesEvaluation:
    """Majorant of the discrete Laplace transform of the coefficients."""
    r = _check_r(r)
    _check_tol(tol)
    tail = _laplace_tail(seq, r)
    N = _last_index(tail, tol, max_terms, "laplace_majorant")
    value = float(np.sum(laplace_coefficients(seq, N + 1) * _powers(r, N + 1)))
    return SeriesEvaluation(value, tail(N), N + 1)


# --- closed forms ----------------------------------------------------------


def lk_majorant_closed(r: float) -> float:
    """sum_{n>=1} (2/n) r^n = -2 ln(1-r)."""
    return 2.0 * log_inv1m(_check_r(r))


def koebe_majorant_closed(r: float) -> float:
    """sum_{n>=1} n r^n = r/(1-r)^2."""
    r = _check_r(r)
    return r / (1.0 - r) ** 2


def lk_square_sum_closed(r: float) -> float:
    """sum_{n>=2} (2/n)^2 r^(2n) = 4 (Li2(r^2) - r^2)."""
    r = _check_r(r)
    s = r * r
    return 4.0 * (li2(s) - s)


def koebe_square_sum_closed(r: float) -> float:
    """sum_{n>=2} n^2 r^(2n) = r^4 (r^4 - 3 r^2 + 4) / (1 - r^2)^3."""
    r = _check_r(r)
    s = r * r
    return s * s * (s * s - 3.0 * s + 4.0) / (1.0 - s) ** 3


def fourier_bound(r: float) -> float:
    """1/(1-r), the bound for the Fourier majorant."""
    return 1.0 / (1.0 - _check_r(r))


def laplace_bound(r: float) -> float:
    """(1/r) ln(1/(1-r)), the bound for the Laplace majorant (limit 1 at r=0)."""
    r = _check_r(r)
    return 1.0 if r == 0.0 else log_inv1m(r) / r


def laplace_weight_closed(r: float) -> float:
    """sum_{n>=1} r^n / (n(n+1)) = 1 + ((1-r)/r) ln(1-r)."""
    r = _check_r(r)
    if r == 0.0:
        return 0.0
    return 1.0 - (1.0 - r) / r * log_inv1m(r)


def _f0_constants(gamma, a):
    s = 1.0 - a * gamma
    a0 = (a - gamma) / s
    b = (1.0 + a) * (1.0 - gamma) / s
    q = a * (1.0 - gamma) / s
    return a0, b, q


def phi_gamma_a(gamma: float, a: float, r: float) -> float:
    """1 - (1-r) F(r), where F is the Fourier majorant of f0(a, gamma).

    Closed form: 1 - A0 - B r + B q r (1-r)/(1-q r) with
    B = (1+a)(1-g)/(1-a g) and q = a(1-g)/(1-a g).  Negative values mean f0
    violates the Fourier Bohr inequality at r.  A0 enters through its modulus,
    which matters only when a < gamma.
    """
    _check_f0(a, gamma)
    r = _check_r(r)
    a0, b, q = _f0_constants(gamma, a)
    return 1.0 - abs(a0) - b * r + b * q * r * (1.0 - r) / (1.0 - q * r)


def phi_gamma_a_printed(gamma: float, a: float, r: float) -> float:
    """The same function with the final term missing its (1-r) factor.

    Kept only so the discrepancy with the identity above can be tested.
    """
    _check_f0(a, gamma)
    r = _check_r(r)
    a0, b, q = _f0_constants(gamma, a)
    return 1.0 - a0 + b * (-r + q * r / (1.0 - q * r))


def phi_gamma_a_derivative(gamma: float, a: float, r: float) -> float:
    """d/dr of :func:`phi_gamma_a`: -(1-g)(1-a^2) / (1 - a g (1-r) - a r)^2."""
    _check_f0(a, gamma)
    r = _check_r(r)
    return -(1.0 - gamma) * (1.0 - a * a) / (1.0 - a * gamma * (1.0 - r) - a * r) ** 2


def phi_gamma_a_at_radius(gamma: float, a: float) -> float:
    """phi_gamma_a at r = (1+g)/(3+g), in closed form.

    Valid for a >= gamma, where A0 is non-negative; for a < gamma use
    :func:`phi_gamma_a` directly.
    """
    _check_f0(a, gamma)
    return (2.0 * (1.0 - a) ** 2 * (1.0 + gamma) ** 2
            / ((1.0 - a * gamma) * (3.0 - a + gamma - 3.0 * a * gamma)))


def capital_phi_gamma(gamma: float, r: float) -> float:
    """((1+g)/r) ln(1-r) + (2/r)(ln(1/(1-r)) - Li2(r)), for 0 < r < 1.

    Its smallest zero is the Laplace radius.  Tends to -(1+g) as r -> 0+.
    """
    _check_gamma(gamma)
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    ell = log_inv1m(r)
    return (-(1.0 + gamma) * ell + 2.0 * (ell - li2(r))) / r


def fourier_upper_envelope(gamma: float, r: float, x: float) -> float:
    """x/(1-r) + (1-x^2) r / ((1+g)(1-r)^2): the Fourier bound as a function of |a_0| = x."""
    _check_gamma(gamma)
    r = _check_r(r)
    return x / (1.0 - r) + (1.0 - x * x) * r / ((1.0 + gamma) * (1.0 - r) ** 2)


def laplace_envelope(gamma: float, r: float, x: float) -> float:
    """Upper bound for the Laplace majorant as a function of |a_0| = x, 0 < r < 1."""
    _check_gamma(gamma)
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    ln1m = -log_inv1m(r)
    return ((-x * (1.0 + gamma) + (1.0 - x * x) * (1.0 - r)) * ln1m / (r * (1.0 + gamma))
            + (1.0 - x * x) / (1.0 + gamma))


def laplace_phi_small(gamma: float, r: float) -> float:
    """(2r - 2 - (1+g)) ln(1-r) - 2r; vanishes at r = 0 and increases on (0, 1)."""
    _check_gamma(gamma)
    r = _check_r(r)
    return (2.0 * r - 2.0 - (1.0 + gamma)) * -log_inv1m(r) - 2.0 * r


def laplace_upper_bound_fn(gamma: float, r: float, a: float) -> float:
    """(a/r) ln(1/(1-r)) + ((1-a^2)/(1+g)) ((1/r) ln(1/(1-r)) - Li2(r)/r)."""
    _check_gamma(gamma)
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    ell = log_inv1m(r) / r
    return a * ell + (1.0 - a * a) / (1.0 + gamma) * (ell - li2(r) / r)
