"""Numerical checks of the Bohr inequalities, their sharpness and the coefficient bound.

Checks only use sequences known to belong to the bounded class on
Omega_gamma (the f0 family and constants), or the extremal sequences of
the LK and S classes for the refined inequalities.
"""

from __future__ import annotations

from typing import Sequence

from .bohr_sums import (
    fourier_bound,
    fourier_majorant,
    laplace_bound,
    laplace_majorant,
    refined_sum,
)
from .coefficients import (
    CoefficientSequence,
    _check_gamma,
    f0_sequence,
    koebe_sequence,
    lemma_a_bound,
    lk_extremal_sequence,
)
from .errors import DomainError
from .lambda_dsl import as_lambda, to_source
from .radius import classical_radius
from .report import DEFAULT_SLACK, VerificationReport

DEFAULT_A_GRID = (0.9, 0.99, 0.999, 0.9999)
SHARPNESS_EPS = 0.01
SERIES_TOL = 1e-13


def _witness(seq, **extra):
    out = {"family": seq.family}
    if seq.family == "f0":
        out.update(a=seq.a, gamma=seq.gamma)
    out.update(extra)
    return out


def verify_fourier_inequality(gamma: float, seq: CoefficientSequence, r: float,
                              slack: float = DEFAULT_SLACK) -> VerificationReport:
    """Fourier majorant of ``seq`` at r against 1/(1-r)."""
    _check_gamma(gamma)
    ev = fourier_majorant(seq, r, SERIES_TOL)
    return VerificationReport(
        claim="fourier_inequality",
        value=ev.value,
        bound=fourier_bound(r),
        slack=slack + ev.tail_bound,
        witness=_witness(seq, r=r, domain_gamma=gamma),
    )


def verify_laplace_inequality(gamma: float, seq: CoefficientSequence, r: float,
                              slack: float = DEFAULT_SLACK) -> VerificationReport:
    """Laplace majorant of ``seq`` at r against (1/r) ln(1/(1-r))."""
    _check_gamma(gamma)
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    ev = laplace_majorant(seq, r, SERIES_TOL)
    return VerificationReport(
        claim="laplace_inequality",
        value=ev.value,
        bound=laplace_bound(r),
        slack=slack + ev.tail_bound,
        witness=_witness(seq, r=r, domain_gamma=gamma),
    )


def sharpness_sweep_fourier(gamma: float, r: float,
                            a_grid: Sequence[float] = DEFAULT_A_GRID,
                            slack: float = DEFAULT_SLACK) -> VerificationReport:
    """Search ``a_grid`` for an f0(a, gamma) that violates the Fourier inequality at r.

    Requires r above the classical radius.  Passes when a violation larger
    than slack plus the series tail is found; the witness holds the first
    such a.  Without a violation the report carries the smallest margin seen.
    """
    rho = classical_radius(gamma)
    if not r > rho:
        raise DomainError(f"r={r} is not above the radius {rho} for gamma={gamma}")
    if not a_grid:
        raise DomainError("a_grid is empty")
    closest = None
    for a in a_grid:
        rep = verify_fourier_inequality(gamma, f0_sequence(a, gamma), r, slack)
        if not rep.passed:
            return VerificationReport("fourier_sharpness", rep.value, rep.bound, rep.slack,
                                      {"a": a, "gamma": gamma, "r": r}, passed=True)
        if closest is None or rep.margin < closest[1].margin:
            closest = (a, rep)
    a, rep = closest
    return VerificationReport("fourier_sharpness", rep.value, rep.bound, rep.slack,
                              {"a": a, "gamma": gamma, "r": r, "violation": False},
                              passed=False)


def laplace_ratio(gamma: float, a: float, r: float) -> float:
    """Laplace majorant of f0(a, gamma) divided by its bound (1/r) ln(1/(1-r))."""
    return laplace_majorant(f0_sequence(a, gamma), r, SERIES_TOL).value / laplace_bound(r)


def sharpness_sweep_laplace(gamma: float, r: float,
                            a_grid: Sequence[float] = DEFAULT_A_GRID,
                            eps: float = SHARPNESS_EPS) -> VerificationReport:
    """Ratio of the Laplace majorant of f0(a, gamma) to its bound along ``a_grid``.

    ``value`` is the ratio at the largest a and ``bound`` is 1; the check
    passes when that ratio is at least 1 - eps.  The witness records the
    supremum of the ratio over the grid and the full list of ratios.
    """
    _check_gamma(gamma)
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    if not a_grid:
        raise DomainError("a_grid is empty")
    grid = sorted(a_grid)
    ratios = [laplace_ratio(gamma, a, r) for a in grid]
    best = max(range(len(grid)), key=ratios.__getitem__)
    last = ratios[-1]
    return VerificationReport(
        claim="laplace_sharpness",
        value=last,
        bound=1.0,
        slack=DEFAULT_SLACK,
        witness={"a": grid[-1], "gamma": gamma, "r": r, "sup_ratio": ratios[best],
                 "sup_a": grid[best], "ratios": ratios},
        passed=last >= 1.0 - eps,
    )


def lemma_a_check(gamma: float, a: float, n_max: int = 30,
                  slack: float = DEFAULT_SLACK) -> VerificationReport:
    """|A_n| <= (1 - A0^2)/(1 + gamma) for the f0(a, gamma) coefficients, n = 1..n_max.

    The report keeps the index with the smallest margin.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    seq = f0_sequence(a, gamma)
    bound = lemma_a_bound(gamma, seq.modulus(0))
    worst_n = min(range(1, n_max + 1), key=lambda n: bound - seq.modulus(n))
    return VerificationReport(
        claim="lemma_a",
        value=seq.modulus(worst_n),
        bound=bound,
        slack=slack,
        witness={"a": a, "gamma": gamma, "n": worst_n},
    )


EXTREMAL = {"lk": lk_extremal_sequence, "s": koebe_sequence}


def verify_refined_inequality(cls: str, lam, r: float,
                              slack: float = DEFAULT_SLACK) -> VerificationReport:
    """Refined Bohr sum (squares from n = 2) of the class's extremal function against 1."""
    if cls not in EXTREMAL:
        raise DomainError(f"class must be 'lk' or 's', got {cls!r}")
    expr = as_lambda(lam)
    ev = refined_sum(EXTREMAL[cls](), r, expr, 2, SERIES_TOL)
    return VerificationReport(
        claim=f"refined_inequality_{cls}",
        value=ev.value,
        bound=1.0,
        slack=slack + ev.tail_bound,
        witness={"class": cls, "lambda": to_source(expr), "r": r},
    )
