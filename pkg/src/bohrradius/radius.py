"""Bisection root finding and the radius computations built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .bohr_sums import capital_phi_gamma, koebe_square_sum_closed, lk_square_sum_closed
from .coefficients import _check_gamma
from .errors import BracketError, ConvergenceError, DomainError, NoRootError
from .lambda_dsl import as_lambda, eval_lambda
from .specfun import log_inv1m

DEFAULT_TOL = 1e-12
SEARCH_LO = 1e-9
SEARCH_HI = 1.0 - 1e-9
SCAN_GRID = 10_000

# published upper end of the gamma range for the Laplace radius; how it is
# defined is not known, and laplace_radius does not depend on it
GAMMA_STAR = 0.27713


@dataclass(frozen=True)
class RootResult:
    """A bracketed root.

    ``bracket_lo``/``bracket_hi`` is the final bracket (width <= tol) and
    ``residual`` the function value at ``root``.  ``unique`` records the
    outcome of the sign-change scan, when one was run.
    """

    root: float
    residual: float
    iterations: int
    bracket_lo: float
    bracket_hi: float
    unique: Optional[bool] = None


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float = DEFAULT_TOL, max_iter: int = 200) -> RootResult:
    """Root of f on [lo, hi] by bisection.

    Stops once the bracket is narrower than ``tol`` and |f(mid)| <= tol, or
    when the bracket cannot be split any further in floating point.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if not lo < hi:
        raise BracketError(f"empty bracket [{lo}, {hi}]")
    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo * f_hi < 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}")
    neg_lo = f_lo < 0
    for it in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return RootResult(mid, 0.0, it, lo, hi)
        if (f_mid < 0) == neg_lo:
            lo = mid
        else:
            hi = mid
        root = 0.5 * (lo + hi)
        if root <= lo or root >= hi:
            # bracket is two adjacent floats; return the better endpoint
            x = lo if abs(f(lo)) <= abs(f(hi)) else hi
            return RootResult(x, f(x), it, lo, hi)
        if hi - lo <= tol:
            residual = f(root)
            if abs(residual) <= tol:
                return RootResult(root, residual, it, lo, hi)
    raise ConvergenceError(f"bisection did not converge in {max_iter} iterations")


def count_sign_changes(f: Callable[[float], float], lo: float, hi: float,
                       grid: int = SCAN_GRID) -> int:
    """Number of sign changes of f over ``grid`` equally spaced points on [lo, hi].

    Exact zeros are skipped; a change is counted between consecutive
    nonzero values of opposite sign.
    """
    if grid < 2:
        raise DomainError(f"grid must be >= 2, got {grid}")
    changes = 0
    prev = 0
    for x in np.linspace(lo, hi, grid):
        v = f(float(x))
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _sign_scan(f, lo, hi, grid):
    """First grid cell [x_i, x_{i+1}] on which f changes sign, or None."""
    xs = np.linspace(lo, hi, grid)
    prev_x, prev_v = float(xs[0]), f(float(xs[0]))
    for x in xs[1:]:
        x = float(x)
        v = f(x)
        if prev_v == 0.0:
            return prev_x, prev_x
        if prev_v * v < 0:
            return prev_x, x
        prev_x, prev_v = x, v
    if prev_v == 0.0:
        return prev_x, prev_x
    return None


def classical_radius(gamma: float) -> float:
    """(1+g)/(3+g); 1/3 for the unit disk."""
    _check_gamma(gamma)
    return (1.0 + gamma) / (3.0 + gamma)


def lk_radius_equation(lam) -> Callable[[float], float]:
    """r -> -2 ln(1-r) + lambda(r) * 4 (Li2(r^2) - r^2) - 1."""
    expr = as_lambda(lam)
    return lambda r: 2.0 * log_inv1m(r) + eval_lambda(expr, r) * lk_square_sum_closed(r) - 1.0


def s_radius_equation(lam) -> Callable[[float], float]:
    """r -> r/(1-r)^2 + lambda(r) r^4 (r^4 - 3r^2 + 4)/(1-r^2)^3 - 1."""
    expr = as_lambda(lam)
    return lambda r: r / (1.0 - r) ** 2 + eval_lambda(expr, r) * koebe_square_sum_closed(r) - 1.0


def _solve_unique(g, tol, check_unique):
    result = bisect_root(g, SEARCH_LO, SEARCH_HI, tol)
    if not check_unique:
        return result
    unique = count_sign_changes(g, SEARCH_LO, SEARCH_HI, SCAN_GRID) == 1
    return RootResult(result.root, result.residual, result.iterations,
                      result.bracket_lo, result.bracket_hi, unique)


def refined_radius_lk(lam, tol: float = DEFAULT_TOL, check_unique: bool = True) -> RootResult:
    """Refined Bohr radius of the class LK for the weight ``lam``."""
    return _solve_unique(lk_radius_equation(lam), tol, check_unique)


def refined_radius_s(lam, tol: float = DEFAULT_TOL, check_unique: bool = True) -> RootResult:
    """Refined Bohr radius of the univalent class S for the weight ``lam``."""
    return _solve_unique(s_radius_equation(lam), tol, check_unique)


def refined_radius(cls: str, lam, tol: float = DEFAULT_TOL, check_unique: bool = True) -> RootResult:
    if cls == "lk":
        return refined_radius_lk(lam, tol, check_unique)
    if cls == "s":
        return refined_radius_s(lam, tol, check_unique)
    raise DomainError(f"class must be 'lk' or 's', got {cls!r}")


def laplace_radius(gamma: float, tol: float = DEFAULT_TOL, grid: int = SCAN_GRID) -> RootResult:
    """Smallest zero of capital_phi_gamma(gamma, .) in (0, 1).

    Located by a sign scan over ``grid`` points, then refined by bisection
    inside the first cell that changes sign.
    """
    _check_gamma(gamma)
    g = lambda r: capital_phi_gamma(gamma, r)  # noqa: E731
    cell = _sign_scan(g, SEARCH_LO, SEARCH_HI, grid)
    if cell is None:
        raise NoRootError(f"no sign change of Phi_gamma on ({SEARCH_LO}, {SEARCH_HI}) for gamma={gamma}")
    lo, hi = cell
    if lo == hi:
        return RootResult(lo, 0.0, 0, math.nextafter(lo, 0.0), math.nextafter(lo, 1.0))
    result = bisect_root(g, lo, hi, tol)
    unique = count_sign_changes(g, SEARCH_LO, SEARCH_HI, grid) == 1
    return RootResult(result.root, result.residual, result.iterations,
                      result.bracket_lo, result.bracket_hi, unique)


def laplace_sign_changes(gamma: float, grid: int = SCAN_GRID) -> int:
    """Sign changes of capital_phi_gamma(gamma, .) across the search interval."""
    _check_gamma(gamma)
    return count_sign_changes(lambda r: capital_phi_gamma(gamma, r), SEARCH_LO, SEARCH_HI, grid)
