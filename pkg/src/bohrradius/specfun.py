"""Real dilogarithm on [0, 1] with a certified truncation bound.

Li2(x) = sum_{k>=1} x^k / k^2.  The power series is summed directly for
x <= 1/2; larger arguments go through the reflection formula

    Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)

so the series is only ever evaluated at arguments <= 1/2, where the terms
shrink at least like 2^-k.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

PI2_6 = math.pi ** 2 / 6.0
DEFAULT_TOL = 1e-15
MAX_TERMS = 100_000


@dataclass(frozen=True)
class DilogResult:
    value: float
    terms_used: int
    tail_bound: float


def _series(x, tol, max_terms):
    # tail after term N is at most x^(N+1) / ((N+1)^2 (1-x))
    total = 0.0
    power = 1.0
    inv = 1.0 / (1.0 - x)
    for k in range(1, max_terms + 1):
        power *= x
        total += power / (k * k)
        tail = power * x / ((k + 1) ** 2) * inv
        if tail <= tol:
            return total, k, tail
    raise ConvergenceError(
        f"dilog series at x={x} did not reach tol={tol} in {max_terms} terms"
    )


def dilog(x, tol=DEFAULT_TOL, max_terms=MAX_TERMS):
    """Dilogarithm Li2(x) for real x in [0, 1].

    Returns a :class:`DilogResult` whose ``tail_bound`` is a rigorous bound
    on the dropped part of the series (rounding error not included).
    """
    x = float(x)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"dilog is implemented on [0, 1], got x={x}")
    if x == 0.0:
        return DilogResult(0.0, 0, 0.0)
    if x == 1.0:
        return DilogResult(PI2_6, 0, 0.0)
    if x <= 0.5:
        value, n, tail = _series(x, tol, max_terms)
        return DilogResult(value, n, tail)
    y = 1.0 - x  # exact for x in [1/2, 1]
    value, n, tail = _series(y, tol, max_terms)
    return DilogResult(PI2_6 - math.log(x) * math.log(y) - value, n, tail)


def li2(x, tol=DEFAULT_TOL):
    """Shorthand returning only the value of :func:`dilog`."""
    return dilog(x, tol).value


def log1m(r):
    """ln(1 - r), accurate for small r."""
    return math.log1p(-r)


def log_inv1m(r):
    """ln(1 / (1 - r)) = -ln(1 - r)."""
    return -math.log1p(-r)
