"""Coefficient sequences of the concrete functions whose Bohr sums we study.

Every sequence exposes coefficient *moduli* |a_n|; signed Taylor coefficients
are only produced by :func:`f0_taylor_oracle`, which exists to cross-check
the closed form of the f0 family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

FAMILIES = ("koebe", "lk_extremal", "f0", "constant", "finite_list")


def _check_gamma(gamma):
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma}")


def lk_extremal_coeff(n: int) -> float:
    """|a_n| = 2/n of log(1/(1-z)^2), extremal in the class LK."""
    if n <= 0:
        raise DomainError(f"coefficient index must be >= 1, got {n}")
    return 2.0 / n


def koebe_coeff(n: int) -> float:
    """|a_n| = n of the Koebe function z/(1-z)^2."""
    if n <= 0:
        raise DomainError(f"the Koebe function has no coefficient of index {n}")
    return float(n)


@dataclass(frozen=True)
class CoefficientSequence:
    """Moduli |a_n|, n >= 0, of one member of a known family.

    ``params`` holds ``(a, gamma)`` for f0, ``(c,)`` for constant and the
    coefficient tuple for finite_list; it is empty otherwise.
    """

    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")

    # f0 bookkeeping: |a_0| = |A0|, |a_n| = scale * q^n for n >= 1
    @property
    def _f0(self):
        a, g = self.params
        s = 1.0 - a * g
        return abs(a - g) / s, (1.0 - a * a) / (a * s), a * (1.0 - g) / s

    @property
    def a(self):
        return self.params[0] if self.family == "f0" else None

    @property
    def gamma(self):
        return self.params[1] if self.family == "f0" else None

    def modulus(self, n: int) -> float:
        if n < 0:
            raise DomainError(f"coefficient index must be >= 0, got {n}")
        fam = self.family
        if fam == "koebe":
            return float(n)
        if fam == "lk_extremal":
            return 0.0 if n == 0 else 2.0 / n
        if fam == "f0":
            a0, scale, q = self._f0
            return a0 if n == 0 else scale * q ** n
        if fam == "constant":
            return abs(self.params[0]) if n == 0 else 0.0
        return abs(self.params[n]) if n < len(self.params) else 0.0

    __call__ = modulus

    def moduli(self, count: int) -> np.ndarray:
        """Array of |a_0|, ..., |a_{count-1}|."""
        n = np.arange(count, dtype=float)
        fam = self.family
        if fam == "koebe":
            return n
        if fam == "lk_extremal":
            out = np.zeros(count)
            out[1:] = 2.0 / n[1:]
            return out
        if fam == "f0":
            a0, scale, q = self._f0
            out = scale * np.power(q, n)
            if count:
                out[0] = a0
            return out
        coeffs = (abs(self.params[0]),) if fam == "constant" else tuple(abs(c) for c in self.params)
        out = np.zeros(count)
        m = min(count, len(coeffs))
        out[:m] = coeffs[:m]
        return out

    # --- facts used by the tail bounds of bohr_sums -------------------------

    @property
    def support(self):
        """Index past the last possibly-nonzero coefficient, or None if infinite."""
        if self.family == "constant":
            return 1
        if self.family == "finite_list":
            return len(self.params)
        return None

    def sup_after(self, n: int) -> float:
        """sup_{k > n} |a_k| (inf for the Koebe sequence)."""
        fam = self.family
        if fam == "koebe":
            return math.inf
        if fam == "lk_extremal":
            return 2.0 / (n + 1)
        if fam == "f0":
            _, scale, q = self._f0
            return scale * q ** (n + 1)
        coeffs = self.moduli(self.support)
        rest = coeffs[n + 1:]
        return float(rest.max()) if rest.size else 0.0

    def total(self) -> float:
        """sum_k |a_k| (inf when the series of moduli diverges)."""
        fam = self.family
        if fam in ("koebe", "lk_extremal"):
            return math.inf
        if fam == "f0":
            a0, scale, q = self._f0
            return a0 + scale * q / (1.0 - q)
        return float(self.moduli(self.support).sum())

    def sup_all(self) -> float:
        """sup_k |a_k|."""
        if self.family == "koebe":
            return math.inf
        if self.family == "lk_extremal":
            return 2.0
        return max(self.modulus(0), self.sup_after(0))


def koebe_sequence() -> CoefficientSequence:
    return CoefficientSequence("koebe")


def lk_extremal_sequence() -> CoefficientSequence:
    return CoefficientSequence("lk_extremal")


def constant_sequence(c: float = 1.0) -> CoefficientSequence:
    return CoefficientSequence("constant", (float(c),))


def finite_sequence(coeffs: Sequence[float]) -> CoefficientSequence:
    coeffs = tuple(float(c) for c in coeffs)
    if any(not math.isfinite(c) or c < 0 for c in coeffs):
        raise DomainError("finite_list coefficients must be finite and non-negative")
    return CoefficientSequence("finite_list", coeffs)


def _check_f0(a, gamma):
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    _check_gamma(gamma)


def f0_sequence(a: float, gamma: float) -> CoefficientSequence:
    """Moduli of f0(z) = (a - g - (1-g) z) / (1 - a g - a (1-g) z).

    |A0| = |a - g| / (1 - a g) and, for n >= 1,
    A_n = (1 - a^2) / (a (1 - a g)) * (a (1-g) / (1 - a g))^n.
    """
    a, gamma = float(a), float(gamma)
    _check_f0(a, gamma)
    return CoefficientSequence("f0", (a, gamma))


def series_divide(num, den, count):
    """First ``count`` Taylor coefficients of num(z)/den(z) by long division.

    ``num`` and ``den`` are coefficient lists of polynomials (lowest degree
    first); ``den[0]`` must be nonzero.
    """
    if den[0] == 0:
        raise ZeroDivisionError("constant term of the denominator is zero")
    out = []
    for n in range(count):
        acc = num[n] if n < len(num) else 0.0
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / den[0])
    return out


def f0_taylor_oracle(a: float, gamma: float, n_max: int) -> list[float]:
    """Signed Taylor coefficients c_0..c_{n_max} of f0, by series division."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    num = [a - gamma, -(1.0 - gamma)]
    den = [1.0 - a * gamma, -a * (1.0 - gamma)]
    return series_divide(num, den, n_max + 1)


def f0_value(a: float, gamma: float, z: complex) -> complex:
    """Closed-form value of f0 at z."""
    return (a - gamma - (1.0 - gamma) * z) / (1.0 - a * gamma - a * (1.0 - gamma) * z)


def omega_contains(gamma: float, z: complex) -> bool:
    """True iff z lies in the open disk |z + g/(1-g)| < 1/(1-g)."""
    _check_gamma(gamma)
    return abs(z + gamma / (1.0 - gamma)) < 1.0 / (1.0 - gamma)


def omega_boundary(gamma: float, count: int, shrink: float = 1.0) -> np.ndarray:
    """``count`` equally spaced points on the circle bounding Omega_gamma.

    ``shrink`` < 1 scales the radius to sample just inside the domain.
    """
    _check_gamma(gamma)
    theta = 2.0 * np.pi * np.arange(count) / count
    return -gamma / (1.0 - gamma) + shrink / (1.0 - gamma) * np.exp(1j * theta)


def lemma_a_bound(gamma: float, a0_modulus: float) -> float:
    """(1 - |a_0|^2) / (1 + gamma): coefficient bound for functions bounded by 1 on Omega_gamma."""
    _check_gamma(gamma)
    if not 0.0 <= a0_modulus < 1.0:
        raise DomainError(f"|a_0| must lie in [0, 1), got {a0_modulus}")
    return (1.0 - a0_modulus ** 2) / (1.0 + gamma)
