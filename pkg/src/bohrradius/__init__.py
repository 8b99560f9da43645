"""Bohr radii of bounded and linearly invariant function families.

Computes the classical radius on the disks Omega_gamma, refined radii of the
classes LK and S for arbitrary weight functions lambda(r), and the radii of
the discrete Fourier and Laplace coefficient transforms, together with
numerical checks of the corresponding inequalities and their sharpness.
"""

from .bohr_sums import (
    SeriesEvaluation,
    capital_phi_gamma,
    fourier_majorant,
    fourier_upper_envelope,
    koebe_square_sum_closed,
    laplace_majorant,
    laplace_phi_small,
    laplace_upper_bound_fn,
    lk_square_sum_closed,
    majorant_sum,
    phi_gamma_a,
    refined_sum,
)
from .coefficients import (
    CoefficientSequence,
    constant_sequence,
    f0_sequence,
    f0_taylor_oracle,
    finite_sequence,
    koebe_coeff,
    koebe_sequence,
    lemma_a_bound,
    lk_extremal_coeff,
    lk_extremal_sequence,
    omega_contains,
)
from .errors import (
    BohrError,
    BracketError,
    ConvergenceError,
    DomainError,
    LambdaEvalError,
    LambdaSyntaxError,
    NoRootError,
)
from .lambda_dsl import check_nonnegative, eval_lambda, parse_lambda, to_source
from .radius import (
    RootResult,
    bisect_root,
    classical_radius,
    count_sign_changes,
    laplace_radius,
    refined_radius_lk,
    refined_radius_s,
)
from .report import VerificationReport
from .specfun import DilogResult, dilog
from .tables import TABLE_1, TABLE_2, reproduce_table
from .verify import (
    lemma_a_check,
    sharpness_sweep_fourier,
    sharpness_sweep_laplace,
    verify_fourier_inequality,
    verify_laplace_inequality,
    verify_refined_inequality,
)

__version__ = "0.1.0"
