"""Power-law tailed distribution toolkit built on the deformed
exponential exp_k(x) = (sqrt(1 + k^2 x^2) + k x)^(1/k).

Five families on the half line (generalized Gamma, Weibull, logistic,
the purely deformed Type IV, and the derivative-generated Type V), plus
symmetrized real-line variants, closed-form moments with explicit
existence windows, sampling, MLE fitting and a CLI.
"""

from .core import (
    kappa_erf,
    kappa_exp,
    kappa_exp_tail_exponent,
    kappa_log,
    log_mellin_kappa,
    mellin_kappa,
)
from .errors import (
    BoundaryFitError,
    DegenerateFamilyError,
    DomainError,
    FitNonConvergenceError,
    InsufficientTailPointsError,
    KappaDistError,
    MomentDivergesError,
    NoConvergenceError,
    NumericalError,
    UnsupportedOrderError,
    VarianceDivergesError,
)
from .fitting import FitResult, Sample, fit_mle, tail_index
from .framework import (
    DescriptiveStats,
    Distribution,
    ModeResult,
    SymmetrizedDistribution,
    as_generator,
)
from .type1 import ErlangPolynomials, KappaErlang, KappaNormal, Type1, erlang_polynomials
from .type2 import Type2
from .type3 import KappaLogistic, Type3
from .type4 import Type4
from .type5 import Type5

__version__ = "0.1.0"

__all__ = [
    "kappa_exp",
    "kappa_log",
    "kappa_erf",
    "kappa_exp_tail_exponent",
    "mellin_kappa",
    "log_mellin_kappa",
    "Distribution",
    "SymmetrizedDistribution",
    "DescriptiveStats",
    "ModeResult",
    "as_generator",
    "Type1",
    "Type2",
    "Type3",
    "Type4",
    "Type5",
    "KappaErlang",
    "KappaNormal",
    "KappaLogistic",
    "ErlangPolynomials",
    "erlang_polynomials",
    "Sample",
    "FitResult",
    "fit_mle",
    "tail_index",
    "KappaDistError",
    "DomainError",
    "MomentDivergesError",
    "VarianceDivergesError",
    "DegenerateFamilyError",
    "UnsupportedOrderError",
    "NumericalError",
    "NoConvergenceError",
    "FitNonConvergenceError",
    "BoundaryFitError",
    "InsufficientTailPointsError",
]
