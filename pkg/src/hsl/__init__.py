"""Hermite series transformations with exact and numeric identity checks."""

from .errors import CapacityError, DomainError, HSLError, ModeUnavailableError, UsageError
from .fps import (
    TruncatedSeries,
    binomial_transform,
    catalog_series,
    euler_transform,
    series_add,
    series_compose,
    series_mul,
    series_scale,
)
from .identities import CheckReport, run_suite
from .kernels import (
    HermitePoly,
    SequenceSpec,
    binom_general,
    harmonic,
    hermite_eval,
    hermite_poly,
    hermite_rodrigues_oracle,
    laguerre_eval,
    power_alpha,
    stirling_function,
)

__version__ = "0.1.0"
