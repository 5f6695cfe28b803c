"""Exact, asymptotic and impedance solutions for eddy currents in a ferromagnetic cylinder."""

from .errors import (
    DomainError,
    EddyError,
    NumericalFailure,
    ParameterError,
    SingularityError,
    SingularSystemError,
)
from .fd import GridSolution, oracle_error_vs_analytic, solve_fd
from .params import (
    ALPHA_HAT,
    MU0,
    CylinderGeometry,
    DerivedQuantities,
    PhysicalParams,
    derive_quantities,
    regime_crossing_frequency,
    validate,
)
from .quadrature import l21_norm, relative_l21_error
from .solutions import (
    AsymptoticCoefficients,
    GlobalCoefficients,
    ImpedanceCoefficients,
    ProfileTerms,
    eval_asymptotic,
    eval_global,
    eval_impedance,
    eval_profile_interior,
    profile_terms,
    solve_asymptotics,
    solve_global,
    solve_impedance,
)
from .special import bessel_i0, bessel_i1, i1_logderiv, i1_ratio
from .sweep import SlopeFit, SweepRecord, fit_loglog_slope, fit_sweep, sweep_freq, sweep_mu

__version__ = "0.1.0"
