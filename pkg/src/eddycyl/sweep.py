"""Permeability and frequency sweeps of the model errors, and log-log slope fits."""

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, EddyError
from .params import derive_quantities
from .quadrature import relative_l21_error
from .solutions import (
    eval_asymptotic,
    eval_impedance,
    solve_asymptotics,
    solve_global,
    solve_impedance,
)

DEFAULT_MU_VALUES = tuple(float(m) for m in np.geomspace(250.0, 16000.0, 7))
DEFAULT_FREQUENCIES = tuple(float(f) for f in np.geomspace(10.0, 2000.0, 24))
LOW_FREQ_LIMIT = 100.0
MODELS = ("order1", "order2", "impedance")


@dataclass(frozen=True)
class SweepRecord:
    mu_r: float
    frequency: float
    epsilon: float
    delta: float
    err_order1: float
    err_order2: float
    err_impedance: float
    in_regime: bool
    failure: str | None = None

    def error(self, model):
        return getattr(self, f"err_{model}")


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


def model_errors(params, geom):
    """Relative weighted-L2 errors on ``[R1, R2]`` of the three models against the exact solution."""
    derived = derive_quantities(params)
    exact = solve_global(params, geom)
    asym = solve_asymptotics(geom)
    imp = solve_impedance(derived, geom)

    def ref(r):
        return 0.5 * exact.a * r + exact.b / r

    lo, hi = geom.r1, geom.r2
    return (
        relative_l21_error(ref, lambda r: eval_asymptotic(1, asym, derived, geom, r), lo, hi),
        relative_l21_error(ref, lambda r: eval_asymptotic(2, asym, derived, geom, r), lo, hi),
        relative_l21_error(ref, lambda r: eval_impedance(imp, geom, r), lo, hi),
    )


def evaluate_point(params, geom):
    """One sweep record; numerical failures are stored rather than raised."""
    derived = derive_quantities(params)
    try:
        e1, e2, ei = model_errors(params, geom)
        failure = None
    except EddyError as exc:
        e1 = e2 = ei = math.nan
        failure = f"{type(exc).__name__}: {exc}"
    return SweepRecord(
        mu_r=params.mu_r,
        frequency=params.frequency,
        epsilon=derived.epsilon,
        delta=derived.delta,
        err_order1=e1,
        err_order2=e2,
        err_impedance=ei,
        in_regime=derived.epsilon < 1.0,
        failure=failure,
    )


def sweep_mu(params_base, geom, mu_values=DEFAULT_MU_VALUES):
    """Errors at each permeability, frequency and conductivity held fixed."""
    mu_values = [float(m) for m in mu_values]
    if any(m <= 0 for m in mu_values):
        raise DomainError("permeabilities must be positive")
    if any(b <= a for a, b in zip(mu_values, mu_values[1:])):
        raise DomainError("permeabilities must be strictly ascending")
    return [evaluate_point(replace(params_base, mu_r=m), geom) for m in mu_values]


def sweep_freq(params_base, geom, f_values=DEFAULT_FREQUENCIES):
    """Errors at each frequency, permeability and conductivity held fixed."""
    f_values = [float(f) for f in f_values]
    if any(f <= 0 for f in f_values):
        raise DomainError("frequencies must be positive")
    return [evaluate_point(replace(params_base, frequency=f), geom) for f in f_values]


def fit_loglog_slope(xs, ys):
    """Least-squares line through ``(log10 x, log10 y)``."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DomainError("xs and ys must be 1-d sequences of equal length")
    if x.size < 3:
        raise DomainError(f"need at least 3 points for a slope fit, got {x.size}")
    if np.any(~(x > 0)) or np.any(~(y > 0)):
        raise DomainError("log-log fit needs strictly positive data")
    lx, ly = np.log10(x), np.log10(y)
    mx, my = lx.mean(), ly.mean()
    sxx = np.sum((lx - mx) ** 2)
    if sxx == 0:
        raise DomainError("abscissae are all equal")
    slope = np.sum((lx - mx) * (ly - my)) / sxx
    intercept = my - slope * mx
    ss_res = np.sum((ly - (intercept + slope * lx)) ** 2)
    ss_tot = np.sum((ly - my) ** 2)
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return SlopeFit(slope=float(slope), intercept=float(intercept), r_squared=float(r2), n_points=int(x.size))


def fit_window(records, window="all"):
    """Records eligible for slope fitting.

    ``"all"`` keeps every successful in-regime record; ``"low-freq"`` further
    restricts to ``f <= 100 Hz``, below the slope break of the order-2 curve.
    """
    if window not in ("all", "low-freq"):
        raise DomainError(f"unknown fit window {window!r}")
    keep = [r for r in records if r.in_regime and r.failure is None]
    if window == "low-freq":
        keep = [r for r in keep if r.frequency <= LOW_FREQ_LIMIT]
    return keep


def fit_sweep(records, model, window="all"):
    """Slope of ``log(error)`` against ``log(epsilon)`` for one model."""
    if model not in MODELS:
        raise DomainError(f"unknown model {model!r}")
    keep = fit_window(records, window)
    return fit_loglog_slope([r.epsilon for r in keep], [r.error(model) for r in keep])
