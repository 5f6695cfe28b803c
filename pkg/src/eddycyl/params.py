"""Physical inputs, cylinder geometry and the scalars derived from them."""

import math
import numbers
from dataclasses import dataclass

from .errors import ParameterError

MU0 = 4e-7 * math.pi
"""Permeability of free space in H/m (classical value, not the 2019 SI one)."""

ALPHA_HAT = (1 - 1j) / 2
"""Complex constant of the expansion; ``1/ALPHA_HAT == 1 + 1j``."""


@dataclass(frozen=True)
class PhysicalParams:
    """Relative permeability, conductivity (S/m) and frequency (Hz) of the core."""

    mu_r: float = 4000.0
    sigma: float = 2e6
    frequency: float = 10.0

    @property
    def mu0(self):
        return MU0

    @property
    def omega(self):
        return 2.0 * math.pi * self.frequency


@dataclass(frozen=True)
class CylinderGeometry:
    """Core radius ``r1``, outer radius ``r2`` (m) and Dirichlet constant ``k``.

    The outer boundary condition is ``A(r2) = k / r2``.
    """

    r1: float = 0.03
    r2: float = 0.04
    k: float = 1.0


@dataclass(frozen=True)
class DerivedQuantities:
    omega: float
    delta: float
    delta0: float
    epsilon: float
    gamma: complex
    alpha_hat: complex = ALPHA_HAT

    @property
    def eps_over_alpha(self):
        """``epsilon / alpha_hat`` formed as ``epsilon * (1 + i)`` without division."""
        return complex(self.epsilon, self.epsilon)

    @property
    def in_regime(self):
        return self.epsilon < 1.0


def _check_positive(name, value, message, out):
    if not isinstance(value, numbers.Real) or isinstance(value, bool):
        out.append(f"{name}: expected a real number, got {value!r}")
    elif not math.isfinite(value):
        out.append(f"{name}: must be finite, got {value!r}")
    elif value <= 0:
        out.append(f"{name}: {message} (got {value!r})")


def validate(params=None, geom=None):
    """Check every domain constraint and raise `ParameterError` listing all violations.

    Either argument may be omitted to validate only the other one.
    """
    problems = []
    if params is not None:
        _check_positive("mu_r", params.mu_r, "relative permeability must be > 0", problems)
        _check_positive("sigma", params.sigma, "non-conducting core, sigma must be > 0", problems)
        _check_positive("frequency", params.frequency, "frequency must be > 0", problems)
    if geom is not None:
        before = len(problems)
        _check_positive("r1", geom.r1, "core radius must be > 0", problems)
        _check_positive("r2", geom.r2, "outer radius must be > 0", problems)
        if len(problems) == before and not geom.r1 < geom.r2:
            problems.append(
                f"r1, r2: degenerate annulus, need r1 < r2 (got r1={geom.r1!r}, r2={geom.r2!r})"
            )
        if not isinstance(geom.k, numbers.Real) or not math.isfinite(geom.k):
            problems.append(f"k: must be a finite real number, got {geom.k!r}")
    if problems:
        raise ParameterError(problems)


def derive_quantities(params):
    """Angular frequency, skin depths, expansion parameter and wavenumber.

    ``delta = sqrt(2/(omega sigma mu_r mu0))``, ``delta0 = sqrt(2/(omega sigma mu0))``,
    ``epsilon = 1/(mu_r delta)`` and ``gamma = sqrt(omega sigma mu_r mu0) e^{i pi/4}``.
    ``gamma`` is built with equal real and imaginary parts so its argument is
    exactly pi/4.
    """
    validate(params)
    omega = params.omega
    conductance = omega * params.sigma * MU0
    delta = math.sqrt(2.0 / (conductance * params.mu_r))
    delta0 = math.sqrt(2.0 / conductance)
    epsilon = 1.0 / (params.mu_r * delta)
    g = math.sqrt(conductance * params.mu_r / 2.0)
    return DerivedQuantities(
        omega=omega,
        delta=delta,
        delta0=delta0,
        epsilon=epsilon,
        gamma=complex(g, g),
    )


def regime_crossing_frequency(mu_r, sigma):
    """Frequency (Hz) at which ``epsilon == 1``; the expansion needs lower frequencies.

    From ``epsilon^2 = pi f sigma mu0 / mu_r``.
    """
    return mu_r / (math.pi * sigma * MU0)
