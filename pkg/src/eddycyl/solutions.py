r"""Closed-form radial solutions on the infinite two-layer cylinder.

A ferromagnetic core ``0 <= r < R1`` is surrounded by a dielectric shell
``R1 < r < R2`` with ``A(R2) = k/R2``. Four solutions live here:

* the exact (global) solution, ``A+ = a r/2 + b/r`` in the shell and
  ``A- = c I1(gamma r)`` in the core;
* the order-1 and order-2 asymptotic models ``A0+`` and
  ``A0+ + (eps/alpha_hat) A1+``, independent of the core material apart from eps;
* the impedance (Leontovich) model ``A1^eps``;
* the boundary-layer profiles approximating ``A-`` near ``r = R1``.

The boundary operator on the interface is ``B u = -(1/r) d(r u)/dr``, so for
``u = a r/2 + b/r`` one has ``B u = -a``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularSystemError
from .params import derive_quantities, validate
from .special import i1_logderiv, i1_ratio


@dataclass(frozen=True)
class GlobalCoefficients:
    """Shell coefficients ``a``, ``b`` and the interface value ``A(R1)``.

    ``interface_value`` replaces the core constant ``c = A(R1) / I1(gamma R1)``,
    which overflows once ``|gamma R1|`` exceeds ~700.
    """

    a: complex
    b: complex
    interface_value: complex


@dataclass(frozen=True)
class AsymptoticCoefficients:
    a0: float
    b0: float
    a1: float
    b1: float


@dataclass(frozen=True)
class ImpedanceCoefficients:
    a2: complex
    b2: complex
    zeta: complex


@dataclass(frozen=True)
class ProfileTerms:
    """Interface data of the core boundary-layer profiles.

    ``surface_value`` is ``A0+(R1)``, ``correction_coeff`` is
    ``A1+(R1) / (alpha_hat delta0^2)`` and ``curvature_factor`` is ``1/R1``,
    the value of ``curvature + z'/r`` on a straight cylinder.
    """

    surface_value: float
    correction_coeff: complex
    curvature_factor: float


def _shell(a, b, r):
    return 0.5 * a * r + b / r


def _radii(r):
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("radius must be finite")
    return arr


def _scalar_or_array(values, r):
    return values[()] if np.ndim(r) == 0 else values


def solve_global(params, geom):
    r"""Coefficients of the exact solution.

    With :math:`L = I_1'/I_1` at :math:`\gamma R_1`,

    .. math::
        \hat g_1 = 1 + \gamma R_1 L, \qquad
        \hat g_2 = R_1 \mu_r - \hat g_1 \frac{R_1^2 - R_2^2}{2 R_1},

    ``a = (k/R1) g1/g2``, ``b = k - a R2^2/2``. These are the usual ``g1``,
    ``g2`` divided by ``I1(gamma R1)``, so nothing overflows.
    """
    validate(params, geom)
    derived = derive_quantities(params)
    r1, r2, k = geom.r1, geom.r2, geom.k
    z1 = derived.gamma * r1
    g1 = 1.0 + z1 * i1_logderiv(z1)
    g2 = r1 * params.mu_r - g1 * (r1 * r1 - r2 * r2) / (2.0 * r1)
    if abs(g2) < 1e-14 * abs(r1 * params.mu_r):
        raise SingularSystemError(f"global system singular: |g2| = {abs(g2):.3e}")
    a = (k / r1) * g1 / g2
    b = k - 0.5 * a * r2 * r2
    return GlobalCoefficients(a=complex(a), b=complex(b), interface_value=complex(_shell(a, b, r1)))


def eval_global(coeffs, params, geom, r):
    """Evaluate the exact solution at radii ``0 <= r <= R2`` (scalar or array)."""
    rr = _radii(r)
    if np.any(rr < 0) or np.any(rr > geom.r2):
        raise DomainError(f"global solution defined on [0, {geom.r2}]")
    gamma = derive_quantities(params).gamma
    flat = np.atleast_1d(rr)
    out = np.empty(flat.shape, dtype=np.complex128)
    shell = flat > geom.r1
    out[shell] = _shell(coeffs.a, coeffs.b, flat[shell])
    core = ~shell
    if np.any(core):
        out[core] = coeffs.interface_value * i1_ratio(gamma * flat[core], gamma * geom.r1)
    return _scalar_or_array(out.reshape(rr.shape), r)


def solve_asymptotics(geom):
    """Coefficients of ``A0+ = k/r`` and ``A1+ = (k/R1) r/2 - k R2^2/(2 R1 r)``."""
    validate(geom=geom)
    k, r1, r2 = geom.k, geom.r1, geom.r2
    return AsymptoticCoefficients(a0=0.0, b0=k, a1=k / r1, b1=-k * r2 * r2 / (2.0 * r1))


def eval_asymptotic(order, coeffs, derived, geom, r):
    """Order-1 model ``A0+`` or order-2 model ``A0+ + (eps/alpha_hat) A1+`` on ``[R1, R2]``."""
    if order not in (1, 2):
        raise DomainError(f"asymptotic order must be 1 or 2, got {order!r}")
    rr = _radii(r)
    if np.any(rr < geom.r1) or np.any(rr > geom.r2):
        raise DomainError(f"asymptotic models live in the shell [{geom.r1}, {geom.r2}]")
    out = _shell(coeffs.a0, coeffs.b0, rr).astype(np.complex128)
    if order == 2:
        out = out + derived.eps_over_alpha * _shell(coeffs.a1, coeffs.b1, rr)
    return _scalar_or_array(out, r)


def solve_impedance(derived, geom):
    """Shell solution under ``B A + (eps/alpha_hat) A = 0`` at ``R1``.

    ``zeta = (eps/alpha_hat)(R2^2 - R1^2) + 2 R1``, ``a2 = (eps/alpha_hat) 2k/zeta``,
    ``b2 = k - a2 R2^2/2``.
    """
    validate(geom=geom)
    r1, r2, k = geom.r1, geom.r2, geom.k
    ea = derived.eps_over_alpha
    zeta = ea * (r2 * r2 - r1 * r1) + 2.0 * r1
    if abs(zeta) < 1e-14 * r1:
        raise SingularSystemError("impedance system singular")
    a2 = ea * 2.0 * k / zeta
    b2 = k - 0.5 * a2 * r2 * r2
    return ImpedanceCoefficients(a2=complex(a2), b2=complex(b2), zeta=complex(zeta))


def eval_impedance(coeffs, geom, r):
    rr = _radii(r)
    if np.any(rr < geom.r1) or np.any(rr > geom.r2):
        raise DomainError(f"impedance model lives in the shell [{geom.r1}, {geom.r2}]")
    return _scalar_or_array(np.asarray(_shell(coeffs.a2, coeffs.b2, rr), dtype=np.complex128), r)


def profile_terms(derived, geom):
    asym = solve_asymptotics(geom)
    r1 = geom.r1
    a1_at_r1 = _shell(asym.a1, asym.b1, r1)
    # 1/(alpha_hat delta0^2) = (1 + i)/delta0^2
    corr = complex(1.0, 1.0) * a1_at_r1 / derived.delta0 ** 2
    return ProfileTerms(
        surface_value=_shell(asym.a0, asym.b0, r1),
        correction_coeff=corr,
        curvature_factor=1.0 / r1,
    )


def eval_profile_interior(order, coeffs, derived, geom, h):
    r"""Boundary-layer approximation of the core solution at depth ``h = R1 - r``.

    With ``Y = h/delta`` and ``E = exp(-Y/alpha_hat) = exp(-(1+i)Y)``:
    order 0 gives ``P0 = A0+(R1) E`` and order 1 gives ``P0 + delta P1`` with

    .. math::
        P_1 = \Big[\frac{A_1^+(R_1)}{\hat\alpha\,\delta_0^2}
              + \frac{Y}{2 R_1} A_0^+(R_1)\Big] E .

    The ``+Y/(2R1)`` curvature term is what the large-argument form of
    ``I1(gamma (R1 - h)) / I1(gamma R1) ~ sqrt(R1/(R1-h)) e^{-gamma h}`` demands.
    """
    if order not in (0, 1):
        raise DomainError(f"profile order must be 0 or 1, got {order!r}")
    hh = _radii(h)
    if np.any(hh < 0):
        raise DomainError("depth h must be >= 0")
    if np.any(hh >= geom.r1):
        raise DomainError("depth h must be < R1")
    y = hh / derived.delta
    decay = np.exp(-complex(1.0, 1.0) * y)
    out = coeffs.surface_value * decay
    if order == 1:
        p1 = (coeffs.correction_coeff + 0.5 * y * coeffs.curvature_factor * coeffs.surface_value) * decay
        out = out + derived.delta * p1
    return _scalar_or_array(np.asarray(out, dtype=np.complex128), h)
