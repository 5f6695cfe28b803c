r"""Modified Bessel functions :math:`I_0`, :math:`I_1` of complex argument.

Only what the cylinder solutions need is provided: the two orders, an
exponentially scaled mode, the logarithmic derivative of :math:`I_1` and an
overflow-safe ratio :math:`I_1(z_1)/I_1(z_2)`.

Evaluation uses the ascending power series for ``|z| <= 30`` and the
large-argument (Hankel) expansion
``e^z/sqrt(2 pi z) sum_k (-1)^k a_k(nu)/z^k`` beyond. The scaled functions
are

.. math::
    \tilde I_\nu(z) = I_\nu(z)\, e^{-|\operatorname{Re} z|}.

Accuracy is about 1e-12 relative for ``|arg z| <= pi/4``. Close to the
imaginary axis and below ``|z| = 30`` the series cancels (``I_1(iy) = i J_1(y)``
oscillates) and precision degrades; that region is never used here.
"""

import math

import numpy as np

from .errors import DomainError, NumericalFailure, SingularityError

SERIES_MAX_ABS = 30.0
MAX_SERIES_TERMS = 500
SERIES_RTOL = 1e-17
ASYMPTOTIC_RTOL = 1e-17
# Hankel terms give accuracy ~exp(-2|z|); this is the worst acceptable tail.
ASYMPTOTIC_FAIL_RTOL = 1e-13


def _as_complex(z):
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Bessel argument must be finite")
    return arr


def _series(nu, z):
    """Ascending series I_nu(z) = (z/2)^nu sum (z^2/4)^k / (k! (k+nu)!)."""
    quarter_sq = 0.25 * z * z
    term = np.ones_like(z) if nu == 0 else 0.5 * z
    total = term.copy()
    for k in range(1, MAX_SERIES_TERMS + 1):
        term = term * quarter_sq / (k * (k + nu))
        total = total + term
        if np.all(np.abs(term) <= SERIES_RTOL * np.abs(total)):
            return total
    raise NumericalFailure(
        f"I_{nu} power series did not converge in {MAX_SERIES_TERMS} terms"
    )


def _hankel_scaled(nu, z):
    """Scaled large-|z| expansion for Re z >= 0, returns I_nu(z) exp(-Re z)."""
    mu = 4.0 * nu * nu
    s_plus = np.ones_like(z)   # sum (-1)^k a_k / z^k
    s_minus = np.ones_like(z)  # sum a_k / z^k
    term = np.ones_like(z)
    prev = np.full(z.shape, np.inf)
    active = np.ones(z.shape, dtype=bool)
    last = np.zeros(z.shape)
    for k in range(1, MAX_SERIES_TERMS + 1):
        term = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * z)
        mag = np.abs(term)
        # Optimal truncation: stop an element once its terms start growing.
        active &= mag < prev
        if not np.any(active):
            break
        sign = -1.0 if k % 2 else 1.0
        s_plus = np.where(active, s_plus + sign * term, s_plus)
        s_minus = np.where(active, s_minus + term, s_minus)
        last = np.where(active, mag, last)
        prev = mag
        active &= mag > ASYMPTOTIC_RTOL * np.abs(s_plus)
        if not np.any(active):
            break
    if np.any(last > ASYMPTOTIC_FAIL_RTOL * np.abs(s_plus)):
        raise NumericalFailure(f"I_{nu} asymptotic expansion failed to converge")

    pref = 1.0 / np.sqrt(2.0 * np.pi * z)
    out = pref * np.exp(1j * z.imag) * s_plus
    # Recessive e^{-z} contribution matters only near the imaginary axis.
    near_axis = 2.0 * z.real < 45.0
    if np.any(near_axis):
        upper = z.imag >= 0
        phase = np.where(upper, 1j * np.exp(1j * nu * np.pi), -1j * np.exp(-1j * nu * np.pi))
        extra = phase * np.exp(-2.0 * z.real - 1j * z.imag) * s_minus * pref
        out = np.where(near_axis, out + extra, out)
    return out


def _bessel(nu, z, scaled):
    z = _as_complex(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)

    small = np.abs(z) <= SERIES_MAX_ABS
    if np.any(small):
        vals = _series(nu, z[small])
        if scaled:
            vals = vals * np.exp(-np.abs(z[small].real))
        out[small] = vals

    big = ~small
    if np.any(big):
        zb = z[big]
        # I_nu(-z) = (-1)^nu I_nu(z) keeps the expansion in Re z >= 0.
        flip = zb.real < 0
        vals = _hankel_scaled(nu, np.where(flip, -zb, zb))
        if nu % 2:
            vals = np.where(flip, -vals, vals)
        if not scaled:
            with np.errstate(over="ignore", invalid="ignore"):
                vals = vals * np.exp(np.abs(zb.real))
            if not np.all(np.isfinite(vals)):
                raise NumericalFailure(
                    f"I_{nu}(z) overflows double precision; use scaled=True"
                )
        out[big] = vals

    return out[0] if scalar else out


def bessel_i0(z, scaled=False):
    """Modified Bessel function I_0 of complex argument.

    Parameters
    ----------
    z : complex or array_like
        Argument(s).
    scaled : bool
        If True return ``I_0(z) * exp(-|Re z|)``.
    """
    return _bessel(0, z, scaled)


def bessel_i1(z, scaled=False):
    """Modified Bessel function I_1 of complex argument (see `bessel_i0`)."""
    return _bessel(1, z, scaled)


def i1_logderiv(z):
    r"""Logarithmic derivative :math:`L(z) = I_1'(z)/I_1(z)`.

    Computed as ``1/z + I_2(z)/I_1(z)`` with the ratio taken from the Gauss
    continued fraction

    .. math::
        \frac{I_2}{I_1} = \cfrac{1}{4/z + \cfrac{1}{6/z + \cdots}}

    evaluated by the modified Lentz method. No Bessel value is formed, so the
    result is finite for arbitrarily large ``|z|``. ``L(z) -> 1`` as
    ``|z| -> inf`` in the right half-plane.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("argument must be finite")
    if z == 0:
        raise DomainError("I1 logarithmic derivative is singular at z = 0")
    if z.real <= 0:
        raise DomainError("i1_logderiv requires Re z > 0")

    tiny = 1e-300
    inv_z = 1.0 / z
    abs_z = abs(z)
    max_iter = int(4 * abs_z) + 1000

    f = 4.0 * inv_z
    if f == 0:
        f = tiny
    c = f
    d = 0.0
    for j in range(1, max_iter + 1):
        b = 2.0 * (j + 2) * inv_z
        d = b + d
        if d == 0:
            d = tiny
        c = b + 1.0 / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        # Convergents oscillate while the partial denominators are < 1.
        if 2 * (j + 2) > abs_z and abs(delta - 1.0) < 1e-16:
            break
    else:
        raise NumericalFailure(
            f"continued fraction for I2/I1 did not converge at z={z!r}"
        )
    return inv_z + 1.0 / f


def i1_ratio(z_num, z_den):
    """Overflow-safe ``I_1(z_num) / I_1(z_den)``.

    Formed from scaled values, ``[~I_1(z_num)/~I_1(z_den)] exp(Re(z_num - z_den))``,
    so that interior evaluations ``I_1(gamma r)/I_1(gamma R)`` with ``r <= R``
    stay bounded even when ``|gamma R|`` is in the thousands.

    ``z_num`` may be an array; ``z_den`` is a scalar.
    """
    z_den = complex(z_den)
    z_num = _as_complex(z_num)
    if not z_den.real > 0:
        raise DomainError("i1_ratio requires Re z_den > 0")
    if np.any(z_num.real < 0):
        raise DomainError("i1_ratio requires Re z_num >= 0")

    den = bessel_i1(z_den, scaled=True)
    if abs(den) < 1e-290:
        raise SingularityError(f"I_1 vanishes at z_den={z_den!r}")
    num = bessel_i1(z_num, scaled=True)
    with np.errstate(over="ignore", invalid="ignore"):
        out = num / den * np.exp(z_num.real - z_den.real)
    if not np.all(np.isfinite(out)):
        raise NumericalFailure("I_1 ratio is not finite; |z_num| too large")
    return out
