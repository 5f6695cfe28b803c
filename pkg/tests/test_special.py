import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eddycyl import DomainError, NumericalFailure
from eddycyl.special import bessel_i0, bessel_i1, i1_logderiv, i1_ratio

mp.mp.dps = 40
RAY = cmath.exp(0.25j * math.pi)


def mp_series(nu, z):
    """Independent extended-precision power series for I_nu."""
    z = mp.mpmathify(z)
    q = z * z / 4
    term = (z / 2) ** nu / mp.factorial(nu)
    total = term
    k = 0
    while abs(term) > mp.mpf(10) ** (-mp.mp.dps) * abs(total) or k < 5:
        k += 1
        term = term * q / (k * (k + nu))
        total += term
    return total


def mp_scaled(nu, z):
    zz = mp.mpc(z.real, z.imag)
    return complex(mp.besseli(nu, zz) * mp.exp(-abs(zz.real)))


def rel(a, b):
    return abs(complex(a) - complex(b)) / abs(complex(b))


def test_values_at_zero():
    assert bessel_i0(0) == 1
    assert bessel_i1(0) == 0


def test_unit_argument_against_series_oracle():
    i0_ref, i1_ref = mp_series(0, 1), mp_series(1, 1)
    assert float(i0_ref) == pytest.approx(1.2660658777520082, rel=1e-15)
    assert float(i1_ref) == pytest.approx(0.5651591039924851, rel=1e-15)
    assert rel(bessel_i0(1.0), i0_ref) < 1e-12
    assert rel(bessel_i1(1.0), i1_ref) < 1e-12


def test_scaled_i0_at_100():
    got = bessel_i0(100.0, scaled=True)
    assert np.isfinite(got)
    assert abs(got - 0.03994) < 1e-5
    assert rel(got, mp_scaled(0, 100.0 + 0j)) < 1e-12


@pytest.mark.parametrize("rho", [0.5, 2.0, 10.0, 23.8, 29.9, 30.1, 45.0, 100.0, 675.0, 700.0])
@pytest.mark.parametrize("angle", [0.0, math.pi / 8, math.pi / 4])
def test_accuracy_against_mpmath(rho, angle):
    z = rho * cmath.exp(1j * angle)
    assert rel(bessel_i0(z, scaled=True), mp_scaled(0, z)) < 1e-12
    assert rel(bessel_i1(z, scaled=True), mp_scaled(1, z)) < 1e-12


def test_vectorised_matches_scalar():
    zs = np.array([0.3, 5 * RAY, 31 * RAY, 400 * RAY])
    vec = bessel_i1(zs, scaled=True)
    for z, v in zip(zs, vec):
        assert v == bessel_i1(z, scaled=True)


def test_bessel_equation_residual_on_ray():
    for rho in np.linspace(1.0, 50.0, 50):
        z = rho * RAY
        i0 = bessel_i0(z, scaled=True)
        i1 = bessel_i1(z, scaled=True)
        d1 = i0 - i1 / z
        d2 = i1 - d1 / z + i1 / z**2
        terms = [z * z * d2, z * d1, -(z * z + 1) * i1]
        assert abs(sum(terms)) / sum(abs(t) for t in terms) < 1e-8


@settings(max_examples=200, deadline=None)
@given(st.floats(0.01, 700.0), st.floats(-math.pi / 2, math.pi / 2))
def test_conjugation_symmetry(rho, angle):
    z = rho * cmath.exp(1j * angle)
    a = bessel_i1(z.conjugate(), scaled=True)
    b = bessel_i1(z, scaled=True).conjugate()
    assert abs(a - b) <= 1e-12 * abs(b)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 30.0), st.floats(-math.pi / 4, math.pi / 4))
def test_scaled_unscaled_consistency(rho, angle):
    z = rho * cmath.exp(1j * angle)
    scaled = bessel_i1(z, scaled=True) * math.exp(z.real)
    direct = complex(mp_series(1, mp.mpc(z.real, z.imag)))
    assert abs(scaled - direct) <= 1e-10 * abs(direct)


def test_unscaled_overflow_is_reported():
    with pytest.raises(NumericalFailure):
        bessel_i1(1000.0)
    assert np.isfinite(bessel_i1(1000.0, scaled=True))


def test_nonfinite_argument_rejected():
    with pytest.raises(DomainError):
        bessel_i0(complex("nan"))


def test_negative_real_part_uses_reflection():
    z = -40.0 + 3.0j
    assert rel(bessel_i1(z, scaled=True), mp_scaled(1, z)) < 1e-12
    assert rel(bessel_i0(z, scaled=True), mp_scaled(0, z)) < 1e-12


def test_logderiv_at_one():
    expected = mp_series(0, 1) / mp_series(1, 1) - 1
    assert float(expected) == pytest.approx(1.2402, abs=1e-4)
    assert rel(i1_logderiv(1.0), complex(expected)) < 1e-10


@pytest.mark.parametrize("rho", [0.1, 1.0, 23.8, 100.0, 675.0, 1e4, 1e5])
def test_logderiv_against_mpmath(rho):
    z = rho * RAY
    zz = mp.mpc(z.real, z.imag)
    expected = complex(mp.besseli(1, zz, derivative=1) / mp.besseli(1, zz))
    assert rel(i1_logderiv(z), expected) < 1e-10


@pytest.mark.parametrize("rho", [2.0, 30.5, 250.0])
def test_logderiv_matches_scaled_ratio_route(rho):
    z = rho * RAY
    alt = bessel_i0(z, scaled=True) / bessel_i1(z, scaled=True) - 1 / z
    assert rel(i1_logderiv(z), alt) < 1e-10


@pytest.mark.parametrize("rho", [50.0, 500.0, 5e3, 5e4])
def test_logderiv_large_argument_limit(rho):
    assert abs(i1_logderiv(rho * RAY) - 1) <= 2 / rho


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 2000.0), st.floats(-1.5, 1.5))
def test_logderiv_reflection(rho, angle):
    z = rho * cmath.exp(1j * angle)
    a, b = i1_logderiv(z.conjugate()), i1_logderiv(z).conjugate()
    assert abs(a - b) <= 1e-12 * abs(b)


@pytest.mark.parametrize("z", [0, -1.0, 2j])
def test_logderiv_domain(z):
    with pytest.raises(DomainError):
        i1_logderiv(z)


def test_ratio_identities():
    z = 23.8 * RAY
    assert i1_ratio(z, z) == pytest.approx(1.0, abs=1e-15)
    assert i1_ratio(0.0, z) == 0


def test_ratio_at_table1_half_radius():
    gamma_r1 = complex(23.83538618216656, 23.83538618216656)  # gamma * R1 for the reference cylinder
    got = i1_ratio(0.5 * gamma_r1, gamma_r1)
    zn = mp.mpc(0.5 * gamma_r1.real, 0.5 * gamma_r1.imag)
    zd = mp.mpc(gamma_r1.real, gamma_r1.imag)
    assert rel(got, complex(mp.besseli(1, zn) / mp.besseli(1, zd))) < 1e-12
    rough = math.exp(-0.5 * gamma_r1.real) * math.sqrt(2)
    assert abs(got) == pytest.approx(rough, rel=0.1)


def test_ratio_chain_and_bound():
    rhos = [1.0, 7.0, 29.0, 31.0, 300.0, 3000.0, 1e5]
    zs = [r * RAY for r in rhos]
    for i in range(len(zs)):
        for j in range(i, len(zs)):
            assert abs(i1_ratio(zs[i], zs[j])) <= 1 + 1e-9
            for k in range(j, len(zs)):
                lhs = i1_ratio(zs[i], zs[j]) * i1_ratio(zs[j], zs[k])
                rhs = i1_ratio(zs[i], zs[k])
                if rhs != 0:
                    assert abs(lhs - rhs) <= 1e-9 * abs(rhs)


def test_ratio_vectorised_interior_sweep():
    zd = 675.0 * RAY
    zn = np.linspace(0, 1, 101) * zd
    out = i1_ratio(zn, zd)
    assert np.all(np.isfinite(out))
    assert out[0] == 0 and out[-1] == pytest.approx(1.0)


def test_ratio_domain():
    with pytest.raises(DomainError):
        i1_ratio(1.0, -1.0)
    with pytest.raises(DomainError):
        i1_ratio(-1.0, 1.0)
