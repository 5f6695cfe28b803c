"""Modified Bessel functions of complex argument along the ray arg z = pi/4.

The core solution of the cylinder problem is I1(gamma r) with arg gamma = pi/4,
so that is the ray that matters. Unscaled values overflow near |z| ~ 1000;
scaled values and ratios do not.
"""

import numpy as np

from eddycyl import bessel_i0, bessel_i1, i1_logderiv, i1_ratio

ray = np.exp(1j * np.pi / 4)

# Scaled and unscaled values agree up to the factor exp(Re z).
for rho in [1.0, 10.0, 30.0, 100.0, 600.0]:
    z = rho * ray
    scaled = bessel_i1(z, scaled=True)
    print(f"|z| = {rho:6.1f}  I1 = {bessel_i1(z):.6e}  ~I1 = {scaled:.6e}")

# Far past the overflow point only the scaled form is usable.
z = 5e4 * ray
print("\n~I1(5e4 e^{i pi/4}) =", bessel_i1(z, scaled=True))

# The logarithmic derivative tends to 1 and never forms a Bessel value.
print()
for rho in [1.0, 10.0, 100.0, 1e3, 1e4, 1e5]:
    print(f"L({rho:8.0f} e^(i pi/4)) = {i1_logderiv(rho * ray):.12f}")

# Interior ratios I1(gamma r)/I1(gamma R) decay like a skin layer.
gamma_r1 = 23.84 * ray
depth = np.linspace(0.0, 0.2, 6)
print("\nI1(gamma r)/I1(gamma R1) for r/R1 = 1 - depth")
print(np.abs(i1_ratio(gamma_r1 * (1 - depth), gamma_r1)).round(6))

# Bessel equation check: z^2 I1'' + z I1' - (z^2 + 1) I1 = 0.
z = 7.5 * ray
i0, i1 = bessel_i0(z), bessel_i1(z)
d1 = i0 - i1 / z
d2 = i1 - d1 / z + i1 / z**2
print("\nrelative ODE residual at |z| = 7.5:", abs(z * z * d2 + z * d1 - (z * z + 1) * i1) / abs(i1 * z * z))
