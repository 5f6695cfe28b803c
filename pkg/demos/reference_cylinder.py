"""Exact, asymptotic and impedance solutions for the reference cylinder.

mu_r = 4000, sigma = 2e6 S/m, f = 10 Hz, R1 = 3 cm, R2 = 4 cm, A(R2) = k/R2.
"""

import numpy as np

from eddycyl import (
    CylinderGeometry,
    PhysicalParams,
    derive_quantities,
    eval_asymptotic,
    eval_global,
    eval_impedance,
    relative_l21_error,
    solve_asymptotics,
    solve_global,
    solve_impedance,
)

params = PhysicalParams(mu_r=4000.0, sigma=2e6, frequency=10.0)
geom = CylinderGeometry(r1=0.03, r2=0.04, k=1.0)
d = derive_quantities(params)
print(f"skin depth {d.delta * 1e3:.4f} mm, eps = {d.epsilon:.5f}, |gamma R1| = {abs(d.gamma) * geom.r1:.2f}")

exact = solve_global(params, geom)
asym = solve_asymptotics(geom)
imp = solve_impedance(d, geom)

r = np.linspace(geom.r1, geom.r2, 6)
table = np.column_stack([
    r,
    eval_global(exact, params, geom, r).real,
    eval_asymptotic(1, asym, d, geom, r).real,
    eval_asymptotic(2, asym, d, geom, r).real,
    eval_impedance(imp, geom, r).real,
])
print("\n     r        Re A_ref      order 1       order 2     impedance")
for row in table:
    print("  ".join(f"{x:11.6f}" for x in row))

# The imaginary part of A_ref - A0+ is carried by the eps/alpha_hat correction.
gap = eval_global(exact, params, geom, r) - eval_asymptotic(1, asym, d, geom, r)
corr = eval_asymptotic(2, asym, d, geom, r) - eval_asymptotic(1, asym, d, geom, r)
print("\nIm(A_ref - A0+):     ", gap.imag.round(5))
print("Im(eps/alpha A1+):   ", corr.imag.round(5))

ref = lambda x: eval_global(exact, params, geom, x)
for name, model in [
    ("order 1", lambda x: eval_asymptotic(1, asym, d, geom, x)),
    ("order 2", lambda x: eval_asymptotic(2, asym, d, geom, x)),
    ("impedance", lambda x: eval_impedance(imp, geom, x)),
]:
    print(f"relative L2_1 error, {name:9s}: {relative_l21_error(ref, model, geom.r1, geom.r2):.4e}")
