"""Independent finite-volume solve on [0, R2] compared with the closed form."""

import numpy as np

from eddycyl import CylinderGeometry, PhysicalParams, derive_quantities, oracle_error_vs_analytic, solve_fd
from eddycyl.fd import shell_fluxes, split_grid, transmission_residual

params = PhysicalParams()
geom = CylinderGeometry()

errors = []
grids = [256, 512, 1024, 2048, 4096]
for n in grids:
    errors.append(oracle_error_vs_analytic(params, geom, n))
print(" cells   rel L2_1 error   ratio")
print(f"{grids[0]:6d}   {errors[0]:.4e}")
for n, e0, e1 in zip(grids[1:], errors, errors[1:]):
    print(f"{n:6d}   {e1:.4e}     {e0 / e1:.3f}")

sol = solve_fd(params, geom, *split_grid(8192))
delta = derive_quantities(params).delta
c = sol.n_core
print(f"\nsmallest core cell {sol.nodes[c] - sol.nodes[c - 1]:.3e} m  (delta/4 = {delta / 4:.3e} m)")
f = shell_fluxes(sol)
print(f"shell flux spread {np.ptp(np.abs(f)) / abs(f[0]):.1e}")
print(f"transmission residual at R1 {transmission_residual(sol, params):.2e}")
