"""Core solution near the interface against the boundary-layer profiles.

At depth h below R1 the one-term profile is (k/R1) exp(-(1+i) h/delta); the
two-term profile adds delta times a correction with a curvature term.
Raising f shrinks delta but also raises eps = 1/(mu_r delta); the profiles
start from the shell value k/R1, so they only track the core while eps is small,
and the expansion also needs delta small against R1 (at 0.625 Hz, 3 delta is 21 mm).
"""

import numpy as np

from eddycyl import (
    CylinderGeometry,
    PhysicalParams,
    derive_quantities,
    eval_global,
    eval_profile_interior,
    profile_terms,
    solve_global,
)

geom = CylinderGeometry()


def sup_errors(frequency):
    params = PhysicalParams(frequency=frequency)
    d = derive_quantities(params)
    terms = profile_terms(d, geom)
    h = np.linspace(0.0, 3 * d.delta, 601)
    exact = eval_global(solve_global(params, geom), params, geom, geom.r1 - h)
    e0 = np.max(np.abs(exact - eval_profile_interior(0, terms, d, geom, h)))
    e1 = np.max(np.abs(exact - eval_profile_interior(1, terms, d, geom, h)))
    return d.delta, d.epsilon, e0, e1


print("    f     eps    delta (mm)   sup |A - P0|   sup |A - P0 - delta P1|")
prev = None
for f in [0.625, 2.5, 10.0, 40.0]:
    delta, eps, e0, e1 = sup_errors(f)
    note = "" if prev is None else f"   (x{prev / e1:.2f} smaller)"
    print(f"{f:6.3f}  {eps:.3f}  {delta * 1e3:9.4f}   {e0:.4e}     {e1:.4e}{note}")
    prev = e1
