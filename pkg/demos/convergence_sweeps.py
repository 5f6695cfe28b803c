"""Error of the shell models against permeability and frequency.

Over mu_r = 250..16000 at 10 Hz the order-1 error falls like eps and the
order-2 and impedance errors like eps^2.
"""

from eddycyl import CylinderGeometry, PhysicalParams, fit_sweep, regime_crossing_frequency, sweep_freq, sweep_mu

geom = CylinderGeometry()
records = sweep_mu(PhysicalParams(frequency=10.0), geom)

print("   mu_r      eps       order1      order2    impedance")
for rec in records:
    print(f"{rec.mu_r:7.0f}  {rec.epsilon:.4f}  {rec.err_order1:.3e}  {rec.err_order2:.3e}  {rec.err_impedance:.3e}")

for model in ("order1", "order2", "impedance"):
    fit = fit_sweep(records, model)
    print(f"slope of {model:9s} vs eps: {fit.slope:.3f}  (r^2 = {fit.r_squared:.5f})")

# Frequency sweeps only make sense while eps < 1.
for mu_r in (250.0, 16000.0):
    f_max = regime_crossing_frequency(mu_r, 2e6)
    recs = [r for r in sweep_freq(PhysicalParams(mu_r=mu_r), geom) if r.in_regime]
    print(f"\nmu_r = {mu_r:g}: eps < 1 below {f_max:.1f} Hz, {len(recs)} in-regime points")
    for rec in recs[:: max(1, len(recs) // 6)]:
        print(f"  f = {rec.frequency:8.2f} Hz  order1 {rec.err_order1:.3e}  order2 {rec.err_order2:.3e}")
