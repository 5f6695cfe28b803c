import math

import numpy as np
import pytest

from eddycyl import (
    CylinderGeometry,
    DomainError,
    PhysicalParams,
    SingularSystemError,
    derive_quantities,
    fit_loglog_slope,
    fit_sweep,
    regime_crossing_frequency,
    sweep_freq,
    sweep_mu,
)
from eddycyl import sweep as sweep_mod
from eddycyl.sweep import DEFAULT_MU_VALUES, MODELS, fit_window


@pytest.fixture(scope="module")
def mu_records():
    return sweep_mu(PhysicalParams(), CylinderGeometry())


def test_default_grids():
    assert DEFAULT_MU_VALUES[0] == 250 and DEFAULT_MU_VALUES[-1] == pytest.approx(16000, rel=1e-14)
    assert np.allclose(DEFAULT_MU_VALUES, [250, 500, 1000, 2000, 4000, 8000, 16000], rtol=1e-12)
    assert len(sweep_mod.DEFAULT_FREQUENCIES) == 24


def test_records_consistent(mu_records):
    for rec in mu_records:
        d = derive_quantities(PhysicalParams(mu_r=rec.mu_r))
        assert rec.epsilon == d.epsilon and rec.delta == d.delta
        assert rec.failure is None and rec.in_regime
        assert all(rec.error(m) >= 0 for m in MODELS)


def test_errors_decrease_with_mu(mu_records):
    for model in ("order1", "order2"):
        errs = [r.error(model) for r in mu_records]
        assert all(b < a for a, b in zip(errs, errs[1:])), model


def test_order2_beats_order1(mu_records):
    assert all(r.err_order2 <= r.err_order1 for r in mu_records)


@pytest.mark.parametrize("model, lo, hi", [("order1", 0.85, 1.15), ("order2", 1.7, 2.3), ("impedance", 1.5, 2.5)])
def test_slopes(mu_records, model, lo, hi):
    fit = fit_sweep(mu_records, model)
    assert lo <= fit.slope <= hi
    assert fit.n_points == 7 and fit.r_squared > 0.99


def test_impedance_tracks_order2(mu_records):
    for r in mu_records:
        assert r.err_order2 / 5 <= r.err_impedance <= 5 * r.err_order2


def test_single_point_sweep_refuses_fit():
    recs = sweep_mu(PhysicalParams(), CylinderGeometry(), [4000.0])
    assert len(recs) == 1
    with pytest.raises(DomainError, match="at least 3"):
        fit_sweep(recs, "order1")


def test_mu_values_must_ascend():
    with pytest.raises(DomainError):
        sweep_mu(PhysicalParams(), CylinderGeometry(), [500.0, 250.0])
    with pytest.raises(DomainError):
        sweep_mu(PhysicalParams(), CylinderGeometry(), [0.0, 250.0])


def test_frequencies_positive():
    with pytest.raises(DomainError):
        sweep_freq(PhysicalParams(), CylinderGeometry(), [10.0, -1.0])


@pytest.mark.parametrize("mu_r, lo, hi", [(250, 31.0, 32.0), (16000, 2020, 2030)])
def test_regime_flags(mu_r, lo, hi):
    crossing = regime_crossing_frequency(mu_r, 2e6)
    assert lo < crossing < hi
    recs = sweep_freq(PhysicalParams(mu_r=mu_r), CylinderGeometry())
    for r in recs:
        assert r.in_regime == (r.epsilon < 1) == (r.frequency < crossing)


@pytest.mark.parametrize("mu_r, models", [(250, ["order1"]), (16000, ["order1", "order2"])])
def test_errors_rise_with_frequency(mu_r, models):
    recs = [r for r in sweep_freq(PhysicalParams(mu_r=mu_r), CylinderGeometry()) if r.in_regime]
    for m in models:
        errs = [r.error(m) for r in recs]
        assert all(b > a for a, b in zip(errs, errs[1:])), m


def test_fit_examples():
    fit = fit_loglog_slope([1, 10, 100], [2, 20, 200])
    assert fit.slope == pytest.approx(1.0, abs=1e-14) and fit.r_squared == pytest.approx(1.0, abs=1e-14)
    assert fit.intercept == pytest.approx(math.log10(2), abs=1e-14)
    assert fit_loglog_slope([1, 10, 100], [3, 300, 30000]).slope == pytest.approx(2.0, abs=1e-14)


def test_fit_rejects_bad_data():
    with pytest.raises(DomainError):
        fit_loglog_slope([1, 10, 100], [1, 0, 1])
    with pytest.raises(DomainError):
        fit_loglog_slope([1, 10], [1, 10])
    with pytest.raises(DomainError):
        fit_loglog_slope([1, 1, 1], [1, 2, 3])
    with pytest.raises(DomainError):
        fit_loglog_slope([1, 10, 100], [1, 2])


def test_fit_windows():
    recs = sweep_freq(PhysicalParams(mu_r=16000), CylinderGeometry())
    low = fit_window(recs, "low-freq")
    assert low and all(r.frequency <= 100 for r in low)
    assert len(fit_window(recs, "all")) > len(low)
    assert not any(r.frequency > 2026 for r in fit_window(recs, "all"))
    with pytest.raises(DomainError):
        fit_window(recs, "high")
    with pytest.raises(DomainError):
        fit_sweep(recs, "order3")


def test_deterministic():
    a = sweep_mu(PhysicalParams(), CylinderGeometry())
    b = sweep_mu(PhysicalParams(), CylinderGeometry())
    assert a == b


def test_failure_recorded_and_sweep_continues(monkeypatch):
    real = sweep_mod.solve_global

    def flaky(params, geom):
        if params.mu_r == 500.0:
            raise SingularSystemError("forced")
        return real(params, geom)

    monkeypatch.setattr(sweep_mod, "solve_global", flaky)
    recs = sweep_mu(PhysicalParams(), CylinderGeometry(), [250.0, 500.0, 1000.0, 2000.0])
    assert len(recs) == 4
    assert "forced" in recs[1].failure and math.isnan(recs[1].err_order1)
    assert all(r.failure is None for i, r in enumerate(recs) if i != 1)
    assert fit_sweep(recs, "order1").n_points == 3
