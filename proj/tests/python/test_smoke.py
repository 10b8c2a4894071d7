import json
import math

import numpy as np
import pytest

import wellglm


def test_ols_matches_lstsq():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(60, 3))
    y = 2.0 + x @ np.array([1.0, -0.5, 0.25]) + rng.normal(scale=0.1, size=60)
    model = wellglm.fit(wellglm.Family.NORMAL, x, y, degree=1)
    design = np.column_stack([np.ones(60), x])
    ref, *_ = np.linalg.lstsq(design, y, rcond=None)
    np.testing.assert_allclose(model.beta, ref, rtol=0, atol=1e-10)
    assert model.term_labels[0] == "Intercept"


def test_poisson_fit_is_positive_and_round_trips():
    temps, y, truth = wellglm.simulate_well(seed=11, n_rows=800, p=3)
    model = wellglm.fit(wellglm.Family.POISSON, temps, y, degree=1)
    assert model.converged
    assert np.all(wellglm.predict(model, temps) > 0)
    doc = wellglm.serialize_model(model)
    assert json.loads(doc)["family"] == "poisson-log"
    again = wellglm.deserialize_model(doc)
    np.testing.assert_array_equal(again.beta, model.beta)
    assert np.max(np.abs(model.beta - truth) / np.sqrt(np.diag(model.covariance))) < 5


def test_metrics_and_residuals():
    y = np.array([1.0, 2.0, 3.0])
    assert wellglm.rsquare(y, np.array([1.0, 2.0, 4.0])) == pytest.approx(0.5)
    assert wellglm.rase(y, y) == 0.0
    report = wellglm.residual_report(y, np.array([1.5, 2.0, 2.5]), bins=4)
    assert sum(b.count for b in report.histogram) == 3
    assert report.fit.se_mu * math.sqrt(3) == pytest.approx(report.fit.dispersion_sigma)


def test_effects_and_mahalanobis():
    temps, y, _ = wellglm.simulate_well(seed=5, n_rows=500, p=6, degree=2)
    model = wellglm.fit(wellglm.Family.POISSON, temps, y, degree=2)
    effects = wellglm.wald_effects(model)
    assert len(effects) == 20
    worths = [e.log_worth for e in effects]
    assert worths == sorted(worths, reverse=True)
    assert wellglm.log_worth(0.01) == pytest.approx(2.0)
    assert wellglm.mahalanobis_cutoff(0.05, 1) == pytest.approx(1.959964, abs=1e-5)
    distances, cutoff, flags = wellglm.mahalanobis(temps, 0.001)
    assert len(distances) == len(flags) == 500
    assert np.sum(distances**2) == pytest.approx(6 * 499)


def test_errors_carry_category():
    with pytest.raises(wellglm.WellglmError) as info:
        wellglm.fit(wellglm.Family.POISSON, np.ones((4, 1)), np.array([0.0, -1.0, 2.0, 3.0]))
    assert info.value.category == "data"
    with pytest.raises(wellglm.WellglmError) as info:
        wellglm.rsquare(np.ones(5), np.ones(5))
    assert info.value.category == "numerical"
