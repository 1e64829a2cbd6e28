"""Simulators, the frozen-coefficient truth oracle, and the RMSE harness."""

import numpy as np
import pytest

from locpacf import (
    ArPathSpec,
    EstimatorConfig,
    InvalidArgumentError,
    ar_autocovariances,
    classical_pacf,
    monte_carlo_rmse,
    simulate_piecewise_ar,
    simulate_tvar,
    true_pacf_curve,
    true_tv_pacf,
    windowed_lpacf,
)


def test_zero_coefficients_reproduce_innovations():
    spec = ArPathSpec.constant([0.0], sigma=1.0)
    ts = simulate_tvar(spec, 64, 17)
    rng = np.random.default_rng(17)
    eps = rng.standard_normal(64 + spec.burn_in)
    assert np.array_equal(ts.values, eps[spec.burn_in :])


def test_reproducibility_bitwise():
    spec = ArPathSpec.linear_ramp([0.9], [-0.9])
    a = simulate_tvar(spec, 256, 5)
    b = simulate_tvar(spec, 256, 5)
    c = simulate_tvar(spec, 256, 6)
    assert np.array_equal(a.values, b.values)
    assert not np.array_equal(a.values, c.values)


def test_constant_ar1_sample_autocorrelation():
    spec = ArPathSpec.constant([0.5])
    ts = simulate_tvar(spec, 4096, 11)
    x = ts.values
    r1 = np.dot(x[:-1], x[1:]) / np.dot(x, x)
    assert r1 == pytest.approx(0.5, abs=0.05)


def test_unstable_path_rejected():
    spec = ArPathSpec.constant([1.05])
    with pytest.raises(InvalidArgumentError, match="t=0"):
        simulate_tvar(spec, 32, 0)
    # ramp that crosses the unit root partway through names the first bad t
    ramp = ArPathSpec.linear_ramp([0.8], [1.2])
    with pytest.raises(InvalidArgumentError, match="t="):
        simulate_tvar(ramp, 64, 0)


def test_single_segment_equals_constant_tvar():
    seg = simulate_piecewise_ar([(120, [0.5])], 9)
    ref = simulate_tvar(ArPathSpec.constant([0.5]), 120, 9)
    assert np.array_equal(seg.values, ref.values)


def test_piecewise_total_length_and_continuity():
    ts = simulate_piecewise_ar([(85, [-0.2]), (86, [0.5, 0.2]), (85, [-0.2])], 2)
    assert ts.T == 256
    # the path is one recursion; segment joins show no artificial resets
    assert np.std(np.diff(ts.values)[80:90]) < 10 * np.std(np.diff(ts.values))


def test_two_identical_segments_match_single_run():
    joined = simulate_piecewise_ar([(64, [0.6]), (64, [0.6])], 31)
    single = simulate_piecewise_ar([(128, [0.6])], 31)
    assert np.array_equal(joined.values, single.values)


def test_truth_oracle_tvar_midpoint():
    spec = ArPathSpec.linear_ramp([0.9], [-0.9])
    assert true_tv_pacf(spec, 256, 1, 512) == 0.0  # ramp crosses zero at z=1/2
    assert true_tv_pacf(spec, 100, 1, 512) == pytest.approx(0.9 - 1.8 * 100 / 512)


def test_truth_oracle_ar2_values():
    spec = ArPathSpec.constant([0.5, 0.2])
    assert true_tv_pacf(spec, 7, 1, 64) == pytest.approx(0.625, abs=1e-12)
    assert true_tv_pacf(spec, 7, 2, 64) == pytest.approx(0.2, abs=1e-12)
    assert true_tv_pacf(spec, 7, 3, 64) == 0.0  # exact cutoff


def test_truth_cutoff_and_time_invariance():
    spec = ArPathSpec.constant([0.4, -0.3])
    for t in (0, 10, 50):
        for tau in (3, 5, 9):
            assert true_tv_pacf(spec, t, tau, 64) == 0.0
        assert true_tv_pacf(spec, t, 1, 64) == true_tv_pacf(spec, 0, 1, 64)


def test_ar_autocovariances_match_simulation():
    phi = [0.5, 0.2]
    gam = ar_autocovariances(phi, 1.0, 3)
    ts = simulate_tvar(ArPathSpec.constant(phi), 200_000, 4)
    x = ts.values
    for k in range(4):
        emp = np.dot(x[: len(x) - k], x[k:]) / len(x)
        assert emp == pytest.approx(gam[k], rel=0.05)


def test_piecewise_truth_segments():
    spec = ArPathSpec.piecewise([(85, [-0.2]), (86, [0.5, 0.2]), (85, [-0.2])])
    curve = true_pacf_curve(spec, 256, [1, 2])
    assert curve[0, 0] == pytest.approx(-0.2)
    assert curve[0, 128] == pytest.approx(0.625)
    assert curve[1, 128] == pytest.approx(0.2)
    assert curve[1, 20] == 0.0
    assert curve[0, 250] == pytest.approx(-0.2)


def test_monte_carlo_rmse_report_shape_and_determinism():
    spec = ArPathSpec.linear_ramp([0.9], [-0.9])
    config = EstimatorConfig(method="windowed", binwidth=48, max_lag=2)
    rep1 = monte_carlo_rmse(spec, config, 5, [1, 2], 101, 256)
    rep2 = monte_carlo_rmse(spec, config, 5, [1, 2], 101, 256)
    assert [r.rmse for r in rep1.rows] == [r.rmse for r in rep2.rows]
    assert {r.lag for r in rep1.rows} == {1, 2}
    for r in rep1.rows:
        assert r.replicates == 5 and r.excluded == 0
        assert r.rmse >= 0.0 and r.stderr >= 0.0
        assert r.bandwidth == 48


def test_monte_carlo_requires_two_reps():
    spec = ArPathSpec.constant([0.5])
    config = EstimatorConfig(method="windowed", binwidth=32, max_lag=1)
    with pytest.raises(InvalidArgumentError):
        monte_carlo_rmse(spec, config, 1, [1], 0, 128)


def test_local_estimator_beats_classical_on_ramp():
    # a single global pacf number against a ramp of range 1.8 loses badly
    spec = ArPathSpec.linear_ramp([0.9], [-0.9])
    T, reps = 512, 10
    truth = true_pacf_curve(spec, T, [1])[0]
    ratio_acc = []
    for seed in range(reps):
        ts = simulate_tvar(spec, T, 300 + seed)
        grid = windowed_lpacf(ts, L=64, kernel="rectangular", max_lag=1)
        interior = grid.boundary == 0
        pts = grid.points[interior]
        local_rmse = np.sqrt(np.mean((grid.estimates[interior, 0] - truth[pts]) ** 2))
        global_rmse = np.sqrt(np.mean((classical_pacf(ts, 1)[0] - truth) ** 2))
        ratio_acc.append(global_rmse / local_rmse)
    assert np.mean(ratio_acc) >= 3.0
