import numpy as np
import pytest

import hfts


def grid(n=11, t_end=1.0):
    return hfts.Grid(t_end, n)


def constants(levels, n=11):
    return np.tile(np.asarray(levels, dtype=float)[:, None], (1, n))


def test_version():
    assert hfts.__version__ == "0.1.0"


def test_band_depth_on_constants():
    g = grid()
    sample = constants([0.0, 1.0, 2.0])
    depths = hfts.band_depth(sample, g, kind="cgbd")
    np.testing.assert_array_equal(depths, [2.0 / 3.0, 1.0, 2.0 / 3.0])
    assert hfts.band_depth(sample, g, kind="cgbd", query=np.full(11, 5.0)) == 0.0


def test_depth_median_and_local_depth():
    g = grid()
    sample = constants([0.0, 1.0, 2.0])
    idx, curve = hfts.depth_median(sample, g, beta=1.0, kind="cgbd")
    assert idx == 1
    np.testing.assert_allclose(curve, np.ones(11))

    two_cluster = constants([0.01 * j for j in range(10)] + [100 + 0.01 * j for j in range(10)], 24)
    x = two_cluster[0]
    local = hfts.local_depth(two_cluster, hfts.Grid(1.0, 24), 0.45, "cgbd", query=x)
    global_ = hfts.band_depth(two_cluster, hfts.Grid(1.0, 24), "cgbd", query=x)
    assert local > global_


def test_forecast_p1_is_window_member():
    g = grid(16)
    series = hfts.sv_curves(30, g, a=3.0, b=10.0, seed=5)
    fc = hfts.forecast_p1(series, g, k=10, beta=0.45, kind="mbd")
    assert any(np.array_equal(fc, row) for row in series[-10:])


def test_forecast_p2_degenerates_to_mean():
    g = grid(12)
    series = hfts.sv_curves(25, g, seed=9)
    p2 = hfts.forecast_p2(series, g, z=1.0, alpha=-1.0, beta=0.6, k1=8, k2=8)
    mean = hfts.forecast_mean(series, g, k=8)
    np.testing.assert_allclose(p2, mean, atol=1e-12)


def test_reconciliation_identities():
    h = hfts.summing_matrix(
        ["Australia", "NSW", "QLD", "SA", "TAS", "VIC"],
        ["", "Australia", "Australia", "Australia", "Australia", "Australia"],
    )
    s = h["matrix"]
    assert s.shape == (6, 5)
    assert h["node_ids"][0] == "Australia"

    g = grid(8)
    rng = np.random.default_rng(3)
    leaves = rng.normal(size=(5, 8))
    base = np.vstack([leaves.sum(axis=0), leaves])
    bottom, full = hfts.gls_reconcile(base, g, s, np.array([2.0, 1.0, 3.0, 0.5, 1.5, 1.0]))
    np.testing.assert_allclose(full, base, atol=1e-10)  # consistent input is a fixed point

    messy = rng.normal(size=(6, 8))
    bottom, full = hfts.gls_reconcile(messy, g, s, np.ones(6))
    np.testing.assert_allclose(full[0], full[1:].sum(axis=0), atol=1e-9)


def test_simulators_are_seed_deterministic():
    g = grid(20)
    a = hfts.sv_curves(6, g, seed=42)
    b = hfts.sv_curves(6, g, seed=42)
    c = hfts.sv_curves(6, g, seed=43)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)

    bridge = hfts.classical_paths("bridge", 4, g, seed=7)
    assert np.all(bridge[:, 0] == 0.0)
    assert np.all(bridge[:, -1] == 0.0)


def test_outlier_injection_flags():
    g = hfts.Grid(1.0, 30)
    series = hfts.sv_curves(50, g, a=2.0, b=5.0, seed=11)
    contaminated, indices = hfts.inject_outliers(series, g, proportion=0.1, seed=13)
    assert len(indices) == 5
    flags = hfts.functional_boxplot(contaminated, g)["outlier"]
    assert all(flags[i] for i in indices)


def test_error_metrics_and_mad():
    g = grid(21)
    x = np.full(21, 3.0)
    xhat = np.full(21, 1.5)
    assert hfts.integrated_error(x, xhat, g, "aise") == pytest.approx(2.25)
    assert hfts.integrated_error(x, xhat, g, "aiae") == pytest.approx(1.5)
    assert hfts.mad([1, 2, 3, 4, 5], 1.0) == 1.0
