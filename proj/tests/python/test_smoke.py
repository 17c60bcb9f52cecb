import math
import warnings

import numpy as np
import pytest

import sparseph


def test_soft_threshold_matches_oracle():
    for c, lam in [(0.7, 0.2), (-0.3, 0.5), (0.5, 0.5), (-0.9, 0.1)]:
        assert sparseph.soft_threshold(c, lam) == pytest.approx(
            sparseph.oracle_minimize(c, lam), abs=1e-6)
    with pytest.raises(sparseph.SparsephError):
        sparseph.soft_threshold(0.1, -1.0)


def test_pipeline_on_numpy_data():
    rng = np.random.default_rng(0)
    X = sparseph.DataMatrix(rng.standard_normal((12, 6)))
    w = sparseph.edge_weights(X)
    dense = w.dense()
    assert dense.shape == (6, 6)
    assert np.allclose(dense, dense.T)
    curve = sparseph.betti_curve(w)
    assert curve.breakpoints[0] == (0.0, curve.value_at(0.0))
    assert curve.value_at(0.999999) == 6
    assert sparseph.auc(curve) > 0
    assert sparseph.betti0_at(w, 0.3) == sparseph.dfs_component_oracle(w, 0.3)


def test_three_node_example():
    w = sparseph.EdgeWeights.from_dense(
        np.array([[0, 0.9, 0.2], [0.9, 0, 0.5], [0.2, 0.5, 0]]))
    f = sparseph.build_filtration(w)
    assert f.levels() == 4
    curve = sparseph.betti_curve(w, 1.0)
    assert curve.breakpoints == [(0.0, 1), (0.2, 1), (0.5, 2), (0.9, 3)]
    assert sparseph.auc(curve) == pytest.approx(1.6)


def test_constant_column_raises():
    X = sparseph.DataMatrix(np.array([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]]))
    with pytest.raises(sparseph.SparsephError, match="column 2"):
        sparseph.normalize_columns(X)
    assert issubclass(sparseph.SparsephError, ValueError)


def test_rank_sum():
    r = sparseph.rank_sum_test([1, 2, 3], [4, 5, 6])
    assert r.p_value == pytest.approx(0.1)
    assert r.method == sparseph.RankSumMethod.ExactEnumeration


def test_study2_comparison():
    cfg = sparseph.SimConfig()
    cfg.seed = 2
    g1, g2 = sparseph.simulate_study2(cfg)
    assert g1.values.shape == (20, 100)
    r = sparseph.compare_groups(g1, g2)
    assert r.p_value < 0.001
    assert len(r.auc1) == 20
    assert "p_value" in r.to_json()


def test_small_group_warns():
    rng = np.random.default_rng(1)
    X = sparseph.DataMatrix(rng.standard_normal((3, 4)))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        curves = sparseph.jackknife_curves(X)
    assert len(curves) == 3
    assert caught
    with pytest.raises(sparseph.SparsephError):
        sparseph.jackknife_curves(sparseph.DataMatrix(rng.standard_normal((2, 4))))


def test_random_tree_matches_closed_form():
    w = sparseph.random_tree(9, 3)
    assert sparseph.betti_curve(w, 1.0) == sparseph.tree_betti_oracle(w)
    assert math.isclose(sparseph.betti_curve(w, 1.0).domain_max, 1.0)
