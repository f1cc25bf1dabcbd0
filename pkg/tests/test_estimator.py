"""Estimator front end: fit, predict, inspection attributes."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from pickcara import CaratheodoryInterpolator, InfeasibleDataError


def _fit_two_node():
    model = CaratheodoryInterpolator()
    return model.fit([0.0, 0.5], [1.0, 3.0])


class TestFit:
    def test_returns_self(self):
        model = CaratheodoryInterpolator()
        assert model.fit([0.0], [1.0]) is model

    def test_fitted_attributes(self):
        model = _fit_two_node()
        assert model.matrix_size_ == 1
        assert model.n_nodes_ == 2
        assert model.rank_ == 1
        assert model.defect_dim_ == 0
        assert model.determinate_
        assert model.routes_agree_
        assert model.psd_report_.feasible
        assert model.transform_ is None
        assert model.pick_matrix_.entries.shape == (2, 2)

    def test_unnormalized_input_gets_transform(self):
        model = CaratheodoryInterpolator().fit([0.5, 0.0], [3.0, 1.0])
        assert model.transform_ is not None
        assert model.transform_.pivot == 0.5
        assert model.normalized_problem_.nodes[0] == 0

    def test_node_input_forms_agree(self):
        nodes = [0.0, 0.3 + 0.2j]
        values = [1.0, 2.0]
        base = CaratheodoryInterpolator().fit(nodes, values)
        column = CaratheodoryInterpolator().fit(
            np.array(nodes).reshape(-1, 1), values
        )
        planar = CaratheodoryInterpolator().fit(
            np.array([[0.0, 0.0], [0.3, 0.2]]), values
        )
        for other in (column, planar):
            assert other.problem_.nodes == base.problem_.nodes
        assert base.n_features_in_ == 1
        assert planar.n_features_in_ == 2

    def test_matrix_values(self):
        # samples of ((1 + z)/(1 - z)) I, a rank-one degenerate problem
        values = [np.eye(2), (7.0 / 3.0) * np.eye(2)]
        model = CaratheodoryInterpolator().fit([0.0, 0.4], values)
        assert model.matrix_size_ == 2
        assert model.rank_ == 2
        np.testing.assert_allclose(model.evaluate(0.0), np.eye(2), atol=1e-12)
        np.testing.assert_allclose(
            model.evaluate(0.4), values[1], atol=1e-10
        )

    def test_infeasible_raises_and_leaves_unfitted(self):
        model = CaratheodoryInterpolator()
        with pytest.raises(InfeasibleDataError):
            model.fit([0.0, 0.5], [1.0, 100.0])
        with pytest.raises(NotFittedError):
            model.evaluate(0.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            CaratheodoryInterpolator().fit([0.0, 0.5], [1.0])

    def test_boundary_warning_recorded(self):
        with pytest.warns(UserWarning):
            model = CaratheodoryInterpolator().fit(
                [0.0, 1.0 - 1e-12], [1.0, 1.0]
            )
        assert model.warnings_


class TestPredict:
    def test_reproduces_nodes(self):
        model = _fit_two_node()
        out = model.predict([0.0, 0.5])
        assert out.shape == (2, 1, 1)
        np.testing.assert_allclose(out[:, 0, 0], [1.0, 3.0], atol=1e-10)

    def test_interior_value(self):
        model = _fit_two_node()
        assert model.evaluate(0.25)[0, 0] == pytest.approx(5.0 / 3.0)

    def test_requires_fit(self):
        with pytest.raises(NotFittedError):
            CaratheodoryInterpolator().predict([0.0])

    def test_parameter_override(self):
        model = CaratheodoryInterpolator().fit([0.0], [1.0])
        assert model.defect_dim_ == 1
        plus = model.evaluate(0.5, parameter=np.array([[1.0]]))
        minus = model.evaluate(0.5, parameter=np.array([[-1.0]]))
        assert plus[0, 0] == pytest.approx(3.0)
        assert minus[0, 0] == pytest.approx(1.0 / 3.0)
        default = model.evaluate(0.5)
        assert default[0, 0] == pytest.approx(1.0)

    def test_callable_parameter(self):
        model = CaratheodoryInterpolator().fit([0.0], [1.0])
        value = model.evaluate(0.5, parameter=lambda z: np.array([[z]]))
        assert value[0, 0] == pytest.approx((1 + 0.25) / (1 - 0.25))


class TestVerify:
    def test_default_parameter(self):
        report = _fit_two_node().verify(sample_count=50, seed=1)
        assert report.max_node_residual <= 1e-10
        assert report.min_re_eigenvalue >= -1e-9
        assert report.sample_count == 50

    def test_with_override(self):
        model = CaratheodoryInterpolator().fit([0.0], [1.0])
        report = model.verify(
            sample_count=40, seed=2, parameter=np.array([[0.5]])
        )
        assert report.max_node_residual <= 1e-10


class TestSklearnProtocol:
    def test_get_params_round_trip(self):
        model = CaratheodoryInterpolator(rank_tol=1e-9)
        params = model.get_params()
        assert params["rank_tol"] == 1e-9
        assert params["psd_tol"] is None
        rebuilt = CaratheodoryInterpolator(**params)
        assert rebuilt.get_params() == params

    def test_clone_unfitted_copy(self):
        model = _fit_two_node()
        fresh = clone(model)
        assert fresh.get_params() == model.get_params()
        with pytest.raises(NotFittedError):
            fresh.evaluate(0.0)

    def test_set_params(self):
        model = CaratheodoryInterpolator().set_params(iso_tol=1e-7)
        assert model.iso_tol == 1e-7


class TestSuiteBehaviour:
    def test_routes_agree_across_instances(self, suite):
        for instance in suite[::8]:
            problem = instance.problem
            model = CaratheodoryInterpolator().fit(
                np.array(problem.nodes), np.array(problem.values)
            )
            assert model.routes_agree_
            assert model.determinate_ == bool(model.systems_decision_)
            report = model.verify(sample_count=30, seed=4)
            scale = 1.0 + max(
                np.linalg.norm(c, "fro") for c in problem.values
            )
            assert report.max_node_residual <= 1e-8 * scale
