"""Kernel, Pick matrix, feasibility gate, and incremental extension."""

import numpy as np
import pytest

from pickcara import (
    InterpolationProblem,
    build_pick_matrix,
    extend_problem,
    kernel_block,
    validate_psd,
)


class TestKernelBlock:
    def test_origin_scalar(self):
        assert kernel_block(0.0, 0.0, [[1.0]], [[1.0]])[0, 0] == pytest.approx(1.0)

    def test_mixed_nodes_scalar(self):
        assert kernel_block(0.5, 0.0, [[3.0]], [[1.0]])[0, 0] == pytest.approx(2.0)

    def test_matrix_case(self):
        c = np.array([[1.0, 1j], [0.0, 1.0]])
        expected = np.array([[1.0, 0.5j], [-0.5j, 1.0]])
        np.testing.assert_allclose(kernel_block(0.0, 0.0, c, c), expected)

    def test_swap_adjoint_symmetry(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            z = complex(*rng.uniform(-0.6, 0.6, 2))
            w = complex(*rng.uniform(-0.6, 0.6, 2))
            cz = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            cw = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            forward = kernel_block(z, w, cz, cw)
            backward = kernel_block(w, z, cw, cz)
            np.testing.assert_allclose(forward, backward.conj().T, atol=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            kernel_block(0.0, 0.0, np.eye(2), np.eye(3))


class TestProblemValidation:
    def test_rejects_node_outside_disk(self):
        with pytest.raises(ValueError, match="open unit disk"):
            InterpolationProblem(1, (1.5,), (np.eye(1),))

    def test_rejects_duplicate_nodes(self):
        with pytest.raises(ValueError, match="coincide"):
            InterpolationProblem(1, (0.3, 0.3), (np.eye(1), 2 * np.eye(1)))

    def test_rejects_value_shape(self):
        with pytest.raises(ValueError, match="shape"):
            InterpolationProblem(2, (0.0,), (np.eye(3),))

    def test_rejects_count_mismatch(self):
        with pytest.raises(ValueError, match="nodes but"):
            InterpolationProblem(1, (0.0, 0.5), (np.eye(1),))

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="at least one node"):
            InterpolationProblem(1, (), ())

    def test_rejects_bad_matrix_size(self):
        with pytest.raises(ValueError, match="positive"):
            InterpolationProblem(0, (0.0,), (np.zeros((0, 0)),))

    def test_boundary_node_warns(self):
        with pytest.warns(UserWarning, match="unit circle"):
            InterpolationProblem(1, (1.0 - 1e-10,), (np.eye(1),))

    def test_normalized_flag(self, two_node_problem):
        assert two_node_problem.normalized
        shifted = InterpolationProblem(
            1, (0.5, 0.0), tuple(two_node_problem.values)
        )
        assert not shifted.normalized

    def test_values_are_read_only(self, two_node_problem):
        with pytest.raises(ValueError):
            two_node_problem.values[0][0, 0] = 9.0


class TestBuildPickMatrix:
    def test_two_node_rank_one(self, two_node_problem):
        pick = build_pick_matrix(two_node_problem)
        np.testing.assert_allclose(pick.entries, [[1.0, 2.0], [2.0, 4.0]])
        assert pick.block_size == 1
        assert pick.n_nodes == 2
        assert pick.dim == 2

    def test_skew_value_gives_zero(self):
        problem = InterpolationProblem(1, (0.0,), (np.array([[1j]]),))
        pick = build_pick_matrix(problem)
        np.testing.assert_allclose(pick.entries, [[0.0]])

    def test_single_positive_value(self, one_node_problem):
        pick = build_pick_matrix(one_node_problem)
        np.testing.assert_allclose(pick.entries, [[1.0]])

    def test_exact_hermitian_on_suite(self, suite):
        for instance in suite:
            entries = build_pick_matrix(instance.problem).entries
            assert np.array_equal(entries, entries.conj().T)

    def test_blocks_match_kernel(self, suite):
        rng = np.random.default_rng(3)
        for instance in suite[::7]:
            problem = instance.problem
            size = problem.matrix_size
            pick = build_pick_matrix(problem)
            k = int(rng.integers(problem.n_nodes))
            l = int(rng.integers(problem.n_nodes))
            block = kernel_block(
                problem.nodes[k], problem.nodes[l], problem.values[k], problem.values[l]
            )
            got = pick.entries[k * size : (k + 1) * size, l * size : (l + 1) * size]
            np.testing.assert_allclose(got, block, atol=1e-14)


class TestValidatePsd:
    def test_degenerate_feasible(self, two_node_problem):
        report = validate_psd(build_pick_matrix(two_node_problem))
        assert report.feasible
        assert report.min_eigenvalue == pytest.approx(0.0, abs=1e-12)

    def test_zero_matrix_feasible(self):
        problem = InterpolationProblem(1, (0.0,), (np.array([[1j]]),))
        report = validate_psd(build_pick_matrix(problem))
        assert report.feasible
        assert report.min_eigenvalue == pytest.approx(0.0, abs=1e-15)

    def test_indefinite_infeasible(self):
        problem = InterpolationProblem(
            1, (0.0, 0.5), (np.array([[1.0]]), np.array([[-3.0]]))
        )
        report = validate_psd(build_pick_matrix(problem))
        assert not report.feasible
        assert report.min_eigenvalue < -1.0

    def test_explicit_tolerance_recorded(self, two_node_problem):
        report = validate_psd(build_pick_matrix(two_node_problem), psd_tol=1e-6)
        assert report.tolerance_used == 1e-6

    def test_leading_truncations_feasible(self, suite):
        for instance in suite:
            problem = instance.problem
            size = problem.matrix_size
            pick = build_pick_matrix(problem)
            tol = validate_psd(pick).tolerance_used
            for d in range(1, problem.n_nodes + 1):
                head = pick.entries[: d * size, : d * size]
                assert np.linalg.eigvalsh(head)[0] >= -tol


class TestExtendProblem:
    def test_feasible_extension(self, one_node_problem):
        extended, report = extend_problem(one_node_problem, 0.5, np.array([[3.0]]))
        assert extended.n_nodes == 2
        assert report.feasible
        np.testing.assert_allclose(
            build_pick_matrix(extended).entries, [[1.0, 2.0], [2.0, 4.0]]
        )

    def test_duplicate_node_rejected(self, one_node_problem):
        with pytest.raises(ValueError, match="coincide"):
            extend_problem(one_node_problem, 0.0, np.array([[2.0]]))

    def test_infeasible_extension_flagged(self, one_node_problem):
        extended, report = extend_problem(one_node_problem, 0.5, np.array([[-3.0]]))
        assert extended.n_nodes == 2
        assert not report.feasible

    def test_original_untouched(self, one_node_problem):
        extend_problem(one_node_problem, 0.5, np.array([[3.0]]))
        assert one_node_problem.n_nodes == 1
