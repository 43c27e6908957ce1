import math

import numpy as np
import pytest

import hypermatch as hm
from hypermatch.core.weights import as_weight, sublist_indicator


class TestWeightVector:
    """Test cases for WeightVector."""

    def setup_method(self):
        """Set up a small uniform spec."""
        self.spec = hm.HypergraphSpec("uniform", 2, 2)

    def test_constant(self):
        """Test the constant constructor and total."""
        weights = hm.WeightVector.constant(self.spec, 0.5)
        assert len(weights) == 6
        assert weights.total == pytest.approx(3.0)
        assert weights.positive

    def test_validation(self):
        """Test wrong length, negative and non-finite values are rejected."""
        with pytest.raises(hm.StructuralError):
            hm.WeightVector(self.spec, [1.0] * 5)
        with pytest.raises(hm.DomainError):
            hm.WeightVector(self.spec, [1.0] * 5 + [-1.0])
        with pytest.raises(hm.DomainError):
            hm.WeightVector(self.spec, [1.0] * 5 + [math.nan])

    def test_values_are_read_only(self):
        """Test that stored values cannot be modified in place."""
        weights = hm.WeightVector.constant(self.spec, 1.0)
        with pytest.raises(ValueError):
            weights.values[0] = 2.0

    def test_log_values_and_support(self):
        """Test -inf logs and support for zero weights."""
        weights = hm.WeightVector(self.spec, [0.0, 1.0, 2.0, 0.0, 1.0, 1.0])
        assert weights.log_values[0] == -math.inf
        assert weights.log_values[2] == pytest.approx(math.log(2.0))
        assert list(weights.support()) == [1, 2, 4, 5]
        assert not weights.positive

    def test_lookup_by_edge(self):
        """Test indexing by edge tuple and by position."""
        weights = hm.WeightVector.from_function(self.spec, lambda e: e[0] + e[1])
        assert weights[(2, 3)] == 5.0
        assert weights[(3, 1)] == 4.0
        assert weights[0] == 1.0

    def test_from_log(self):
        """Test the log-domain constructor."""
        weights = hm.WeightVector.from_log(self.spec, np.zeros(6))
        assert weights == hm.WeightVector.constant(self.spec, 1.0)


class TestConstructions:
    """Test cases for scaling, matrices and fixture weights."""

    def test_apply_scaling(self):
        """Test lambda = 2 everywhere multiplies every edge weight by 2^k."""
        spec = hm.HypergraphSpec("uniform", 2, 2)
        weights = hm.WeightVector.constant(spec, 1.5)
        scaled = hm.apply_scaling(weights, np.full(4, 2.0))
        np.testing.assert_allclose(scaled.values, 6.0)

    def test_apply_scaling_errors(self):
        """Test wrong factor count and non-positive factors."""
        spec = hm.HypergraphSpec("uniform", 2, 2)
        weights = hm.WeightVector.constant(spec, 1.0)
        with pytest.raises(hm.StructuralError):
            hm.apply_scaling(weights, [1.0, 1.0])
        with pytest.raises(hm.DomainError):
            hm.apply_scaling(weights, [1.0, 0.0, 1.0, 1.0])

    def test_uniform_stochastic_values(self):
        """Test 1/C(km-1, k-1) for uniform and m^(1-k) for partite bases."""
        uniform = hm.uniform_stochastic_weight(hm.HypergraphSpec("uniform", 3, 2))
        partite = hm.uniform_stochastic_weight(hm.HypergraphSpec("partite", 3, 2))
        np.testing.assert_allclose(uniform.values, 0.1)
        np.testing.assert_allclose(partite.values, 0.25)

    def test_matrix_roundtrip(self):
        """Test a bipartite matrix maps onto edges {i, m+j} row by row."""
        matrix = np.array([[1.0, 2.0], [3.0, 4.0]])
        weights = hm.weights_from_matrix(matrix)
        assert weights.spec == hm.HypergraphSpec("partite", 2, 2)
        assert weights[(0, 3)] == 2.0
        assert weights[(1, 2)] == 3.0
        np.testing.assert_array_equal(hm.to_matrix(weights), matrix)

    def test_symmetric_matrix(self):
        """Test the complete-graph weight of a symmetric matrix."""
        a = np.array(
            [[0, 1, 2, 3], [1, 0, 4, 5], [2, 4, 0, 6], [3, 5, 6, 0]], dtype=float
        )
        weights = hm.weights_from_symmetric(a)
        assert weights.spec == hm.HypergraphSpec("uniform", 2, 2)
        np.testing.assert_array_equal(weights.values, [1, 2, 3, 4, 5, 6])
        np.testing.assert_array_equal(hm.to_matrix(weights), a)

    def test_symmetric_matrix_errors(self):
        """Test odd dimension and asymmetric input."""
        with pytest.raises(hm.StructuralError):
            hm.weights_from_symmetric(np.ones((3, 3)))
        with pytest.raises(hm.StructuralError):
            hm.weights_from_symmetric(np.array([[0, 1], [2, 0]], dtype=float))

    def test_to_matrix_needs_k2(self):
        """Test that only k = 2 weights have a matrix form."""
        with pytest.raises(hm.StructuralError):
            hm.to_matrix(hm.WeightVector.constant(hm.HypergraphSpec("uniform", 3, 2), 1.0))

    def test_two_odd_cliques(self):
        """Test the two-clique weight lives on K_3 + K_3 with value 1/2."""
        weights = hm.two_odd_cliques_weight(1)
        assert weights.spec == hm.HypergraphSpec("uniform", 2, 3)
        assert weights[(0, 1)] == 0.5
        assert weights[(4, 5)] == 0.5
        assert weights[(0, 3)] == 0.0
        with pytest.raises(hm.DomainError):
            hm.two_odd_cliques_weight(0)

    def test_parity_weight(self):
        """Test the parity weight keeps only edges with even coordinate sum."""
        weights = hm.parity_weight(0)
        assert weights.spec == hm.HypergraphSpec("partite", 3, 2)
        assert weights[(0, 2, 4)] == 0.0
        assert weights[(0, 2, 5)] == 0.5
        assert weights[(1, 3, 5)] == 0.5
        assert weights[(1, 3, 4)] == 0.0

    def test_sublist_indicator(self):
        """Test indicator weights and coercion of sublists."""
        spec = hm.HypergraphSpec("uniform", 2, 2)
        sub = hm.from_edges(spec, [(0, 1)])
        weights = sublist_indicator(sub, inside=1.0, outside=0.25)
        assert weights[(0, 1)] == 1.0
        assert weights[(2, 3)] == 0.25
        assert as_weight(sub)[(2, 3)] == 0.0
        assert as_weight(weights) is weights
        with pytest.raises(hm.StructuralError):
            as_weight([1, 2, 3])
