import math

import numpy as np
import pandas as pd
import pytest

import hypermatch as hm
from hypermatch.core.exact import matching_count_bound, perfect_matching_count
from hypermatch.core.weights import as_weight
from hypermatch.utils.generators import gen_balanced


class TestPartitionFunction:
    """Test cases for the pinned-vertex expansion."""

    def test_perfect_matching_counts(self):
        """Test perfect matching counts of complete bases."""
        assert perfect_matching_count(hm.HypergraphSpec("uniform", 3, 2)) == 10
        assert perfect_matching_count(hm.HypergraphSpec("partite", 3, 2)) == 4
        assert perfect_matching_count(hm.HypergraphSpec("partite", 2, 4)) == 24

    def test_constant_weights(self):
        """Test P of constant-one weights equals the perfect matching count."""
        for kind, k, m, expected in [
            ("uniform", 2, 2, 3),
            ("uniform", 3, 2, 10),
            ("partite", 2, 3, 6),
            ("uniform", 3, 4, 15400),
        ]:
            weights = hm.WeightVector.constant(hm.HypergraphSpec(kind, k, m), 1.0)
            result = hm.partition_function_exact(weights)
            assert result.log_value == pytest.approx(math.log(expected), abs=1e-10)
            assert not result.is_zero

    def test_single_edge_hypergraph(self):
        """Test m = 1, where the single edge is the only perfect matching."""
        weights = hm.WeightVector.constant(hm.HypergraphSpec("uniform", 3, 1), 0.25)
        assert hm.partition_function_exact(weights).value == pytest.approx(0.25)

    def test_two_odd_cliques_has_no_perfect_matching(self):
        """Test the two-clique weight gives P = 0 exactly."""
        result = hm.partition_function_exact(hm.two_odd_cliques_weight(1))
        assert result.is_zero
        assert result.log_value == -math.inf
        assert result.value == 0.0

    def test_parity_weight_has_no_perfect_matching(self):
        """Test the parity weight at m = 6 gives P = 0 exactly."""
        weights = hm.parity_weight(1)
        assert weights.spec.m == 6
        assert hm.partition_function_exact(weights).is_zero
        assert hm.partition_function_dp_partite(weights).is_zero

    def test_leaf_budget(self):
        """Test the budget check reports required and allowed leaves."""
        weights = hm.WeightVector.constant(hm.HypergraphSpec("uniform", 2, 3), 1.0)
        with pytest.raises(hm.CapacityError) as info:
            hm.partition_function_exact(weights, leaf_budget=14)
        assert info.value.required == 15
        assert info.value.budget == 14
        assert info.value.exit_code == 3

    def test_scaling_identity(self):
        """Test ln P(Z) = sum ln lambda + ln P(W) for random scalings."""
        rng = np.random.default_rng(7)
        for kind in ("uniform", "partite"):
            for k in (2, 3):
                for m in (2, 3, 4):
                    spec = hm.HypergraphSpec(kind, k, m)
                    weights = hm.WeightVector(spec, rng.uniform(0.5, 2.0, spec.edge_count))
                    lam = rng.uniform(0.5, 2.0, spec.n)
                    scaled = hm.apply_scaling(weights, lam)
                    expected = hm.partition_function_exact(weights).log_value + np.log(lam).sum()
                    assert hm.partition_function_exact(scaled).log_value == pytest.approx(
                        expected, abs=1e-9
                    )


class TestOracles:
    """Test cases for permanent and hafnian cross-checks."""

    def test_ryser_small(self):
        """Test the 2 x 2 permanent ad + bc."""
        assert hm.permanent_ryser([[1.0, 2.0], [3.0, 4.0]]) == pytest.approx(10.0)
        assert hm.permanent_ryser(np.ones((3, 3))) == pytest.approx(6.0)
        assert hm.permanent_ryser(np.zeros((0, 0))) == 1.0

    def test_ryser_errors(self):
        """Test non-square input and the size limit."""
        with pytest.raises(hm.StructuralError):
            hm.permanent_ryser(np.ones((2, 3)))
        with pytest.raises(hm.CapacityError):
            hm.permanent_ryser(np.ones((4, 4)), max_size=3)
        with pytest.raises(hm.DomainError):
            hm.permanent_ryser([[1.0, -1.0], [1.0, 1.0]])

    @pytest.mark.parametrize(
        "matrix,expected",
        [
            (np.eye(4), 1.0),
            (np.ones((4, 4)), 24.0),
            (np.full((3, 3), 1.0 / 3.0), 2.0 / 9.0),
        ],
    )
    def test_ryser_known_values(self, matrix, expected):
        """Test the identity, the all-ones matrix and J/3."""
        assert hm.permanent_ryser(matrix) == pytest.approx(expected, rel=1e-12)

    def test_hafnian_small(self):
        """Test the hafnian of the all-ones 4 x 4 matrix counts 3 pairings."""
        assert hm.hafnian_exact(np.ones((4, 4))) == pytest.approx(3.0)

    def test_hafnian_errors(self):
        """Test odd, asymmetric and oversized input."""
        with pytest.raises(hm.StructuralError):
            hm.hafnian_exact(np.ones((3, 3)))
        with pytest.raises(hm.StructuralError):
            hm.hafnian_exact(np.array([[0.0, 1.0], [2.0, 0.0]]))
        with pytest.raises(hm.CapacityError):
            hm.hafnian_exact(np.ones((6, 6)), max_size=4)

    def test_expansion_matches_permanent(self):
        """Test agreement with Ryser on random positive matrices up to 6 x 6."""
        rng = np.random.default_rng(11)
        for trial in range(100):
            m = 1 + trial % 6
            matrix = rng.uniform(0.1, 1.0, (m, m))
            expected = hm.permanent_ryser(matrix)
            result = hm.partition_function_exact(hm.weights_from_matrix(matrix))
            assert result.value == pytest.approx(expected, rel=1e-10)

    def test_expansion_matches_hafnian(self):
        """Test agreement with the hafnian on random symmetric matrices up to 12 x 12."""
        rng = np.random.default_rng(12)
        for trial in range(100):
            n = 2 * (1 + trial % 6)
            upper = np.triu(rng.uniform(0.1, 1.0, (n, n)), 1)
            matrix = upper + upper.T
            expected = hm.hafnian_exact(matrix)
            result = hm.partition_function_exact(hm.weights_from_symmetric(matrix))
            assert result.value == pytest.approx(expected, rel=1e-10)

    def test_subset_dp_matches_expansion(self):
        """Test the partite subset DP against the expansion at k = 3."""
        for seed in range(5):
            weights = gen_balanced(hm.HypergraphSpec("partite", 3, 3), 2.0, seed)
            dp = hm.partition_function_dp_partite(weights)
            expanded = hm.partition_function_exact(weights)
            assert dp.log_value == pytest.approx(expanded.log_value, abs=1e-10)

    def test_subset_dp_permutation_weight(self):
        """Test a permutation matrix has exactly one perfect matching of weight 1."""
        weights = hm.weights_from_matrix(np.eye(3)[[2, 0, 1]])
        assert hm.partition_function_dp_partite(weights).value == pytest.approx(1.0)

    def test_subset_dp_all_ones_k3(self):
        """Test the complete 3-partite base with m = 3 has (3!)^2 perfect matchings."""
        weights = hm.WeightVector.constant(hm.HypergraphSpec("partite", 3, 3), 1.0)
        assert hm.partition_function_dp_partite(weights).value == pytest.approx(36.0)

    def test_subset_dp_matches_ryser(self):
        """Test the DP at k = 2, m = 5 agrees with the permanent."""
        rng = np.random.default_rng(5)
        for _ in range(20):
            matrix = rng.uniform(0.0, 1.0, (5, 5))
            dp = hm.partition_function_dp_partite(hm.weights_from_matrix(matrix))
            assert dp.value == pytest.approx(hm.permanent_ryser(matrix), rel=1e-10)

    def test_partite_halves(self):
        """Test weight 1/2 on the complete bipartite base with m = 2 gives P = 1/2."""
        weights = hm.WeightVector.constant(hm.HypergraphSpec("partite", 2, 2), 0.5)
        assert hm.partition_function_exact(weights).value == pytest.approx(0.5)

    def test_subset_dp_errors(self):
        """Test the DP rejects uniform bases and oversized states."""
        with pytest.raises(hm.StructuralError):
            hm.partition_function_dp_partite(
                hm.WeightVector.constant(hm.HypergraphSpec("uniform", 2, 2), 1.0)
            )
        with pytest.raises(hm.CapacityError):
            hm.partition_function_dp_partite(
                hm.WeightVector.constant(hm.HypergraphSpec("partite", 3, 3), 1.0), bit_budget=5
            )


class TestMatchingCounts:
    """Test cases for matching counts and maximum matchings."""

    def test_count_table_k4(self):
        """Test K_4 has 1 empty, 6 single-edge and 3 perfect matchings."""
        table = hm.count_matchings_by_size(hm.EdgeSublist.full(hm.HypergraphSpec("uniform", 2, 2)))
        assert table.counts == (1, 6, 3)
        assert table.perfect == 3
        assert table.max_size == 2
        assert table.total == 10

    def test_count_table_frame(self):
        """Test the pandas view of the table."""
        table = hm.count_matchings_by_size(hm.EdgeSublist.full(hm.HypergraphSpec("uniform", 3, 2)))
        frame = table.to_frame()
        assert isinstance(frame, pd.DataFrame)
        assert list(frame.columns) == ["size", "count"]
        assert list(frame["count"]) == [1, 20, 10]

    @pytest.mark.parametrize("k", [2, 3])
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_perfect_count_is_phi(self, k, m):
        """Test the enumerator reproduces Phi_k(m) on complete hypergraphs."""
        table = hm.count_matchings_by_size(hm.EdgeSublist.full(hm.HypergraphSpec("uniform", k, m)))
        assert table.perfect == hm.phi_exact(k, m)
        assert table.total <= matching_count_bound(hm.HypergraphSpec("uniform", k, m))

    def test_phi_3_4(self):
        """Test Phi_3(4) = 15400 from the enumerator and the closed form."""
        table = hm.count_matchings_by_size(hm.EdgeSublist.full(hm.HypergraphSpec("uniform", 3, 4)))
        assert table.perfect == 15400 == hm.phi_exact(3, 4)

    def test_empty_sublist_counts(self):
        """Test the empty sublist only has the empty matching."""
        table = hm.count_matchings_by_size(hm.EdgeSublist.empty(hm.HypergraphSpec("uniform", 2, 3)))
        assert table.counts == (1, 0, 0, 0)
        assert table.max_size == 0

    def test_indicator_partition_function_counts(self):
        """Test P of a 0/1 weight equals the sublist's perfect matching count."""
        spec = hm.HypergraphSpec("uniform", 2, 3)
        sub = hm.from_edges(spec, [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3), (1, 4)])
        table = hm.count_matchings_by_size(sub)
        result = hm.partition_function_exact(as_weight(sub))
        assert result.value == pytest.approx(table.perfect)

    def test_two_triangles_max_matching(self):
        """Test two disjoint triangles in K_6 have maximum matching size 2."""
        spec = hm.HypergraphSpec("uniform", 2, 3)
        sub = hm.from_edges(spec, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        size, witness = hm.max_matching(sub)
        assert size == 2
        assert len(witness) == 2
        assert all(hm.edge_index(spec, e) in sub for e in witness)
        assert not set(witness[0]) & set(witness[1])
        assert hm.count_matchings_by_size(sub).perfect == 0

    def test_max_matching_full_and_empty(self):
        """Test the complete hypergraph has a perfect matching and the empty one none."""
        spec = hm.HypergraphSpec("partite", 3, 3)
        assert hm.max_matching_size(hm.EdgeSublist.full(spec)) == 3
        assert hm.max_matching(hm.EdgeSublist.empty(spec)) == (0, [])

    def test_max_matching_beats_greedy(self):
        """Test a path where the greedy choice is not maximum."""
        spec = hm.HypergraphSpec("uniform", 2, 2)
        sub = hm.from_edges(spec, [(0, 2), (1, 2), (0, 3)])
        size, witness = hm.max_matching(sub)
        assert size == 2
        assert witness == [(0, 3), (1, 2)]
