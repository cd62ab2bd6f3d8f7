"""Tests for free tree enumeration"""

import networkx as nx
import pytest

from csfkit.core.enumeration import count_trees, enumerate_trees, enumerate_trees_prufer
from csfkit.core.trees import canonical_code, tree_from_canonical_code, tree_from_edges
from csfkit.utils.errors import ValidationError
from csfkit.utils.formatters import format_tree

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def _codes(trees):
    return sorted(str(canonical_code(t)) for t in trees)


class TestEnumeration:
    """Test class counts and canonical output"""

    @pytest.mark.parametrize("order", range(1, 10))
    def test_counts(self, order):
        """Test the number of isomorphism classes"""
        assert count_trees(order) == KNOWN_COUNTS[order]

    @pytest.mark.slow
    def test_counts_order_10_and_12(self):
        """Test larger counts"""
        assert count_trees(10) == 106
        assert count_trees(12) == 551

    def test_order_four(self):
        """Test the two trees of order 4 in text format"""
        lines = [format_tree(t) for t in enumerate_trees(4)]
        assert len(lines) == 2
        assert len(set(lines)) == 2

    def test_distinct_and_canonical(self):
        """Test every tree is labelled by its own canonical code and no class repeats"""
        for order in range(1, 9):
            trees = list(enumerate_trees(order))
            codes = [str(canonical_code(t)) for t in trees]
            assert codes == sorted(set(codes))
            for t, code in zip(trees, codes):
                assert tree_from_canonical_code(code) == t

    @pytest.mark.parametrize("order", range(1, 8))
    def test_prufer_matches_growth(self, order):
        """Test the Prüfer stream finds the same classes"""
        assert _codes(enumerate_trees_prufer(order)) == _codes(enumerate_trees(order))

    @pytest.mark.parametrize("order", range(2, 11))
    def test_networkx_oracle(self, order):
        """Test against networkx's non-isomorphic tree generator"""
        oracle = [
            tree_from_edges(order, list(graph.edges()))
            for graph in nx.nonisomorphic_trees(order)
        ]
        assert _codes(oracle) == _codes(enumerate_trees(order))

    def test_deterministic(self):
        """Test repeated enumeration gives identical output"""
        first = [format_tree(t) for t in enumerate_trees(7)]
        second = [format_tree(t) for t in enumerate_trees(7)]
        assert first == second

    def test_rejects_non_positive_order(self):
        """Test order 0"""
        with pytest.raises(ValidationError):
            count_trees(0)
