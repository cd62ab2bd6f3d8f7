"""Tests for tree construction, canonical codes and invariants"""

import random
from itertools import permutations

import pytest

from csfkit.config import error_types
from csfkit.core.enumeration import enumerate_trees
from csfkit.core.trees import (
    are_isomorphic,
    bfs_distances,
    canonical_code,
    canonical_form,
    degree_sequence,
    diameter,
    path_tree,
    random_tree,
    relabel,
    star_tree,
    tree_center,
    tree_from_canonical_code,
    tree_from_edges,
    tree_is_path,
    trunk,
    twig_attachments,
    twigs,
)
from csfkit.core.union_find import UnionFind
from csfkit.utils.errors import BadLabelError, NoTrunkError, NotATreeError, ValidationError


def _spider(*legs: int):
    """Center 0 with pendant paths of the given lengths."""
    edges = []
    label = 1
    for length in legs:
        previous = 0
        for _ in range(length):
            edges.append((previous, label))
            previous = label
            label += 1
    return tree_from_edges(label, edges)


class TestTreeConstruction:
    """Test edge-list validation"""

    def test_valid_tree(self, p3):
        """Test a path is accepted and edges are normalized"""
        t = tree_from_edges(3, [(2, 1), (1, 0)])
        assert t == p3
        assert t.edges == ((0, 1), (1, 2))

    def test_single_vertex(self):
        """Test the one-vertex tree has no edges"""
        t = tree_from_edges(1, [])
        assert t.order == 1
        assert t.edges == ()

    def test_wrong_edge_count(self):
        """Test a missing edge is rejected"""
        with pytest.raises(NotATreeError) as excinfo:
            tree_from_edges(3, [(0, 1)])
        assert excinfo.value.error_type == error_types.NOT_A_TREE

    def test_duplicate_edge(self):
        """Test a repeated edge is rejected"""
        with pytest.raises(NotATreeError):
            tree_from_edges(3, [(0, 1), (1, 0)])

    def test_self_loop(self):
        """Test a self-loop is rejected"""
        with pytest.raises(NotATreeError):
            tree_from_edges(3, [(0, 0), (1, 2)])

    def test_cycle(self):
        """Test a cycle plus an isolated vertex is rejected"""
        with pytest.raises(NotATreeError):
            tree_from_edges(4, [(0, 1), (1, 2), (2, 0)])

    def test_bad_label(self):
        """Test a label outside 0..n-1 is rejected"""
        with pytest.raises(BadLabelError) as excinfo:
            tree_from_edges(2, [(0, 2)])
        assert excinfo.value.error_type == error_types.BAD_LABEL

    def test_relabel(self, p3):
        """Test relabelling moves the middle vertex"""
        t = relabel(p3, [1, 0, 2])
        assert t.edges == ((0, 1), (0, 2))
        with pytest.raises(ValidationError):
            relabel(p3, [0, 0, 1])

    def test_union_find_components(self):
        """Test component sizes come out in decreasing order"""
        components = UnionFind(5)
        assert components.union(0, 1)
        assert components.union(1, 2)
        assert not components.union(0, 2)
        assert components.component_sizes() == (3, 1, 1)
        assert components.num_sets == 3


class TestCanonicalCode:
    """Test centers, AHU codes and isomorphism"""

    def test_centers(self, p4, claw):
        """Test path and star centers"""
        assert tree_center(p4) == (1, 2)
        assert tree_center(path_tree(5)) == (2,)
        assert tree_center(claw) == (0,)
        assert tree_center(path_tree(1)) == (0,)

    def test_code_length(self):
        """Test the code has two symbols per vertex"""
        for order in range(1, 8):
            for t in enumerate_trees(order):
                assert len(canonical_code(t)) == 2 * order

    def test_path_and_star_codes(self, p2, claw):
        """Test codes of the smallest trees"""
        assert str(canonical_code(path_tree(1))) == "()"
        assert str(canonical_code(p2)) == "(())"
        assert str(canonical_code(claw)) == "(()()())"

    def test_path_not_isomorphic_to_star(self, p4, claw):
        """Test the two trees of order 4 differ"""
        assert not are_isomorphic(p4, claw)
        assert not are_isomorphic(p4, path_tree(5))

    def test_relabel_invariance(self):
        """Test 100 random relabellings per order <= 12 keep the canonical code"""
        rng = random.Random(7)
        for order in range(1, 13):
            for _ in range(100):
                t = random_tree(order, rng)
                permutation = list(range(order))
                rng.shuffle(permutation)
                assert canonical_code(relabel(t, permutation)) == canonical_code(t)

    @pytest.mark.slow
    def test_agrees_with_permutation_search(self):
        """Test code equality against all 7! vertex bijections for every pair of order-7 classes"""
        rng = random.Random(5)
        classes = list(enumerate_trees(7))
        assert len(classes) == 11
        bijections = list(permutations(range(7)))
        for i, a in enumerate(classes):
            for j, other in enumerate(classes):
                shuffled = list(range(7))
                rng.shuffle(shuffled)
                b = relabel(other, shuffled)
                edge_set = set(b.edges)
                brute = any(
                    all((min(p[u], p[v]), max(p[u], p[v])) in edge_set for u, v in a.edges)
                    for p in bijections
                )
                assert are_isomorphic(a, b) == brute
                assert brute == (i == j)

    def test_decode_round_trip(self):
        """Test decoding a canonical code gives an isomorphic, canonically labelled tree"""
        rng = random.Random(11)
        for _ in range(20):
            t = random_tree(rng.randint(1, 10), rng)
            decoded = tree_from_canonical_code(canonical_code(t))
            assert are_isomorphic(decoded, t)
            assert decoded == canonical_form(t)

    def test_decode_rejects_garbage(self):
        """Test malformed codes"""
        for bad in ("", "(()", "())", "()()", "(x)"):
            with pytest.raises(ValidationError):
                tree_from_canonical_code(bad)


class TestInvariants:
    """Test degree sequence, diameter, trunk and twigs"""

    def test_degree_sequence(self, claw):
        """Test degrees are listed in decreasing order"""
        degrees = degree_sequence(claw)
        assert degrees.degrees == (3, 1, 1, 1)
        assert degrees.count(1) == 3
        assert degrees.counts() == (3, 0, 1)

    def test_diameter(self, p4, claw):
        """Test diameters of paths and stars"""
        assert diameter(p4) == 3
        assert diameter(claw) == 2
        assert diameter(path_tree(1)) == 0

    def test_diameter_matches_all_pairs(self):
        """Test double BFS against the largest BFS distance over every vertex for orders <= 10"""
        for order in range(1, 11):
            for t in enumerate_trees(order):
                brute = max(max(bfs_distances(t, v)) for v in t.vertices)
                assert diameter(t) == brute

    def test_trunk_and_twigs_cover_every_tree(self):
        """Test twig lengths fill the vertices outside the trunk for orders <= 10"""
        for order in range(1, 11):
            for t in enumerate_trees(order):
                if tree_is_path(t):
                    continue
                core = trunk(t)
                assert twigs(t).total_length == order - len(core)
                assert all(v in core for v in t.vertices if t.degree(v) >= 3)

    def test_path_has_no_trunk(self, p3):
        """Test paths raise NoTrunk"""
        assert tree_is_path(p3)
        with pytest.raises(NoTrunkError) as excinfo:
            trunk(p3)
        assert excinfo.value.error_type == error_types.NO_TRUNK
        with pytest.raises(NoTrunkError):
            twigs(p3)

    def test_star_trunk(self, claw):
        """Test the trunk of a star is its center"""
        assert trunk(claw) == frozenset({0})
        assert twigs(claw).as_dict() == {1: 3}

    def test_spider_twigs(self):
        """Test a spider with legs 1, 2 and 3"""
        t = _spider(1, 2, 3)
        assert trunk(t) == frozenset({0})
        multiset = twigs(t)
        assert multiset.as_dict() == {1: 1, 2: 1, 3: 1}
        assert multiset.size == 3
        assert multiset.total_length == 6

    def test_trunk_is_steiner_tree(self):
        """Test a degree-2 vertex between two branch vertices stays in the trunk"""
        # 0 and 2 are branch vertices joined through 1
        t = tree_from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])
        assert trunk(t) == frozenset({0, 1, 2})
        assert twig_attachments(t) == {0: [1, 1], 1: [], 2: [1, 1]}

    def test_sample_caterpillar(self, sample_caterpillar):
        """Test trunk and twigs of the five-vertex-spine 2-caterpillar"""
        assert sample_caterpillar.order == 23
        assert trunk(sample_caterpillar) == frozenset({1, 2, 3, 4})
        assert twigs(sample_caterpillar).as_dict() == {2: 8, 3: 1}
        assert diameter(sample_caterpillar) == 8

    def test_trunk_size_formula(self):
        """Test |trunk| = n - δ1 - δ2 fails when a degree-2 vertex sits inside the trunk"""
        t = tree_from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])
        degrees = degree_sequence(t)
        assert len(trunk(t)) != t.order - degrees.count(1) - degrees.count(2)

    def test_star_tree_helper(self):
        """Test star_tree builds K_{1,k}"""
        t = star_tree(4)
        assert t.order == 5
        assert t.degree(0) == 4
