"""U-polynomial of trees.

On a tree every edge subset F satisfies |F| - |V| + κ(F) = 0, so the y
variable never appears and U_T = Σ_F x_λ[F]. Two methods are provided: direct
subset enumeration and a rooted dynamic program over component sizes.
"""

from typing import Dict, FrozenSet, Iterable, List, Tuple

from csfkit.config.constants import ERROR_MSG_EDGE_NOT_IN_TREE, MAX_SUBSET_ENUMERATION_ORDER
from csfkit.core.symmetric import subset_partition_counts
from csfkit.core.union_find import UnionFind
from csfkit.models.polynomial import SparsePolynomial, merge_parts
from csfkit.models.tree import Edge, Tree, normalize_edges
from csfkit.utils.errors import BoundExceededError, EdgeNotInTreeError

RawPoly = Dict[Tuple[int, ...], int]


def upoly_naive(
    t: Tree,
    max_order: int = MAX_SUBSET_ENUMERATION_ORDER,
    workers: int = 1,
) -> SparsePolynomial:
    """
    Σ over all edge subsets of x_λ[F].

    Raises:
        BoundExceededError: t.order > max_order
    """
    if t.order > max_order:
        raise BoundExceededError("tree order", t.order, max_order)
    return SparsePolynomial.from_raw(subset_partition_counts(t, signed=False, workers=workers))


def _multiply(a: RawPoly, b: RawPoly) -> RawPoly:
    product: RawPoly = {}
    for left, x in a.items():
        for right, y in b.items():
            key = merge_parts(left, right)
            product[key] = product.get(key, 0) + x * y
    return product


def _accumulate(target: RawPoly, source: RawPoly) -> None:
    for key, coeff in source.items():
        target[key] = target.get(key, 0) + coeff


def _collapse(state: List[RawPoly]) -> RawPoly:
    """Close the open component: z^k becomes a finished part k."""
    closed: RawPoly = {}
    for size, poly in enumerate(state):
        for key, coeff in poly.items():
            grown = merge_parts(key, (size,))
            closed[grown] = closed.get(grown, 0) + coeff
    return closed


def upoly_tree_dp(t: Tree, root: int = 0) -> SparsePolynomial:
    """
    U-polynomial by a bottom-up component-size dynamic program.

    Each vertex v carries a list ``state[k]``: the polynomial of finished
    components in v's subtree, given that the component containing v has k
    vertices so far. Merging child c: cutting the edge closes c's component
    (z^j -> x_j); keeping it adds the sizes. Children are merged in label order.
    """
    parent, order = _rooted(t, root)
    states: List[List[RawPoly]] = [[] for _ in t.vertices]

    for v in reversed(order):
        state: List[RawPoly] = [{}, {(): 1}]
        for child in t.neighbours(v):
            if child == parent[v]:
                continue
            child_state = states[child]
            states[child] = []
            cut = _collapse(child_state)
            merged: List[RawPoly] = [{} for _ in range(len(state) + len(child_state) - 1)]
            for k, poly_v in enumerate(state):
                if not poly_v:
                    continue
                _accumulate(merged[k], _multiply(poly_v, cut))
                for j, poly_c in enumerate(child_state):
                    if poly_c:
                        _accumulate(merged[k + j], _multiply(poly_v, poly_c))
            state = merged
        states[v] = state

    return SparsePolynomial.from_raw(_collapse(states[root]))


def _rooted(t: Tree, root: int) -> Tuple[List[int], List[int]]:
    parent = [-1] * t.order
    order = [root]
    for v in order:
        for w in t.neighbours(v):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    return parent, order


def restrict_min_part(u: SparsePolynomial, q: int) -> SparsePolynomial:
    """Set x_1 = ... = x_q = 0: drop every term with a part <= q."""
    if q <= 0:
        return u
    return SparsePolynomial({
        partition: coeff
        for partition, coeff in u.items()
        if partition.parts[-1] > q
    })


def spine_superset_upoly(t: Tree, spine_edges: Iterable[Edge]) -> SparsePolynomial:
    """
    Σ of x_λ[F] over the edge subsets F that contain every non-spine edge.

    Raises:
        EdgeNotInTreeError: A spine edge is not an edge of t
    """
    spine: FrozenSet[Edge] = frozenset(normalize_edges(spine_edges))
    edge_set = frozenset(t.edges)
    for edge in spine:
        if edge not in edge_set:
            raise EdgeNotInTreeError(
                ERROR_MSG_EDGE_NOT_IN_TREE.format(edge=f"{edge[0]}-{edge[1]}"),
                details={"edge": list(edge)}
            )
    fixed = [edge for edge in t.edges if edge not in spine]
    free = sorted(spine)
    if len(free) > MAX_SUBSET_ENUMERATION_ORDER:
        raise BoundExceededError("spine edge count", len(free), MAX_SUBSET_ENUMERATION_ORDER)

    counts: RawPoly = {}
    for mask in range(1 << len(free)):
        components = UnionFind(t.order)
        for u, v in fixed:
            components.union(u, v)
        for index, (u, v) in enumerate(free):
            if mask >> index & 1:
                components.union(u, v)
        key = components.component_sizes()
        counts[key] = counts.get(key, 0) + 1
    return SparsePolynomial.from_raw(counts)
