"""Tree construction, canonical forms and structural invariants.

Canonical codes follow the AHU scheme: the tree is rooted at its center, each
vertex is encoded as "(" + sorted child codes + ")", and a bicentral tree takes
the smaller of its two center-rooted codes. Equal codes mean isomorphic trees.
"""

import heapq
import logging
import random
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from csfkit.config.constants import (
    ERROR_MSG_BAD_LABEL,
    ERROR_MSG_NOT_A_TREE,
    ERROR_MSG_NO_TRUNK,
)
from csfkit.core.union_find import UnionFind
from csfkit.models.tree import (
    CanonicalCode,
    DegreeSequence,
    Edge,
    Tree,
    TwigMultiset,
    normalize_edges,
)
from csfkit.utils.errors import (
    BadLabelError,
    NoTrunkError,
    NotATreeError,
    ValidationError,
)

logger = logging.getLogger(__name__)


def tree_from_edges(order: int, edges: Iterable[Edge]) -> Tree:
    """
    Validate an edge list and build a Tree.

    Args:
        order: Number of vertices, labels are 0..order-1
        edges: Vertex pairs

    Returns:
        Validated Tree

    Raises:
        BadLabelError: A label is outside 0..order-1
        NotATreeError: Self-loop, duplicate edge, wrong edge count, cycle or
            disconnected graph
    """
    if order < 1:
        raise NotATreeError(
            ERROR_MSG_NOT_A_TREE.format(order=order, detail="order must be positive"),
            details={"order": order}
        )
    edge_list = [tuple(edge) for edge in edges]
    for edge in edge_list:
        if len(edge) != 2:
            raise NotATreeError(
                ERROR_MSG_NOT_A_TREE.format(order=order, detail=f"malformed edge {edge}")
            )
        for label in edge:
            if not isinstance(label, int) or label < 0 or label >= order:
                raise BadLabelError(
                    ERROR_MSG_BAD_LABEL.format(label=label, max_label=order - 1),
                    details={"label": label, "order": order}
                )

    if len(edge_list) != order - 1:
        raise NotATreeError(
            ERROR_MSG_NOT_A_TREE.format(
                order=order, detail=f"{len(edge_list)} edges, expected {order - 1}"
            ),
            details={"order": order, "edges": len(edge_list)}
        )

    components = UnionFind(order)
    for u, v in edge_list:
        if u == v:
            raise NotATreeError(
                ERROR_MSG_NOT_A_TREE.format(order=order, detail=f"self-loop at {u}")
            )
        if not components.union(u, v):
            raise NotATreeError(
                ERROR_MSG_NOT_A_TREE.format(
                    order=order, detail=f"edge {u}-{v} closes a cycle or repeats an edge"
                )
            )
    # order-1 successful unions always leave one component; kept as a guard
    if components.num_sets != 1:
        raise NotATreeError(
            ERROR_MSG_NOT_A_TREE.format(order=order, detail="graph is disconnected")
        )
    return Tree(order, normalize_edges(edge_list))


def path_tree(order: int) -> Tree:
    return tree_from_edges(order, [(i, i + 1) for i in range(order - 1)])


def star_tree(leaves: int) -> Tree:
    return tree_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def relabel(t: Tree, permutation: Sequence[int]) -> Tree:
    """Apply vertex bijection ``v -> permutation[v]``."""
    if sorted(permutation) != list(range(t.order)):
        raise ValidationError(f"not a permutation of 0..{t.order - 1}")
    return Tree(t.order, normalize_edges((permutation[u], permutation[v]) for u, v in t.edges))


def tree_is_path(t: Tree) -> bool:
    return all(t.degree(v) <= 2 for v in t.vertices)


# ----------------------------------------------------------------------------
# Centers and canonical codes
# ----------------------------------------------------------------------------

def tree_center(t: Tree) -> Tuple[int, ...]:
    """One or two center vertices, found by iterative leaf stripping."""
    if t.order <= 2:
        return tuple(range(t.order))
    degree = [t.degree(v) for v in t.vertices]
    leaves = [v for v in t.vertices if degree[v] <= 1]
    remaining = t.order
    while remaining > 2:
        remaining -= len(leaves)
        next_leaves = []
        for leaf in leaves:
            degree[leaf] = 0
            for w in t.neighbours(leaf):
                if degree[w] > 0:
                    degree[w] -= 1
                    if degree[w] == 1:
                        next_leaves.append(w)
        leaves = next_leaves
    return tuple(sorted(leaves))


def _bfs_order(t: Tree, root: int) -> Tuple[List[int], List[int]]:
    parent = [-1] * t.order
    order = [root]
    for v in order:
        for w in t.neighbours(v):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    return order, parent


def rooted_code(t: Tree, root: int) -> str:
    """AHU code of t rooted at ``root``."""
    order, parent = _bfs_order(t, root)
    codes: List[str] = [""] * t.order
    for v in reversed(order):
        children = sorted(codes[w] for w in t.neighbours(v) if w != parent[v])
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def canonical_code(t: Tree) -> CanonicalCode:
    return CanonicalCode(min(rooted_code(t, c) for c in tree_center(t)))


def are_isomorphic(a: Tree, b: Tree) -> bool:
    if a.order != b.order:
        return False
    return canonical_code(a) == canonical_code(b)


def tree_from_canonical_code(code) -> Tree:
    """
    Decode a parenthesis string into a tree labelled in preorder.

    Args:
        code: CanonicalCode or its string form

    Returns:
        Tree whose root is vertex 0

    Raises:
        ValidationError: Unbalanced string, stray characters, or more than one root
    """
    text = str(code)
    edges: List[Edge] = []
    stack: List[int] = []
    next_label = 0
    for position, symbol in enumerate(text):
        if symbol == "(":
            if not stack and next_label > 0:
                raise ValidationError(f"code has more than one root at position {position}")
            vertex = next_label
            next_label += 1
            if stack:
                edges.append((stack[-1], vertex))
            stack.append(vertex)
        elif symbol == ")":
            if not stack:
                raise ValidationError(f"unbalanced code at position {position}")
            stack.pop()
        else:
            raise ValidationError(f"unexpected character {symbol!r} in code")
    if stack or next_label == 0:
        raise ValidationError("unbalanced or empty code")
    return tree_from_edges(next_label, edges)


def canonical_form(t: Tree) -> Tree:
    """Relabel t so that equal isomorphism classes give identical Trees."""
    return tree_from_canonical_code(canonical_code(t))


# ----------------------------------------------------------------------------
# Random trees
# ----------------------------------------------------------------------------

def prufer_decode(sequence: Sequence[int]) -> List[Edge]:
    """Edge list of the labelled tree with the given Prüfer sequence."""
    n = len(sequence) + 2
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: List[Edge] = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def random_tree(order: int, rng: Optional[random.Random] = None) -> Tree:
    """Uniformly random labelled tree on ``order`` vertices."""
    rng = rng or random.Random()
    if order < 1:
        raise ValidationError(f"order must be positive, got {order}")
    if order == 1:
        return tree_from_edges(1, [])
    if order == 2:
        return tree_from_edges(2, [(0, 1)])
    sequence = [rng.randrange(order) for _ in range(order - 2)]
    return tree_from_edges(order, prufer_decode(sequence))


# ----------------------------------------------------------------------------
# Invariants
# ----------------------------------------------------------------------------

def degree_sequence(t: Tree) -> DegreeSequence:
    return DegreeSequence(tuple(sorted((t.degree(v) for v in t.vertices), reverse=True)))


def bfs_distances(t: Tree, source: int) -> List[int]:
    distance = [-1] * t.order
    distance[source] = 0
    queue = [source]
    for v in queue:
        for w in t.neighbours(v):
            if distance[w] < 0:
                distance[w] = distance[v] + 1
                queue.append(w)
    return distance


def diameter(t: Tree) -> int:
    """Longest path length in edges, by double breadth-first search."""
    first = bfs_distances(t, 0)
    far = max(t.vertices, key=lambda v: (first[v], -v))
    return max(bfs_distances(t, far))


def trunk(t: Tree) -> FrozenSet[int]:
    """
    Vertex set of the smallest subtree containing every vertex of degree >= 3.

    Leaves of degree < 3 are stripped repeatedly; what remains is the Steiner
    tree of the branch vertices.

    Raises:
        NoTrunkError: t is a path
    """
    original = [t.degree(v) for v in t.vertices]
    if not any(d >= 3 for d in original):
        raise NoTrunkError(ERROR_MSG_NO_TRUNK, details={"order": t.order})

    current = list(original)
    removed = [False] * t.order
    queue = [v for v in t.vertices if current[v] <= 1 and original[v] < 3]
    for v in queue:
        if removed[v]:
            continue
        removed[v] = True
        for w in t.neighbours(v):
            if not removed[w]:
                current[w] -= 1
                if current[w] <= 1 and original[w] < 3:
                    queue.append(w)
    return frozenset(v for v in t.vertices if not removed[v])


def twig_attachments(t: Tree, core: Optional[FrozenSet[int]] = None) -> Dict[int, List[int]]:
    """Map each trunk vertex to the lengths of the twigs hanging from it."""
    core = trunk(t) if core is None else core
    attached: Dict[int, List[int]] = {v: [] for v in sorted(core)}
    for leaf in t.vertices:
        if t.degree(leaf) != 1:
            continue
        previous, current, length = -1, leaf, 0
        while current not in core:
            length += 1
            following = next(w for w in t.neighbours(current) if w != previous)
            previous, current = current, following
        attached[current].append(length)
    for lengths in attached.values():
        lengths.sort()
    return attached


def twigs(t: Tree) -> TwigMultiset:
    """
    Multiset of twig lengths, one twig per pendant vertex.

    Raises:
        NoTrunkError: t is a path
    """
    attached = twig_attachments(t)
    return TwigMultiset.from_lengths(
        length for lengths in attached.values() for length in lengths
    )
