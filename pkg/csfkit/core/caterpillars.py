"""Proper q-caterpillars.

A proper q-caterpillar is built from a spine path v_1..v_ℓ by gluing p_i >= 1
pendant paths of exactly q vertices at each v_i. It corresponds to the
composition with parts q·p_i + 1, read along the spine; the reversed spine
gives the reversed composition and an isomorphic tree.
"""

import logging
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from csfkit.config.constants import ERROR_MSG_NOT_A_CATERPILLAR, MAX_COMPOSITION_WEIGHT
from csfkit.core.compositions import l_polynomial, qualifying_compositions, reverse
from csfkit.core.trees import (
    degree_sequence,
    diameter,
    tree_from_edges,
    tree_is_path,
    trunk,
    twig_attachments,
    twigs,
)
from csfkit.core.upoly import restrict_min_part, upoly_tree_dp
from csfkit.models.caterpillar import CaterpillarSpec
from csfkit.models.composition import Composition
from csfkit.models.tree import Edge, Tree
from csfkit.utils.errors import (
    BoundExceededError,
    NotAProperQCaterpillarError,
    ValidationError,
)
from csfkit.utils.validators import validate_q

logger = logging.getLogger(__name__)


def _oriented(composition: Composition) -> Composition:
    """The lexicographically smaller of a composition and its reverse."""
    return min(composition, reverse(composition))


def _not_a_caterpillar(q: int, detail: str) -> NotAProperQCaterpillarError:
    return NotAProperQCaterpillarError(
        ERROR_MSG_NOT_A_CATERPILLAR.format(q=q, detail=detail),
        details={"q": q, "reason": detail}
    )


# ----------------------------------------------------------------------------
# τ and φ
# ----------------------------------------------------------------------------

def tau(a: Composition, q: int) -> Tree:
    """
    Proper q-caterpillar of a composition.

    Spine vertices are labelled 0..ℓ-1 in order; the legs follow, each leg
    labelled outward from the spine.

    Raises:
        ValidationError: q < 2
        BadCompositionError: A part is <= 1 or ≢ 1 (mod q)
    """
    validate_q(q)
    spec = CaterpillarSpec.from_composition(a, q)
    edges: List[Edge] = [(i, i + 1) for i in range(spec.spine_length - 1)]
    next_label = spec.spine_length
    for spine_vertex, legs in enumerate(spec.spine_counts):
        for _ in range(legs):
            previous = spine_vertex
            for _ in range(q):
                edges.append((previous, next_label))
                previous = next_label
                next_label += 1
    return tree_from_edges(spec.order, edges)


def tau_spine_edges(a: Composition) -> List[Edge]:
    """Spine edges of ``tau(a, q)`` for any valid q."""
    return [(i, i + 1) for i in range(a.length - 1)]


def _trunk_path(t: Tree, core: FrozenSet[int], q: int) -> List[int]:
    """Trunk vertices in path order, or raise if the trunk branches."""
    if len(core) == 1:
        return list(core)
    inside: Dict[int, List[int]] = {
        v: [w for w in t.neighbours(v) if w in core] for v in core
    }
    if any(len(nbrs) > 2 for nbrs in inside.values()):
        raise _not_a_caterpillar(q, "trunk is not a path")
    start = min(v for v, nbrs in inside.items() if len(nbrs) == 1)
    ordered = [start]
    previous = -1
    while True:
        current = ordered[-1]
        following = [w for w in inside[current] if w != previous]
        if not following:
            break
        previous = current
        ordered.append(following[0])
    return ordered


def phi(t: Tree, q: int) -> Composition:
    """
    Composition of a proper q-caterpillar, oriented to the smaller of α and α*.

    Paths of order q+1, 2q+1 and 2q+2 map to (q+1), (2q+1) and (q+1, q+1).
    Otherwise the spine is the trunk, extended at an end by one vertex into a
    twig of length q+1 when there is one.

    Raises:
        ValidationError: q < 2
        NotAProperQCaterpillarError: t has no spine decomposition
    """
    validate_q(q)
    if tree_is_path(t):
        by_order = {
            q + 1: (q + 1,),
            2 * q + 1: (2 * q + 1,),
            2 * q + 2: (q + 1, q + 1),
        }
        if t.order not in by_order:
            raise _not_a_caterpillar(q, f"path of order {t.order}")
        return Composition(by_order[t.order])

    core = trunk(t)
    ordered = _trunk_path(t, core, q)
    attached = twig_attachments(t, core)

    bad = sorted({length for lengths in attached.values() for length in lengths} - {q, q + 1})
    if bad:
        raise _not_a_caterpillar(q, f"twig of length {bad[0]}")

    long_twigs = [attached[v].count(q + 1) for v in ordered]
    legs = [attached[v].count(q) for v in ordered]

    if len(ordered) == 1:
        if long_twigs[0] > 2:
            raise _not_a_caterpillar(q, f"{long_twigs[0]} twigs of length {q + 1}")
        extend_left = long_twigs[0] >= 1
        extend_right = long_twigs[0] == 2
    else:
        if any(long_twigs[1:-1]):
            raise _not_a_caterpillar(q, f"twig of length {q + 1} inside the trunk")
        if long_twigs[0] > 1 or long_twigs[-1] > 1:
            raise _not_a_caterpillar(q, f"two twigs of length {q + 1} at one trunk end")
        extend_left = long_twigs[0] == 1
        extend_right = long_twigs[-1] == 1

    counts = ([1] if extend_left else []) + legs + ([1] if extend_right else [])
    if any(count == 0 for count in counts):
        raise _not_a_caterpillar(q, "spine vertex without a leg")
    return _oriented(Composition(tuple(q * p + 1 for p in counts)))


# ----------------------------------------------------------------------------
# Recognizers
# ----------------------------------------------------------------------------

def _leg_counts(t: Tree, spine: Sequence[int], q: int) -> Optional[List[int]]:
    """Legs per spine vertex if every off-spine branch is a pendant path of q vertices."""
    on_spine = set(spine)
    counts: List[int] = []
    for s in spine:
        legs = 0
        for w in t.neighbours(s):
            if w in on_spine:
                continue
            previous, current, length = s, w, 1
            while t.degree(current) == 2:
                following = next(x for x in t.neighbours(current) if x != previous)
                previous, current = current, following
                length += 1
            if t.degree(current) != 1 or length != q:
                return None
            legs += 1
        if legs == 0:
            return None
        counts.append(legs)
    return counts


def structural_spine(t: Tree, q: int) -> Optional[Composition]:
    """
    Search every path u..v of t for a valid spine.

    Returns:
        The composition read along the first spine found (oriented), or None
    """
    if q < 1:
        return None
    for u in t.vertices:
        parent = [-1] * t.order
        parent[u] = u
        queue = [u]
        for v in queue:
            for w in t.neighbours(v):
                if parent[w] < 0:
                    parent[w] = v
                    queue.append(w)
        for v in range(u, t.order):
            spine = [v]
            while spine[-1] != u:
                spine.append(parent[spine[-1]])
            counts = _leg_counts(t, spine, q)
            if counts is not None:
                return _oriented(Composition(tuple(q * p + 1 for p in counts)))
    return None


def is_proper_q_caterpillar_structural(t: Tree, q: int) -> bool:
    return structural_spine(t, q) is not None


def caterpillar_conditions(t: Tree, q: int) -> Dict[str, bool]:
    """
    Evaluate the three trunk conditions for a tree that is not a path.

    Returns:
        {"trunk_order": ..., "twigs": ..., "diameter": ...}

    Raises:
        NoTrunkError: t is a path
    """
    core = trunk(t)
    degrees = degree_sequence(t)
    twig_set = twigs(t)
    long_count = twig_set.multiplicity(q + 1)
    return {
        "trunk_order": len(core) == t.order - degrees.count(1) - degrees.count(2),
        "twigs": set(twig_set.lengths()) <= {q, q + 1} and long_count <= 2,
        "diameter": diameter(t) == (len(core) - 1) + 2 * q + long_count,
    }


def is_proper_q_caterpillar_prop1(t: Tree, q: int) -> bool:
    if q < 1:
        return False
    if tree_is_path(t):
        return t.order in (q + 1, 2 * q + 1, 2 * q + 2)
    return all(caterpillar_conditions(t, q).values())


# ----------------------------------------------------------------------------
# Enumeration and instance checks
# ----------------------------------------------------------------------------

def enumerate_proper_q_caterpillars(
    q: int,
    max_order: int,
    max_bound: int = MAX_COMPOSITION_WEIGHT,
) -> Iterator[Tuple[Composition, Tree]]:
    """
    Every qualifying composition of every order up to max_order with its τ.

    Raises:
        ValidationError: q < 2 or max_order < 1
        BoundExceededError: max_order > max_bound
    """
    validate_q(q)
    if max_order < 1:
        raise ValidationError(f"max_order must be positive, got {max_order}")
    if max_order > max_bound:
        raise BoundExceededError("max order", max_order, max_bound)

    def _stream() -> Iterator[Tuple[Composition, Tree]]:
        for order in range(q + 1, max_order + 1):
            for composition in qualifying_compositions(order, q, max_bound):
                yield composition, tau(composition, q)

    return _stream()


def verify_lemma3(t: Tree, q: int) -> bool:
    """
    Compare U_T with x_1..x_q set to zero against L(φ(T)).

    Raises:
        NotAProperQCaterpillarError: t is not a proper q-caterpillar
    """
    composition = phi(t, q)
    return restrict_min_part(upoly_tree_dp(t), q) == l_polynomial(composition)


def lemma4_certificate(composition: Composition, q: int) -> Tuple[Composition, int, int]:
    """
    Split a caterpillar composition as ε ∘ (d) with d the part-gcd.

    Returns:
        (ε, d, h) where h·d ≡ 1 (mod q), so every part of ε is ≡ h (mod q)
    """
    validate_q(q)
    divisor = reduce(gcd, composition.parts)
    epsilon = Composition(tuple(part // divisor for part in composition.parts))
    return epsilon, divisor, pow(divisor, -1, q)
