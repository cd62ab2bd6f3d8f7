"""Enumeration of non-isomorphic free trees.

Small orders use every Prüfer sequence with canonical-code deduplication.
Larger orders grow each class of order n-1 by one leaf at every vertex and
dedup the results the same way; every tree of order n arises from some tree
of order n-1 by adding a leaf, so nothing is missed.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, Tuple

from csfkit.config.constants import LOG_MSG_ENUMERATION, PRUFER_ENUMERATION_MAX_ORDER
from csfkit.core.trees import (
    canonical_code,
    prufer_decode,
    tree_from_canonical_code,
    tree_from_edges,
)
from csfkit.models.tree import Tree, normalize_edges
from csfkit.utils.errors import ValidationError

logger = logging.getLogger(__name__)


def _check_order(order: int) -> None:
    if order < 1:
        raise ValidationError(f"tree order must be positive, got {order}")


def enumerate_trees_prufer(order: int) -> Iterator[Tree]:
    """
    Yield one canonical representative per class, in discovery order.

    Walks all order^(order-2) labelled trees, so it is only practical for small
    orders; it is kept as an independent oracle for the growth method.
    """
    _check_order(order)
    if order <= 2:
        yield tree_from_edges(order, [(0, 1)] if order == 2 else [])
        return
    seen = set()
    for sequence in product(range(order), repeat=order - 2):
        candidate = Tree(order, normalize_edges(prufer_decode(sequence)))
        code = canonical_code(candidate).code
        if code not in seen:
            seen.add(code)
            yield tree_from_canonical_code(code)


@lru_cache(maxsize=None)
def _classes_by_order(order: int) -> Tuple[Tree, ...]:
    if order <= PRUFER_ENUMERATION_MAX_ORDER:
        found: Dict[str, Tree] = {
            canonical_code(t).code: t for t in enumerate_trees_prufer(order)
        }
    else:
        found = {}
        new_vertex = order - 1
        for smaller in _classes_by_order(order - 1):
            for v in smaller.vertices:
                grown = Tree(order, normalize_edges(smaller.edges + ((v, new_vertex),)))
                code = canonical_code(grown).code
                if code not in found:
                    found[code] = tree_from_canonical_code(code)
    logger.debug(LOG_MSG_ENUMERATION.format(order=order, count=len(found)))
    return tuple(found[code] for code in sorted(found))


def enumerate_trees(order: int) -> Iterator[Tree]:
    """
    Stream one tree per isomorphism class of the given order.

    Trees are labelled by their canonical code (preorder) and come out sorted by
    code, so the stream is the same whichever generation method produced it.
    """
    _check_order(order)
    return iter(_classes_by_order(order))


def count_trees(order: int) -> int:
    _check_order(order)
    return len(_classes_by_order(order))
