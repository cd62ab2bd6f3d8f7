"""Chromatic symmetric function of a tree.

The power-sum expansion sums (-1)^|F| p_λ[F] over all edge subsets F, where
λ[F] lists the component orders of the spanning subgraph (V, F). The
finite-colour form counts proper colourings by content and is only used as a
cross-check at small orders.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Any, Dict, Iterable, Tuple

import sympy

from csfkit.config.constants import (
    DEFAULT_SUBSET_CHUNK_SIZE,
    ERROR_MSG_EDGE_NOT_IN_TREE,
    ERROR_MSG_WEIGHT_MISMATCH,
    LOG_MSG_WORKERS,
    MAX_COLORING_ORDER,
    MAX_COLORS,
    MAX_SUBSET_ENUMERATION_ORDER,
)
from csfkit.core.union_find import UnionFind
from csfkit.models.polynomial import (
    Partition,
    SparsePolynomial,
    TruncatedMonomialPolynomial,
)
from csfkit.models.tree import Edge, Tree
from csfkit.utils.errors import (
    BoundExceededError,
    EdgeNotInTreeError,
    ValidationError,
    WeightMismatchError,
)
from csfkit.utils.formatters import (
    format_polynomial,
    polynomial_from_json,
    polynomial_to_json,
)

logger = logging.getLogger(__name__)

RawCounts = Dict[Tuple[int, ...], int]


def components_partition(t: Tree, f: Iterable[Edge]) -> Partition:
    """
    Partition of t.order given by the component orders of (V, f).

    Raises:
        EdgeNotInTreeError: Some pair in f is not an edge of t
    """
    components = UnionFind(t.order)
    for u, v in f:
        if not t.has_edge(u, v):
            raise EdgeNotInTreeError(
                ERROR_MSG_EDGE_NOT_IN_TREE.format(edge=f"{u}-{v}"),
                details={"edge": [u, v]}
            )
        components.union(u, v)
    return Partition(components.component_sizes())


def _count_subset_range(
    order: int,
    edges: Tuple[Edge, ...],
    start: int,
    stop: int,
    signed: bool,
) -> RawCounts:
    counts: RawCounts = {}
    for mask in range(start, stop):
        components = UnionFind(order)
        index = 0
        bits = mask
        while bits:
            if bits & 1:
                u, v = edges[index]
                components.union(u, v)
            bits >>= 1
            index += 1
        key = components.component_sizes()
        step = -1 if signed and bin(mask).count("1") & 1 else 1
        counts[key] = counts.get(key, 0) + step
    return counts


def subset_partition_counts(
    t: Tree,
    signed: bool,
    workers: int = 1,
    chunk_size: int = DEFAULT_SUBSET_CHUNK_SIZE,
) -> RawCounts:
    """
    Sum ±1 over all edge subsets F, keyed by λ[F].

    The subset range (a binary counter over t.edges) is cut into chunks; chunks
    may run on a thread pool and their partial maps are summed, which does not
    depend on completion order.

    Args:
        t: Tree
        signed: Weight each subset by (-1)^|F| instead of 1
        workers: Thread count for the chunks
        chunk_size: Subsets per chunk

    Returns:
        Map from decreasing part tuple to coefficient (zeros possible)
    """
    total = 1 << len(t.edges)
    chunk_size = max(1, chunk_size)
    ranges = [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]

    if workers <= 1 or len(ranges) == 1:
        partials = [_count_subset_range(t.order, t.edges, lo, hi, signed) for lo, hi in ranges]
    else:
        worker_count = max(1, min(workers, len(ranges)))
        logger.debug(LOG_MSG_WORKERS.format(workers=worker_count, items=len(ranges)))
        with ThreadPoolExecutor(max_workers=worker_count) as executor:
            partials = list(executor.map(
                lambda bounds: _count_subset_range(t.order, t.edges, bounds[0], bounds[1], signed),
                ranges,
            ))

    merged: RawCounts = {}
    for partial in partials:
        for key, coeff in partial.items():
            merged[key] = merged.get(key, 0) + coeff
    return merged


def csf_power_sum(
    t: Tree,
    max_order: int = MAX_SUBSET_ENUMERATION_ORDER,
    workers: int = 1,
) -> SparsePolynomial:
    """
    Chromatic symmetric function in the power-sum basis; key λ stands for p_λ.

    Raises:
        BoundExceededError: t.order > max_order
    """
    if t.order > max_order:
        raise BoundExceededError("tree order", t.order, max_order)
    return SparsePolynomial.from_raw(subset_partition_counts(t, signed=True, workers=workers))


def csf_by_colorings(
    t: Tree,
    num_colors: int,
    max_order: int = MAX_COLORING_ORDER,
) -> TruncatedMonomialPolynomial:
    """
    Count proper colourings V -> {1..m} by content.

    Raises:
        ValidationError: num_colors < 1
        BoundExceededError: Order or colour count above the brute-force bounds
    """
    if num_colors < 1:
        raise ValidationError(f"colour count must be at least 1, got {num_colors}")
    if num_colors > MAX_COLORS:
        raise BoundExceededError("colour count", num_colors, MAX_COLORS)
    if t.order > max_order:
        raise BoundExceededError("tree order", t.order, max_order)

    counts: Dict[Tuple[int, ...], int] = {}
    for coloring in product(range(num_colors), repeat=t.order):
        if any(coloring[u] == coloring[v] for u, v in t.edges):
            continue
        content = [0] * num_colors
        for color in coloring:
            content[color] += 1
        key = tuple(content)
        counts[key] = counts.get(key, 0) + 1
    return TruncatedMonomialPolynomial(num_colors, counts)


def power_sum_to_monomials(p: SparsePolynomial, num_colors: int) -> TruncatedMonomialPolynomial:
    """Expand Σ c_λ p_λ in the variables x_1..x_m."""
    if num_colors < 1:
        raise ValidationError(f"colour count must be at least 1, got {num_colors}")
    if num_colors > MAX_COLORS:
        raise BoundExceededError("colour count", num_colors, MAX_COLORS)

    variables = sympy.symbols(f"x1:{num_colors + 1}")
    power_sums: Dict[int, sympy.Expr] = {}

    def power_sum(k: int) -> sympy.Expr:
        if k not in power_sums:
            power_sums[k] = sympy.Add(*[x ** k for x in variables])
        return power_sums[k]

    expression = sympy.Integer(0)
    for partition, coeff in p.items():
        term = sympy.Integer(coeff)
        for part in partition.parts:
            term *= power_sum(part)
        expression += term

    expanded = sympy.expand(expression)
    if expanded == 0:
        return TruncatedMonomialPolynomial(num_colors)
    monomials = sympy.Poly(expanded, *variables).as_dict()
    return TruncatedMonomialPolynomial(
        num_colors,
        {tuple(exponents): int(coeff) for exponents, coeff in monomials.items()},
    )


def csf_from_upoly(u: SparsePolynomial, order: int) -> SparsePolynomial:
    """
    Map x_λ with coefficient c to p_λ with c·(-1)^len(λ)·(-1)^order.

    Raises:
        WeightMismatchError: A key does not have weight ``order``
    """
    converted: Dict[Partition, int] = {}
    for partition, coeff in u.items():
        if partition.weight != order:
            raise WeightMismatchError(
                ERROR_MSG_WEIGHT_MISMATCH.format(
                    partition=partition, weight=partition.weight, order=order
                ),
                details={"partition": list(partition.parts), "order": order}
            )
        sign = -1 if (partition.length + order) % 2 else 1
        converted[partition] = sign * coeff
    return SparsePolynomial(converted)


def poly_add(a: SparsePolynomial, b: SparsePolynomial) -> SparsePolynomial:
    return a + b


def poly_negate(p: SparsePolynomial) -> SparsePolynomial:
    return -p


def poly_equal(a: SparsePolynomial, b: SparsePolynomial) -> bool:
    return a == b


def poly_serialize(p: SparsePolynomial) -> str:
    return format_polynomial(p)


def poly_scale(p: SparsePolynomial, factor: int) -> SparsePolynomial:
    return p.scale(factor)


def poly_multiply(a: SparsePolynomial, b: SparsePolynomial) -> SparsePolynomial:
    """Product with x_λ · x_μ = x_(λ ∪ μ)."""
    return a * b


def poly_to_json(p: SparsePolynomial) -> Dict[str, Any]:
    return polynomial_to_json(p)


def poly_from_json(payload: Dict[str, Any]) -> SparsePolynomial:
    return polynomial_from_json(payload)
