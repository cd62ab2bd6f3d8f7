"""Input parsing and validation functions"""
import re
from typing import List, Tuple

from csfkit.core.trees import tree_from_edges
from csfkit.models.composition import Composition
from csfkit.models.tree import Tree
from csfkit.utils.errors import ValidationError

_EDGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*-\s*(-?\d+)\s*$")


def parse_tree_spec(spec: str) -> Tree:
    """
    Parse the tree text format ``n; u1-v1, u2-v2, ...``

    Args:
        spec: Tree specification, e.g. ``"3;0-1,1-2"``

    Returns:
        Validated Tree

    Raises:
        ValidationError: Malformed text
        NotATreeError / BadLabelError: Edges do not describe a tree
    """
    if ";" not in spec:
        raise ValidationError(f"tree spec needs 'order; edges': {spec!r}")
    order_text, edges_text = spec.split(";", 1)
    try:
        order = int(order_text.strip())
    except ValueError:
        raise ValidationError(f"tree order must be an integer: {order_text.strip()!r}")

    edges: List[Tuple[int, int]] = []
    for chunk in edges_text.split(","):
        if not chunk.strip():
            continue
        match = _EDGE_PATTERN.match(chunk)
        if match is None:
            raise ValidationError(f"malformed edge {chunk.strip()!r}, expected 'u-v'")
        edges.append((int(match.group(1)), int(match.group(2))))
    return tree_from_edges(order, edges)


def parse_composition(text: str) -> Composition:
    """
    Parse a space-separated composition such as ``"4 10 4 10"``

    Raises:
        ValidationError: Empty input, non-integer or non-positive part
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValidationError("composition must have at least one part")
    try:
        parts = tuple(int(token) for token in tokens)
    except ValueError:
        raise ValidationError(f"composition parts must be integers: {text!r}")
    return Composition(parts)


def validate_q(q: int, minimum: int = 2) -> int:
    """
    Validate leg length q

    Returns:
        q unchanged

    Raises:
        ValidationError: q below the minimum
    """
    if q < minimum:
        raise ValidationError(f"q must be at least {minimum}, got {q}", details={"q": q})
    return q


def validate_positive(value: int, name: str) -> int:
    if value < 1:
        raise ValidationError(f"{name} must be positive, got {value}", details={name: value})
    return value
