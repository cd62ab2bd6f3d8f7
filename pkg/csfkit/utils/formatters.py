"""Formatting utility functions"""
from typing import Any, Dict, Iterable

from csfkit.models.polynomial import Partition, SparsePolynomial, TruncatedMonomialPolynomial
from csfkit.models.tree import Tree, TwigMultiset
from csfkit.utils.errors import ValidationError


def format_polynomial(p: SparsePolynomial) -> str:
    """
    Format a partition-indexed polynomial

    Args:
        p: Polynomial to format

    Returns:
        Terms as ``c*[a,b,c]`` joined by `` + ``, ascending lexicographic
        order of the part sequences; ``0`` for the empty polynomial
    """
    if p.is_zero():
        return "0"
    return " + ".join(f"{coeff}*{partition}" for partition, coeff in p.items())


def format_truncated_polynomial(p: TruncatedMonomialPolynomial) -> str:
    """Terms as ``c*x^(e1,...,em)``, largest exponent vector first."""
    if not len(p):
        return "0"
    return " + ".join(
        f"{coeff}*x^(" + ",".join(str(e) for e in exponents) + ")"
        for exponents, coeff in p.items()
    )


def polynomial_to_json(p: SparsePolynomial) -> Dict[str, Any]:
    """JSON terms, largest partition first."""
    return {
        "terms": [
            {"partition": list(partition.parts), "coeff": coeff}
            for partition, coeff in reversed(p.items())
        ]
    }


def polynomial_from_json(payload: Dict[str, Any]) -> SparsePolynomial:
    """Repeated partitions are summed."""
    totals: Dict[Partition, int] = {}
    try:
        for term in payload["terms"]:
            partition = Partition.of(term["partition"])
            totals[partition] = totals.get(partition, 0) + int(term["coeff"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed polynomial JSON: {exc}")
    return SparsePolynomial(totals)


def truncated_polynomial_to_json(p: TruncatedMonomialPolynomial) -> Dict[str, Any]:
    return {
        "colors": p.num_colors,
        "terms": [{"exponents": list(e), "coeff": c} for e, c in p.items()],
    }


def format_tree(t: Tree) -> str:
    """Tree text format: ``n; u1-v1, u2-v2, ...``"""
    edges = ", ".join(f"{u}-{v}" for u, v in t.edges)
    return f"{t.order}; {edges}" if edges else f"{t.order};"


def format_twigs(multiset: TwigMultiset) -> str:
    """Twig multiset as ``{length:count, ...}``"""
    return "{" + ", ".join(f"{length}:{count}" for length, count in multiset.counts) + "}"


def format_int_sequence(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)
