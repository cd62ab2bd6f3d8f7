"""Partition-indexed polynomial models.

A ``SparsePolynomial`` maps partitions to exact integer coefficients. The same
type carries power-sum expansions (key λ stands for p_λ) and the x_λ monomials
of U- and L-polynomials; the meaning of a key is fixed by the operation that
produced it.
"""
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from csfkit.config.constants import (
    INT64_MIN,
    INT64_MAX,
    ERROR_MSG_COEFFICIENT_OVERFLOW,
)
from csfkit.utils.errors import CoefficientOverflowError, ValidationError


def check_coefficient(value: int) -> int:
    """Return value unchanged, or raise if it leaves the signed 64-bit range."""
    if value < INT64_MIN or value > INT64_MAX:
        raise CoefficientOverflowError(
            ERROR_MSG_COEFFICIENT_OVERFLOW.format(value=value),
            details={"value": str(value)}
        )
    return value


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Ordering compares the part sequences lexicographically.

    Attributes:
        parts: Parts in weakly decreasing order
    """
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValidationError("a partition needs at least one part")
        for current, following in zip(self.parts, self.parts[1:]):
            if current < following:
                raise ValidationError(
                    f"partition parts must be weakly decreasing: {list(self.parts)}"
                )
        if self.parts[-1] < 1:
            raise ValidationError(f"partition parts must be positive: {list(self.parts)}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


Key = Union[Partition, Tuple[int, ...]]


def _as_partition(key: Key) -> Partition:
    return key if isinstance(key, Partition) else Partition.of(key)


def merge_parts(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Multiset union of two decreasing part tuples, kept decreasing."""
    return tuple(sorted(a + b, reverse=True))


class SparsePolynomial:
    """Exact-integer polynomial indexed by partitions; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Key, int]] = None):
        clean: Dict[Partition, int] = {}
        for key, coeff in (terms or {}).items():
            partition = _as_partition(key)
            total = clean.get(partition, 0) + coeff
            if total:
                clean[partition] = check_coefficient(total)
            else:
                clean.pop(partition, None)
        self._terms = clean

    @classmethod
    def from_raw(cls, raw: Mapping[Tuple[int, ...], int]) -> "SparsePolynomial":
        """Build from decreasing part tuples, the working form used by the kernels."""
        poly = cls()
        poly._terms = {
            Partition(parts): check_coefficient(coeff)
            for parts, coeff in raw.items()
            if coeff
        }
        return poly

    @property
    def terms(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, key: Key) -> int:
        return self._terms.get(_as_partition(key), 0)

    def items(self) -> List[Tuple[Partition, int]]:
        """Terms in serialization order (ascending lexicographic on parts)."""
        return sorted(self._terms.items())

    def raw(self) -> Dict[Tuple[int, ...], int]:
        return {partition.parts: coeff for partition, coeff in self._terms.items()}

    def total_mass(self) -> int:
        return sum(self._terms.values())

    def weights(self) -> frozenset:
        return frozenset(partition.weight for partition in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._terms))

    def __contains__(self, key: Key) -> bool:
        return _as_partition(key) in self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        merged = dict(self._terms)
        for partition, coeff in other._terms.items():
            merged[partition] = merged.get(partition, 0) + coeff
        return SparsePolynomial(merged)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "SparsePolynomial":
        return SparsePolynomial({p: c * factor for p, c in self._terms.items()})

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if isinstance(other, int):
            return self.scale(other)
        product: Dict[Tuple[int, ...], int] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                key = merge_parts(left.parts, right.parts)
                product[key] = product.get(key, 0) + a * b
        return SparsePolynomial.from_raw(product)

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {c}" for p, c in self.items())
        return f"SparsePolynomial({{{body}}})"


class TruncatedMonomialPolynomial:
    """Polynomial in finitely many colour variables x_1..x_m.

    Keys are exponent vectors of length ``num_colors``.
    """

    __slots__ = ("num_colors", "_terms")

    def __init__(self, num_colors: int, terms: Optional[Mapping[Tuple[int, ...], int]] = None):
        self.num_colors = num_colors
        clean: Dict[Tuple[int, ...], int] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != num_colors:
                raise ValidationError(
                    f"exponent vector {list(exponents)} does not have {num_colors} entries"
                )
            total = clean.get(exponents, 0) + coeff
            if total:
                clean[exponents] = check_coefficient(total)
            else:
                clean.pop(exponents, None)
        self._terms = clean

    @property
    def terms(self) -> Mapping[Tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def items(self) -> List[Tuple[Tuple[int, ...], int]]:
        """Terms sorted by exponent vector, largest first."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedMonomialPolynomial):
            return NotImplemented
        return self.num_colors == other.num_colors and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.num_colors, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TruncatedMonomialPolynomial({self.num_colors}, {dict(self.items())})"
