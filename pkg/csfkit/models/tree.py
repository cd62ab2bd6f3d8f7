"""Tree data models."""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

Edge = Tuple[int, int]


def normalize_edges(edges: Iterable[Edge]) -> Tuple[Edge, ...]:
    """Store each edge as (min, max) and sort, so equal edge sets compare equal."""
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


@dataclass(frozen=True)
class Tree:
    """Tree on vertex labels 0..order-1.

    Instances are normally built by ``tree_from_edges`` which validates the edge
    list; the constructor itself trusts its input.

    Attributes:
        order: Number of vertices
        edges: Normalized, sorted edge tuple
    """
    order: int
    edges: Tuple[Edge, ...]
    _adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        neighbours: List[List[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        object.__setattr__(
            self, "_adjacency", tuple(tuple(sorted(n)) for n in neighbours)
        )

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._adjacency[vertex])

    @property
    def vertices(self) -> range:
        return range(self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and v in self._adjacency[u]


@dataclass(frozen=True)
class CanonicalCode:
    """AHU balanced-parenthesis code of a tree rooted at its center.

    Attributes:
        code: Parenthesis string of length 2 * order
    """
    code: str

    def __str__(self) -> str:
        return self.code

    def __len__(self) -> int:
        return len(self.code)


@dataclass(frozen=True)
class DegreeSequence:
    """Multiset of vertex degrees.

    Attributes:
        degrees: Vertex degrees sorted in decreasing order
    """
    degrees: Tuple[int, ...]

    def count(self, degree: int) -> int:
        """Number of vertices of the given degree (δ_i)."""
        return sum(1 for d in self.degrees if d == degree)

    def counts(self) -> Tuple[int, ...]:
        """(δ_1, δ_2, ..., δ_maxdeg)"""
        if not self.degrees or self.degrees[0] == 0:
            return ()
        histogram = Counter(self.degrees)
        return tuple(histogram.get(i, 0) for i in range(1, self.degrees[0] + 1))


@dataclass(frozen=True)
class TwigMultiset:
    """Multiset of twig lengths.

    Attributes:
        counts: (length, multiplicity) pairs sorted by length
    """
    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "TwigMultiset":
        return cls(tuple(sorted(Counter(lengths).items())))

    def multiplicity(self, length: int) -> int:
        for twig_length, mult in self.counts:
            if twig_length == length:
                return mult
        return 0

    def lengths(self) -> Tuple[int, ...]:
        return tuple(length for length, _ in self.counts)

    @property
    def total_length(self) -> int:
        return sum(length * mult for length, mult in self.counts)

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)
