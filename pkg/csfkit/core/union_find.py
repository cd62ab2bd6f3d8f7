"""Disjoint-set forest used for spanning-subgraph component sizes."""
from typing import List, Tuple


class UnionFind:
    """Union by size with path halving over elements 0..n-1."""

    __slots__ = ("parents", "sizes", "num_sets")

    def __init__(self, num_elements: int):
        if num_elements < 0:
            raise ValueError("Number of elements must be non-negative")
        self.parents: List[int] = list(range(num_elements))
        self.sizes: List[int] = [1] * num_elements
        self.num_sets = num_elements

    def find(self, element: int) -> int:
        parents = self.parents
        while parents[element] != element:
            parents[element] = parents[parents[element]]
            element = parents[element]
        return element

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False when they were already joined."""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.sizes[root_a] < self.sizes[root_b]:
            root_a, root_b = root_b, root_a
        self.parents[root_b] = root_a
        self.sizes[root_a] += self.sizes[root_b]
        self.sizes[root_b] = 0
        self.num_sets -= 1
        return True

    def component_sizes(self) -> Tuple[int, ...]:
        """Sizes of all sets, largest first."""
        return tuple(sorted(
            (self.sizes[i] for i in range(len(self.parents)) if self.parents[i] == i),
            reverse=True,
        ))
