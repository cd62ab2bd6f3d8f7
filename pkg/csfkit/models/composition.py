"""Integer composition data models."""
from dataclasses import dataclass
from typing import Tuple

from csfkit.utils.errors import ValidationError


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered sequence of positive integers.

    Ordering is lexicographic on ``parts``.

    Attributes:
        parts: Nonempty tuple of positive integers
    """
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValidationError("a composition needs at least one part")
        if any((not isinstance(p, int)) or p < 1 for p in self.parts):
            raise ValidationError(
                f"composition parts must be positive integers: {list(self.parts)}"
            )

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def ones(cls, count: int) -> "Composition":
        return cls((1,) * count)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_identity(self) -> bool:
        return self.parts == (1,)

    @property
    def is_all_ones(self) -> bool:
        return all(p == 1 for p in self.parts)

    @property
    def is_palindrome(self) -> bool:
        return self.parts == self.parts[::-1]

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Factorization:
    """Irreducible factorization in normal form.

    Attributes:
        factors: Irreducible factors, composed left to right
    """
    factors: Tuple[Composition, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " o ".join(str(f) for f in self.factors)
