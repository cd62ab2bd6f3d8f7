"""Proper q-caterpillar data model."""
from dataclasses import dataclass
from typing import Tuple

from csfkit.config.constants import ERROR_MSG_BAD_COMPOSITION
from csfkit.models.composition import Composition
from csfkit.utils.errors import BadCompositionError, ValidationError


@dataclass(frozen=True)
class CaterpillarSpec:
    """Spine description of a proper q-caterpillar.

    Attributes:
        q: Leg length (at least 1)
        spine_counts: Number of legs glued at each spine vertex, in spine order
    """
    q: int
    spine_counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValidationError(f"leg length q must be at least 1, got {self.q}")
        if not self.spine_counts or any(p < 1 for p in self.spine_counts):
            raise ValidationError(
                f"every spine vertex needs at least one leg: {list(self.spine_counts)}"
            )

    @classmethod
    def from_composition(cls, composition: Composition, q: int) -> "CaterpillarSpec":
        """Inverse of ``composition``; parts must be > 1 and ≡ 1 (mod q)."""
        counts = []
        for part in composition.parts:
            if part <= 1 or (part - 1) % q:
                raise BadCompositionError(
                    ERROR_MSG_BAD_COMPOSITION.format(
                        composition=composition, q=q, detail=f"part {part}"
                    ),
                    details={"composition": list(composition.parts), "q": q, "part": part}
                )
            counts.append((part - 1) // q)
        return cls(q, tuple(counts))

    @property
    def composition(self) -> Composition:
        return Composition(tuple(self.q * p + 1 for p in self.spine_counts))

    @property
    def spine_length(self) -> int:
        return len(self.spine_counts)

    @property
    def order(self) -> int:
        return sum(self.q * p + 1 for p in self.spine_counts)
