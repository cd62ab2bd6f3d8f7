"""The composition monoid and L-polynomials.

Product: α ∘ β = β^{⊙α_1} · β^{⊙α_2} · ... · β^{⊙α_r}, where · concatenates and
⊙ concatenates while adding the two adjoining parts. (1) is the identity.

A factorization α = ε ∘ η is trivial when ε or η is (1), when both have length
one, or when both consist only of ones. Every composition other than (1) has a
unique factorization into irreducibles with no trivial adjacent pair, and two
compositions have the same L-polynomial exactly when one is obtained from the
other by reversing some of those factors in place.
"""

import logging
import random
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from csfkit.config.constants import (
    ERROR_MSG_BAD_EXPONENT,
    ERROR_MSG_IDENTITY_COMPOSITION,
    MAX_COMPOSITION_WEIGHT,
    MAX_L_POLYNOMIAL_LENGTH,
)
from csfkit.models.composition import Composition, Factorization
from csfkit.models.polynomial import SparsePolynomial, merge_parts
from csfkit.utils.errors import (
    BadExponentError,
    BoundExceededError,
    HypothesisViolatedError,
    IdentityCompositionError,
    ValidationError,
)

logger = logging.getLogger(__name__)

IDENTITY = Composition((1,))


# ----------------------------------------------------------------------------
# Monoid operations
# ----------------------------------------------------------------------------

def concat(a: Composition, b: Composition) -> Composition:
    return Composition(a.parts + b.parts)


def near_concat(a: Composition, b: Composition) -> Composition:
    return Composition(a.parts[:-1] + (a.parts[-1] + b.parts[0],) + b.parts[1:])


def near_concat_power(a: Composition, k: int) -> Composition:
    """
    k-fold near-concatenation of a with itself.

    Raises:
        BadExponentError: k < 1
    """
    if k < 1:
        raise BadExponentError(ERROR_MSG_BAD_EXPONENT.format(k=k), details={"k": k})
    if a.length == 1:
        return Composition((k * a.parts[0],))
    inner = a.parts[1:-1]
    joint = a.parts[-1] + a.parts[0]
    parts: List[int] = list(a.parts[:-1])
    for _ in range(k - 1):
        parts.append(joint)
        parts.extend(inner)
    parts.append(a.parts[-1])
    return Composition(tuple(parts))


def compose(a: Composition, b: Composition) -> Composition:
    parts: Tuple[int, ...] = ()
    for exponent in a.parts:
        parts += near_concat_power(b, exponent).parts
    return Composition(parts)


def compose_all(factors) -> Composition:
    """Left-to-right product of a nonempty sequence of compositions."""
    return reduce(compose, factors)


def reverse(a: Composition) -> Composition:
    return Composition(a.parts[::-1])


# ----------------------------------------------------------------------------
# Refinement and L-polynomials
# ----------------------------------------------------------------------------

def coarsenings(a: Composition) -> Iterator[Composition]:
    """
    All 2^(ℓ-1) coarsenings of a, lexicographically ascending.

    The first part runs over the prefix sums in increasing order and the rest
    recurses, which yields lexicographic order.
    """
    def _from(start: int) -> Iterator[Tuple[int, ...]]:
        if start == a.length:
            yield ()
            return
        head = 0
        for stop in range(start, a.length):
            head += a.parts[stop]
            for tail in _from(stop + 1):
                yield (head,) + tail

    for parts in _from(0):
        yield Composition(parts)


def refines(a: Composition, b: Composition) -> bool:
    """True iff b is obtained from a by merging runs of consecutive parts."""
    if a.weight != b.weight:
        return False
    index = 0
    for target in b.parts:
        running = 0
        while running < target:
            running += a.parts[index]
            index += 1
        if running != target:
            return False
    return index == a.length


def l_polynomial(a: Composition, max_length: int = MAX_L_POLYNOMIAL_LENGTH) -> SparsePolynomial:
    """
    Σ over coarsenings β of a of x_{β_1} x_{β_2} ...

    Computed by a prefix dynamic program: the coarsenings of a_1..a_i are the
    coarsenings of a_1..a_j followed by the merged block a_{j+1}..a_i.

    Raises:
        BoundExceededError: ℓ(a) > max_length
    """
    if a.length > max_length:
        raise BoundExceededError("composition length", a.length, max_length)
    prefix: List[int] = [0]
    for part in a.parts:
        prefix.append(prefix[-1] + part)

    table: List[Dict[Tuple[int, ...], int]] = [{(): 1}]
    for i in range(1, a.length + 1):
        row: Dict[Tuple[int, ...], int] = {}
        for j in range(i):
            block = (prefix[i] - prefix[j],)
            for key, coeff in table[j].items():
                grown = merge_parts(key, block)
                row[grown] = row.get(grown, 0) + coeff
        table.append(row)
    return SparsePolynomial.from_raw(table[a.length])


# ----------------------------------------------------------------------------
# Factorization
# ----------------------------------------------------------------------------

def is_trivial_factorization(e: Composition, h: Composition) -> bool:
    return (
        e.is_identity
        or h.is_identity
        or (e.length == 1 and h.length == 1)
        or (e.is_all_ones and h.is_all_ones)
    )


def _parse_blocks(parts: Tuple[int, ...], eta: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Read parts as η^{⊙k_1}·η^{⊙k_2}·..., returning (k_1, k_2, ...) or None."""
    size = len(eta)
    if size == 1:
        step = eta[0]
        if any(part % step for part in parts):
            return None
        return tuple(part // step for part in parts)

    head = eta[:-1]
    inner = eta[1:-1]
    last = eta[-1]
    joint = last + eta[0]
    exponents: List[int] = []
    position = 0
    total = len(parts)
    while position < total:
        if parts[position:position + size - 1] != head:
            return None
        position += size - 1
        count = 1
        while True:
            if position >= total:
                return None
            value = parts[position]
            position += 1
            if value == last:
                break
            if value != joint:
                return None
            if parts[position:position + size - 2] != inner:
                return None
            position += size - 2
            count += 1
        exponents.append(count)
    return tuple(exponents)


def factor_once(a: Composition) -> List[Tuple[Composition, Composition]]:
    """
    Every non-trivial pair (ε, η) with ε ∘ η = a.

    The first block of any product starts with η's parts except the last, so
    η = (a_1, ..., a_{m-1}, t) for some m and some t <= a_m; each candidate
    fixes ε through a deterministic left-to-right parse. Pairs come out ordered
    by (m, t) and each is re-checked by recomposition.
    """
    pairs: List[Tuple[Composition, Composition]] = []
    weight = a.weight
    for m in range(1, a.length + 1):
        prefix = a.parts[:m - 1]
        prefix_weight = sum(prefix)
        for t in range(1, a.parts[m - 1] + 1):
            if weight % (prefix_weight + t):
                continue
            eta = prefix + (t,)
            exponents = _parse_blocks(a.parts, eta)
            if exponents is None:
                continue
            e = Composition(exponents)
            h = Composition(eta)
            if is_trivial_factorization(e, h):
                continue
            if compose(e, h) != a:
                continue
            pairs.append((e, h))
    return pairs


@lru_cache(maxsize=4096)
def _split_deterministic(a: Composition) -> Tuple[Composition, ...]:
    pairs = factor_once(a)
    if not pairs:
        return (a,)
    e, h = pairs[0]
    return _split_deterministic(e) + _split_deterministic(h)


def _split_random(a: Composition, rng: random.Random) -> Tuple[Composition, ...]:
    pairs = factor_once(a)
    if not pairs:
        return (a,)
    e, h = rng.choice(pairs)
    return _split_random(e, rng) + _split_random(h, rng)


def _normalize(factors: List[Composition]) -> Tuple[Composition, ...]:
    """Merge adjacent trivial pairs and drop (1) until nothing changes."""
    changed = True
    while changed:
        changed = False
        kept = [f for f in factors if not f.is_identity]
        if len(kept) != len(factors):
            changed = True
        factors = kept
        for i in range(len(factors) - 1):
            left, right = factors[i], factors[i + 1]
            if left.is_all_ones and right.is_all_ones:
                merged = Composition.ones(left.length * right.length)
            elif left.length == 1 and right.length == 1:
                merged = Composition((left.parts[0] * right.parts[0],))
            else:
                continue
            factors = factors[:i] + [merged] + factors[i + 2:]
            changed = True
            break
    return tuple(factors)


def irreducible_factorization(a: Composition, rng: Optional[random.Random] = None) -> Factorization:
    """
    Unique irreducible factorization of a.

    Args:
        a: Composition other than (1)
        rng: When given, the split at each step is chosen at random among the
            non-trivial pairs; the normal form does not depend on it

    Raises:
        IdentityCompositionError: a = (1)
    """
    if a.is_identity:
        raise IdentityCompositionError(ERROR_MSG_IDENTITY_COMPOSITION)
    pieces = _split_random(a, rng) if rng is not None else _split_deterministic(a)
    return Factorization(_normalize(list(pieces)))


def l_equivalence_class(a: Composition) -> FrozenSet[Composition]:
    """
    All compositions with the same L-polynomial as a.

    Factors are reversed independently and never permuted.

    Raises:
        IdentityCompositionError: a = (1)
    """
    factorization = irreducible_factorization(a)
    choices = [
        (factor,) if factor.is_palindrome else (factor, reverse(factor))
        for factor in factorization.factors
    ]
    return frozenset(compose_all(choice) for choice in product(*choices))


# ----------------------------------------------------------------------------
# Streams and the modular factorization shape
# ----------------------------------------------------------------------------

def compositions_of(n: int, max_weight: int = MAX_COMPOSITION_WEIGHT) -> Iterator[Composition]:
    """
    All 2^(n-1) compositions of n in lexicographic order.

    Raises:
        ValidationError: n < 1
        BoundExceededError: n > max_weight
    """
    return _restricted_compositions(n, 1, 1, max_weight)


def qualifying_compositions(n: int, q: int, max_weight: int = MAX_COMPOSITION_WEIGHT) -> Iterator[Composition]:
    """Compositions of n with every part >= q+1 and ≡ 1 (mod q), lexicographic."""
    if q < 1:
        raise ValidationError(f"q must be at least 1, got {q}")
    return _restricted_compositions(n, q + 1, q, max_weight)


def _restricted_compositions(n: int, smallest: int, step: int, max_weight: int) -> Iterator[Composition]:
    if n < 1:
        raise ValidationError(f"composition weight must be positive, got {n}")
    if n > max_weight:
        raise BoundExceededError("composition weight", n, max_weight)
    allowed = list(range(smallest, n + 1, step))

    def _build(remaining: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in allowed:
            if part > remaining:
                break
            for tail in _build(remaining - part):
                yield (part,) + tail

    def _stream() -> Iterator[Composition]:
        for parts in _build(n):
            yield Composition(parts)

    return _stream()


def check_lemma4_shape(g: Composition, h: int, q: int) -> bool:
    """
    Shape of the factorization of a composition with all parts ≡ h (mod q).

    With q ∤ h, parts ≡ h (mod q) and part-gcd 1, the irreducible factorization
    is a single factor or (1^m) ∘ ω with ω irreducible.

    Raises:
        HypothesisViolatedError: q < 2, q | h, a part ≢ h (mod q), or part-gcd > 1
    """
    if q < 2:
        raise HypothesisViolatedError(f"q must be at least 2, got {q}", details={"q": q})
    residue = h % q
    if residue == 0:
        raise HypothesisViolatedError(f"q={q} divides h={h}", details={"q": q, "h": h})
    for part in g.parts:
        if part % q != residue:
            raise HypothesisViolatedError(
                f"part {part} of {g} is not ≡ {residue} (mod {q})",
                details={"part": part, "h": residue, "q": q}
            )
    divisor = reduce(gcd, g.parts)
    if divisor != 1:
        raise HypothesisViolatedError(
            f"parts of {g} have gcd {divisor}", details={"gcd": divisor}
        )
    if g.is_identity:
        return True
    factors = irreducible_factorization(g).factors
    if len(factors) == 1:
        return True
    return len(factors) == 2 and factors[0].is_all_ones
