"""Tests for the composition monoid, factorization and L-polynomials"""

import random
from collections import defaultdict
from itertools import product

import pytest

from csfkit.config import error_types
from csfkit.core.compositions import (
    IDENTITY,
    check_lemma4_shape,
    coarsenings,
    compose,
    compose_all,
    compositions_of,
    concat,
    factor_once,
    irreducible_factorization,
    is_trivial_factorization,
    l_equivalence_class,
    l_polynomial,
    near_concat,
    near_concat_power,
    qualifying_compositions,
    refines,
    reverse,
)
from csfkit.core.symmetric import poly_serialize
from csfkit.models.composition import Composition
from csfkit.utils.errors import (
    BadExponentError,
    BoundExceededError,
    HypothesisViolatedError,
    IdentityCompositionError,
    ValidationError,
)

C = Composition.of


def _all_up_to(weight):
    return [a for n in range(1, weight + 1) for a in compositions_of(n)]


def _brute_force_classes(n):
    """Group compositions of n by L-polynomial."""
    groups = defaultdict(set)
    for a in compositions_of(n):
        groups[poly_serialize(l_polynomial(a))].add(a)
    return {frozenset(group) for group in groups.values()}


class TestMonoidOperations:
    """Test concatenation, near-concatenation and the product"""

    def test_concat(self):
        """Test plain concatenation"""
        assert concat(C(2, 1), C(3)) == C(2, 1, 3)
        assert concat(C(1), C(1)) == C(1, 1)

    def test_near_concat(self):
        """Test the adjoining parts are added"""
        assert near_concat(C(2, 3), C(2, 3)) == C(2, 5, 3)
        assert near_concat(C(1), C(1)) == C(2)
        assert near_concat(C(4), C(7)) == C(11)

    def test_near_concat_power(self):
        """Test k-fold near-concatenation"""
        assert near_concat_power(C(2, 3), 2) == C(2, 5, 3)
        assert near_concat_power(C(2, 3), 1) == C(2, 3)
        assert near_concat_power(C(2), 5) == C(10)
        assert near_concat_power(C(1, 2), 3) == C(1, 3, 3, 2)
        assert near_concat_power(C(1, 4, 2), 2) == C(1, 4, 3, 4, 2)

    def test_near_concat_power_zero(self):
        """Test k = 0 is rejected"""
        with pytest.raises(BadExponentError) as excinfo:
            near_concat_power(C(2, 3), 0)
        assert excinfo.value.error_type == error_types.BAD_EXPONENT

    def test_compose_examples(self):
        """Test the worked products"""
        assert compose(C(2, 1), C(2, 3)) == C(2, 5, 3, 2, 3)
        assert compose(compose(C(1, 1), C(2, 5)), C(2)) == C(4, 10, 4, 10)
        assert compose_all([C(1, 1), C(2, 5), C(2)]) == C(4, 10, 4, 10)

    def test_identity(self):
        """Test (1) is a two-sided identity for weights <= 6"""
        for a in _all_up_to(6):
            assert compose(IDENTITY, a) == a
            assert compose(a, IDENTITY) == a

    def test_associativity(self):
        """Test exhaustive associativity for weights <= 4 and random triples up to 8"""
        small = _all_up_to(4)
        for a, b, c in product(small, repeat=3):
            assert compose(compose(a, b), c) == compose(a, compose(b, c))
        rng = random.Random(5)
        pool = _all_up_to(8)
        for _ in range(300):
            a, b, c = (rng.choice(pool) for _ in range(3))
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_not_commutative(self):
        """Test the product depends on the order"""
        assert compose(C(2, 1), C(2, 3)) != compose(C(2, 3), C(2, 1))

    def test_length_and_weight_laws(self):
        """Test weight(a∘b) = weight(a)·weight(b) and ℓ(a∘b) = weight(a)(ℓ(b)-1)+ℓ(a)"""
        pool = _all_up_to(5)
        for a, b in product(pool, repeat=2):
            product_ab = compose(a, b)
            assert product_ab.weight == a.weight * b.weight
            assert product_ab.length == a.weight * (b.length - 1) + a.length

    def test_reverse(self):
        """Test reversal is an involution"""
        assert reverse(C(2, 5)) == C(5, 2)
        assert reverse(C(3, 1, 3)) == C(3, 1, 3)
        for a in _all_up_to(6):
            assert reverse(reverse(a)) == a

    def test_reverse_distributes(self):
        """Test reverse(a∘b) = reverse(a)∘reverse(b) for weights <= 6"""
        pool = _all_up_to(6)
        for a, b in product(pool, repeat=2):
            assert reverse(compose(a, b)) == compose(reverse(a), reverse(b))


class TestRefinement:
    """Test coarsenings and the refinement order"""

    def test_coarsenings(self):
        """Test the coarsening stream is lexicographic"""
        assert list(coarsenings(C(2, 1))) == [C(2, 1), C(3)]
        assert list(coarsenings(C(1, 1, 1))) == [C(1, 1, 1), C(1, 2), C(2, 1), C(3)]

    def test_coarsening_count(self):
        """Test 2^(ℓ-1) coarsenings, all of them refined by the input"""
        a = C(2, 3, 1, 3, 2)
        found = list(coarsenings(a))
        assert len(found) == 16
        assert C(2, 4, 5) in found
        assert all(refines(a, b) for b in found)

    def test_refines(self):
        """Test refinement cases"""
        assert refines(C(2, 3, 1, 3, 2), C(2, 4, 5))
        assert refines(C(1, 2), C(1, 2))
        assert not refines(C(3), C(1, 2))
        assert not refines(C(1, 2), C(2, 1))
        assert not refines(C(1, 2), C(4))


class TestLPolynomial:
    """Test L-polynomials"""

    def test_worked_example(self):
        """Test L(2 2 1 2)"""
        assert poly_serialize(l_polynomial(C(2, 2, 1, 2))) == (
            "1*[2,2,2,1] + 2*[3,2,2] + 1*[4,2,1] + 1*[4,3] + 2*[5,2] + 1*[7]"
        )

    def test_small_cases(self):
        """Test single parts and (2, 1)"""
        assert poly_serialize(l_polynomial(C(6))) == "1*[6]"
        assert l_polynomial(C(2, 1)).raw() == {(2, 1): 1, (3,): 1}

    def test_mass_and_top_term(self):
        """Test coefficient mass and the coefficients of the coarsest and finest terms"""
        for a in _all_up_to(8):
            poly = l_polynomial(a)
            assert poly.total_mass() == 2 ** (a.length - 1)
            assert poly.coefficient((a.weight,)) == 1
            assert poly.coefficient(tuple(sorted(a.parts, reverse=True))) >= 1

    def test_reversal_invariance(self):
        """Test L(a) = L(reverse(a)) for weights <= 10"""
        for a in _all_up_to(10):
            assert l_polynomial(a) == l_polynomial(reverse(a))

    def test_length_bound(self):
        """Test the length bound"""
        with pytest.raises(BoundExceededError):
            l_polynomial(Composition.ones(31))
        with pytest.raises(BoundExceededError):
            l_polynomial(C(1, 1, 1), max_length=2)


class TestFactorization:
    """Test non-trivial factorizations and the irreducible normal form"""

    def test_trivial_cases(self):
        """Test the three trivial factorization cases"""
        assert is_trivial_factorization(C(1), C(2, 5))
        assert is_trivial_factorization(C(2, 5), C(1))
        assert is_trivial_factorization(C(3), C(4))
        assert is_trivial_factorization(C(1, 1), C(1, 1, 1))
        assert not is_trivial_factorization(C(1, 1), C(2, 5))

    def test_factor_once(self):
        """Test every returned pair recomposes"""
        pairs = factor_once(C(4, 10, 4, 10))
        assert pairs == [(C(2, 5, 2, 5), C(2)), (C(1, 1), C(4, 10))]
        for e, h in pairs:
            assert compose(e, h) == C(4, 10, 4, 10)

    def test_factor_once_empty(self):
        """Test irreducible inputs and trivial-only splits"""
        assert factor_once(C(2, 1)) == []
        assert factor_once(C(1, 1, 1, 1)) == []
        assert factor_once(C(6)) == []

    def test_irreducible_factorization(self):
        """Test the worked factorization"""
        factorization = irreducible_factorization(C(4, 10, 4, 10))
        assert factorization.factors == (C(1, 1), C(2, 5), C(2))
        assert str(factorization) == "1 1 o 2 5 o 2"

    def test_irreducible_inputs(self):
        """Test irreducible compositions factor as themselves"""
        assert irreducible_factorization(C(6)).factors == (C(6),)
        assert irreducible_factorization(C(2, 1)).factors == (C(2, 1),)
        assert irreducible_factorization(C(1, 1, 1, 1)).factors == (C(1, 1, 1, 1),)

    def test_identity_rejected(self):
        """Test (1) has no factorization"""
        with pytest.raises(IdentityCompositionError) as excinfo:
            irreducible_factorization(IDENTITY)
        assert excinfo.value.error_type == error_types.IDENTITY_COMPOSITION
        with pytest.raises(IdentityCompositionError):
            l_equivalence_class(IDENTITY)

    def test_recomposition(self):
        """Test recomposing the factors gives back the input for weights <= 8"""
        for a in _all_up_to(8):
            if a.is_identity:
                continue
            factors = irreducible_factorization(a).factors
            assert compose_all(factors) == a
            for left, right in zip(factors, factors[1:]):
                assert not is_trivial_factorization(left, right)

    def test_normal_form_ignores_split_order(self):
        """Test random split choices give the same factorization"""
        rng = random.Random(17)
        for a in _all_up_to(9):
            if a.is_identity:
                continue
            expected = irreducible_factorization(a)
            for _ in range(3):
                assert irreducible_factorization(a, rng=rng) == expected

    @pytest.mark.slow
    def test_recomposition_up_to_ten(self):
        """Test recomposition and split-order independence for weights 9 and 10"""
        rng = random.Random(23)
        for n in (9, 10):
            for a in compositions_of(n):
                factorization = irreducible_factorization(a)
                assert compose_all(factorization.factors) == a
                assert irreducible_factorization(a, rng=rng) == factorization


class TestEquivalenceClasses:
    """Test factor-reversal classes against L-polynomial grouping"""

    def test_worked_class(self):
        """Test the class of 4 10 4 10"""
        assert l_equivalence_class(C(4, 10, 4, 10)) == {C(4, 10, 4, 10), C(10, 4, 10, 4)}

    def test_palindrome(self):
        """Test a palindromic irreducible composition is alone in its class"""
        assert l_equivalence_class(C(3, 1, 3)) == {C(3, 1, 3)}

    def test_contains_reverse(self):
        """Test every class holds a and reverse(a)"""
        for a in _all_up_to(8):
            if a.is_identity:
                continue
            members = l_equivalence_class(a)
            assert a in members
            assert reverse(a) in members

    def test_classes_match_brute_force(self):
        """Test class partitions agree with L-polynomial grouping for weights 2..7"""
        for n in range(2, 8):
            classes = {l_equivalence_class(a) for a in compositions_of(n)}
            assert classes == _brute_force_classes(n)

    @pytest.mark.slow
    def test_classes_match_brute_force_up_to_ten(self):
        """Test class partitions for weights 8..10"""
        for n in range(8, 11):
            classes = {l_equivalence_class(a) for a in compositions_of(n)}
            assert classes == _brute_force_classes(n)


class TestStreams:
    """Test composition streams and the modular factorization shape"""

    def test_compositions_of(self):
        """Test lexicographic order and counts"""
        assert list(compositions_of(3)) == [C(1, 1, 1), C(1, 2), C(2, 1), C(3)]
        assert list(compositions_of(1)) == [C(1)]
        assert sum(1 for _ in compositions_of(10)) == 512

    def test_compositions_of_bounds(self):
        """Test weight validation"""
        with pytest.raises(ValidationError):
            compositions_of(0)
        with pytest.raises(BoundExceededError):
            compositions_of(25)

    def test_qualifying_compositions(self):
        """Test parts >= q+1 and ≡ 1 (mod q)"""
        assert list(qualifying_compositions(6, 2)) == [C(3, 3)]
        assert list(qualifying_compositions(8, 2)) == [C(3, 5), C(5, 3)]
        assert list(qualifying_compositions(4, 3)) == [C(4)]
        assert list(qualifying_compositions(4, 2)) == []

    def test_lemma4_shape(self):
        """Test the shape check on irreducible and (1^m)∘ω inputs"""
        assert check_lemma4_shape(C(3, 3, 1, 3, 3), 1, 2)
        assert check_lemma4_shape(C(5, 3), 1, 2)
        assert check_lemma4_shape(C(3, 5, 3, 5), 1, 2)
        assert check_lemma4_shape(C(2, 5), 2, 3)
        assert check_lemma4_shape(C(2, 5), 5, 3)

    @pytest.mark.parametrize("g,h,q", [
        (C(2, 4), 1, 2),
        (C(3, 9), 1, 2),
        (C(3, 5), 2, 2),
        (C(3, 5), 1, 1),
    ])
    def test_lemma4_hypothesis(self, g, h, q):
        """Test hypothesis violations"""
        with pytest.raises(HypothesisViolatedError) as excinfo:
            check_lemma4_shape(g, h, q)
        assert excinfo.value.error_type == error_types.HYPOTHESIS_VIOLATED
