"""Tests for text formats and input parsing"""

import pytest

from csfkit.core.symmetric import csf_by_colorings
from csfkit.core.trees import path_tree, twigs
from csfkit.models.composition import Composition
from csfkit.models.polynomial import SparsePolynomial
from csfkit.utils.errors import BadLabelError, NotATreeError, ValidationError
from csfkit.utils.formatters import (
    format_int_sequence,
    format_polynomial,
    format_tree,
    format_truncated_polynomial,
    format_twigs,
    polynomial_from_json,
    polynomial_to_json,
)
from csfkit.utils.validators import parse_composition, parse_tree_spec, validate_positive, validate_q


class TestFormatters:
    """Test output formats"""

    def test_format_tree(self, p3):
        """Test the tree text format"""
        assert format_tree(p3) == "3; 0-1, 1-2"
        assert format_tree(path_tree(1)) == "1;"

    def test_format_polynomial(self):
        """Test term order and the zero polynomial"""
        p = SparsePolynomial({(3,): 1, (1, 1, 1): 1, (2, 1): -2})
        assert format_polynomial(p) == "1*[1,1,1] + -2*[2,1] + 1*[3]"
        assert format_polynomial(SparsePolynomial()) == "0"

    def test_polynomial_json(self):
        """Test JSON terms list the largest partition first"""
        p = SparsePolynomial({(3,): 1, (2, 1): 2})
        payload = polynomial_to_json(p)
        assert payload == {"terms": [{"partition": [3], "coeff": 1}, {"partition": [2, 1], "coeff": 2}]}
        assert polynomial_from_json(payload) == p

    def test_format_truncated(self, p2):
        """Test the colouring polynomial format"""
        assert format_truncated_polynomial(csf_by_colorings(p2, 2)) == "2*x^(1,1)"

    def test_format_twigs(self, sample_caterpillar):
        """Test the twig multiset format"""
        assert format_twigs(twigs(sample_caterpillar)) == "{2:8, 3:1}"

    def test_format_int_sequence(self):
        """Test space-separated integers"""
        assert format_int_sequence((3, 1, 1, 1)) == "3 1 1 1"
        assert format_int_sequence(()) == ""


class TestParsers:
    """Test input parsing and validation"""

    def test_parse_tree_spec(self, p3):
        """Test spacing is flexible and output parses back"""
        assert parse_tree_spec("3;0-1,1-2") == p3
        assert parse_tree_spec(" 3 ; 1 - 2 , 0-1 ") == p3
        assert parse_tree_spec(format_tree(p3)) == p3
        assert parse_tree_spec("1;") == path_tree(1)

    @pytest.mark.parametrize("spec", ["3 0-1,1-2", "x;0-1,1-2", "3;0-1,1_2", "3;0-1,1-"])
    def test_malformed_tree_spec(self, spec):
        """Test text that does not match the format"""
        with pytest.raises(ValidationError):
            parse_tree_spec(spec)

    def test_tree_spec_not_a_tree(self):
        """Test structural errors keep their own types"""
        with pytest.raises(NotATreeError):
            parse_tree_spec("3;0-1")
        with pytest.raises(BadLabelError):
            parse_tree_spec("2;0-5")

    def test_parse_composition(self):
        """Test spaces and commas both separate parts"""
        assert parse_composition("4 10 4 10") == Composition((4, 10, 4, 10))
        assert parse_composition("2,1") == Composition((2, 1))

    @pytest.mark.parametrize("text", ["", "   ", "1 a", "0 2", "-1"])
    def test_malformed_composition(self, text):
        """Test empty, non-integer and non-positive parts"""
        with pytest.raises(ValidationError):
            parse_composition(text)

    def test_validate_q(self):
        """Test the q lower bound"""
        assert validate_q(2) == 2
        assert validate_q(0, minimum=0) == 0
        with pytest.raises(ValidationError):
            validate_q(1)
        with pytest.raises(ValidationError):
            validate_positive(0, "order")
