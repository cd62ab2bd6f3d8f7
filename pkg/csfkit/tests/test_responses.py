"""Tests for JSON response helpers"""

from csfkit.cli.responses import error_response, success_response
from csfkit.config import error_types


class TestSuccessResponse:
    """Test success_response helper"""

    def test_success_response_with_data(self):
        """Test success response with data"""
        data = {"composition": [2, 5, 3, 2, 3]}
        response = success_response(data)

        assert response["data"] == data
        assert "meta" not in response

    def test_success_response_with_meta(self):
        """Test success response with metadata"""
        response = success_response(["4 10 4 10"], {"count": 1})

        assert response["data"] == ["4 10 4 10"]
        assert response["meta"] == {"count": 1}

    def test_success_response_with_none(self):
        """Test success response with None data"""
        response = success_response(None)

        assert "data" in response
        assert response["data"] is None


class TestErrorResponse:
    """Test error_response helper"""

    def test_error_response_basic(self):
        """Test basic error response"""
        response = error_response(error_types.INVALID_REQUEST, "Invalid input")

        assert response["error"]["code"] == "INVALID_REQUEST"
        assert response["error"]["message"] == "Invalid input"
        assert "details" not in response["error"]

    def test_error_response_with_details(self):
        """Test error response with details"""
        details = {"what": "tree order", "size": 22, "bound": 20}
        response = error_response(error_types.BOUND_EXCEEDED, "tree order 22 exceeds bound 20", details)

        assert response["error"]["code"] == "BOUND_EXCEEDED"
        assert response["error"]["details"] == details

    def test_error_types_upper_snake_case(self):
        """Test that every error type constant follows UPPER_SNAKE_CASE"""
        constants = [value for name, value in vars(error_types).items() if name.isupper()]
        assert constants
        for error_type in constants:
            assert error_type == error_type.upper()
            assert " " not in error_type
            assert error_response(error_type, "Test message")["error"]["code"] == error_type
