"""Standard error type constants.

All error types use UPPER_SNAKE_CASE format for consistency.
These constants should be used in error_response() calls.
"""

# General errors
INTERNAL_ERROR = "INTERNAL_ERROR"
INVALID_REQUEST = "INVALID_REQUEST"
CONFIGURATION_ERROR = "CONFIGURATION_ERROR"
BOUND_EXCEEDED = "BOUND_EXCEEDED"

# Tree errors
NOT_A_TREE = "NOT_A_TREE"
BAD_LABEL = "BAD_LABEL"
NO_TRUNK = "NO_TRUNK"
EDGE_NOT_IN_TREE = "EDGE_NOT_IN_TREE"

# Polynomial errors
WEIGHT_MISMATCH = "WEIGHT_MISMATCH"
COEFFICIENT_OVERFLOW = "COEFFICIENT_OVERFLOW"

# Composition errors
BAD_EXPONENT = "BAD_EXPONENT"
IDENTITY_COMPOSITION = "IDENTITY_COMPOSITION"
HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"

# Caterpillar errors
BAD_COMPOSITION = "BAD_COMPOSITION"
NOT_A_PROPER_Q_CATERPILLAR = "NOT_A_PROPER_Q_CATERPILLAR"

# Cache errors
CACHE_ERROR = "CACHE_ERROR"
