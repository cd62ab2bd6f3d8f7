"""
Version information for csfkit
"""
__version__ = "1.0.0"
__repo__ = "csfkit"

# Recorded in every RunManifest; a version bump invalidates cached reports
TOOL_VERSION = f"{__repo__}/{__version__}"
