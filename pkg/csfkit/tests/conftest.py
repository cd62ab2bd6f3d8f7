"""Pytest configuration and fixtures."""

import pytest

from csfkit.config.settings import Config
from csfkit.core.caterpillars import tau
from csfkit.core.service_container import ServiceContainer
from csfkit.core.trees import path_tree, star_tree
from csfkit.models.composition import Composition
from csfkit.models.tree import Tree
from csfkit.utils.logging_config import LoggingConfigurator

_CSF_ENV = (
    "CSF_LOG_FILE",
    "CSF_THREADS",
    "CSF_ORDER_BOUND",
    "CSF_TREE_ORDER_BOUND",
    "CSF_COMPOSITION_ORDER_BOUND",
    "CSF_SAMPLE_SIZE",
    "CSF_RANDOM_SEED",
    "LOG_LEVEL",
)

# q = 2 instance with spine legs (1, 2, 1, 3, 2)
SAMPLE_COMPOSITION = Composition((3, 5, 3, 7, 5))


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    """Keep every test away from the user's environment and cache directory."""
    for name in _CSF_ENV:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("CSF_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    yield
    LoggingConfigurator.reset()


@pytest.fixture
def test_config(tmp_path) -> Config:
    """Configuration with its cache under tmp_path."""
    config = Config()
    config.DEBUG = True
    config.CACHE_DIR = str(tmp_path / "cache")
    return config


@pytest.fixture
def container(test_config: Config):
    """Initialized service container."""
    container = ServiceContainer(test_config)
    container.initialize()
    yield container
    container.cleanup()


@pytest.fixture
def p2() -> Tree:
    return path_tree(2)


@pytest.fixture
def p3() -> Tree:
    return path_tree(3)


@pytest.fixture
def p4() -> Tree:
    return path_tree(4)


@pytest.fixture
def claw() -> Tree:
    """The star K_{1,3}."""
    return star_tree(3)


@pytest.fixture
def sample_caterpillar() -> Tree:
    return tau(SAMPLE_COMPOSITION, 2)
