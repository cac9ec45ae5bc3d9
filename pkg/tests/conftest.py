import pytest

from lltlab.models import DyckPath


@pytest.fixture
def d_star():
    """The size-6 path used throughout as a worked example"""
    return DyckPath((0, 1, 2, 1, 2, 2))


@pytest.fixture
def z_star():
    """zeta of d_star"""
    return DyckPath((0, 0, 1, 1, 1, 2))


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv("LLTLAB_CACHE", raising=False)
