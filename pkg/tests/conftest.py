import random

import pytest

from src.catalog.enumerate import Catalog, enumerate_catalog
from src.io.poset_format import serialize_poset
from src.progress.config import get_config, set_config
from src.settings import DEFAULT_SEED, get_settings, set_settings


@pytest.fixture(scope="session")
def catalog5():
    return enumerate_catalog(5)


@pytest.fixture(scope="session")
def catalog4(catalog5):
    return Catalog([entry for entry in catalog5 if entry.points <= 4], 4)


@pytest.fixture(autouse=True)
def restore_globals():
    """Put back engine settings and progress configuration after each test."""
    settings, config = get_settings(), get_config()
    yield
    set_settings(settings)
    set_config(config)


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


@pytest.fixture
def poset_file(tmp_path):
    """Write a poset to a file and return its path."""
    def write(P, name="poset.txt"):
        path = tmp_path / name
        path.write_text(serialize_poset(P), encoding="utf-8")
        return path
    return write


@pytest.fixture
def cli_env(tmp_path, monkeypatch):
    """Isolate the CLI from the caller's environment and log directory."""
    for name in ("POSETX_MAX_K", "POSETX_M_MAX", "POSETX_SEED", "POSETX_THREADS",
                 "POSETX_BUDGET", "POSETX_FORMAT", "VERBOSE", "DEBUG", "PROGRESS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "logs" / "posetx.log"))
    monkeypatch.chdir(tmp_path)
    return tmp_path
