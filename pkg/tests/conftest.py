"""Shared test fixtures."""

from __future__ import annotations

import logging
import os
from collections.abc import Generator

import pytest
from hypothesis import settings

# Keep settings deterministic regardless of the developer's shell
os.environ.pop("AICRYSTAL_LOG_JSON", None)
os.environ.pop("AICRYSTAL_LOG_LEVEL", None)
os.environ.pop("AICRYSTAL_VERIFY_THREADS", None)
os.environ.pop("AICRYSTAL_CONFIG_DIR", None)

from aicrystal.config import get_defaults, get_settings
from aicrystal.log import clear_context
from aicrystal.models import Partition, Tableau, Word

settings.register_profile("aicrystal", max_examples=60, deadline=None)
settings.load_profile("aicrystal")


# ---------------------------------------------------------------------------
# Config caches
# ---------------------------------------------------------------------------

@pytest.fixture(autouse=True)
def _fresh_config() -> Generator[None, None, None]:
    get_settings.cache_clear()
    get_defaults.cache_clear()
    yield
    get_settings.cache_clear()
    get_defaults.cache_clear()
    clear_context()
    logging.getLogger().handlers.clear()


# ---------------------------------------------------------------------------
# Worked values
# ---------------------------------------------------------------------------

@pytest.fixture()
def shape_21() -> Partition:
    return Partition.of(2, 1)


@pytest.fixture()
def reading_tableau() -> Tableau:
    """1233/23/4 over [1, 4]."""
    return Tableau.from_rows(4, [[1, 2, 3, 3], [2, 3], [4]])


@pytest.fixture()
def rs_word() -> Word:
    return Word(n=4, letters=(4, 2, 3, 1, 3, 2))


@pytest.fixture()
def rsai_word_n4() -> Word:
    return Word(n=4, letters=(1, 1, 4, 2, 1, 1, 1))


@pytest.fixture()
def rsai_word_n5() -> Word:
    return Word(n=5, letters=(1, 1, 4, 2, 1))
