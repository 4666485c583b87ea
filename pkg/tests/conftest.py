from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chromcat import build_category, load_builtin, quillen_category


@functools.lru_cache(maxsize=None)
def group(name):
    return load_builtin(name)


@functools.lru_cache(maxsize=None)
def category(name, p, n):
    if n is None:
        return quillen_category(group(name), p)
    return build_category(group(name), p, n)


@pytest.fixture
def a4():
    return group("a4")


# Bundled groups of order <= 64, used by the property suites.
SMALL_LIBRARY = [
    "c1", "c2", "c3", "c4", "c6", "k4", "e8", "e9", "s3", "d8", "q8",
    "c2wrc2", "a4", "d16", "sd16", "q16", "s4", "h27", "x32", "a5",
]

# Subset within the all-tuples oracle budget (order <= 32).
ORACLE_LIBRARY = [
    "c2", "c3", "c4", "c6", "k4", "e8", "e9", "s3", "d8", "q8",
    "c2wrc2", "a4", "d16", "sd16", "q16", "s4", "h27", "x32",
]
