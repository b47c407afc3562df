"""
Pytest fixtures for ginarl acceptance tests.

These run the full pipeline (random coordinate changes, exact Buchberger,
the pivot oracle) at the default coefficient bound of 1000.
"""
from __future__ import annotations

import pytest

from ginarl.gin import GinConfig


@pytest.fixture(scope="session")
def acceptance_config():
    """Default acceptance parameters, shared by the whole session."""
    return GinConfig(seed=1, coeff_bound=1000, max_trials=8, max_degree=40)
