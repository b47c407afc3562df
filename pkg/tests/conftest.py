"""
Shared pytest fixtures for ginarl tests.
"""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

_SRC_DIR = Path(__file__).resolve().parent.parent / "src"
if str(_SRC_DIR) not in sys.path:
    sys.path.insert(0, str(_SRC_DIR))

from ginarl.gin import GinConfig  # noqa: E402
from ginarl.ideal_loader import load_ideal  # noqa: E402
from ginarl.monomial_ideal import MonomialIdeal, minimalize  # noqa: E402
from ginarl.ring import Polynomial, VariableContext  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized suites that take more than a few seconds")
    config.addinivalue_line("markers", "integration: end-to-end acceptance checks")


# ── Rings ─────────────────────────────────────────────────────────

@pytest.fixture
def ring1():
    return VariableContext.standard(1)


@pytest.fixture
def ring2():
    return VariableContext.standard(2)


@pytest.fixture
def ring3():
    return VariableContext.standard(3)


@pytest.fixture
def ring4():
    return VariableContext.standard(4)


@pytest.fixture
def var():
    """var(ctx, "x") -> the variable x as a Polynomial."""
    return Polynomial.variable


# ── Monomial ideals ──────────────────────────────────────────────

def _ideal(ctx: VariableContext, *gens: tuple[int, ...]) -> MonomialIdeal:
    return minimalize(ctx, gens)


@pytest.fixture
def three_quadrics_gin(ring3):
    """gin of (x^2, y^2, z^2): (x^2, xy, y^2, xz^2, yz^2, z^4)."""
    return _ideal(ring3, (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 2), (0, 1, 2), (0, 0, 4))


@pytest.fixture
def no_strong_stanley(ring2):
    """(x^2, xy, y^4): H = (1, 2, 1, 1)."""
    return _ideal(ring2, (2, 0), (1, 1), (0, 4))


@pytest.fixture
def not_arl_ideal():
    """Strongly stable ideal in x, y, z, w with SLP that is not ARL."""
    parsed = load_ideal("not_arl_four_variables.ideal")
    return minimalize(parsed.ctx, parsed.monomials())


# ── Configs ──────────────────────────────────────────────────────

@pytest.fixture
def small_config():
    """Small coefficients keep the tests fast; two agreeing trials still certify."""
    return GinConfig(seed=3, coeff_bound=50, max_trials=8, max_degree=30)
