"""
End-to-end acceptance checks for the structural results ginarl implements.

The randomized suites are marked slow. Run everything with:
    PYTHONPATH=src python -m pytest tests/integration -v
or skip the long suites with `-m "not slow"`.
"""
from __future__ import annotations

import numpy as np
import pytest

from ginarl.cli import run_command
from ginarl.config import OutputFormat, RunConfig
from ginarl.experiments import (
    degree_bound_instance,
    generic_intersection_instance,
    monomial_complete_intersections,
    strongly_stable_suite,
    three_variable_suite,
    two_variable_suite,
)
from ginarl.gin import random_forms
from ginarl.ideal_file import IdealFile
from ginarl.lefschetz import arl_check_direct, mainthm_analyze, slp_check
from ginarl.monomial_ideal import is_strongly_stable, restrict_to_first
from ginarl.profile import f_profile
from ginarl.ring import VariableContext
from ginarl.series import froberg_series

pytestmark = pytest.mark.integration


# ── Fixture ideal ────────────────────────────────────────────────

class TestSlpWithoutArl:
    def test_strongly_stable(self, not_arl_ideal):
        assert is_strongly_stable(not_arl_ideal)

    def test_slp_for_ideal_and_restriction(self, not_arl_ideal):
        assert slp_check(f_profile(not_arl_ideal))
        assert slp_check(f_profile(restrict_to_first(not_arl_ideal, 2)))

    def test_not_arl(self, not_arl_ideal):
        result = arl_check_direct(not_arl_ideal)
        assert not result
        ctx = not_arl_ideal.ctx
        assert ctx.format_monomial(result.generator) == "x*z^2*w^2"
        assert ctx.format_monomial(result.monomial) == "y^2*z*w^2"

    def test_second_condition_cannot_be_omitted(self, not_arl_ideal):
        report = mainthm_analyze(not_arl_ideal)
        assert all(report.condition1)
        assert [(r.index, r.holds) for r in report.condition2] == [(3, False)]


# ── Randomized strongly stable ideals ────────────────────────────

@pytest.fixture(scope="module")
def strongly_stable_rows():
    return strongly_stable_suite(count=200, seed=2024, min_vars=2, max_vars=4, max_socle=7)


@pytest.mark.slow
class TestStronglyStableSuite:
    def test_direct_equals_profile(self, strongly_stable_rows):
        mismatches = [r.ideal for r in strongly_stable_rows if r.arl_direct != r.arl_profile]
        assert mismatches == []

    def test_direct_equals_conditions(self, strongly_stable_rows):
        mismatches = [r.ideal for r in strongly_stable_rows if r.arl_direct != r.conditions_hold]
        assert mismatches == []

    def test_profiles_are_consistent(self, strongly_stable_rows):
        assert all(r.profile_round_trip and r.profile_problems == 0 for r in strongly_stable_rows)

    def test_suite_is_not_trivial(self, strongly_stable_rows):
        assert any(r.arl_direct for r in strongly_stable_rows)
        assert any(not r.arl_direct for r in strongly_stable_rows)


@pytest.mark.slow
def test_three_variables_slp_equals_arl():
    rows = three_variable_suite(count=100, seed=7)
    assert [r.ideal for r in rows if r.slp != r.arl_direct] == []


# ── gin computations ─────────────────────────────────────────────

@pytest.mark.slow
def test_two_variable_gins_are_arl(acceptance_config):
    rows = two_variable_suite(count=100, seed=11, max_degree=6, config=acceptance_config, check_oracle=True)
    assert all(r.arl for r in rows)
    assert all(r.oracle_agree for r in rows)


@pytest.mark.slow
def test_monomial_complete_intersections(acceptance_config):
    rows = monomial_complete_intersections(max_vars=4, max_degree=4, config=acceptance_config, check_oracle=True)
    assert len(rows) == 4 + 10 + 20 + 35
    assert [r.degrees for r in rows if not (r.ssp and r.symmetric)] == []
    assert all(r.oracle_agree for r in rows)


@pytest.mark.slow
def test_degree_bound_instance(acceptance_config):
    row = degree_bound_instance((2, 2, 2, 5), config=acceptance_config, check_oracle=True)
    assert row.arl
    assert row.oracle_agree


@pytest.mark.slow
def test_degree_bound_instance_is_recorded(acceptance_config):
    # Outside the bound nothing is asserted about ARL; the run only has to succeed.
    row = degree_bound_instance((2, 2, 2, 2), config=acceptance_config, check_oracle=True)
    assert row.oracle_agree
    assert isinstance(row.arl, bool)


@pytest.mark.slow
def test_generic_complete_intersection(acceptance_config):
    row = generic_intersection_instance(
        (2, 2, 2, 5), seed=0, coeff_bound=1000, config=acceptance_config, check_oracle=True
    )
    assert row.same_gin
    assert row.froberg_matches
    assert row.degree_bound
    assert row.arl
    assert row.oracle_agree is True
    assert row.froberg_series == ",".join(str(c) for c in froberg_series(4, (2, 2, 2, 5)).coeffs)


@pytest.mark.slow
def test_structured_output_is_reproducible():
    ctx = VariableContext.standard(4)
    forms = random_forms(ctx, (2, 2, 2, 5), np.random.default_rng(0), coeff_bound=1000)
    ideal = IdealFile(ctx, tuple(forms), {"name": "generic forms of degrees 2, 2, 2, 5"})
    config = RunConfig(seed=1, coeff_bound=1000)
    first = run_command("gin", ideal, config).render(OutputFormat.STRUCTURED)
    second = run_command("gin", ideal, config).render(OutputFormat.STRUCTURED)
    assert first == second
