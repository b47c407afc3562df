"""
Tests for ginarl.lefschetz: ARL (direct and via the profile), SLP, SSP and
the per-restriction analysis.
"""
from __future__ import annotations

import pytest

from ginarl.lefschetz import (
    AnalysisReport,
    ArlDirectResult,
    ArlProfileResult,
    PropertyResult,
    arl_check_direct,
    arl_check_profile,
    mainthm_analyze,
    satisfies_degree_bound,
    slp_check,
    ssp_check,
)
from ginarl.monomial_ideal import minimalize
from ginarl.profile import f_profile
from ginarl.validators import ValidationError
from tests.helpers import brute_force_arl


@pytest.fixture
def y_squared_missing(ring3):
    """(x^2, xy, xz, y^3, y^2z, yz^2, z^3): xz is a generator but y^2 is not in the ideal."""
    return minimalize(ring3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)])


@pytest.fixture
def variables_only(ring2):
    return minimalize(ring2, [(1, 0), (0, 1)])


# ── Direct ARL check ─────────────────────────────────────────────

class TestArlDirect:
    def test_gin_of_three_quadrics(self, three_quadrics_gin):
        assert arl_check_direct(three_quadrics_gin)

    def test_two_variables(self, ring2):
        assert arl_check_direct(minimalize(ring2, [(2, 0), (1, 1), (0, 3)]))

    def test_example_ideal_witness(self, not_arl_ideal):
        result = arl_check_direct(not_arl_ideal)
        assert not result
        assert result.generator == (1, 0, 2, 2)
        assert result.monomial == (0, 2, 1, 2)

    def test_three_variable_witness(self, y_squared_missing):
        result = arl_check_direct(y_squared_missing)
        assert (result.holds, result.generator, result.monomial) == (False, (1, 0, 1), (0, 2, 0))

    @pytest.mark.parametrize(
        "fixture", ["three_quadrics_gin", "no_strong_stanley", "not_arl_ideal", "y_squared_missing"]
    )
    def test_matches_brute_force(self, request, fixture):
        ideal = request.getfixturevalue(fixture)
        assert arl_check_direct(ideal).holds == brute_force_arl(ideal)


# ── Profile checks ───────────────────────────────────────────────

class TestArlProfile:
    def test_three_quadrics(self, three_quadrics_gin):
        assert arl_check_profile(f_profile(three_quadrics_gin))

    def test_variables_only(self, variables_only):
        assert arl_check_profile(f_profile(variables_only))

    def test_example_ideal_fails_monotonicity(self, not_arl_ideal):
        result = arl_check_profile(f_profile(not_arl_ideal))
        assert not result
        assert result.condition == 2
        assert result.index == 3
        assert result.alpha == (1, 0, 2)
        assert result.beta == (0, 2, 1)

    def test_axis_failure(self, y_squared_missing):
        result = arl_check_profile(f_profile(y_squared_missing))
        assert (result.condition, result.index, result.alpha) == (1, 2, (1, 0))
        assert result.beta is None


class TestSlp:
    def test_three_quadrics(self, three_quadrics_gin):
        assert slp_check(f_profile(three_quadrics_gin))

    def test_example_ideal_has_slp(self, not_arl_ideal):
        assert slp_check(f_profile(not_arl_ideal))

    def test_variables_only(self, variables_only):
        assert slp_check(f_profile(variables_only))

    def test_failure_witness(self, y_squared_missing):
        result = slp_check(f_profile(y_squared_missing))
        assert not result
        assert result.witness == (1, 0)

    def test_one_variable(self, ring1):
        assert slp_check(f_profile(minimalize(ring1, [(4,)])))


class TestSsp:
    def test_three_quadrics(self, three_quadrics_gin):
        assert ssp_check(f_profile(three_quadrics_gin))

    def test_non_symmetric_hilbert_function(self, no_strong_stanley):
        p = f_profile(no_strong_stanley)
        result = ssp_check(p)
        assert not result
        assert result.witness == (1,)
        assert slp_check(p)

    def test_monomial_complete_intersection_gin(self, ring2):
        # gin of (x^2, y^3)
        assert ssp_check(f_profile(minimalize(ring2, [(2, 0), (1, 2), (0, 4)])))

    def test_one_variable(self, ring1):
        assert ssp_check(f_profile(minimalize(ring1, [(4,)])))


# ── Full analysis ────────────────────────────────────────────────

class TestMainthm:
    def test_example_ideal(self, not_arl_ideal):
        report = mainthm_analyze(not_arl_ideal)
        assert not report.arl
        assert [(r.index, r.holds) for r in report.condition1] == [(0, True), (1, True)]
        assert len(report.condition2) == 1
        failing = report.condition2[0]
        assert (failing.index, failing.holds, failing.alpha, failing.beta) == (3, False, (1, 0, 2), (0, 2, 1))
        assert report.slp.holds
        assert not report.conditions_hold

    def test_three_quadrics(self, three_quadrics_gin):
        report = mainthm_analyze(three_quadrics_gin)
        assert report.arl
        assert [(r.index, r.holds) for r in report.condition1] == [(0, True)]
        assert report.condition2 == ()
        assert report.consistency_violations() == []

    def test_two_variables(self, variables_only):
        report = mainthm_analyze(variables_only)
        assert report.arl
        assert [r.index for r in report.condition1] == [0]
        assert report.condition2 == ()

    def test_three_variables_slp_decides(self, y_squared_missing):
        report = mainthm_analyze(y_squared_missing)
        assert not report.arl
        assert not report.slp.holds
        assert [(r.index, r.holds) for r in report.condition1] == [(0, False)]

    def test_one_variable_has_no_conditions(self, ring1):
        report = mainthm_analyze(minimalize(ring1, [(3,)]))
        assert report.arl
        assert report.condition1 == ()

    def test_consistency_violations_detected(self, three_quadrics_gin):
        report = AnalysisReport(
            ideal=three_quadrics_gin,
            arl_direct=ArlDirectResult(True),
            arl_profile=ArlProfileResult(False, condition=1, index=1, alpha=(0,)),
            slp=PropertyResult(False, (0, 0)),
            ssp=PropertyResult(True),
        )
        problems = report.consistency_violations()
        assert any("disagree" in p for p in problems)
        assert any("strong Stanley" in p for p in problems)


class TestDegreeBound:
    def test_bound_holds(self):
        assert satisfies_degree_bound((2, 2, 2, 5))

    def test_bound_fails(self):
        assert not satisfies_degree_bound((2, 2, 2, 2))

    def test_three_forms_always_pass(self):
        assert satisfies_degree_bound((5, 1, 1))

    def test_order_matters(self):
        assert not satisfies_degree_bound((5, 2, 2, 2))

    def test_rejects_non_positive(self):
        with pytest.raises(ValidationError):
            satisfies_degree_bound((2, 0, 2))
