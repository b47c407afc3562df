"""
Tests for ginarl.gin: random coordinate changes, acceptance, and the
per-degree pivot oracle.
"""
from __future__ import annotations

import itertools

import pytest

import ginarl.gin as gin_module
from ginarl.gin import (
    GinConfig,
    compute_gin,
    complete_intersection,
    gin_degree_slice_oracle,
    hilbert_function_from_slices,
    oracle_compare,
    random_coordinate_change,
    random_forms,
    trial_rng,
)
from ginarl.groebner import BuchbergerStats
from ginarl.ideal_loader import expected_gin, load_ideal
from ginarl.monomial_ideal import hilbert_function, is_strongly_stable, minimalize
from ginarl.validators import ComputationError, GinAgreementError, NotArtinianError, ValidationError


@pytest.fixture
def two_squares(ring2):
    return complete_intersection(ring2, (2, 2))


# ── Configuration ────────────────────────────────────────────────

class TestGinConfig:
    def test_defaults(self):
        config = GinConfig()
        assert (config.seed, config.coeff_bound, config.max_trials) == (1, 1000, 8)

    @pytest.mark.parametrize(
        "field, value",
        [("coeff_bound", 1), ("max_trials", 1), ("max_degree", 0), ("seed", -1)],
    )
    def test_rejects_out_of_range(self, field, value):
        with pytest.raises(ValidationError, match=field):
            GinConfig(**{field: value})


# ── Random draws ─────────────────────────────────────────────────

class TestRandomDraws:
    def test_trial_rng_is_reproducible(self):
        a = trial_rng(7, 2).integers(0, 10**9, size=5)
        b = trial_rng(7, 2).integers(0, 10**9, size=5)
        assert list(a) == list(b)

    def test_trial_streams_differ(self):
        a = trial_rng(7, 0).integers(0, 10**9, size=5)
        b = trial_rng(7, 1).integers(0, 10**9, size=5)
        assert list(a) != list(b)

    def test_coordinate_change_is_invertible_and_bounded(self, ring3):
        g, rejected = random_coordinate_change(ring3, trial_rng(1, 0), 5)
        assert rejected >= 0
        assert g.to_sympy().det() != 0
        assert all(abs(c) <= 5 for row in g.matrix for c in row)

    def test_random_forms(self, ring3):
        forms = random_forms(ring3, (2, 3), trial_rng(0, 0), coeff_bound=9)
        assert [f.degree() for f in forms] == [2, 3]
        assert all(f.is_homogeneous() for f in forms)
        assert all(abs(c) <= 9 for f in forms for c in f.terms.values())


class TestCompleteIntersection:
    def test_pure_powers(self, ring3):
        gens = complete_intersection(ring3, (2, 3, 4))
        assert [g.leading_monomial() for g in gens] == [(2, 0, 0), (0, 3, 0), (0, 0, 4)]

    def test_too_many_degrees(self, ring2):
        with pytest.raises(ValidationError):
            complete_intersection(ring2, (2, 2, 2))


# ── compute_gin ──────────────────────────────────────────────────

class TestComputeGin:
    def test_two_squares(self, two_squares, ring2, small_config):
        result = compute_gin(two_squares, small_config)
        assert result.gin == minimalize(ring2, [(2, 0), (1, 1), (0, 3)])
        assert result.certificate.strongly_stable
        assert result.certificate.trials_agreeing >= 2
        assert result.certificate.seed == small_config.seed
        assert 2 <= result.trials_used <= small_config.max_trials

    def test_three_squares(self, ring3, three_quadrics_gin, small_config):
        result = compute_gin(complete_intersection(ring3, (2, 2, 2)), small_config)
        assert result.gin == three_quadrics_gin
        assert hilbert_function(result.gin).as_list() == [1, 3, 3, 1]

    def test_non_monomial_input(self, small_config):
        parsed = load_ideal("binary_forms.ideal")
        result = compute_gin(parsed.generators, small_config)
        assert result.gin.generator_strings() == ["x^2", "x*y^2", "y^4"]

    @pytest.mark.parametrize("name", ["two_squares", "three_squares"])
    def test_matches_recorded_gin(self, name, small_config):
        parsed = load_ideal(name)
        assert compute_gin(parsed.generators, small_config).gin == expected_gin(parsed)

    def test_result_is_strongly_stable(self, ring3, small_config):
        forms = random_forms(ring3, (2, 2, 3), trial_rng(11, 0), coeff_bound=20)
        result = compute_gin(forms, small_config)
        assert is_strongly_stable(result.gin)

    def test_deterministic_for_fixed_seed(self, two_squares, small_config):
        first = compute_gin(two_squares, small_config)
        second = compute_gin(two_squares, small_config)
        assert first.gin == second.gin
        assert first.work_counters() == second.work_counters()

    def test_work_counters(self, two_squares, small_config):
        counters = compute_gin(two_squares, small_config).work_counters()
        assert counters["trials"] >= 2
        assert {"singular_draws", "pairs_processed", "reductions_to_zero"} <= set(counters)

    def test_not_artinian(self, ring2, var, small_config):
        x, y = var(ring2, "x"), var(ring2, "y")
        with pytest.raises(NotArtinianError):
            compute_gin([x**2, x * y], small_config)

    def test_degree_ceiling(self, two_squares):
        with pytest.raises(ComputationError):
            compute_gin(two_squares, GinConfig(coeff_bound=50, max_degree=2))

    def test_rejects_inhomogeneous(self, ring2, var):
        x, y = var(ring2, "x"), var(ring2, "y")
        with pytest.raises(ValidationError):
            compute_gin([x + y**2])

    def test_disagreeing_trials(self, monkeypatch, ring2, two_squares):
        counter = itertools.count(2)

        def fake(polys, g, max_degree):
            return minimalize(ring2, [(next(counter), 0), (0, 5)]), BuchbergerStats()

        monkeypatch.setattr(gin_module, "_transformed_initial_ideal", fake)
        with pytest.raises(GinAgreementError) as exc:
            compute_gin(two_squares, GinConfig(coeff_bound=10, max_trials=3))
        assert exc.value.trials == 3
        assert len(exc.value.candidates) == 3

    def test_agreement_without_stability_is_rejected(self, monkeypatch, ring2, two_squares):
        def fake(polys, g, max_degree):
            return minimalize(ring2, [(2, 0), (0, 2)]), BuchbergerStats()

        monkeypatch.setattr(gin_module, "_transformed_initial_ideal", fake)
        with pytest.raises(GinAgreementError):
            compute_gin(two_squares, GinConfig(coeff_bound=10, max_trials=4))

    def test_failing_trial_is_not_retried(self, monkeypatch, ring2, two_squares):
        calls = []

        def fake(polys, g, max_degree):
            calls.append(g)
            raise NotArtinianError("no power of y", module="gin-pipeline", variable="y")

        monkeypatch.setattr(gin_module, "_transformed_initial_ideal", fake)
        with pytest.raises(NotArtinianError):
            compute_gin(two_squares, GinConfig(coeff_bound=10, max_trials=5))
        assert len(calls) == 1


# ── Pivot oracle ─────────────────────────────────────────────────

class TestPivotOracle:
    def test_generic_slice(self, two_squares, ring2):
        g, _ = random_coordinate_change(ring2, trial_rng(5, 0), 50)
        assert gin_degree_slice_oracle(two_squares, g, 2) == [(2, 0), (1, 1)]
        assert len(gin_degree_slice_oracle(two_squares, g, 3)) == 4

    def test_agrees_with_gin(self, two_squares, ring2, small_config):
        result = compute_gin(two_squares, small_config)
        g, _ = random_coordinate_change(ring2, trial_rng(99, 0), 50)
        assert oracle_compare(two_squares, result.gin, g) is None

    def test_reports_first_mismatch(self, two_squares, ring2):
        wrong = minimalize(ring2, [(2, 0), (1, 1), (0, 2)])
        g, _ = random_coordinate_change(ring2, trial_rng(5, 0), 50)
        mismatch = oracle_compare(two_squares, wrong, g)
        assert mismatch is not None
        assert mismatch.degree == 2
        assert mismatch.expected == ((2, 0), (1, 1), (0, 2))
        assert mismatch.found == ((2, 0), (1, 1))

    def test_hilbert_function_from_slices(self, two_squares):
        assert hilbert_function_from_slices(two_squares).as_list() == [1, 2, 1]

    def test_hilbert_function_from_slices_not_artinian(self, ring2, var):
        with pytest.raises(NotArtinianError):
            hilbert_function_from_slices([var(ring2, "x") ** 2], max_degree=5)
