"""Tests for ginarl.series truncated Hilbert series."""
from __future__ import annotations

import pytest

from ginarl.monomial_ideal import HilbertFunction
from ginarl.series import (
    PowerSeriesTrunc,
    froberg_series,
    hilbert_after_generic_form,
    is_symmetric,
    series_after_generic_form,
    truncate_positive,
)
from ginarl.validators import ValidationError


class TestFrobergSeries:
    def test_three_quadrics(self):
        assert froberg_series(3, (2, 2, 2)).coeffs == (1, 3, 3, 1)

    def test_truncates_at_first_zero(self):
        assert froberg_series(2, (2, 2, 2)).coeffs == (1, 2)

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_one_variable(self, d):
        assert froberg_series(1, (d,)).coeffs == (1,) * d

    def test_complete_intersection_is_product(self):
        # (1 + z)^3 (1 + z + z^2 + z^3 + z^4)
        assert froberg_series(4, (2, 2, 2, 5)).coeffs == (1, 4, 7, 8, 8, 7, 4, 1)

    def test_extra_form(self):
        # (1 - z^2)^4 / (1 - z)^3 = (1 + z)^3 (1 - z^2) truncated
        assert froberg_series(3, (2, 2, 2, 2)).coeffs == (1, 3, 2)

    def test_too_few_forms(self):
        with pytest.raises(ValidationError, match="at least n"):
            froberg_series(3, (2, 2))

    def test_non_positive_degree(self):
        with pytest.raises(ValidationError):
            froberg_series(2, (2, 0))

    def test_str(self):
        assert str(froberg_series(3, (2, 2, 2))) == "1, 3, 3, 1"


class TestPowerSeriesTrunc:
    def test_truncate_positive(self):
        assert truncate_positive([1, 2, 0, 3]).coeffs == (1, 2)
        assert truncate_positive([1, 2, -1]).coeffs == (1, 2)

    def test_rejects_non_positive(self):
        with pytest.raises(ValidationError):
            PowerSeriesTrunc((1, 0, 1))

    def test_must_start_with_one(self):
        with pytest.raises(ValidationError):
            PowerSeriesTrunc((2, 1))

    def test_indexing_past_end(self):
        s = PowerSeriesTrunc((1, 2))
        assert s[5] == 0
        assert len(s) == 2

    def test_as_hilbert_function(self):
        assert PowerSeriesTrunc((1, 3, 3, 1)).as_hilbert_function().is_symmetric()

    def test_series_after_generic_form(self):
        assert series_after_generic_form(PowerSeriesTrunc((1, 3, 3, 1)), 2).coeffs == (1, 3, 2)


class TestHilbertAfterGenericForm:
    def test_quadric_on_three_quadrics(self):
        assert hilbert_after_generic_form(HilbertFunction((1, 3, 3, 1)), 2).as_list() == [1, 3, 2]

    def test_field(self):
        assert hilbert_after_generic_form(HilbertFunction((1,)), 4).as_list() == [1]

    def test_linear_form(self):
        assert hilbert_after_generic_form(HilbertFunction((1, 2, 1)), 1).as_list() == [1, 1]

    def test_agrees_with_series(self):
        h = HilbertFunction((1, 3, 3, 1))
        s = series_after_generic_form(PowerSeriesTrunc((1, 3, 3, 1)), 2)
        assert hilbert_after_generic_form(h, 2).as_list() == list(s.coeffs)

    def test_is_symmetric(self):
        assert is_symmetric(HilbertFunction((1, 2, 1)))
        assert not is_symmetric(HilbertFunction((1, 2, 1, 1)))
