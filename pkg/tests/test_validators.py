"""
Tests for ginarl.validators module.
"""
from __future__ import annotations

import pytest

from ginarl.ring import Polynomial, VariableContext
from ginarl.validators import (
    ComputationError,
    GinAgreementError,
    GinArlError,
    NotArtinianError,
    ParseError,
    ValidationError,
    require_at_least,
    require_homogeneous,
    require_positive,
    require_same_context,
    require_same_length,
)


class TestErrorHierarchy:
    def test_message_carries_module(self):
        err = ValidationError("bad input", module="cli-io")
        assert str(err) == "[cli-io] bad input"

    def test_parse_error_position(self):
        err = ParseError("oops", module="cli-io", line=3, column=7)
        assert str(err) == "[cli-io] line 3, column 7: oops"
        assert isinstance(err, ValidationError)

    def test_not_artinian_is_computation_error(self):
        err = NotArtinianError("no z power", variable="z")
        assert isinstance(err, ComputationError)
        assert isinstance(err, GinArlError)

    def test_agreement_error_defaults(self):
        err = GinAgreementError("no agreement")
        assert err.candidates == []

    def test_builtin_bases(self):
        assert isinstance(ValidationError("x"), ValueError)
        assert isinstance(ComputationError("x"), RuntimeError)

    def test_can_be_raised_and_caught(self):
        with pytest.raises(GinArlError, match="boom"):
            raise ComputationError("boom")


class TestRequireHelpers:
    def test_same_context(self):
        a, b = VariableContext.standard(2), VariableContext.standard(3)
        require_same_context(a, a, "m")
        with pytest.raises(ValidationError, match="Mismatched"):
            require_same_context(a, b, "m")

    def test_same_length(self):
        require_same_length((1, 2), (3, 4), "m")
        with pytest.raises(ValidationError):
            require_same_length((1,), (1, 2), "m")

    @pytest.mark.parametrize("value", [0, -1, True, "3"])
    def test_positive_rejects(self, value):
        with pytest.raises(ValidationError):
            require_positive(value, "degree", "m")

    def test_at_least(self):
        require_at_least(2, 2, "coeff_bound", "m")
        with pytest.raises(ValidationError, match="coeff_bound"):
            require_at_least(1, 2, "coeff_bound", "m")

    def test_homogeneous(self):
        ctx = VariableContext.standard(2)
        x, y = Polynomial.variable(ctx, "x"), Polynomial.variable(ctx, "y")
        require_homogeneous([x * y, Polynomial.zero(ctx)], "m")
        with pytest.raises(ValidationError, match="Generator #2"):
            require_homogeneous([x, x + y**2], "m")
