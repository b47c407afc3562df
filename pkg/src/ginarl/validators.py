from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence


@dataclass(eq=False)
class GinArlError(Exception):
    """
    Base error for every failure raised by ginarl.

    Each error carries the tag of the module that raised it so messages can be
    traced back without a stack trace (the CLI prints only `str(err)`).
    """
    message: str
    module: str = "ginarl"

    def __str__(self) -> str:
        return f"[{self.module}] {self.message}"


@dataclass(eq=False)
class ValidationError(GinArlError, ValueError):
    """Bad input or violated precondition. CLI exit code 2."""


@dataclass(eq=False)
class ComputationError(GinArlError, RuntimeError):
    """The computation could not produce an answer. CLI exit code 3."""


@dataclass(eq=False)
class ParseError(ValidationError):
    line: int = 0
    column: int = 0

    def __str__(self) -> str:
        return f"[{self.module}] line {self.line}, column {self.column}: {self.message}"


@dataclass(eq=False)
class NotArtinianError(ComputationError):
    """Raised when some variable has no pure power in the (initial) ideal."""
    variable: Optional[str] = None


@dataclass(eq=False)
class NotStronglyStableError(ValidationError):
    generator: Optional[str] = None
    swapped: Optional[str] = None


@dataclass(eq=False)
class GinAgreementError(ComputationError):
    trials: int = 0
    candidates: list[str] = field(default_factory=list)


def require_same_context(a: Any, b: Any, module: str) -> None:
    """
    Ensure two values live in the same polynomial ring.

    Accepts anything with a `ctx` attribute, or VariableContext objects directly.
    """
    ca = getattr(a, "ctx", a)
    cb = getattr(b, "ctx", b)
    if ca != cb:
        raise ValidationError(
            f"Mismatched variable contexts: {list(ca.names)} vs {list(cb.names)}",
            module=module,
        )


def require_same_length(a: Sequence[int], b: Sequence[int], module: str) -> None:
    if len(a) != len(b):
        raise ValidationError(
            f"Exponent vectors of different lengths: {len(a)} vs {len(b)}",
            module=module,
        )


def require_at_least(value: int, minimum: int, field_name: str, module: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValidationError(
            f"Field '{field_name}' must be an integer >= {minimum} (got {value!r}).",
            module=module,
        )


def require_positive(value: int, field_name: str, module: str) -> None:
    require_at_least(value, 1, field_name, module)


def require_homogeneous(polys: Sequence[Any], module: str) -> None:
    """
    Ensure every polynomial is homogeneous.

    The zero polynomial counts as homogeneous (it is dropped downstream).
    """
    for idx, p in enumerate(polys):
        if not p.is_homogeneous():
            raise ValidationError(
                f"Generator #{idx + 1} is not homogeneous: {p}",
                module=module,
            )
