"""
Truncated Hilbert series.

|S| cuts a power series strictly before its first coefficient <= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .monomial_ideal import HilbertFunction
from .validators import ValidationError, require_positive

MODULE = "lefschetz-analysis"


@dataclass(frozen=True)
class PowerSeriesTrunc:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c <= 0 for c in coeffs):
            raise ValidationError(f"Truncated series must have positive coefficients: {list(coeffs)}", module=MODULE)
        if coeffs and coeffs[0] != 1:
            raise ValidationError(f"Truncated series must start with 1: {list(coeffs)}", module=MODULE)
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def as_hilbert_function(self) -> HilbertFunction:
        return HilbertFunction(self.coeffs)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coeffs)


def truncate_positive(coeffs: Sequence[int]) -> PowerSeriesTrunc:
    kept = []
    for c in coeffs:
        if c <= 0:
            break
        kept.append(c)
    return PowerSeriesTrunc(tuple(kept))


def froberg_series(n: int, degrees: Sequence[int]) -> PowerSeriesTrunc:
    """|prod (1 - z^d_i) / (1 - z)^n| for n variables and forms of the given degrees."""
    require_positive(n, "n", MODULE)
    degrees = list(degrees)
    for d in degrees:
        require_positive(d, "degree", MODULE)
    if len(degrees) < n:
        raise ValidationError(
            f"Need at least n = {n} forms for an Artinian quotient (got {len(degrees)}).", module=MODULE
        )

    # The untruncated series is a polynomial of degree <= sum(degrees) - n.
    length = sum(degrees) + 1
    coeffs = [0] * length
    coeffs[0] = 1
    for d in degrees:
        for k in range(length - 1, d - 1, -1):
            coeffs[k] -= coeffs[k - d]
    for _ in range(n):
        for k in range(1, length):
            coeffs[k] += coeffs[k - 1]
    return truncate_positive(coeffs)


def series_after_generic_form(series: PowerSeriesTrunc, d: int) -> PowerSeriesTrunc:
    """|(1 - z^d) S(z)| for one more generic form of degree d."""
    require_positive(d, "d", MODULE)
    coeffs = [series[k] - series[k - d] for k in range(len(series) + d)]
    return truncate_positive(coeffs)


def hilbert_after_generic_form(h: HilbertFunction, d: int) -> HilbertFunction:
    """max(h(t) - h(t - d), 0); valid when R/I has the strong Lefschetz property."""
    require_positive(d, "d", MODULE)
    return HilbertFunction(tuple(max(h[t] - h[t - d], 0) for t in range(len(h))))


def is_symmetric(h: HilbertFunction) -> bool:
    return h.is_symmetric()
