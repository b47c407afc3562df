"""
Monomial ideals given by their minimal generators.

Membership, strong stability, Hilbert functions of R/I and restriction to the
first variables. Everything here is combinatorial; no coefficients involved.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .ring import ExponentVector, VariableContext, divides, monomials_of_degree, revlex_key
from .validators import NotArtinianError, ValidationError, require_same_length

logger = logging.getLogger(__name__)

MODULE = "monomial-ideal"


def generator_order(g: ExponentVector) -> tuple:
    """Sort key: x^2, x*y, y^2, then the cubes, and so on."""
    return (sum(g), tuple(reversed(g)))


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Ideal generated by monomials.

    `min_gens` is the unique minimal generating set, stored by ascending
    degree and descending revlex within a degree. Build instances with
    minimalize() unless the input is known to be an antichain already; the
    constructor rejects redundant generators.
    """
    ctx: VariableContext
    min_gens: tuple[ExponentVector, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted({tuple(g) for g in self.min_gens}, key=generator_order))
        for g in gens:
            if len(g) != self.ctx.n or any(e < 0 for e in g):
                raise ValidationError(
                    f"Generator {g} does not fit ring {list(self.ctx.names)}", module=MODULE
                )
        for a in gens:
            for b in gens:
                if a != b and divides(a, b):
                    raise ValidationError(
                        f"Generators are not minimal: {self.ctx.format_monomial(a)} divides "
                        f"{self.ctx.format_monomial(b)}",
                        module=MODULE,
                    )
        object.__setattr__(self, "min_gens", gens)

    def contains(self, m: ExponentVector) -> bool:
        return any(divides(g, m) for g in self.min_gens)

    def __contains__(self, m: object) -> bool:
        return isinstance(m, tuple) and self.contains(m)

    def generators_of_degree(self, d: int) -> list[ExponentVector]:
        return [g for g in self.min_gens if sum(g) == d]

    def generator_degrees(self) -> list[int]:
        return sorted({sum(g) for g in self.min_gens})

    def pure_power(self, i: int) -> Optional[int]:
        """Exponent e with x_i^e a minimal generator, or None."""
        for g in self.min_gens:
            if g[i] and sum(g) == g[i]:
                return g[i]
        return None

    def missing_pure_power(self) -> Optional[int]:
        """Index of the first variable with no pure power in the ideal."""
        for i in range(self.ctx.n):
            if self.pure_power(i) is None:
                return i
        return None

    def is_artinian(self) -> bool:
        return self.missing_pure_power() is None

    def is_unit(self) -> bool:
        return (0,) * self.ctx.n in self.min_gens

    def generator_strings(self) -> list[str]:
        return [self.ctx.format_monomial(g) for g in self.min_gens]

    def __str__(self) -> str:
        return "(" + ", ".join(self.generator_strings()) + ")"


def membership(ideal: MonomialIdeal, m: ExponentVector) -> bool:
    require_same_length(m, ideal.ctx.unit(0), MODULE)
    return ideal.contains(m)


def minimalize(ctx: VariableContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    unique = sorted({tuple(int(e) for e in g) for g in gens}, key=lambda g: (sum(g), revlex_key(g)))
    kept: list[ExponentVector] = []
    for g in unique:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(ctx, tuple(kept))


# ── Strong stability ─────────────────────────────────────────────


@dataclass(frozen=True)
class StabilityCheck:
    holds: bool
    generator: Optional[ExponentVector] = None
    swapped: Optional[ExponentVector] = None

    def __bool__(self) -> bool:
        return self.holds


def is_strongly_stable(ideal: MonomialIdeal) -> StabilityCheck:
    """
    Check x_i * m / x_j in I for every minimal generator m, x_j | m and i < j.

    Checking minimal generators suffices. On failure, the witness is the
    first generator in descending revlex, then smallest j, then smallest i.
    """
    for m in sorted(ideal.min_gens, key=revlex_key, reverse=True):
        for j, ej in enumerate(m):
            if not ej:
                continue
            for i in range(j):
                swapped = list(m)
                swapped[j] -= 1
                swapped[i] += 1
                swapped_t = tuple(swapped)
                if not ideal.contains(swapped_t):
                    return StabilityCheck(False, m, swapped_t)
    return StabilityCheck(True)


def borel_closure(ctx: VariableContext, monomials: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    seen: set[ExponentVector] = set()
    stack = [tuple(m) for m in monomials]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for j, ej in enumerate(m):
            if not ej:
                continue
            for i in range(j):
                moved = list(m)
                moved[j] -= 1
                moved[i] += 1
                stack.append(tuple(moved))
    return minimalize(ctx, seen)


# ── Hilbert functions ────────────────────────────────────────────


@dataclass(frozen=True)
class HilbertFunction:
    """h(d) = dim (R/I)_d for d = 0..len-1; zero beyond. Trailing zeros trimmed."""
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        if any(v < 0 for v in vals):
            raise ValidationError(f"Negative Hilbert function value in {vals}", module=MODULE)
        object.__setattr__(self, "values", tuple(vals))

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.values):
            return self.values[d]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        """Largest d with h(d) != 0 (-1 for the zero algebra)."""
        return len(self.values) - 1

    def total(self) -> int:
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def is_unimodal(self) -> bool:
        peak = self.values.index(max(self.values)) if self.values else 0
        up = self.values[: peak + 1]
        down = self.values[peak:]
        return all(a <= b for a, b in zip(up, up[1:])) and all(a >= b for a, b in zip(down, down[1:]))

    def as_list(self) -> list[int]:
        return list(self.values)


def standard_monomials(ideal: MonomialIdeal, d: int) -> list[ExponentVector]:
    """Degree-d monomials outside the ideal, descending revlex."""
    return [m for m in monomials_of_degree(ideal.ctx, d) if not ideal.contains(m)]


def hilbert_function(ideal: MonomialIdeal) -> HilbertFunction:
    missing = ideal.missing_pure_power()
    if missing is not None:
        name = ideal.ctx.names[missing]
        raise NotArtinianError(
            f"No power of {name} lies in the ideal; R/I is not finite-dimensional.",
            module=MODULE,
            variable=name,
        )
    values: list[int] = []
    d = 0
    while True:
        count = len(standard_monomials(ideal, d))
        if count == 0:
            break
        values.append(count)
        d += 1
    return HilbertFunction(tuple(values))


def restrict_to_first(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """
    Image of the ideal under x_{i+2}, ..., x_n -> 0, in the first i+1 variables.

    Requires 1 <= i <= n-1; i = n-1 returns the ideal unchanged.
    """
    n = ideal.ctx.n
    if not 1 <= i <= n - 1:
        raise ValidationError(f"Restriction index must satisfy 1 <= i <= {n - 1} (got {i}).", module=MODULE)
    keep = i + 1
    gens = [g[:keep] for g in ideal.min_gens if not any(g[keep:])]
    return minimalize(ideal.ctx.first(keep), gens)
