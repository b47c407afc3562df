"""
Generator profiles of strongly stable Artinian ideals.

For a strongly stable ideal I in x_1 > ... > x_n:

  f_1        = min { t : x_1^t in I }
  f_i(alpha) = min { t : x^alpha * x_i^t in I }   for alpha an (i-1)-tuple
  J_1        = { (a) : 0 <= a < f_1 }
  J_i        = { (alpha, a) : alpha in J_{i-1}, 0 <= a < f_i(alpha) }

J_i is exactly the set of i-tuples alpha with x^alpha outside I, and the
minimal generators of I are x_1^{f_1} together with x^alpha * x_i^{f_i(alpha)}
for alpha in J_{i-1} (some of these may be redundant; reconstruct_from_profile
minimalizes).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from .monomial_ideal import (
    HilbertFunction,
    MonomialIdeal,
    hilbert_function,
    is_strongly_stable,
    minimalize,
)
from .ring import VariableContext, monomials_of_degree, revlex_key
from .validators import ComputationError, NotArtinianError, NotStronglyStableError, ValidationError

logger = logging.getLogger(__name__)

MODULE = "monomial-ideal"

Tuple = tuple[int, ...]


def axis(length: int, m: int) -> Tuple:
    """The axis point (0, ..., 0, m) of the given length."""
    return (0,) * (length - 1) + (m,)


@dataclass(frozen=True)
class FProfile:
    ctx: VariableContext
    f1: int
    # i -> {(i-1)-tuple: f_i}, for 2 <= i <= n
    f_values: Mapping[int, Mapping[Tuple, int]]
    # i -> J_i in descending revlex, for 1 <= i <= n-1
    j_sets: Mapping[int, tuple[Tuple, ...]]
    socle_degree: int

    @property
    def n(self) -> int:
        return self.ctx.n

    def f(self, i: int, alpha: Tuple) -> int:
        if i == 1:
            return self.f1
        try:
            return self.f_values[i][tuple(alpha)]
        except KeyError:
            raise ComputationError(
                f"Profile has no value f_{i}{tuple(alpha)}; it was built without that point.",
                module=MODULE,
            ) from None

    def j_set(self, i: int) -> tuple[Tuple, ...]:
        if i not in self.j_sets:
            raise ComputationError(f"Profile has no set J_{i} (n = {self.n}).", module=MODULE)
        return self.j_sets[i]

    def axis_value(self, i: int, m: int) -> int:
        """f_i at the axis point (0, ..., 0, m) of length i-1."""
        return self.f(i, axis(i - 1, m))


def _first_power(ideal: MonomialIdeal, prefix: Tuple, var: int) -> int:
    """min { t : x^prefix * x_var^t in I } for a 0-based variable index."""
    n = ideal.ctx.n
    base = list(prefix) + [0] * (n - len(prefix))
    bound = ideal.pure_power(var)
    for t in range(bound + 1):
        base[var] = t
        if ideal.contains(tuple(base)):
            return t
    raise ComputationError(f"No finite power found for variable {ideal.ctx.names[var]}.", module=MODULE)


def f_profile(ideal: MonomialIdeal) -> FProfile:
    """
    Profile of a strongly stable Artinian ideal.

    f_i is tabulated on J_{i-1} and on the axis points (0, ..., 0, m) for
    0 <= m <= socle_degree + 1. Off J_{i-1} the prefix may already lie in
    the ideal, in which case f_i = 0.
    """
    ctx = ideal.ctx
    stability = is_strongly_stable(ideal)
    if not stability.holds:
        gen = ctx.format_monomial(stability.generator)
        swapped = ctx.format_monomial(stability.swapped)
        raise NotStronglyStableError(
            f"Ideal is not strongly stable: {gen} is a generator but {swapped} is not in the ideal.",
            module=MODULE,
            generator=gen,
            swapped=swapped,
        )
    missing = ideal.missing_pure_power()
    if missing is not None:
        name = ctx.names[missing]
        raise NotArtinianError(
            f"No power of {name} lies in the ideal; the profile would be infinite.",
            module=MODULE,
            variable=name,
        )

    t = hilbert_function(ideal).socle_degree
    f1 = ideal.pure_power(0)
    f_values: dict[int, dict[Tuple, int]] = {}
    j_sets: dict[int, tuple[Tuple, ...]] = {1: tuple((a,) for a in range(f1 - 1, -1, -1))}

    for i in range(2, ctx.n + 1):
        previous = j_sets[i - 1]
        domain = list(previous) + [axis(i - 1, m) for m in range(t + 2)]
        values = {alpha: _first_power(ideal, alpha, i - 1) for alpha in domain}
        f_values[i] = values
        if i <= ctx.n - 1:
            expanded = [alpha + (a,) for alpha in previous for a in range(values[alpha])]
            j_sets[i] = tuple(sorted(expanded, key=revlex_key, reverse=True))

    logger.debug("Profile: f1=%d, socle degree %d, |J| = %s", f1, t, {i: len(j) for i, j in j_sets.items()})
    return FProfile(ctx=ctx, f1=f1, f_values=f_values, j_sets=j_sets, socle_degree=t)


def _expected_j(p: FProfile, i: int) -> list[Tuple]:
    if i == 1:
        return [(a,) for a in range(p.f1)]
    return [alpha + (a,) for alpha in p.j_sets[i - 1] for a in range(p.f_values[i].get(alpha, -1))]


def reconstruct_from_profile(p: FProfile) -> MonomialIdeal:
    """Minimal generators from f_1 and the f_i on the J sets."""
    n = p.n
    if p.f1 < 1:
        raise ValidationError(f"f_1 must be positive (got {p.f1}).", module=MODULE)
    for i in range(1, n):
        if i not in p.j_sets:
            raise ValidationError(f"Profile is missing J_{i}.", module=MODULE)
        if i >= 2:
            for alpha in p.j_sets[i - 1]:
                if p.f_values.get(i, {}).get(alpha, 0) < 1:
                    raise ValidationError(
                        f"Inconsistent profile: f_{i}{alpha} must be positive on J_{i - 1}.", module=MODULE
                    )
        if set(p.j_sets[i]) != set(_expected_j(p, i)):
            raise ValidationError(f"Inconsistent profile: J_{i} does not follow from f_{i}.", module=MODULE)
    if n >= 2:
        for alpha in p.j_sets[n - 1]:
            if alpha not in p.f_values.get(n, {}):
                raise ValidationError(f"Inconsistent profile: f_{n}{alpha} is undefined.", module=MODULE)

    gens = [(p.f1,) + (0,) * (n - 1)]
    for i in range(2, n + 1):
        for alpha in p.j_sets[i - 1]:
            gens.append(alpha + (p.f_values[i][alpha],) + (0,) * (n - i))
    return minimalize(p.ctx, gens)


def _tuples_up_to(length: int, max_degree: int) -> list[Tuple]:
    ctx = VariableContext.standard(length)
    return [m for d in range(max_degree + 1) for m in monomials_of_degree(ctx, d)]


def verify_profile(p: FProfile, ideal: MonomialIdeal) -> list[str]:
    """
    Consistency checks between a profile and its ideal.

    Returns human-readable violations; an empty list means the profile
    satisfies the J-set membership characterisation, axis closure and bound,
    axis monotonicity, and the two-way count of standard monomials.
    """
    problems: list[str] = []
    n = p.n
    t = p.socle_degree

    for i in range(1, n):
        j_i = set(p.j_set(i))
        for alpha in _tuples_up_to(i, t + 1):
            outside = not ideal.contains(alpha + (0,) * (n - i))
            if (alpha in j_i) != outside:
                problems.append(f"J_{i} membership of {alpha} disagrees with the ideal")

        for alpha in j_i:
            s = sum(alpha)
            ax = axis(i, s)
            if ax not in j_i:
                problems.append(f"J_{i} contains {alpha} but not the axis point {ax}")
            elif p.f(i + 1, alpha) > p.f(i + 1, ax):
                problems.append(f"f_{i + 1}{alpha} exceeds f_{i + 1}{ax}")

        axis_points = sorted(sum(a) for a in j_i if a == axis(i, sum(a)))
        for a in axis_points:
            for b in axis_points:
                if a <= b and a + p.axis_value(i + 1, a) < b + p.axis_value(i + 1, b):
                    problems.append(f"axis monotonicity fails for f_{i + 1} at {a} <= {b}")

    h: HilbertFunction = hilbert_function(ideal)
    if n == 1:
        counted = p.f1
    else:
        counted = sum(p.f(n, alpha) for alpha in p.j_set(n - 1))
    if counted != h.total():
        problems.append(f"standard monomial count {counted} from the profile != {h.total()} from the ideal")
    return problems
