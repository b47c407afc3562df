"""
Almost-reverse-lexicographic, strong Lefschetz and strong Stanley checks.

All checks take a strongly stable Artinian monomial ideal (in practice a
gin) or its profile. Witnesses come from fixed scan orders so repeated runs
report the same violation.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import groupby
from typing import Optional, Sequence

from .monomial_ideal import MonomialIdeal, restrict_to_first
from .profile import FProfile, axis, f_profile
from .ring import ExponentVector, monomials_of_degree, revlex_key
from .validators import ComputationError, ValidationError

logger = logging.getLogger(__name__)

MODULE = "lefschetz-analysis"

Tuple = tuple[int, ...]


@dataclass(frozen=True)
class ArlDirectResult:
    holds: bool
    generator: Optional[ExponentVector] = None
    monomial: Optional[ExponentVector] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ArlProfileResult:
    holds: bool
    condition: Optional[int] = None  # 1 = axis inequality, 2 = equal-degree monotonicity
    index: Optional[int] = None
    alpha: Optional[Tuple] = None
    beta: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of an SLP or SSP check; `witness` is the offending alpha in J_{n-1}."""
    holds: bool
    witness: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class MonotonicityResult:
    index: int
    holds: bool
    alpha: Optional[Tuple] = None
    beta: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class RestrictionResult:
    """A property of the restriction of the ideal to its first n - index variables."""
    index: int
    holds: bool
    witness: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class AnalysisReport:
    ideal: MonomialIdeal
    arl_direct: ArlDirectResult
    arl_profile: ArlProfileResult
    slp: PropertyResult
    ssp: PropertyResult
    condition1: tuple[RestrictionResult, ...] = field(default_factory=tuple)
    condition2: tuple[MonotonicityResult, ...] = field(default_factory=tuple)
    ssp_restrictions: tuple[RestrictionResult, ...] = field(default_factory=tuple)

    @property
    def arl(self) -> bool:
        return self.arl_direct.holds

    @property
    def conditions_hold(self) -> bool:
        return all(self.condition1) and all(self.condition2)

    def consistency_violations(self) -> list[str]:
        problems = []
        if self.arl_direct.holds != self.arl_profile.holds:
            problems.append("direct and profile ARL checks disagree")
        if self.arl_direct.holds != self.conditions_hold:
            problems.append("direct ARL check disagrees with the two-condition decomposition")
        if self.ssp.holds and not self.slp.holds:
            problems.append("strong Stanley property holds without the strong Lefschetz property")
        if self.ssp_restrictions and all(self.ssp_restrictions) and not self.arl:
            problems.append("every restriction has the strong Stanley property but the ideal is not ARL")
        return problems


# ── Direct check ─────────────────────────────────────────────────


def arl_check_direct(ideal: MonomialIdeal) -> ArlDirectResult:
    """
    For each generator degree d, every degree-d monomial above the smallest
    degree-d minimal generator must lie in the ideal.
    """
    for d in ideal.generator_degrees():
        smallest = min(ideal.generators_of_degree(d), key=revlex_key)
        floor = revlex_key(smallest)
        for m in monomials_of_degree(ideal.ctx, d):
            if revlex_key(m) <= floor:
                break
            if not ideal.contains(m):
                return ArlDirectResult(False, smallest, m)
    return ArlDirectResult(True)


# ── Profile checks ───────────────────────────────────────────────


def _axis_violation(p: FProfile, i: int) -> Optional[Tuple]:
    """First alpha in J_i with f_{i+1}(0,...,0,|alpha|+1) + 1 > f_{i+1}(alpha)."""
    for alpha in p.j_set(i):
        if p.f(i + 1, axis(i, sum(alpha) + 1)) + 1 > p.f(i + 1, alpha):
            return alpha
    return None


def _monotonicity_violation(p: FProfile, i: int) -> Optional[tuple[Tuple, Tuple]]:
    """First equal-degree pair alpha < beta in J_i with f_{i+1}(beta) > f_{i+1}(alpha)."""
    by_degree = sorted(p.j_set(i), key=lambda a: (sum(a), tuple(-k for k in revlex_key(a)[1])))
    for _, group in groupby(by_degree, key=sum):
        members = list(group)  # descending revlex within the degree
        for b_idx, beta in enumerate(members):
            for alpha in members[b_idx + 1:]:
                if p.f(i + 1, beta) > p.f(i + 1, alpha):
                    return alpha, beta
    return None


def arl_check_profile(p: FProfile) -> ArlProfileResult:
    for i in range(1, p.n):
        alpha = _axis_violation(p, i)
        if alpha is not None:
            return ArlProfileResult(False, condition=1, index=i, alpha=alpha)
        pair = _monotonicity_violation(p, i)
        if pair is not None:
            return ArlProfileResult(False, condition=2, index=i, alpha=pair[0], beta=pair[1])
    return ArlProfileResult(True)


def slp_check(p: FProfile) -> PropertyResult:
    if p.n == 1:
        return PropertyResult(True)
    alpha = _axis_violation(p, p.n - 1)
    return PropertyResult(alpha is None, alpha)


def ssp_check(p: FProfile) -> PropertyResult:
    t = p.socle_degree
    if p.n == 1:
        return PropertyResult(p.f1 == t + 1, None if p.f1 == t + 1 else ())
    for alpha in p.j_set(p.n - 1):
        if p.f(p.n, alpha) != t - 2 * sum(alpha) + 1:
            return PropertyResult(False, alpha)
    return PropertyResult(True)


# ── Two-condition decomposition ──────────────────────────────────


def _restriction_indices(n: int) -> range:
    # n = 2 still reports the i = 0 entry; n = 1 has none.
    if n < 2:
        return range(0)
    return range(max(n - 2, 1))


def mainthm_analyze(ideal: MonomialIdeal) -> AnalysisReport:
    """
    Full report for a strongly stable Artinian ideal.

    Condition (1) for 0 <= i <= n-3: SLP of the ideal restricted to its first
    n-i variables. Condition (2) for 3 <= i <= n-1: f_{i+1} does not
    increase along equal-degree pairs of J_i. The ideal is ARL exactly when
    both hold everywhere; the report refuses to exist otherwise.
    """
    profile = f_profile(ideal)
    n = ideal.ctx.n

    condition1 = []
    ssp_restrictions = []
    for i in _restriction_indices(n):
        restricted = restrict_to_first(ideal, n - i - 1)
        rp = f_profile(restricted)
        slp = slp_check(rp)
        ssp = ssp_check(rp)
        condition1.append(RestrictionResult(i, slp.holds, slp.witness))
        ssp_restrictions.append(RestrictionResult(i, ssp.holds, ssp.witness))

    condition2 = []
    for i in range(3, n):
        pair = _monotonicity_violation(profile, i)
        if pair is None:
            condition2.append(MonotonicityResult(i, True))
        else:
            condition2.append(MonotonicityResult(i, False, pair[0], pair[1]))

    report = AnalysisReport(
        ideal=ideal,
        arl_direct=arl_check_direct(ideal),
        arl_profile=arl_check_profile(profile),
        slp=slp_check(profile),
        ssp=ssp_check(profile),
        condition1=tuple(condition1),
        condition2=tuple(condition2),
        ssp_restrictions=tuple(ssp_restrictions),
    )
    problems = report.consistency_violations()
    if problems:
        raise ComputationError(
            f"Inconsistent analysis of {ideal}: " + "; ".join(problems), module=MODULE
        )
    logger.debug("Analysis of %s: arl=%s slp=%s ssp=%s", ideal, report.arl, report.slp.holds, report.ssp.holds)
    return report


def satisfies_degree_bound(degrees: Sequence[int]) -> bool:
    """
    d_i > d_1 + ... + d_{i-1} - i + 1 for every i >= 4 (1-based).

    Degrees are read in the order given. Complete intersections of generic
    forms meeting this bound have an ARL gin.
    """
    if any(d < 1 for d in degrees):
        raise ValidationError(f"Degrees must be positive (got {list(degrees)}).", module=MODULE)
    ds = list(degrees)
    for i in range(4, len(ds) + 1):
        if not ds[i - 1] > sum(ds[: i - 1]) - i + 1:
            return False
    return True
