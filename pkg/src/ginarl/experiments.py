"""
Randomized suites and instance checks for the structural theorems.

Each function returns a list of row dataclasses (flat fields only, so
`pandas.DataFrame([r.as_dict() for r in rows])` works) and takes a
`show_progress` flag for a tqdm bar. All randomness flows from the `seed`
argument through numpy Generators.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from tqdm import tqdm

from .gin import (
    GinConfig,
    compute_gin,
    complete_intersection,
    hilbert_function_from_slices,
    oracle_compare,
    random_coordinate_change,
    random_forms,
    trial_rng,
)
from .lefschetz import arl_check_direct, arl_check_profile, mainthm_analyze, satisfies_degree_bound, slp_check, ssp_check
from .monomial_ideal import MonomialIdeal, borel_closure, hilbert_function
from .profile import f_profile, reconstruct_from_profile, verify_profile
from .ring import Polynomial, VariableContext, monomials_of_degree
from .series import froberg_series

logger = logging.getLogger(__name__)


def _progress(items: Iterable, show: bool, desc: str) -> Iterable:
    return tqdm(items, desc=desc, leave=False) if show else items


class _Row:
    def as_dict(self) -> dict:
        return asdict(self)  # type: ignore[call-overload]


# ── Random inputs ────────────────────────────────────────────────


def random_strongly_stable_ideal(
    ctx: VariableContext, rng: np.random.Generator, max_socle: int = 7, extra_generators: int = 4
) -> MonomialIdeal:
    """
    Borel closure of x_n^a and a few random monomials of degree <= a.

    x_n^a forces every degree-a monomial into the ideal, so the result is
    Artinian with socle degree <= a - 1 <= max_socle.
    """
    a = int(rng.integers(2, max_socle + 2))
    seeds = [ctx.unit(ctx.n - 1, a)]
    for _ in range(int(rng.integers(1, extra_generators + 1))):
        d = int(rng.integers(1, a + 1))
        monos = monomials_of_degree(ctx, d)
        seeds.append(monos[int(rng.integers(0, len(monos)))])
    return borel_closure(ctx, seeds)


def random_artinian_forms(
    ctx: VariableContext, rng: np.random.Generator, max_degree: int = 6, coeff_bound: int = 50
) -> list[Polynomial]:
    """n random dense forms (plus possibly one more) of degrees in 1..max_degree."""
    count = ctx.n + int(rng.integers(0, 2))
    degrees = [int(d) for d in rng.integers(1, max_degree + 1, size=count)]
    return random_forms(ctx, degrees, rng, coeff_bound)


def nondecreasing_degree_tuples(n: int, max_degree: int) -> list[tuple[int, ...]]:
    """All (d_1 <= ... <= d_n) with 1 <= d_i <= max_degree."""
    if n == 0:
        return [()]
    out = []
    for rest in nondecreasing_degree_tuples(n - 1, max_degree):
        start = rest[-1] if rest else 1
        out.extend(rest + (d,) for d in range(start, max_degree + 1))
    return out


# ── Rows ─────────────────────────────────────────────────────────


@dataclass(frozen=True)
class EquivalenceRow(_Row):
    n: int
    ideal: str
    socle_degree: int
    arl_direct: bool
    arl_profile: bool
    conditions_hold: bool
    slp: bool
    ssp: bool
    profile_round_trip: bool
    profile_problems: int

    @property
    def consistent(self) -> bool:
        return (
            self.arl_direct == self.arl_profile == self.conditions_hold
            and self.profile_round_trip
            and self.profile_problems == 0
        )


@dataclass(frozen=True)
class GinRow(_Row):
    n: int
    degrees: str
    gin: str
    trials_used: int
    arl: bool
    slp: bool
    ssp: bool
    symmetric: bool
    hilbert_function: str
    hilbert_preserved: bool
    oracle_agree: Optional[bool]


@dataclass(frozen=True)
class GenericIntersectionRow(_Row):
    degrees: str
    gin: str
    monomial_gin: str
    same_gin: bool
    hilbert_function: str
    froberg_series: str
    froberg_matches: bool
    degree_bound: bool
    arl: bool
    oracle_agree: Optional[bool] = None


def _format_degrees(degrees: Sequence[int]) -> str:
    return ",".join(str(d) for d in degrees)


# ── Suites over strongly stable ideals ───────────────────────────


def _equivalence_row(ideal: MonomialIdeal) -> EquivalenceRow:
    profile = f_profile(ideal)
    report = mainthm_analyze(ideal)
    return EquivalenceRow(
        n=ideal.ctx.n,
        ideal=str(ideal),
        socle_degree=profile.socle_degree,
        arl_direct=arl_check_direct(ideal).holds,
        arl_profile=arl_check_profile(profile).holds,
        conditions_hold=report.conditions_hold,
        slp=slp_check(profile).holds,
        ssp=ssp_check(profile).holds,
        profile_round_trip=reconstruct_from_profile(profile) == ideal,
        profile_problems=len(verify_profile(profile, ideal)),
    )


def strongly_stable_suite(
    count: int = 200,
    seed: int = 0,
    min_vars: int = 2,
    max_vars: int = 4,
    max_socle: int = 7,
    show_progress: bool = False,
) -> list[EquivalenceRow]:
    """Direct ARL vs profile ARL vs the two-condition decomposition on random Borel ideals."""
    rng = np.random.default_rng(seed)
    rows = []
    for _ in _progress(range(count), show_progress, "strongly stable"):
        n = int(rng.integers(min_vars, max_vars + 1))
        ideal = random_strongly_stable_ideal(VariableContext.standard(n), rng, max_socle=max_socle)
        rows.append(_equivalence_row(ideal))
    logger.info(
        "%d random strongly stable ideals, %d ARL, %d inconsistent",
        len(rows),
        sum(r.arl_direct for r in rows),
        sum(not r.consistent for r in rows),
    )
    return rows


def three_variable_suite(
    count: int = 100, seed: int = 0, max_socle: int = 7, show_progress: bool = False
) -> list[EquivalenceRow]:
    """In three variables SLP and ARL coincide; rows carry both."""
    return strongly_stable_suite(
        count=count, seed=seed, min_vars=3, max_vars=3, max_socle=max_socle, show_progress=show_progress
    )


# ── Suites that compute gins ─────────────────────────────────────


def _oracle_agrees(gens: Sequence[Polynomial], gin: MonomialIdeal, config: GinConfig) -> bool:
    # Draw index max_trials is past every acceptance trial.
    g, _ = random_coordinate_change(gens[0].ctx, trial_rng(config.seed, config.max_trials), config.coeff_bound)
    return oracle_compare(gens, gin, g, prescreen=config.modular_prescreen) is None


def _gin_row(
    gens: Sequence[Polynomial],
    degrees: Sequence[int],
    config: GinConfig,
    check_oracle: bool,
) -> GinRow:
    ctx = gens[0].ctx
    result = compute_gin(gens, config)
    profile = f_profile(result.gin)
    h = hilbert_function(result.gin)
    oracle_agree = _oracle_agrees(gens, result.gin, config) if check_oracle else None
    return GinRow(
        n=ctx.n,
        degrees=_format_degrees(degrees),
        gin=str(result.gin),
        trials_used=result.trials_used,
        arl=arl_check_direct(result.gin).holds,
        slp=slp_check(profile).holds,
        ssp=ssp_check(profile).holds,
        symmetric=h.is_symmetric(),
        hilbert_function=",".join(str(v) for v in h),
        hilbert_preserved=hilbert_function_from_slices(gens) == h,
        oracle_agree=oracle_agree,
    )


def two_variable_suite(
    count: int = 100,
    seed: int = 0,
    max_degree: int = 6,
    config: Optional[GinConfig] = None,
    check_oracle: bool = False,
    show_progress: bool = False,
) -> list[GinRow]:
    """gin of random Artinian ideals in two variables; every one should be ARL."""
    config = config or GinConfig()
    ctx = VariableContext.standard(2)
    rng = np.random.default_rng(seed)
    rows = []
    for _ in _progress(range(count), show_progress, "two variables"):
        gens = random_artinian_forms(ctx, rng, max_degree=max_degree)
        rows.append(_gin_row(gens, [p.degree() for p in gens], config, check_oracle))
    return rows


def monomial_complete_intersections(
    max_vars: int = 4,
    max_degree: int = 4,
    config: Optional[GinConfig] = None,
    check_oracle: bool = False,
    show_progress: bool = False,
) -> list[GinRow]:
    """
    gin of every (x_1^d_1, ..., x_n^d_n) with n <= max_vars, d_i <= max_degree.

    gin depends only on the multiset of degrees, so only nondecreasing tuples
    are computed. Every row should have SSP and a symmetric Hilbert function.
    """
    config = config or GinConfig()
    cases = [
        degrees
        for n in range(1, max_vars + 1)
        for degrees in nondecreasing_degree_tuples(n, max_degree)
    ]
    rows = []
    for degrees in _progress(cases, show_progress, "complete intersections"):
        ctx = VariableContext.standard(len(degrees))
        rows.append(_gin_row(complete_intersection(ctx, degrees), degrees, config, check_oracle))
    return rows


def degree_bound_instance(
    degrees: Sequence[int] = (2, 2, 2, 5), config: Optional[GinConfig] = None, check_oracle: bool = False
) -> GinRow:
    """gin of the monomial complete intersection with the given degrees."""
    config = config or GinConfig()
    ctx = VariableContext.standard(len(degrees))
    return _gin_row(complete_intersection(ctx, degrees), degrees, config, check_oracle)


def generic_intersection_instance(
    degrees: Sequence[int] = (2, 2, 2, 5),
    seed: int = 0,
    coeff_bound: int = 1000,
    config: Optional[GinConfig] = None,
    check_oracle: bool = False,
) -> GenericIntersectionRow:
    """
    Random dense forms vs the monomial complete intersection of the same degrees.

    The gins should coincide, and the Hilbert function should match the
    truncated series. With check_oracle the generic gin is also recomputed
    degree by degree by the pivot oracle.
    """
    config = config or GinConfig()
    ctx = VariableContext.standard(len(degrees))
    forms = random_forms(ctx, degrees, np.random.default_rng(seed), coeff_bound)
    generic = compute_gin(forms, config)
    monomial = compute_gin(complete_intersection(ctx, degrees), config)
    h = hilbert_function(generic.gin)
    series = froberg_series(ctx.n, degrees)
    oracle_agree = _oracle_agrees(forms, generic.gin, config) if check_oracle else None
    return GenericIntersectionRow(
        degrees=_format_degrees(degrees),
        gin=str(generic.gin),
        monomial_gin=str(monomial.gin),
        same_gin=generic.gin == monomial.gin,
        hilbert_function=",".join(str(v) for v in h),
        froberg_series=str(series).replace(" ", ""),
        froberg_matches=h.as_list() == list(series.coeffs),
        degree_bound=satisfies_degree_bound(degrees),
        arl=arl_check_direct(generic.gin).holds,
        oracle_agree=oracle_agree,
    )

