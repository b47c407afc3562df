"""
Generic initial ideals by random coordinate change.

Each trial draws an integer matrix g with entries uniform in
[-coeff_bound, coeff_bound], computes in(g . I) with Buchberger and keeps the
candidate. A candidate is accepted once two trials agree on it and it is
strongly stable. This is probabilistic: a wrong answer needs two
independent draws to land on the same non-generic locus.

Randomness: trial k uses numpy's default_rng seeded by
SeedSequence(entropy=seed, spawn_key=(k,)), i.e. the k-th spawned child of
SeedSequence(seed). Trials are independent and reproducible by index.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .groebner import BuchbergerStats, buchberger_reduced, degree_slice, initial_ideal, pivot_initial_slice
from .linalg import rank
from .monomial_ideal import HilbertFunction, MonomialIdeal, hilbert_function, is_strongly_stable
from .ring import (
    CoordinateChange,
    ExponentVector,
    Polynomial,
    VariableContext,
    apply_change,
    monomials_of_degree,
)
from .validators import (
    ComputationError,
    GinAgreementError,
    NotArtinianError,
    ValidationError,
    require_at_least,
    require_homogeneous,
    require_same_context,
)

logger = logging.getLogger(__name__)

MODULE = "gin-pipeline"

MAX_SINGULAR_DRAWS = 32


@dataclass(frozen=True)
class GinConfig:
    seed: int = 1
    coeff_bound: int = 1000
    max_trials: int = 8
    max_degree: int = 40
    modular_prescreen: bool = True

    def __post_init__(self) -> None:
        require_at_least(self.seed, 0, "seed", MODULE)
        require_at_least(self.coeff_bound, 2, "coeff_bound", MODULE)
        require_at_least(self.max_trials, 2, "max_trials", MODULE)
        require_at_least(self.max_degree, 1, "max_degree", MODULE)


@dataclass(frozen=True)
class GinCertificate:
    strongly_stable: bool
    trials_agreeing: int
    coefficient_bound: int
    seed: int


@dataclass(frozen=True)
class TrialRecord:
    index: int
    singular_draws: int
    candidate: MonomialIdeal
    stats: BuchbergerStats = field(default_factory=BuchbergerStats)


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    trials_used: int
    certificate: GinCertificate
    trials: tuple[TrialRecord, ...] = ()

    def work_counters(self) -> dict[str, int]:
        """Summed Buchberger counters over every trial; deterministic for a fixed seed."""
        totals: dict[str, int] = {"trials": self.trials_used, "singular_draws": 0}
        for record in self.trials:
            totals["singular_draws"] += record.singular_draws
            for key, value in record.stats.as_dict().items():
                totals[key] = totals.get(key, 0) + value
        return totals


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def _is_singular(rows: Sequence[Sequence[int]]) -> bool:
    return rank(rows, len(rows)) < len(rows)


def random_coordinate_change(
    ctx: VariableContext, rng: np.random.Generator, coeff_bound: int
) -> tuple[CoordinateChange, int]:
    """Draw invertible integer matrices; returns the matrix and the number of singular rejects."""
    rejected = 0
    for _ in range(MAX_SINGULAR_DRAWS):
        draw = rng.integers(-coeff_bound, coeff_bound, size=(ctx.n, ctx.n), endpoint=True)
        rows = [[int(v) for v in row] for row in draw]
        if _is_singular(rows):
            rejected += 1
            logger.warning("Rejected a singular coordinate change (%d so far).", rejected)
            continue
        return CoordinateChange.from_rows(ctx, rows), rejected
    raise ComputationError(
        f"All {MAX_SINGULAR_DRAWS} drawn coordinate changes were singular.", module=MODULE
    )


def _prepare(gens: Sequence[Polynomial]) -> tuple[VariableContext, list[Polynomial]]:
    polys = [p for p in gens if not p.is_zero()]
    if not polys:
        raise ValidationError("The ideal needs at least one nonzero generator.", module=MODULE)
    for p in polys[1:]:
        require_same_context(polys[0], p, MODULE)
    require_homogeneous(polys, MODULE)
    return polys[0].ctx, polys


def _transformed_initial_ideal(
    polys: Sequence[Polynomial], g: CoordinateChange, max_degree: int
) -> tuple[MonomialIdeal, BuchbergerStats]:
    transformed = [apply_change(g, p) for p in polys]
    gb = buchberger_reduced(transformed, degree_cap=max_degree)
    candidate = initial_ideal(gb)
    missing = candidate.missing_pure_power()
    if missing is not None:
        name = candidate.ctx.names[missing]
        raise NotArtinianError(
            f"The initial ideal has no power of {name} up to degree {max_degree}; "
            "the input ideal is not Artinian.",
            module=MODULE,
            variable=name,
        )
    if gb.truncated:
        raise ComputationError(
            f"Groebner basis computation reached the degree ceiling {max_degree}.", module=MODULE
        )
    return candidate, gb.stats


def compute_gin(gens: Sequence[Polynomial], config: Optional[GinConfig] = None) -> GinResult:
    """
    gin(I) from seeded random coordinate changes.

    Trials are drawn until two agree on a strongly stable ideal, up to
    `config.max_trials`; otherwise GinAgreementError. A NotArtinianError or a
    degree-ceiling ComputationError in any single trial ends the run at once
    with no further draws: both depend only on the Hilbert function, which
    every coordinate change preserves.
    """
    config = config or GinConfig()
    ctx, polys = _prepare(gens)

    trials: list[TrialRecord] = []
    for k in range(config.max_trials):
        g, singular = random_coordinate_change(ctx, trial_rng(config.seed, k), config.coeff_bound)
        candidate, stats = _transformed_initial_ideal(polys, g, config.max_degree)
        trials.append(TrialRecord(index=k, singular_draws=singular, candidate=candidate, stats=stats))
        logger.debug("Trial %d: %d generators %s", k, len(candidate.min_gens), candidate)

        agreeing = sum(1 for r in trials if r.candidate == candidate)
        if agreeing < 2:
            if k > 0:
                logger.warning("Trial %d disagrees with every earlier trial.", k)
            continue
        if not is_strongly_stable(candidate).holds:
            logger.warning("Trials agree on %s but it is not strongly stable; drawing again.", candidate)
            continue

        logger.info("Accepted gin after %d trials (%d agreeing): %s", k + 1, agreeing, candidate)
        return GinResult(
            gin=candidate,
            trials_used=k + 1,
            certificate=GinCertificate(
                strongly_stable=True,
                trials_agreeing=agreeing,
                coefficient_bound=config.coeff_bound,
                seed=config.seed,
            ),
            trials=tuple(trials),
        )

    distinct = list(dict.fromkeys(str(r.candidate) for r in trials))
    raise GinAgreementError(
        f"No two of {config.max_trials} trials agreed on a strongly stable initial ideal.",
        module=MODULE,
        trials=config.max_trials,
        candidates=distinct,
    )


# ── Per-degree oracle ────────────────────────────────────────────


def gin_degree_slice_oracle(
    gens: Sequence[Polynomial], g: CoordinateChange, d: int, prescreen: bool = True
) -> list[ExponentVector]:
    """Degree-d part of in(g . I) from pivots of a slice basis, no Buchberger involved."""
    _, polys = _prepare(gens)
    transformed = [apply_change(g, p) for p in polys]
    return pivot_initial_slice(degree_slice(transformed, d), prescreen=prescreen)


def hilbert_function_from_slices(gens: Sequence[Polynomial], max_degree: int = 40) -> HilbertFunction:
    """dim R_d - dim I_d for d = 0, 1, ... until it vanishes."""
    ctx, polys = _prepare(gens)
    values = []
    for d in range(max_degree + 1):
        slc = degree_slice(polys, d)
        value = len(monomials_of_degree(ctx, d)) - slc.dimension
        if value == 0:
            return HilbertFunction(tuple(values))
        values.append(value)
    raise NotArtinianError(
        f"Quotient is still nonzero in degree {max_degree}; the ideal is not Artinian.", module=MODULE
    )


@dataclass(frozen=True)
class SliceMismatch:
    degree: int
    expected: tuple[ExponentVector, ...]
    found: tuple[ExponentVector, ...]


def oracle_compare(
    gens: Sequence[Polynomial],
    gin: MonomialIdeal,
    g: CoordinateChange,
    max_degree: Optional[int] = None,
    prescreen: bool = True,
) -> Optional[SliceMismatch]:
    """
    Compare each degree of `gin` with the pivot oracle under g.

    Checks degrees 0 .. max_degree (default: socle degree + 1 of gin) and
    returns the first mismatch, or None when every degree agrees.
    """
    if max_degree is None:
        max_degree = hilbert_function(gin).socle_degree + 1
    for d in range(max_degree + 1):
        expected = tuple(m for m in monomials_of_degree(gin.ctx, d) if gin.contains(m))
        found = tuple(gin_degree_slice_oracle(gens, g, d, prescreen=prescreen))
        if expected != found:
            logger.warning("Pivot oracle disagrees with gin in degree %d.", d)
            return SliceMismatch(d, expected, found)
    return None


# ── Test ideals ──────────────────────────────────────────────────


def complete_intersection(ctx: VariableContext, degrees: Sequence[int]) -> list[Polynomial]:
    """(x_1^d_1, ..., x_r^d_r)."""
    if not 1 <= len(degrees) <= ctx.n:
        raise ValidationError(
            f"A complete intersection in {ctx.n} variables needs 1..{ctx.n} degrees (got {len(degrees)}).",
            module=MODULE,
        )
    for d in degrees:
        require_at_least(d, 1, "degree", MODULE)
    return [Polynomial.monomial(ctx, ctx.unit(i, d)) for i, d in enumerate(degrees)]


def random_forms(
    ctx: VariableContext, degrees: Sequence[int], rng: np.random.Generator, coeff_bound: int = 1000
) -> list[Polynomial]:
    """Dense forms of the given degrees, every coefficient uniform in [-coeff_bound, coeff_bound]."""
    forms = []
    for d in degrees:
        require_at_least(d, 1, "degree", MODULE)
        monos = monomials_of_degree(ctx, d)
        while True:
            coeffs = rng.integers(-coeff_bound, coeff_bound, size=len(monos), endpoint=True)
            form = Polynomial(ctx, {m: int(c) for m, c in zip(monos, coeffs)})
            if not form.is_zero():
                break
        forms.append(form)
    return forms
