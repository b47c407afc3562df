"""
Reduced Groebner bases in graded revlex, plus the per-degree pivot oracle.

buchberger_reduced() uses the normal selection strategy (pairs with the
lowest lcm degree first), Buchberger's coprime and chain criteria, and a
final interreduction. Inputs must be homogeneous. Two cut-offs apply:

  - degree_cap: pairs above the cap are dropped and the basis is flagged
    `truncated`; it is then only correct up to the cap.
  - saturation: once the leading monomials contain every monomial of some
    degree D, everything of degree > D reduces to zero and is skipped.
    This does not set `truncated`.

degree_slice() and pivot_initial_slice() compute the degree-d part of an
initial ideal by plain linear algebra. They share nothing with Buchberger
beyond the polynomial type, which is what makes them a useful oracle.
"""
from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from sympy import QQ

from .linalg import integer_row, pivot_columns, row_echelon
from .monomial_ideal import MonomialIdeal, minimalize
from .ring import (
    ExponentVector,
    Polynomial,
    VariableContext,
    coprime,
    divides,
    exp_div,
    exp_lcm,
    monomials_of_degree,
    revlex_key,
)
from .validators import ValidationError, require_homogeneous, require_same_context

logger = logging.getLogger(__name__)

MODULE = "groebner-engine"


def _heap_item(exps: ExponentVector) -> tuple:
    # heapq is a min-heap; this key pops the revlex-greatest monomial first.
    return (-sum(exps), tuple(reversed(exps)), exps)


def normal_form(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """
    Full reduction of p by basis.

    The revlex-greatest remaining monomial is always handled next; if some
    leading monomial divides it the term is cancelled, otherwise it moves to
    the remainder. The first reducer in `basis` order wins.
    """
    reducers = [b for b in basis if not b.is_zero()]
    if p.is_zero() or not reducers:
        return p
    for b in reducers:
        require_same_context(p, b, MODULE)
    leads = [(b.leading_monomial(), b) for b in reducers]

    work = dict(p.terms)
    heap = [_heap_item(e) for e in work]
    heapq.heapify(heap)
    queued = set(work)
    remainder = {}

    while heap:
        _, _, e = heapq.heappop(heap)
        queued.discard(e)
        c = work.pop(e, None)
        if c is None:
            continue
        found = next(((lm, b) for lm, b in leads if divides(lm, e)), None)
        if found is None:
            remainder[e] = c
            continue
        lm, b = found
        factor = c / b.terms[lm]
        shift = exp_div(e, lm)
        for m, cb in b.terms.items():
            if m == lm:
                continue
            t = tuple(x + y for x, y in zip(m, shift))
            v = work.get(t, QQ.zero) - factor * cb
            if v != 0:
                work[t] = v
                if t not in queued:
                    heapq.heappush(heap, _heap_item(t))
                    queued.add(t)
            else:
                work.pop(t, None)

    return Polynomial._wrap(p.ctx, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    require_same_context(f, g, MODULE)
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = exp_lcm(lf, lg)
    return f.mul_term(exp_div(lcm, lf), QQ.one / f.leading_coefficient()) - g.mul_term(
        exp_div(lcm, lg), QQ.one / g.leading_coefficient()
    )


@dataclass
class BuchbergerStats:
    """Deterministic work counters; identical inputs give identical counts."""
    pairs_processed: int = 0
    pairs_skipped_coprime: int = 0
    pairs_skipped_chain: int = 0
    pairs_skipped_saturated: int = 0
    pairs_dropped_degree_cap: int = 0
    reductions_to_zero: int = 0
    basis_size_before_interreduction: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class GroebnerBasis:
    ctx: VariableContext
    generators: tuple[Polynomial, ...]
    degree_cap: Optional[int] = None
    truncated: bool = False
    stats: BuchbergerStats = field(default_factory=BuchbergerStats)

    def leading_monomials(self) -> list[ExponentVector]:
        return [g.leading_monomial() for g in self.generators]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.generators)

    def contains(self, p: Polynomial) -> bool:
        """Ideal membership (valid up to degree_cap when truncated)."""
        return self.reduce(p).is_zero()


def _saturation_degree(ctx: VariableContext, leads: Sequence[ExponentVector]) -> Optional[int]:
    """Least D such that every degree-D monomial is a multiple of some lead."""
    pure = [None] * ctx.n
    for lm in leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if pure[i] is None or lm[i] < pure[i]:
                pure[i] = lm[i]
    if any(p is None for p in pure):
        return None
    bound = sum(p - 1 for p in pure) + 1
    start = min(sum(lm) for lm in leads)
    for d in range(start, bound + 1):
        if all(any(divides(lm, m) for lm in leads) for m in monomials_of_degree(ctx, d)):
            return d
    return bound


def _chain_criterion(
    i: int, j: int, leads: Sequence[ExponentVector], pending: set[tuple[int, int]]
) -> bool:
    lcm = exp_lcm(leads[i], leads[j])
    for k, lk in enumerate(leads):
        if k in (i, j) or not divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _interreduce(basis: Sequence[Polynomial]) -> list[Polynomial]:
    leads = [b.leading_monomial() for b in basis]
    minimal = [
        b
        for idx, b in enumerate(basis)
        if not any(j != idx and divides(leads[j], leads[idx]) for j in range(len(basis)))
    ]
    reduced = []
    for idx, b in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(b, others).monic())
    reduced.sort(key=lambda g: revlex_key(g.leading_monomial()), reverse=True)
    return reduced


def buchberger_reduced(gens: Sequence[Polynomial], degree_cap: Optional[int] = None) -> GroebnerBasis:
    """Reduced revlex Groebner basis of the ideal generated by homogeneous `gens`."""
    polys = [p for p in gens if not p.is_zero()]
    if not polys:
        raise ValidationError("Cannot compute a Groebner basis of the zero ideal.", module=MODULE)
    ctx = polys[0].ctx
    for p in polys[1:]:
        require_same_context(polys[0], p, MODULE)
    require_homogeneous(polys, MODULE)

    stats = BuchbergerStats()
    basis: list[Polynomial] = []
    leads: list[ExponentVector] = []
    pending: set[tuple[int, int]] = set()
    seq = itertools.count()
    # (degree, 0 for an input generator / 1 for a pair, insertion order, payload)
    queue: list[tuple] = []
    for p in polys:
        heapq.heappush(queue, (p.degree(), 0, next(seq), p))

    saturated_at: Optional[int] = None
    truncated = False

    while queue:
        deg, kind, _, payload = heapq.heappop(queue)
        if kind == 1:
            pending.discard(payload)
        if saturated_at is not None and deg > saturated_at:
            if kind == 1:
                stats.pairs_skipped_saturated += 1
            continue
        if degree_cap is not None and deg > degree_cap:
            truncated = True
            if kind == 1:
                stats.pairs_dropped_degree_cap += 1
            continue

        if kind == 1:
            i, j = payload
            if _chain_criterion(i, j, leads, pending):
                stats.pairs_skipped_chain += 1
                continue
            stats.pairs_processed += 1
            candidate = s_polynomial(basis[i], basis[j])
        else:
            candidate = payload

        h = normal_form(candidate, basis)
        if h.is_zero():
            stats.reductions_to_zero += 1
            continue

        h = h.monic()
        k = len(basis)
        basis.append(h)
        leads.append(h.leading_monomial())
        for i in range(k):
            if coprime(leads[i], leads[k]):
                stats.pairs_skipped_coprime += 1
                continue
            pair = (i, k)
            pending.add(pair)
            heapq.heappush(queue, (sum(exp_lcm(leads[i], leads[k])), 1, next(seq), pair))
        saturated_at = _saturation_degree(ctx, leads)

    stats.basis_size_before_interreduction = len(basis)
    reduced = _interreduce(basis)
    logger.debug(
        "Groebner basis: %d generators (%d before interreduction), %d pairs reduced, truncated=%s",
        len(reduced),
        len(basis),
        stats.pairs_processed,
        truncated,
    )
    return GroebnerBasis(
        ctx=ctx,
        generators=tuple(reduced),
        degree_cap=degree_cap,
        truncated=truncated,
        stats=stats,
    )


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return minimalize(gb.ctx, gb.leading_monomials())


# ── Degree slices ────────────────────────────────────────────────


@dataclass(frozen=True)
class DegreeSlice:
    """A linearly independent basis of the degree-d part I_d of an ideal."""
    ctx: VariableContext
    degree: int
    basis: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for p in self.basis:
            if p.is_zero() or not p.is_homogeneous() or p.degree() != self.degree:
                raise ValidationError(
                    f"Slice element {p} is not a nonzero form of degree {self.degree}.",
                    module=MODULE,
                )

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def columns(self) -> list[ExponentVector]:
        return monomials_of_degree(self.ctx, self.degree)

    def integer_rows(self) -> list[list[int]]:
        cols = self.columns()
        return [integer_row([p.terms.get(m, QQ.zero) for m in cols]) for p in self.basis]


def degree_slice(gens: Sequence[Polynomial], d: int) -> DegreeSlice:
    """Span of all products m*f (m a monomial) of degree d, reduced to an independent basis."""
    polys = [p for p in gens if not p.is_zero()]
    if not polys:
        raise ValidationError("Cannot slice the zero ideal.", module=MODULE)
    ctx = polys[0].ctx
    for p in polys[1:]:
        require_same_context(polys[0], p, MODULE)
    require_homogeneous(polys, MODULE)

    cols = monomials_of_degree(ctx, d)
    products: list[Polynomial] = []
    for f in polys:
        shift = d - f.degree()
        if shift < 0:
            continue
        for m in monomials_of_degree(ctx, shift):
            products.append(f.mul_term(m))
    rows = [integer_row([p.terms.get(m, QQ.zero) for m in cols]) for p in products]
    ech = row_echelon(rows, len(cols))
    basis = tuple(products[i] for i in sorted(ech.source_rows))
    return DegreeSlice(ctx=ctx, degree=d, basis=basis)


def pivot_initial_slice(slc: DegreeSlice, prescreen: bool = True) -> list[ExponentVector]:
    """
    Degree-d part of the initial ideal, read off as pivot columns.

    Columns are all degree-d monomials in descending revlex, so each echelon
    row's pivot is its leading monomial. Result is descending.
    """
    if not slc.basis:
        return []
    cols = slc.columns()
    ech = pivot_columns(slc.integer_rows(), len(cols), prescreen=prescreen)
    if ech.rank != slc.dimension:
        raise ValidationError(
            f"Degree-{slc.degree} slice basis is linearly dependent (rank {ech.rank} < {slc.dimension}).",
            module=MODULE,
        )
    return [cols[c] for c in ech.pivots]
