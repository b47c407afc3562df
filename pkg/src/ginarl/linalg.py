"""
Exact row reduction over the integers for degree-slice coefficient matrices.

Rows are scaled to primitive integer vectors and eliminated fraction-free:
reducing row r by echelon row e at pivot p replaces r with e[p]*r - r[p]*e,
then divides out the content. No rational arithmetic is needed, and the
pivot columns are exactly those of the rational row-echelon form.

A modular pass (one word-size prime) may order the work, but the returned
echelon form always comes from the exact run.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence

from .ring import MPQ

logger = logging.getLogger(__name__)

PRESCREEN_PRIME = 2_147_483_647


def integer_row(coeffs: Sequence[MPQ]) -> list[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    dens = [int(c.denominator) for c in coeffs if c != 0]
    if not dens:
        return [0] * len(coeffs)
    scale = lcm(*dens)
    row = [int(c.numerator) * (scale // int(c.denominator)) for c in coeffs]
    return _primitive(row)


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        row = [v // g for v in row]
    return row


def _leading_column(row: Sequence[int]) -> Optional[int]:
    for idx, v in enumerate(row):
        if v:
            return idx
    return None


@dataclass(frozen=True)
class EchelonForm:
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]
    source_rows: tuple[int, ...]  # input row that produced each echelon row
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_echelon(
    rows: Sequence[Sequence[int]],
    ncols: int,
    order: Optional[Sequence[int]] = None,
) -> EchelonForm:
    """
    Fraction-free row echelon form.

    Rows are inserted one at a time (in `order` if given). Each incoming row
    is reduced against the current echelon rows by increasing pivot column;
    survivors become new echelon rows, so `source_rows` lists a maximal
    independent subset of the input in insertion order.
    """
    order = list(order) if order is not None else list(range(len(rows)))
    echelon: dict[int, list[int]] = {}
    sources: dict[int, int] = {}

    for idx in order:
        if len(echelon) == ncols:
            break
        r = list(rows[idx])
        if len(r) != ncols:
            raise ValueError(f"Row {idx} has {len(r)} entries, expected {ncols}")
        r = _primitive(r)
        for p in sorted(echelon):
            a = r[p]
            if not a:
                continue
            e = echelon[p]
            b = e[p]
            r = _primitive([b * x - a * y for x, y in zip(r, e)])
        lead = _leading_column(r)
        if lead is None:
            continue
        if r[lead] < 0:
            r = [-v for v in r]
        echelon[lead] = r
        sources[lead] = idx

    pivots = tuple(sorted(echelon))
    return EchelonForm(
        rows=tuple(tuple(echelon[p]) for p in pivots),
        pivots=pivots,
        source_rows=tuple(sources[p] for p in pivots),
        ncols=ncols,
    )


def modular_row_echelon(rows: Sequence[Sequence[int]], ncols: int, prime: int = PRESCREEN_PRIME) -> EchelonForm:
    """Same insertion scheme over Z/pZ with monic pivots."""
    echelon: dict[int, list[int]] = {}
    sources: dict[int, int] = {}
    for idx, raw in enumerate(rows):
        if len(echelon) == ncols:
            break
        r = [v % prime for v in raw]
        for p in sorted(echelon):
            a = r[p]
            if a:
                e = echelon[p]
                r = [(x - a * y) % prime for x, y in zip(r, e)]
        lead = _leading_column(r)
        if lead is None:
            continue
        inv = pow(r[lead], -1, prime)
        echelon[lead] = [(v * inv) % prime for v in r]
        sources[lead] = idx
    pivots = tuple(sorted(echelon))
    return EchelonForm(
        rows=tuple(tuple(echelon[p]) for p in pivots),
        pivots=pivots,
        source_rows=tuple(sources[p] for p in pivots),
        ncols=ncols,
    )


def pivot_columns(rows: Sequence[Sequence[int]], ncols: int, prescreen: bool = True) -> EchelonForm:
    """
    Exact echelon form, optionally ordered by a modular pre-screen.

    The rows independent mod p go first; once they fill every column the
    exact run stops early. The exact result is authoritative either way.
    """
    if not prescreen:
        return row_echelon(rows, ncols)

    modular = modular_row_echelon(rows, ncols)
    candidates = list(modular.source_rows)
    chosen = set(candidates)
    order = candidates + [i for i in range(len(rows)) if i not in chosen]
    exact = row_echelon(rows, ncols, order=order)
    if exact.pivots != modular.pivots:
        logger.warning(
            "Modular pre-screen disagreed with exact elimination (rank %d mod p vs %d exact); "
            "using the exact pivots.",
            modular.rank,
            exact.rank,
        )
    return exact


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return row_echelon(rows, ncols).rank
