"""
Independent slow oracles used to cross-check ginarl.

Everything here goes through sympy or plain enumeration so it shares no code
path with the engine under test.
"""
from __future__ import annotations

from typing import Sequence

import sympy

from ginarl.monomial_ideal import MonomialIdeal
from ginarl.ring import Polynomial, VariableContext, monomials_of_degree, revlex_key


def symbols(ctx: VariableContext) -> list[sympy.Symbol]:
    return list(sympy.symbols(" ".join(ctx.names), seq=True))


def to_expr(p: Polynomial) -> sympy.Expr:
    syms = symbols(p.ctx)
    expr = sympy.Integer(0)
    for exps, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def from_expr(ctx: VariableContext, expr: sympy.Expr) -> Polynomial:
    poly = sympy.Poly(sympy.expand(expr), *symbols(ctx), domain="QQ")
    return Polynomial(ctx, {exps: sympy.Rational(c) for exps, c in poly.terms()})


def sympy_reduced_basis(gens: Sequence[Polynomial]) -> set[sympy.Expr]:
    """Reduced grevlex basis from sympy, as a set of expanded expressions."""
    ctx = gens[0].ctx
    gb = sympy.groebner([to_expr(p) for p in gens], *symbols(ctx), order="grevlex", domain="QQ")
    return {sympy.expand(e) for e in gb.exprs}


def brute_force_arl(ideal: MonomialIdeal) -> bool:
    """No standard monomial sits above a same-degree minimal generator."""
    for g in ideal.min_gens:
        d = sum(g)
        for m in monomials_of_degree(ideal.ctx, d):
            if not ideal.contains(m) and revlex_key(m) > revlex_key(g):
                return False
    return True


def brute_force_strongly_stable(ideal: MonomialIdeal, max_degree: int) -> bool:
    """Closure under x_j -> x_i (i < j) for every member up to max_degree."""
    n = ideal.ctx.n
    for d in range(max_degree + 1):
        for m in monomials_of_degree(ideal.ctx, d):
            if not ideal.contains(m):
                continue
            for j in range(n):
                if not m[j]:
                    continue
                for i in range(j):
                    moved = list(m)
                    moved[j] -= 1
                    moved[i] += 1
                    if not ideal.contains(tuple(moved)):
                        return False
    return True


def standard_monomial_count(ideal: MonomialIdeal, max_degree: int) -> list[int]:
    return [
        sum(1 for m in monomials_of_degree(ideal.ctx, d) if not ideal.contains(m))
        for d in range(max_degree + 1)
    ]
