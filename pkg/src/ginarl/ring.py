"""
Exact polynomial arithmetic for ginarl.

Polynomials live in R = k[x_1, ..., x_n] over the rationals. Coefficients are
sympy `QQ` elements (gmpy2 `mpq` when available, pure-Python otherwise), so
every zero/nonzero decision is exact. Monomials are dense exponent tuples
against a fixed variable order: position 0 is the greatest variable.

The only term order is graded reverse lexicographic:
  - higher total degree is greater;
  - at equal degree, a > b iff the last nonzero entry of a - b is negative.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

import sympy
from sympy import QQ

from .validators import ValidationError, require_same_context, require_same_length

MODULE = "algebra-core"

MPQ = QQ.dtype
ExponentVector = tuple[int, ...]
CoeffLike = Union[int, Fraction, MPQ, sympy.Rational, str]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_STANDARD_NAMES = ("x", "y", "z", "w")


def to_coeff(value: CoeffLike) -> MPQ:
    """Convert ints, Fractions, sympy Rationals and "p/q" strings to an exact QQ element."""
    if isinstance(value, MPQ):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"Not a coefficient: {value!r}", module=MODULE)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, sympy.Rational):
        return QQ.from_sympy(value)
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        try:
            return QQ(int(num), int(den)) if den else QQ(int(num))
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Invalid rational literal: {value!r}", module=MODULE) from e
    raise ValidationError(f"Not an exact coefficient: {value!r}", module=MODULE)


def coeff_to_str(c: MPQ) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ── Variables ────────────────────────────────────────────────────


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names; names[0] is the greatest variable (x_1)."""
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValidationError("A ring needs at least one variable.", module=MODULE)
        for name in names:
            if not isinstance(name, str) or not _IDENTIFIER.match(name):
                raise ValidationError(f"Invalid variable name: {name!r}", module=MODULE)
        if len(set(names)) != len(names):
            raise ValidationError(f"Duplicate variable names in {list(names)}", module=MODULE)

    @classmethod
    def standard(cls, n: int) -> "VariableContext":
        """x, y, z, w for n <= 4; x1, ..., xn beyond that."""
        if n < 1:
            raise ValidationError(f"Need n >= 1 variables (got {n}).", module=MODULE)
        if n <= len(_STANDARD_NAMES):
            return cls(_STANDARD_NAMES[:n])
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValidationError(f"Undeclared variable: {name}", module=MODULE) from None

    def first(self, k: int) -> "VariableContext":
        """Context of the first k (greatest) variables."""
        if not 1 <= k <= self.n:
            raise ValidationError(f"Cannot keep {k} of {self.n} variables.", module=MODULE)
        return VariableContext(self.names[:k])

    def unit(self, i: int, power: int = 1) -> ExponentVector:
        return tuple(power if j == i else 0 for j in range(self.n))

    def format_monomial(self, exps: ExponentVector) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


# ── Exponent vectors and the term order ──────────────────────────


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def degree(exps: ExponentVector) -> int:
    return sum(exps)


def revlex_key(exps: ExponentVector) -> tuple:
    """Sort key: key(a) > key(b) iff a > b in graded revlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def revlex_compare(a: ExponentVector, b: ExponentVector) -> Ordering:
    require_same_length(a, b, MODULE)
    ka, kb = revlex_key(a), revlex_key(b)
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """True iff the monomial a divides the monomial b."""
    return all(x <= y for x, y in zip(a, b))


def exp_mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def exp_div(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """a / b; caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@lru_cache(maxsize=512)
def _monomials_of_degree(n: int, d: int) -> tuple[ExponentVector, ...]:
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(sorted(out, key=revlex_key, reverse=True))


def monomials_of_degree(ctx: VariableContext, d: int) -> list[ExponentVector]:
    """All degree-d monomials, strictly descending in revlex."""
    if d < 0:
        raise ValidationError(f"Degree must be non-negative (got {d}).", module=MODULE)
    return list(_monomials_of_degree(ctx.n, d))


# ── Polynomials ──────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class Polynomial:
    """
    Sparse polynomial: exponent tuple -> nonzero exact coefficient.

    Instances are immutable; every operation returns a new normalized value.
    The zero polynomial has no terms.
    """
    ctx: VariableContext
    terms: Mapping[ExponentVector, MPQ] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[ExponentVector, MPQ] = {}
        for exps, c in dict(self.terms).items():
            key = tuple(int(e) for e in exps)
            if len(key) != self.ctx.n or any(e < 0 for e in key):
                raise ValidationError(
                    f"Exponent vector {exps} does not fit ring {list(self.ctx.names)}",
                    module=MODULE,
                )
            clean[key] = clean.get(key, QQ.zero) + to_coeff(c)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v != 0})

    @classmethod
    def _wrap(cls, ctx: VariableContext, terms: dict[ExponentVector, MPQ]) -> "Polynomial":
        # Trusted constructor: terms already normalized.
        obj = object.__new__(cls)
        object.__setattr__(obj, "ctx", ctx)
        object.__setattr__(obj, "terms", terms)
        return obj

    # constructors

    @classmethod
    def zero(cls, ctx: VariableContext) -> "Polynomial":
        return cls._wrap(ctx, {})

    @classmethod
    def constant(cls, ctx: VariableContext, c: CoeffLike) -> "Polynomial":
        c = to_coeff(c)
        return cls._wrap(ctx, {(0,) * ctx.n: c} if c != 0 else {})

    @classmethod
    def monomial(cls, ctx: VariableContext, exps: Sequence[int], coeff: CoeffLike = 1) -> "Polynomial":
        return cls(ctx, {tuple(exps): coeff})

    @classmethod
    def variable(cls, ctx: VariableContext, var: Union[str, int]) -> "Polynomial":
        i = ctx.index(var) if isinstance(var, str) else var
        return cls._wrap(ctx, {ctx.unit(i): QQ.one})

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[ExponentVector, MPQ]]:
        return sorted(self.terms.items(), key=lambda t: revlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> ExponentVector:
        if not self.terms:
            raise ValidationError("The zero polynomial has no leading monomial.", module=MODULE)
        return max(self.terms, key=revlex_key)

    def leading_coefficient(self) -> MPQ:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        inv = QQ.one / lc
        return Polynomial._wrap(self.ctx, {e: c * inv for e, c in self.terms.items()})

    # arithmetic

    def scale(self, c: CoeffLike) -> "Polynomial":
        c = to_coeff(c)
        if c == 0:
            return Polynomial.zero(self.ctx)
        return Polynomial._wrap(self.ctx, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exps: ExponentVector, c: CoeffLike = 1) -> "Polynomial":
        c = to_coeff(c)
        if c == 0:
            return Polynomial.zero(self.ctx)
        return Polynomial._wrap(self.ctx, {exp_mul(e, exps): v * c for e, v in self.terms.items()})

    def _coerce(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            require_same_context(self, other, MODULE)
            return other
        return Polynomial.constant(self.ctx, other)  # type: ignore[arg-type]

    def __add__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, QQ.zero) + c
            if v != 0:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._wrap(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        out: dict[ExponentVector, MPQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, QQ.zero) + c1 * c2
        return Polynomial._wrap(self.ctx, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValidationError(f"Exponent must be a non-negative integer (got {k!r}).", module=MODULE)
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def to_string(self) -> str:
        """Human-readable form, terms in descending revlex: `x^2 + 3*x*y - 2/3*y^2`."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for idx, (exps, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = self.ctx.format_monomial(exps)
            if mono == "1":
                body = coeff_to_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{coeff_to_str(mag)}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if sign == "-" else body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, ring={list(self.ctx.names)})"


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def poly_arith(p: Polynomial, q: Polynomial, op: Union[ArithOp, str]) -> Polynomial:
    require_same_context(p, q, MODULE)
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return p + q
    if op is ArithOp.SUB:
        return p - q
    return p * q


# ── Linear changes of coordinates ────────────────────────────────


@dataclass(frozen=True)
class CoordinateChange:
    """
    Invertible n x n rational matrix acting on the variables.

    Row j holds the image of variable j: x_j -> sum_k matrix[j][k] * x_k.
    """
    ctx: VariableContext
    matrix: tuple[tuple[MPQ, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_coeff(c) for c in row) for row in self.matrix)
        n = self.ctx.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValidationError(f"Coordinate change must be {n}x{n}.", module=MODULE)
        object.__setattr__(self, "matrix", rows)
        if self.to_sympy().det(method="bareiss") == 0:
            raise ValidationError("Coordinate change matrix is singular.", module=MODULE)

    @classmethod
    def identity(cls, ctx: VariableContext) -> "CoordinateChange":
        return cls(ctx, tuple(tuple(1 if i == j else 0 for j in range(ctx.n)) for i in range(ctx.n)))

    @classmethod
    def from_rows(cls, ctx: VariableContext, rows: Iterable[Iterable[CoeffLike]]) -> "CoordinateChange":
        return cls(ctx, tuple(tuple(r) for r in rows))

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix([[QQ.to_sympy(c) for c in row] for row in self.matrix])

    def inverse(self) -> "CoordinateChange":
        inv = self.to_sympy().inv()
        return CoordinateChange.from_rows(
            self.ctx, [[QQ.from_sympy(inv[i, j]) for j in range(self.ctx.n)] for i in range(self.ctx.n)]
        )

    def image(self, j: int) -> Polynomial:
        terms = {self.ctx.unit(k): c for k, c in enumerate(self.matrix[j]) if c != 0}
        return Polynomial._wrap(self.ctx, terms)


def apply_change(g: CoordinateChange, p: Polynomial) -> Polynomial:
    """Substitute every variable by its image linear form and expand."""
    require_same_context(g, p, MODULE)
    images = [g.image(j) for j in range(g.ctx.n)]
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(j: int, e: int) -> Polynomial:
        key = (j, e)
        if key not in powers:
            powers[key] = images[j] if e == 1 else power(j, e - 1) * images[j]
        return powers[key]

    result = Polynomial.zero(p.ctx)
    for exps, c in p.terms.items():
        term = Polynomial.constant(p.ctx, c)
        for j, e in enumerate(exps):
            if e:
                term = term * power(j, e)
        result = result + term
    return result
