"""Sparse multivariate polynomials over GF(2).

A polynomial is the set of monomials carrying coefficient 1.  Monomials are
packed into a single Python int: the exponent of ``y_i`` lives in a
fixed-width bit field, with one spare guard bit per field so that monomial
multiplication (integer addition) can detect exponent overflow.

Addition is symmetric difference of monomial sets; multiplication toggles
each pairwise product in and out of the result.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence


class ContextMismatch(ValueError):
    """Operands belong to different variable contexts."""


class ExponentOverflow(OverflowError):
    """An exponent exceeded the context's configured maximum."""


class NotDivisible(ArithmeticError):
    """The polynomial is not a multiple of the requested linear form."""


class PolyContext:
    """Ambient ring GF(2)[y_1, ..., y_r].

    ``exp_bits`` fixes the exponent cap at ``2**exp_bits - 1``.  Two contexts
    compare equal when they have the same variable count and cap.
    """

    __slots__ = ("nvars", "exp_bits", "width", "field_mask", "guard", "max_exp")

    def __init__(self, nvars: int, exp_bits: int = 16):
        if nvars < 1:
            raise ValueError(f"need at least one variable, got {nvars}")
        if not 1 <= exp_bits <= 30:
            raise ValueError(f"exp_bits must lie in [1, 30], got {exp_bits}")
        self.nvars = nvars
        self.exp_bits = exp_bits
        self.width = exp_bits + 1
        self.field_mask = (1 << exp_bits) - 1
        self.max_exp = self.field_mask
        guard = 0
        for i in range(nvars):
            guard |= 1 << (i * self.width + exp_bits)
        self.guard = guard

    def __eq__(self, other):
        return (
            isinstance(other, PolyContext)
            and self.nvars == other.nvars
            and self.exp_bits == other.exp_bits
        )

    def __hash__(self):
        return hash((self.nvars, self.exp_bits))

    def __repr__(self):
        return f"PolyContext(nvars={self.nvars}, exp_bits={self.exp_bits})"

    # -- monomial packing -------------------------------------------------

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.nvars:
            raise ValueError(
                f"expected {self.nvars} exponents, got {len(exponents)}"
            )
        mono = 0
        for i, e in enumerate(exponents):
            if e < 0:
                raise ValueError("negative exponent")
            if e > self.max_exp:
                raise ExponentOverflow(f"exponent {e} exceeds {self.max_exp}")
            mono |= e << (i * self.width)
        return mono

    def unpack(self, mono: int) -> tuple[int, ...]:
        w, fm = self.width, self.field_mask
        return tuple((mono >> (i * w)) & fm for i in range(self.nvars))

    def var_mono(self, i: int, exp: int = 1) -> int:
        """Packed monomial ``y_i**exp`` (variables are 1-based)."""
        self.check_var(i)
        if exp > self.max_exp:
            raise ExponentOverflow(f"exponent {exp} exceeds {self.max_exp}")
        return exp << ((i - 1) * self.width)

    def check_var(self, i: int) -> None:
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable y{i} outside y1..y{self.nvars}")

    # -- constructors -----------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, frozenset())

    def one(self) -> "Poly":
        return Poly(self, frozenset((0,)))

    def var(self, i: int) -> "Poly":
        return Poly(self, frozenset((self.var_mono(i),)))

    def monomial(self, exponents: Sequence[int]) -> "Poly":
        return Poly(self, frozenset((self.pack(exponents),)))

    def from_exponents(self, terms: Iterable[Sequence[int]]) -> "Poly":
        """Build a polynomial from exponent vectors; repeats cancel mod 2."""
        acc: set[int] = set()
        for t in terms:
            acc ^= {self.pack(t)}
        return Poly(self, frozenset(acc))

    def linear_form(self, support: Iterable[int] | int) -> "Poly":
        """The polynomial ``sum(y_i for i in support)``.

        ``support`` is either an iterable of 1-based indices or a bitmask
        with bit ``i-1`` standing for ``y_i``.
        """
        return _linear_form(self, _as_mask(support, self.nvars))

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


def _as_mask(support, nvars: int) -> int:
    if isinstance(support, int):
        mask = support
    else:
        mask = 0
        for i in support:
            if not 1 <= i <= nvars:
                raise ValueError(f"index {i} outside 1..{nvars}")
            mask |= 1 << (i - 1)
    if mask <= 0:
        raise ValueError("linear form needs a nonempty support")
    if mask >> nvars:
        raise ValueError(f"support {mask:#b} exceeds {nvars} variables")
    return mask


def mask_indices(mask: int) -> list[int]:
    """1-based indices of the set bits of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@lru_cache(maxsize=4096)
def _linear_form(ctx: PolyContext, mask: int) -> "Poly":
    return Poly(ctx, frozenset(ctx.var_mono(i) for i in mask_indices(mask)))


class Poly:
    """An immutable polynomial over GF(2) in a fixed :class:`PolyContext`."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: PolyContext, terms: frozenset):
        self.ctx = ctx
        self.terms = terms
        self._hash = None

    # -- basic protocol ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other in (0, 1):
            return self.terms == (frozenset((0,)) if other else frozenset())
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.terms))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.one() if other & 1 else self.ctx.zero()
        self._check(other)
        return Poly(self.ctx, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other & 1 else self.ctx.zero()
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly(self.ctx, _mul_terms(self.ctx, self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def square(self) -> "Poly":
        """Frobenius: the square of a GF(2) polynomial is its termwise square."""
        ctx = self.ctx
        terms = frozenset(t << 1 for t in self.terms)
        for t in terms:
            if t & ctx.guard:
                raise ExponentOverflow(f"squaring exceeds exponent cap {ctx.max_exp}")
        return Poly(ctx, terms)

    def shift(self, mono: int) -> "Poly":
        """Multiply by the packed monomial ``mono``."""
        terms = frozenset(t + mono for t in self.terms)
        for t in terms:
            if t & self.ctx.guard:
                raise ExponentOverflow(f"exponent cap {self.ctx.max_exp} exceeded")
        return Poly(self.ctx, terms)

    # -- inspection -------------------------------------------------------

    def exponents(self) -> list[tuple[int, ...]]:
        """Exponent vectors in graded-lex order, highest first."""
        return sorted((self.ctx.unpack(t) for t in self.terms), key=_grlex_key, reverse=True)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(self.ctx.unpack(t)) for t in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(self.ctx.unpack(t)) for t in self.terms}) <= 1

    def max_exponents(self) -> tuple[int, ...]:
        ctx = self.ctx
        w, fm = ctx.width, ctx.field_mask
        return tuple(
            max(((t >> (i * w)) & fm for t in self.terms), default=0)
            for i in range(ctx.nvars)
        )

    def divide_linear(self, support) -> "Poly":
        return divide_by_linear_form(self, support)


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


def _mul_terms(ctx: PolyContext, a: frozenset, b: frozenset) -> frozenset:
    if not a or not b:
        return frozenset()
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        (x,) = a
        out = frozenset(x + y for y in b)
    else:
        acc: set[int] = set()
        for x in a:
            acc.symmetric_difference_update([x + y for y in b])
        out = frozenset(acc)
    guard = ctx.guard
    for t in out:
        if t & guard:
            raise ExponentOverflow(f"product exceeds exponent cap {ctx.max_exp}")
    # a monomial that overflowed and then cancelled mod 2 would slip through
    if len(out) < len(a) * len(b):
        w, fm = ctx.width, ctx.field_mask
        for i in range(ctx.nvars):
            ma = max((x >> (i * w)) & fm for x in a)
            mb = max((y >> (i * w)) & fm for y in b)
            if ma + mb > ctx.max_exp:
                raise ExponentOverflow(f"product exceeds exponent cap {ctx.max_exp}")
    return out


# -- module-level operations ----------------------------------------------


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def linear_form_poly(ctx: PolyContext, support) -> Poly:
    """``sum(y_i for i in support)``; raises ValueError on an empty support."""
    return ctx.linear_form(support)


def divide_by_linear_form(p: Poly, support) -> Poly:
    """Exact quotient ``p / sum(y_i for i in support)``.

    The pivot is the smallest index ``v`` in the support.  Writing ``p`` as a
    polynomial in ``y_v`` with coefficients in the remaining variables, synthetic
    division by ``y_v + rest`` runs Horner's scheme from the top degree down;
    the final remainder is exactly ``p`` with ``y_v := rest`` substituted, so it
    vanishes iff the form divides ``p``.
    """
    ctx = p.ctx
    mask = _as_mask(support, ctx.nvars)
    if not p.terms:
        return p
    idx = mask_indices(mask)
    v = idx[0]
    rest = tuple(ctx.var_mono(i) for i in idx[1:])
    shift = (v - 1) * ctx.width
    fm = ctx.field_mask

    by_deg: dict[int, set[int]] = {}
    for t in p.terms:
        e = (t >> shift) & fm
        by_deg.setdefault(e, set()).add(t - (e << shift))
    top = max(by_deg)

    quotient: set[int] = set()
    carry: set[int] = set()  # current Horner coefficient q_e
    for e in range(top, 0, -1):
        # q_{e-1} = c_e + rest * q_e  (signs collapse in characteristic 2)
        nxt = set(by_deg.get(e, ()))
        for r in rest:
            nxt.symmetric_difference_update([x + r for x in carry])
        carry = nxt
        if carry:
            quotient.update(x + ((e - 1) << shift) for x in carry)
    remainder = set(by_deg.get(0, ()))
    for r in rest:
        remainder.symmetric_difference_update([x + r for x in carry])
    if remainder:
        raise NotDivisible(f"{format_mask(mask)} does not divide the polynomial")
    out = frozenset(quotient)
    for t in out:
        if t & ctx.guard:
            raise ExponentOverflow(f"quotient exceeds exponent cap {ctx.max_exp}")
    return Poly(ctx, out)


def format_mask(mask: int) -> str:
    return "+".join(f"y{i}" for i in mask_indices(mask))


# -- text form ------------------------------------------------------------


def format_monomial(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"y{i}")
        elif e > 1:
            parts.append(f"y{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex terms joined by `` + ``; ``0`` for zero."""
    if not p.terms:
        return "0"
    return " + ".join(format_monomial(e) for e in p.exponents())


_FACTOR = re.compile(r"^y(\d+)(?:\^(\d+))?$")


def parse_poly(ctx: PolyContext, text: str) -> Poly:
    """Inverse of :func:`format_poly`.  Repeated terms cancel mod 2."""
    text = text.strip()
    if text == "0":
        return ctx.zero()
    acc: set[int] = set()
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise ValueError(f"empty term in {text!r}")
        exps = [0] * ctx.nvars
        if term != "1":
            for factor in term.split("*"):
                m = _FACTOR.match(factor.strip())
                if m is None:
                    raise ValueError(f"cannot parse factor {factor!r}")
                i = int(m.group(1))
                ctx.check_var(i)
                exps[i - 1] += int(m.group(2) or 1)
        acc ^= {ctx.pack(exps)}
    return Poly(ctx, frozenset(acc))
