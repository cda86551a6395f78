"""Coefficients of the tom Dieck map in the b-generators.

gamma(Y_S) = sum_{r >= 0} b_r sigma_S^(r-1), with sigma_S = sum_{i in S} y_i
and b_0 = 1.  For a monomial Y_{S_1}...Y_{S_d} the coefficient of a
b-monomial B is a sum over placements of B's parts into the d slots (empty
slots take b_0) of prod_t sigma_t^a(t) / prod_t sigma_t.  Only the requested
coefficient is ever built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .gf2poly import Poly, PolyContext
from .linratfun import NotPolynomial, RationalFunction, make_denominator, rat_to_polynomial, sum_fractions
from .repring import RepElement, monomial_chars, monomial_degree


@dataclass(frozen=True)
class BMultiIndex:
    """A monomial in b_1, b_2, ...; stored as sorted (index, multiplicity) pairs."""

    mults: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for r, k in self.mults:
            if r < 1 or k < 1:
                raise ValueError(f"bad factor b_{r}^{k}")

    @classmethod
    def of(cls, *parts: int) -> "BMultiIndex":
        """``BMultiIndex.of(k - 1, 1)`` is b_{k-1} b_1; zeros (b_0) are dropped."""
        if any(p < 0 for p in parts):
            raise ValueError("negative b index")
        counts = Counter(p for p in parts if p)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_mapping(cls, mults: Mapping[int, int]) -> "BMultiIndex":
        return cls(tuple(sorted((r, k) for r, k in mults.items() if k)))

    @property
    def weight(self) -> int:
        return sum(r * k for r, k in self.mults)

    @property
    def size(self) -> int:
        return sum(k for _, k in self.mults)

    def parts(self) -> list[int]:
        out = []
        for r, k in self.mults:
            out.extend([r] * k)
        return out

    def __str__(self):
        if not self.mults:
            return "1"
        return "*".join(f"b{r}" + (f"^{k}" if k > 1 else "") for r, k in self.mults)


def placements(parts: list[int], slots: int) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements of ``parts`` padded with zeros into ``slots`` positions."""
    counts = Counter(parts)
    counts[0] += slots - len(parts)
    if counts[0] < 0:
        raise ValueError("more parts than slots")
    values = sorted(counts)
    current: list[int] = []

    def rec():
        if len(current) == slots:
            yield tuple(current)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                current.append(v)
                yield from rec()
                current.pop()
                counts[v] += 1

    yield from rec()


@lru_cache(maxsize=16384)
def _sigma_power(ctx: PolyContext, mask: int, e: int) -> Poly:
    return ctx.linear_form(mask) ** e


def _product(ctx: PolyContext, key: tuple[tuple[int, int], ...]) -> Poly:
    out = ctx.one()
    for mask, e in key:
        out = out * _sigma_power(ctx, mask, e)
    return out


def b_coefficient(e: RepElement, B: BMultiIndex, ctx: PolyContext | None = None) -> RationalFunction:
    """Coefficient of the b-monomial ``B`` in gamma(e), as a rational function of y."""
    if ctx is None:
        ctx = PolyContext(e.rank)
    elif ctx.nvars != e.rank:
        raise ValueError(f"context has {ctx.nvars} variables, element has rank {e.rank}")
    if not e.monomials:
        return RationalFunction.zero(ctx)
    if not e.is_homogeneous():
        raise ValueError("b_coefficient needs a homogeneous element")
    d = e.degree()
    parts = B.parts()
    if len(parts) > d:
        raise ValueError(f"{B} has {len(parts)} factors but the element has degree {d}")

    # identical (denominator, numerator-product) terms cancel in pairs
    parity: Counter = Counter()
    arrangements = list(placements(parts, d))
    for mono in e.monomials:
        chars = monomial_chars(mono)
        den = tuple(mono)
        for a in arrangements:
            exps: Counter = Counter()
            for mask, r in zip(chars, a):
                if r:
                    exps[mask] += r
            parity[(den, tuple(sorted(exps.items())))] += 1
    pairs = [
        (_product(ctx, key), make_denominator(dict(den)))
        for (den, key), count in parity.items()
        if count & 1
    ]
    return sum_fractions(ctx, pairs)


# -- integrality ----------------------------------------------------------


def b_indices(max_weight: int, max_size: int) -> list[BMultiIndex]:
    """All b-monomials with weight <= max_weight and at most max_size factors."""
    out: list[BMultiIndex] = []

    def rec(remaining: int, largest: int, size_left: int, acc: list[int]):
        out.append(BMultiIndex.of(*acc))
        if not size_left:
            return
        for r in range(min(largest, remaining), 0, -1):
            acc.append(r)
            rec(remaining - r, r, size_left - 1, acc)
            acc.pop()

    rec(max_weight, max_weight, max_size, [])
    out.sort(key=lambda b: (b.weight, b.size, b.mults))
    return out


@dataclass
class IntegralityEntry:
    B: BMultiIndex
    expected: str  # "zero" or "polynomial"
    passed: bool
    value: RationalFunction


@dataclass
class IntegralityReport:
    degree: int
    max_weight: int
    entries: list[IntegralityEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(x.passed for x in self.entries)

    def failures(self) -> list[IntegralityEntry]:
        return [x for x in self.entries if not x.passed]


def check_integrality(e: RepElement, d: int, max_weight: int) -> IntegralityReport:
    """Check that gamma(e) is a power series in y through the given weight.

    Coefficients of weight below ``d`` must vanish (they would have negative
    degree); the rest must be polynomials.
    """
    ctx = PolyContext(e.rank)
    report = IntegralityReport(d, max_weight)
    for B in b_indices(max_weight, d):
        value = b_coefficient(e, B, ctx)
        if B.weight < d:
            report.entries.append(IntegralityEntry(B, "zero", not value, value))
            continue
        try:
            rat_to_polynomial(value)
            passed = True
        except NotPolynomial:
            passed = False
        report.entries.append(IntegralityEntry(B, "polynomial", passed, value))
    return report


def element_degree(e: RepElement) -> int:
    degs = {monomial_degree(m) for m in e.monomials}
    if len(degs) != 1:
        raise ValueError("element is zero or not homogeneous")
    return degs.pop()
