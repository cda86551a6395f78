"""Milnor hypersurfaces H(m, n) with their coordinate-sign (Z_2)^n action.

H(m, n) = {sum_{j<=m} x_j y_j = 0} in RP^m x RP^n.  Generator T_k negates
x_k (when k <= m) and y_k.  The stationary points are the coordinate points
P_{i,j} with i != j, and the tangent space at P_{i,j} splits into lines whose
characters are read off from the affine chart x_i = 1, y_j = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .repring import GroupHom, RepElement, make_monomial, pullback, support


class InvalidAction(ValueError):
    pass


class FixedPoint(NamedTuple):
    i: int
    j: int


def _check_mn(m: int, n: int) -> None:
    if not (isinstance(m, int) and isinstance(n, int)):
        raise TypeError("m and n must be integers")
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")


def coord_char(a: int, b: int) -> int:
    """Character of the chart coordinate pairing homogeneous slots a != b.

    Slot 0 carries no generator, so the support is {a, b} minus {0}.
    """
    if a == b:
        raise ValueError("coordinate slots must differ")
    return _bit(a) | _bit(b)


def _bit(a: int) -> int:
    return 0 if a == 0 else 1 << (a - 1)


@dataclass(frozen=True)
class MilnorAction:
    """H(m, n) with the standard action, or its pullback along ``hom``."""

    m: int
    n: int
    hom: GroupHom | None = None

    def __post_init__(self):
        _check_mn(self.m, self.n)
        if self.hom is not None:
            if self.hom.target_rank != self.n:
                raise InvalidAction(
                    f"hom has {self.hom.target_rank} subsets, need n={self.n}"
                )
            validate_pullback_action(self.hom)

    @property
    def dim(self) -> int:
        return self.m + self.n - 1

    @property
    def rank(self) -> int:
        return self.n if self.hom is None else self.hom.source_rank


def fixed_points(m: int, n: int) -> list[FixedPoint]:
    _check_mn(m, n)
    return [FixedPoint(i, j) for i in range(m + 1) for j in range(n + 1) if i != j]


def tangential_chars(m: int, n: int, fp: FixedPoint) -> list[int]:
    """Characters of the tangent lines at ``fp``, one per dimension."""
    _check_mn(m, n)
    i, j = fp
    if not (0 <= i <= m and 0 <= j <= n and i != j):
        raise ValueError(f"{fp} is not a stationary point of H({m},{n})")
    chars = []
    if j > m:
        chars += [coord_char(i, l) for l in range(m + 1) if l != i]
        chars += [coord_char(j, l) for l in range(n + 1) if l not in (i, j)]
    else:
        chars += [coord_char(i, l) for l in range(m + 1) if l not in (i, j)]
        chars += [coord_char(j, l) for l in range(n + 1) if l not in (i, j)]
        # the equation identifies the x_j and y_i directions
        chars.append(coord_char(i, j))
    return chars


def tangential_rep(m: int, n: int, fp: FixedPoint) -> RepElement:
    return RepElement.monomial(n, tangential_chars(m, n, fp))


def eta_fixed_point_sum(action: MilnorAction) -> RepElement:
    """Sum of the tangential representations over all stationary points."""
    m, n = action.m, action.n
    acc: set = set()
    for fp in fixed_points(m, n):
        acc ^= {make_monomial(tangential_chars(m, n, fp), n)}
    e = RepElement(n, frozenset(acc))
    if action.hom is not None:
        e = pullback(e, action.hom)
    return e


def eta_closed_formula(m: int, n: int) -> RepElement:
    """The grouped closed form, assembled without reference to fixed points.

        prod_{i<=m} Y_i * sum_j prod_{k != j} Y_{k,j}
      + sum_{i<=m} Y_i prod_{k<=m, k != i} Y_{k,i}
            * (prod_{l != i} Y_l + sum_{j != i} Y_j prod_{l != i,j} Y_{l,j})
    """
    _check_mn(m, n)

    def Y(*idx):
        mask = 0
        for a in idx:
            mask |= 1 << (a - 1)
        return RepElement.monomial(n, [mask])

    def prod(factors):
        out = RepElement.one(n)
        for f in factors:
            out = out * f
        return out

    gens = range(1, n + 1)
    first = prod(Y(i) for i in range(1, m + 1)) * sum(
        (prod(Y(k, j) for k in gens if k != j) for j in gens), RepElement(n)
    )
    second = RepElement(n)
    for i in range(1, m + 1):
        head = Y(i) * prod(Y(k, i) for k in range(1, m + 1) if k != i)
        tail = prod(Y(l) for l in gens if l != i)
        for j in gens:
            if j != i:
                tail = tail + Y(j) * prod(Y(l, j) for l in gens if l not in (i, j))
        second = second + head * tail
    return first + second


def validate_pullback_action(h: GroupHom) -> None:
    """Raise :class:`InvalidAction` unless the subsets are distinct and nonempty."""
    seen: dict[int, int] = {}
    for idx, s in enumerate(h.images, start=1):
        if not s:
            raise InvalidAction(f"S_{idx} is empty")
        if s in seen:
            raise InvalidAction(
                f"S_{seen[s]} and S_{idx} are both {{{','.join(map(str, support(s)))}}}"
            )
        seen[s] = idx


def projective_class(k: int) -> RepElement:
    """Tangential data of RP^k under the coordinate sign flips of (Z_2)^k."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    acc: set = set()
    for i in range(k + 1):
        acc ^= {make_monomial((coord_char(i, l) for l in range(k + 1) if l != i), k)}
    return RepElement(k, frozenset(acc))
