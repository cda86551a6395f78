"""Decision procedures: indecomposability certificates, nonbounding, independence.

The indecomposability test is one-directional.  A nonzero coefficient of
b_k or of b_{k-1} b_1 (for some k above the degree) in gamma(eta(class))
proves the class indecomposable; failing to find one proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .gf2poly import PolyContext
from .linratfun import RationalFunction
from .milnor import MilnorAction, eta_fixed_point_sum, validate_pullback_action
from .repring import GroupHom, RepElement
from .tomdieck import BMultiIndex, b_coefficient

SINGLE = "single"
SPLIT = "split"

DEFAULT_POWERS = (8, 16, 32)


@dataclass
class Certificate:
    k: int
    kind: str  # SINGLE for b_k, SPLIT for b_{k-1} b_1
    witness: RationalFunction
    degree: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in (SINGLE, SPLIT):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.k <= self.degree:
            raise ValueError(f"certificate index k={self.k} must exceed degree {self.degree}")
        if not self.witness:
            raise ValueError("certificate witness must be nonzero")

    @property
    def b_index(self) -> BMultiIndex:
        return b_monomial(self.k, self.kind)


def b_monomial(k: int, kind: str) -> BMultiIndex:
    return BMultiIndex.of(k) if kind == SINGLE else BMultiIndex.of(k - 1, 1)


@dataclass
class SearchPolicy:
    k_candidates: tuple[int, ...]

    def __post_init__(self):
        self.k_candidates = tuple(self.k_candidates)
        if not self.k_candidates:
            raise ValueError("search policy needs at least one candidate")

    @classmethod
    def default(cls, m: int, d: int, powers: Sequence[int] = DEFAULT_POWERS) -> "SearchPolicy":
        """k = N + m for N in powers, keeping only k > d, ascending."""
        ks = sorted({N + m for N in powers if N + m > d})
        if not ks:
            raise ValueError(f"no candidate N + {m} exceeds degree {d}")
        return cls(tuple(ks))

    def check(self, d: int) -> None:
        bad = [k for k in self.k_candidates if k <= d]
        if bad:
            raise ValueError(f"candidates {bad} do not exceed the degree {d}")


@dataclass
class IndecomposabilityResult:
    certificate: Certificate | None
    tried: list[tuple[int, str]] = field(default_factory=list)

    @property
    def proven(self) -> bool:
        return self.certificate is not None

    @property
    def verdict(self) -> str:
        return "proven" if self.proven else "inconclusive"


def test_indecomposable(e: RepElement, d: int, policy: SearchPolicy, params: dict | None = None) -> IndecomposabilityResult:
    """Search the policy for a nonzero b_k or b_{k-1} b_1 coefficient.

    Candidates are tried in order, b_k before b_{k-1} b_1; the first nonzero
    coefficient becomes the certificate.
    """
    policy.check(d)
    if e.monomials and e.degree() != d:
        raise ValueError(f"element has degree {e.degree()}, expected {d}")
    result = IndecomposabilityResult(None)
    if not e.monomials:
        return result
    ctx = PolyContext(e.rank)
    for k in policy.k_candidates:
        for kind in (SINGLE, SPLIT):
            if kind == SPLIT and k - 1 < 1:
                continue
            result.tried.append((k, kind))
            value = b_coefficient(e, b_monomial(k, kind), ctx)
            if value:
                result.certificate = Certificate(k, kind, value, d, dict(params or {}))
                return result
    return result


test_indecomposable.__test__ = False  # keep pytest from collecting it


def is_nonbounding(e: RepElement) -> bool:
    """An eta-image is nonzero exactly when the class does not bound."""
    return bool(e.monomials)


def first_subsets(pool: Sequence[int], count: int) -> list[list[int]]:
    """The first ``count`` nonempty subsets of ``pool``, by size then lexicographically."""
    out: list[list[int]] = []
    for size in range(1, len(pool) + 1):
        for combo in combinations(sorted(pool), size):
            if len(out) == count:
                return out
            out.append(list(combo))
    if len(out) < count:
        raise ValueError(f"{sorted(pool)} has only {len(out)} nonempty subsets, need {count}")
    return out


def linind_homs(k: int, i: int, m: int, n: int) -> list[GroupHom]:
    if not (1 <= i <= m <= n - 2):
        raise ValueError(f"need 1 <= i <= m <= n-2, got i={i}, m={m}, n={n}")
    if n > 2 ** (k - i) - 1:
        raise ValueError(f"need n <= 2^(k-i) - 1 = {2 ** (k - i) - 1}, got n={n}")
    tail = first_subsets(range(i + 1, k + 1), n - 1)
    homs = []
    for j in range(1, i + 1):
        h = GroupHom.from_subsets([[j]] + tail, k)
        validate_pullback_action(h)
        homs.append(h)
    return homs


def build_linind_family(k: int, i: int, m: int, n: int) -> list[RepElement]:
    """eta of H(m, n) pulled back along psi_j, S_1 = {j}, S_2.. in {i+1..k}, j = 1..i."""
    return [eta_fixed_point_sum(MilnorAction(m, n, h)) for h in linind_homs(k, i, m, n)]


def gf2_rank(es: Sequence[RepElement]) -> int:
    index: dict = {}
    rows = []
    for e in es:
        v = 0
        for mono in e.monomials:
            v |= 1 << index.setdefault(mono, len(index))
        rows.append(v)
    rank = 0
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                rank += 1
                break
            v ^= pivots[top]
    return rank


def verify_linear_independence(es: Sequence[RepElement]) -> bool:
    """True iff no nonempty subset of ``es`` sums to zero."""
    if not es:
        return True
    rank0 = es[0].rank
    degs = set()
    for e in es:
        if e.rank != rank0:
            raise ValueError("elements have mixed ranks")
        degs |= e.degrees()
    if len(degs) > 1:
        raise ValueError(f"elements have mixed degrees {sorted(degs)}")
    return gf2_rank(es) == len(es)
