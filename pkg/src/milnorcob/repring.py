"""The reduced representation ring of (Z_2)^r over GF(2).

A character is stored as a nonzero bitmask: bit ``i-1`` set means the
generator ``T_i`` acts by -1.  The ring is the polynomial ring on these
characters, so ``Y_S * Y_S`` is a degree-two monomial and is never collapsed
by the group law on characters.

A monomial is a sorted tuple of ``(mask, multiplicity)`` pairs; an element is
a frozenset of monomials (coefficient 1), added by symmetric difference.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_RANK = 32


class RankMismatch(ValueError):
    pass


class EmptyCharacter(ValueError):
    """A pullback sent a character to the trivial one."""


Monomial = tuple  # sorted tuple of (mask, multiplicity)


def char(support: Iterable[int] | int) -> int:
    """Bitmask of a character from its 1-based support."""
    if isinstance(support, int):
        support = (support,)
    mask = 0
    for i in support:
        if not 1 <= i <= MAX_RANK:
            raise ValueError(f"generator index {i} outside 1..{MAX_RANK}")
        mask |= 1 << (i - 1)
    if not mask:
        raise EmptyCharacter("the trivial character is not in the reduced ring")
    return mask


def support(mask: int) -> list[int]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def make_monomial(chars: Iterable[int], rank: int) -> Monomial:
    counts = Counter(chars)
    for mask in counts:
        _check_char(mask, rank)
    return tuple(sorted(counts.items()))


def _check_char(mask: int, rank: int) -> None:
    if mask <= 0:
        raise EmptyCharacter("the trivial character is not in the reduced ring")
    if mask >> rank:
        raise RankMismatch(f"character {support(mask)} outside rank {rank}")


def monomial_degree(mono: Monomial) -> int:
    return sum(k for _, k in mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    counts = Counter(dict(a))
    counts.update(dict(b))
    return tuple(sorted(counts.items()))


def monomial_chars(mono: Monomial) -> list[int]:
    """The monomial's factors with repetition, in canonical order."""
    out = []
    for mask, k in mono:
        out.extend([mask] * k)
    return out


class RepElement:
    """An element of the reduced representation ring of ``(Z_2)^rank``."""

    __slots__ = ("rank", "monomials")

    def __init__(self, rank: int, monomials: Iterable[Monomial] = ()):
        if not 1 <= rank <= MAX_RANK:
            raise ValueError(f"rank must lie in 1..{MAX_RANK}, got {rank}")
        self.rank = rank
        if isinstance(monomials, frozenset):
            self.monomials = monomials
        else:
            acc: set = set()
            for m in monomials:
                acc ^= {m}
            self.monomials = frozenset(acc)

    @classmethod
    def monomial(cls, rank: int, chars: Iterable[int]) -> "RepElement":
        return cls(rank, frozenset((make_monomial(chars, rank),)))

    @classmethod
    def generator(cls, rank: int, supp: Iterable[int] | int) -> "RepElement":
        return cls.monomial(rank, [char(supp)])

    @classmethod
    def one(cls, rank: int) -> "RepElement":
        return cls(rank, frozenset(((),)))

    def _check(self, other: "RepElement") -> None:
        if not isinstance(other, RepElement):
            raise TypeError(f"expected RepElement, got {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return RepElement(self.rank, self.monomials ^ other.monomials)

    __radd__ = __add__

    def __mul__(self, other):
        return rep_mul(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.monomials
        if not isinstance(other, RepElement):
            return NotImplemented
        return self.rank == other.rank and self.monomials == other.monomials

    def __hash__(self):
        return hash((self.rank, self.monomials))

    def __bool__(self):
        return bool(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.sorted_monomials())

    def __repr__(self):
        return f"RepElement(rank={self.rank}, {self})"

    def __str__(self):
        return format_element(self)

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=_monomial_key)

    def degrees(self) -> set[int]:
        return {monomial_degree(m) for m in self.monomials}

    def degree(self) -> int | None:
        """Common degree of a homogeneous element; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def characters(self) -> set[int]:
        return {mask for m in self.monomials for mask, _ in m}


def rep_mul(a: RepElement, b: RepElement) -> RepElement:
    a._check(b)
    acc: set = set()
    for x in a.monomials:
        for y in b.monomials:
            acc ^= {monomial_mul(x, y)}
    return RepElement(a.rank, frozenset(acc))


@dataclass(frozen=True)
class GroupHom:
    """The homomorphism (Z_2)^source_rank -> (Z_2)^n, T_i -> prod_{j : i in S_j} T_j.

    ``images[j-1]`` is the subset ``S_j`` as a bitmask (zero allowed here;
    validity of the resulting action is checked elsewhere).
    """

    images: tuple[int, ...]
    source_rank: int

    def __post_init__(self):
        if not 1 <= self.source_rank <= MAX_RANK:
            raise ValueError(f"rank must lie in 1..{MAX_RANK}")
        for s in self.images:
            if s < 0 or s >> self.source_rank:
                raise ValueError(f"subset {support(s)} outside 1..{self.source_rank}")

    @classmethod
    def from_subsets(cls, subsets: Sequence[Iterable[int]], source_rank: int | None = None) -> "GroupHom":
        masks = []
        for s in subsets:
            m = 0
            for i in s:
                if i < 1:
                    raise ValueError(f"generator index {i} must be positive")
                m |= 1 << (i - 1)
            masks.append(m)
        if source_rank is None:
            source_rank = max((m.bit_length() for m in masks), default=1) or 1
        return cls(tuple(masks), source_rank)

    @classmethod
    def identity(cls, n: int) -> "GroupHom":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def target_rank(self) -> int:
        return len(self.images)

    def subsets(self) -> list[list[int]]:
        return [support(s) for s in self.images]

    def pull_char(self, mask: int) -> int:
        out = 0
        for t in support(mask):
            out ^= self.images[t - 1]
        return out


def pullback(e: RepElement, h: GroupHom) -> RepElement:
    """Replace each ``Y_T`` by ``Y_{symmetric difference of S_t, t in T}``."""
    if e.rank != h.target_rank:
        raise RankMismatch(f"element of rank {e.rank} vs hom into rank {h.target_rank}")
    cache: dict[int, int] = {}
    acc: set = set()
    for mono in e.monomials:
        counts: Counter = Counter()
        for mask, k in mono:
            img = cache.get(mask)
            if img is None:
                img = h.pull_char(mask)
                if not img:
                    raise EmptyCharacter(
                        f"Y{format_support(mask)} pulls back to the trivial character"
                    )
                cache[mask] = img
            counts[img] += k
        acc ^= {tuple(sorted(counts.items()))}
    return RepElement(h.source_rank, frozenset(acc))


# -- text form ------------------------------------------------------------


def format_support(mask: int) -> str:
    return "{" + ",".join(str(i) for i in support(mask)) + "}"


def _char_key(mask: int):
    s = support(mask)
    return (len(s), s)


def _monomial_key(mono: Monomial):
    return (monomial_degree(mono), sorted((_char_key(m), -k) for m, k in mono))


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    for mask, k in sorted(mono, key=lambda mk: _char_key(mk[0])):
        parts.append(f"Y{format_support(mask)}" + (f"^{k}" if k > 1 else ""))
    return "".join(parts)


def format_element(e: RepElement) -> str:
    if not e.monomials:
        return "0"
    return " + ".join(format_monomial(m) for m in e.sorted_monomials())


_CHAR = re.compile(r"Y\{([\d,\s]*)\}(?:\^(\d+))?")


def parse_monomial(text: str, rank: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return ()
    chars = []
    pos = 0
    for m in _CHAR.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        idx = [int(x) for x in m.group(1).split(",") if x.strip()]
        chars.extend([char(idx)] * int(m.group(2) or 1))
    if text[pos:].strip() or not chars:
        raise ValueError(f"cannot parse {text!r}")
    return make_monomial(chars, rank)


def parse_element(text: str, rank: int) -> RepElement:
    text = text.strip()
    if text == "0":
        return RepElement(rank)
    return RepElement(rank, (parse_monomial(t, rank) for t in text.split("+")))
