"""
Partitions, sl_n dominant weights, permutations and reduced words.

Conventions used throughout the package:

* A partition is a :class:`Partition`, a tuple subclass with trailing zeros
  removed, so ``Partition([2, 1, 0]) == Partition([2, 1]) == (2, 1)``.
* Subsets of ``[n] = {1, ..., n}`` are plain tuples sorted ascending.
* Permutations are tuples in one-line notation with values ``1..n``.
  The word ``(i_1, ..., i_l)`` denotes the product ``s_{i_1} ... s_{i_l}``;
  multiplying by ``s_i`` on the right swaps positions ``i`` and ``i + 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers with no trailing zeros."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for x, y in zip(parts, parts[1:]):
            if y > x:
                raise ValueError(f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts {parts} contain a negative entry")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise ValueError(f"{self} has more than {length} nonzero parts")
        return tuple(self) + (0,) * (length - len(self))

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self[i - 1] if i <= len(self) else 0

    def contains(self, other: Sequence[int]) -> bool:
        """True iff the Young diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form, e.g. ``"12,7,0"``."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition string {text!r}") from None
    return Partition(parts)


def partitions(size: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size``, reverse-lexicographic, optionally bounded."""
    if max_part is None:
        max_part = size
    if max_len is None:
        max_len = size

    def rec(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for p in rec(size, max_part, max_len):
        yield Partition(p)


def partitions_in_box(max_len: int, max_part: int) -> Iterator[Partition]:
    """All partitions with at most ``max_len`` parts, each at most ``max_part``."""
    for parts in itertools.combinations_with_replacement(range(max_part, -1, -1), max_len):
        yield Partition(parts)


def partition_from_subset(subset: Iterable[int]) -> Partition:
    """The partition ``(i_1 - r, i_2 - (r-1), ..., i_r - 1)`` for ``i_1 > ... > i_r``."""
    items = sorted(set(subset), reverse=True)
    if any(i < 1 for i in items):
        raise ValueError(f"subset {items} must contain positive integers")
    r = len(items)
    return Partition(i - (r - k) for k, i in enumerate(items))


def check_subset(subset: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate a subset of ``[n]`` and return it sorted ascending."""
    items = tuple(sorted(subset))
    if len(set(items)) != len(items):
        raise ValueError(f"subset {items} has repeated elements")
    if items and (items[0] < 1 or items[-1] > n):
        raise ValueError(f"subset {items} is not contained in [1, {n}]")
    return items


def complement(subset: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in s)


class Dominance(enum.Enum):
    LEQ = "less-or-equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> Dominance:
    """Compare two partitions in dominance order.

    Unequal sizes give ``INCOMPARABLE``.
    """
    if sum(a) != sum(b):
        return Dominance.INCOMPARABLE
    length = max(len(a), len(b))
    sa = sb = 0
    a_le_b = b_le_a = True
    for i in range(length):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            a_le_b = False
        if sb > sa:
            b_le_a = False
    if a_le_b:
        return Dominance.LEQ
    if b_le_a:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


@dataclass(frozen=True, order=True)
class DominantWeight:
    """Dominant weight of sl_n, stored by its representative with last coordinate 0."""

    rank: int
    rep: Partition

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        if not isinstance(self.rep, Partition):
            object.__setattr__(self, "rep", Partition(self.rep))
        if len(self.rep) >= self.rank:
            raise ValueError(f"{list(self.rep)} has too many parts for sl_{self.rank}")

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "DominantWeight":
        return reduce_mod_ones(v)

    def vector(self) -> tuple[int, ...]:
        return self.rep.padded(self.rank)

    def __str__(self):
        return "(" + ",".join(map(str, self.vector())) + ")"


def reduce_mod_ones(v: Sequence[int]) -> DominantWeight:
    """Canonical representative of a weakly decreasing vector modulo (1, ..., 1)."""
    v = [int(x) for x in v]
    if any(y > x for x, y in zip(v, v[1:])):
        raise ValueError(f"{v} is not weakly decreasing, hence not a dominant weight")
    shift = v[-1]
    return DominantWeight(len(v), Partition(x - shift for x in v))


def parse_weight(text: str, rank: int) -> DominantWeight:
    """Parse ``"12,7,0"`` as a weight of sl_rank; short inputs are zero-padded."""
    try:
        parts = [int(t) for t in text.strip().split(",")] if text.strip() else []
    except ValueError:
        raise ValueError(f"malformed weight string {text!r}") from None
    if len(parts) > rank:
        raise ValueError(f"weight {text!r} has more than {rank} coordinates")
    return reduce_mod_ones(parts + [0] * (rank - len(parts)))


def dominant_weights(rank: int, max_part: int) -> Iterator[DominantWeight]:
    for p in partitions_in_box(rank - 1, max_part):
        yield DominantWeight(rank, p)


# --- permutations -----------------------------------------------------------

def check_permutation(v: Sequence[int]) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if sorted(v) != list(range(1, len(v) + 1)):
        raise ValueError(f"{v} is not a permutation of 1..{len(v)}")
    return v


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inversions(v: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(v)), 2) if v[i] > v[j])


def permutation_of_word(word: Iterable[int], n: int) -> tuple[int, ...]:
    """One-line notation of ``s_{i_1} ... s_{i_l}``."""
    v = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for S_{n}")
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def reduced_word(v: Sequence[int]) -> tuple[int, ...]:
    """Canonical reduced word of ``v`` by selection sort.

    The largest value not yet in place is bubbled right to its position;
    the recorded swaps, read backwards, spell ``v``.
    """
    w = list(check_permutation(v))
    swaps = []
    for value in range(len(w), 0, -1):
        pos = w.index(value) + 1
        while pos < value:
            w[pos - 1], w[pos] = w[pos], w[pos - 1]
            swaps.append(pos)
            pos += 1
    return tuple(reversed(swaps))


def enumerate_reduced_words(v: Sequence[int], limit: int | None = None) -> list[tuple[int, ...]]:
    """Distinct reduced words of ``v`` (up to ``limit`` of them), sorted."""
    v = check_permutation(v)
    words: list[tuple[int, ...]] = []

    # peel right descents: v = (v s_i) s_i whenever v(i) > v(i+1)
    def rec(u, suffix):
        if limit is not None and len(words) >= limit:
            return
        if all(u[k] < u[k + 1] for k in range(len(u) - 1)):
            words.append(suffix)
            return
        for i in range(1, len(u)):
            if u[i - 1] > u[i]:
                w = list(u)
                w[i - 1], w[i] = w[i], w[i - 1]
                rec(tuple(w), (i,) + suffix)

    rec(v, ())
    return sorted(set(words))


def contains_321(v: Sequence[int]) -> bool:
    # largest value seen so far that has a larger value before it
    best_pair_top = None
    max_so_far = 0
    for x in v:
        if best_pair_top is not None and x < best_pair_top:
            return True
        if x < max_so_far:
            best_pair_top = x if best_pair_top is None else max(best_pair_top, x)
        max_so_far = max(max_so_far, x)
    return False


def is_321_avoiding(v: Sequence[int]) -> bool:
    return not contains_321(v)


def permutations_321_avoiding(n: int) -> Iterator[tuple[int, ...]]:
    for v in itertools.permutations(range(1, n + 1)):
        if is_321_avoiding(v):
            yield v
