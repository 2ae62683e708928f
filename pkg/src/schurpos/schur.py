"""
Exact arithmetic in the Schur basis and in the sl_n character ring.

Littlewood-Richardson coefficients come from a direct enumeration of LR
tableaux: the content is placed one letter at a time as a horizontal strip,
and the lattice condition on the reverse reading word is enforced row by row
(the number of ``k+1``'s in rows ``1..i`` may not exceed the number of ``k``'s
in rows ``1..i-1``).
"""

from __future__ import annotations

import os
import threading
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .combinatorics import DominantWeight, Partition, reduce_mod_ones
from .ring import HPolynomial

# --- memoization ------------------------------------------------------------


class Memo:
    """Per-process memo table; stops accepting entries once ``cap`` is reached."""

    def __init__(self, cap: int | None = None):
        self.cap = cap
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key, compute: Callable):
        try:
            return self._data[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            if self.cap is None or len(self._data) < self.cap:
                self._data[key] = value
        return value

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


def _env_cap() -> int | None:
    raw = os.environ.get("SCHURPOS_MEMO_CAP")
    return int(raw) if raw else None


_LR_MEMO = Memo(_env_cap())
_PRODUCT_MEMO = Memo(_env_cap())
_H_MONO_MEMO = Memo(_env_cap())
ALL_MEMOS = (_LR_MEMO, _PRODUCT_MEMO, _H_MONO_MEMO)


def set_memo_cap(cap: int | None) -> None:
    for memo in ALL_MEMOS:
        memo.cap = cap
        if cap is not None and len(memo) > cap:
            memo.clear()


# --- vectors ----------------------------------------------------------------


class _Vector:
    """Finite integer combination of basis keys; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        self.terms = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            self._accumulate(self.terms, self._norm_key(k), c)

    @staticmethod
    def _accumulate(d: dict, key, c: int):
        if not c:
            return
        v = d.get(key, 0) + c
        if v:
            d[key] = v
        else:
            del d[key]

    def _norm_key(self, k):
        return k

    def _new(self, terms: dict):
        out = object.__new__(type(self))
        out.terms = terms
        return out

    def __getitem__(self, key):
        return self.terms.get(self._norm_key(key), 0)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            self._accumulate(out, k, c)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return self._new({k: c * v for k, v in self.terms.items()} if c else {})

    def support(self) -> set:
        return set(self.terms)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def negative_terms(self) -> list:
        return sorted((k, c) for k, c in self.terms.items() if c < 0)


class SchurVector(_Vector):
    """Integer combination of Schur functions, keyed by :class:`Partition`."""

    __slots__ = ()

    def _norm_key(self, k):
        return k if isinstance(k, Partition) else Partition(k)

    @classmethod
    def basis(cls, shape: Sequence[int]) -> "SchurVector":
        return cls({Partition(shape): 1})

    def is_homogeneous(self) -> bool:
        return len({p.size for p in self.terms}) <= 1

    def __mul__(self, other: "SchurVector") -> "SchurVector":
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for c, k in schur_product(a, b).terms.items():
                    self._accumulate(out, c, ca * cb * k)
        return self._new(out)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(p), "coeff": c}
            for p, c in sorted(self.terms.items(), key=lambda kv: list(kv[0]))
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SchurVector":
        return cls((Partition(d["partition"]), int(d["coeff"])) for d in data)

    def __repr__(self):
        if not self.terms:
            return "0"
        body = " + ".join(f"{c}*s{list(p)}" for p, c in sorted(self.terms.items(), reverse=True))
        return body.replace("+ -", "- ")


class CharacterVector(_Vector):
    """Integer combination of sl_n characters, keyed by :class:`DominantWeight`."""

    __slots__ = ("rank",)

    def __init__(self, rank: int, terms: Mapping | Iterable = ()):
        self.rank = rank
        super().__init__(terms)

    def _norm_key(self, k):
        if isinstance(k, DominantWeight):
            if k.rank != self.rank:
                raise ValueError(f"weight of rank {k.rank} in a rank {self.rank} character")
            return k
        padded = list(k) + [0] * (self.rank - len(k))
        return reduce_mod_ones(padded)

    def _new(self, terms: dict):
        out = super()._new(terms)
        out.rank = self.rank
        return out

    def __eq__(self, other):
        if not isinstance(other, CharacterVector):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __add__(self, other):
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return super().__add__(other)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(w.vector()), "coeff": c}
            for w, c in sorted(self.terms.items(), key=lambda kv: list(kv[0].vector()))
        ]

    @classmethod
    def from_json(cls, data: list[dict], rank: int | None = None) -> "CharacterVector":
        if rank is None:
            if not data:
                raise ValueError("rank is required to decode an empty character")
            rank = len(data[0]["partition"])
        out = cls(rank)
        for d in data:
            cls._accumulate(out.terms, out._norm_key(d["partition"]), int(d["coeff"]))
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        body = " + ".join(f"{c}*chi{w}" for w, c in sorted(self.terms.items(), reverse=True))
        return body.replace("+ -", "- ")


# --- Littlewood-Richardson rule ---------------------------------------------


def _lr_fill(outer_start: list[int], content: Sequence[int], bound: Callable[[int], int]) -> Iterator[tuple[int, ...]]:
    """Yield final shapes of LR fillings of ``?/outer_start`` with the given content.

    ``bound(i)`` caps the length of row ``i`` (0-based); a row with bound 0
    beyond the current length can never be entered.
    """
    content = [c for c in content if c]
    nletters = len(content)

    def add_strip(shape, prev_counts, letter):
        if letter == nletters:
            yield tuple(shape)
            return
        need = content[letter]
        rows = len(shape) + 1  # a strip may open at most one new row
        base = shape + [0]
        out_counts = [0] * rows

        # prefix budget from the lattice condition, by row
        def rec(i, remaining, placed_prefix, prev_prefix):
            if remaining == 0:
                new = [base[t] + out_counts[t] for t in range(rows)]
                while new and new[-1] == 0:
                    new.pop()
                yield from add_strip(new, out_counts[:], letter + 1)
                return
            if i == rows:
                return
            room = bound(i) - base[i]
            if i > 0:
                room = min(room, base[i - 1] - base[i])
            if letter > 0:
                # cells of this letter in rows <= i are at most previous-letter cells in rows < i
                room = min(room, prev_prefix - placed_prefix)
            room = min(room, remaining)
            next_prev = prev_prefix + (prev_counts[i] if letter > 0 and i < len(prev_counts) else 0)
            for x in range(room, -1, -1):
                out_counts[i] = x
                yield from rec(i + 1, remaining - x, placed_prefix + x, next_prev)
            out_counts[i] = 0

        yield from rec(0, need, 0, 0)

    yield from add_strip(list(outer_start), [], 0)


def lr_coefficient(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient ``c^{c}_{a, b}``."""
    a, b, c = Partition(a), Partition(b), Partition(c)
    if c.size != a.size + b.size or not c.contains(a) or not c.contains(b):
        return 0

    def compute():
        target = tuple(c)
        bound = lambda i: c[i] if i < len(c) else 0
        return sum(1 for shape in _lr_fill(list(a), b, bound) if shape == target)

    return _LR_MEMO.get((a, b, c), compute)


def schur_product(a: Sequence[int], b: Sequence[int], max_rows: int | None = None) -> SchurVector:
    """Expand ``s_a s_b`` in the Schur basis, dropping shapes longer than ``max_rows``."""
    a, b = Partition(a), Partition(b)
    if a.size < b.size:
        a, b = b, a

    def compute():
        big = a.size + b.size + 1
        bound = (lambda i: big) if max_rows is None else (lambda i: big if i < max_rows else 0)
        terms: dict = {}
        if max_rows is not None and (len(a) > max_rows or len(b) > max_rows):
            return SchurVector()
        for shape in _lr_fill(list(a), b, bound):
            key = Partition(shape)
            terms[key] = terms.get(key, 0) + 1
        return SchurVector(terms)

    return _PRODUCT_MEMO.get((a, b, max_rows), compute)


def character_product(l: DominantWeight, m: DominantWeight) -> CharacterVector:
    """Product of sl_n characters, reduced modulo (1, ..., 1)."""
    if l.rank != m.rank:
        raise ValueError(f"rank mismatch: sl_{l.rank} vs sl_{m.rank}")
    n = l.rank
    out = CharacterVector(n)
    for shape, coeff in schur_product(l.rep, m.rep, max_rows=n).terms.items():
        CharacterVector._accumulate(out.terms, reduce_mod_ones(shape.padded(n)), coeff)
    return out


# --- Pieri rule and the h-ring ----------------------------------------------


def horizontal_strips(shape: Sequence[int], k: int, max_rows: int | None = None) -> Iterator[Partition]:
    """All ``b`` containing ``shape`` with ``b / shape`` a horizontal strip of size ``k``."""
    base = list(shape) + [0]
    rows = len(base) if max_rows is None else min(len(base), max_rows)
    add = [0] * rows

    def rec(i, remaining):
        if remaining == 0:
            yield Partition([base[t] + (add[t] if t < rows else 0) for t in range(len(base))])
            return
        if i == rows:
            return
        room = remaining if i == 0 else min(remaining, base[i - 1] - base[i])
        for x in range(room, -1, -1):
            add[i] = x
            yield from rec(i + 1, remaining - x)
        add[i] = 0

    if k < 0:
        return
    yield from rec(0, k)


def pieri_h_multiply(k: int, v: SchurVector) -> SchurVector:
    """``h_k * v`` by the Pieri rule."""
    out: dict = {}
    for a, c in v.terms.items():
        for b in horizontal_strips(a, k):
            SchurVector._accumulate(out, b, c)
    return SchurVector(out)


def _h_monomial_to_schur(mono: tuple[int, ...]) -> SchurVector:
    if not mono:
        return SchurVector.basis(())
    return _H_MONO_MEMO.get(mono, lambda: pieri_h_multiply(mono[0], _h_monomial_to_schur(mono[1:])))


def h_poly_to_schur(p: HPolynomial) -> SchurVector:
    """Schur expansion of a polynomial in the ``h_k``."""
    out: dict = {}
    for mono, c in p.terms.items():
        for shape, k in _h_monomial_to_schur(tuple(sorted(mono, reverse=True))).terms.items():
            SchurVector._accumulate(out, shape, c * k)
    return SchurVector(out)
