"""
The Temperley-Lieb algebra TL_n(2) in its diagram basis, and Temperley-Lieb
immanants.

Vertices of a diagram are numbered ``1..n`` down the left side and
``2n, ..., n+1`` down the right side, so going ``1, 2, ..., 2n`` walks once
around the boundary and left vertex ``i`` faces right vertex ``2n+1-i``.
A basis diagram is a :class:`NonCrossingMatching` on ``[2n]``.

In a product ``a * b`` the diagram of ``a`` sits on the left and the diagram of
``b`` on the right; the right side of ``a`` is glued to the left side of ``b``
and every closed loop contributes a factor ``LOOP_WEIGHT``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .combinatorics import check_permutation, is_321_avoiding, reduced_word
from .ring import Poly, minor

LOOP_WEIGHT = 2


@dataclass(frozen=True, order=True)
class NonCrossingMatching:
    """Non-crossing perfect matching on ``[2n]``; ``partner[v-1]`` is the mate of ``v``."""

    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        m = len(p)
        if m % 2:
            raise ValueError("a perfect matching needs an even number of vertices")
        for v in range(1, m + 1):
            w = p[v - 1]
            if not 1 <= w <= m or w == v or p[w - 1] != v:
                raise ValueError(f"{p} is not a perfect matching on [{m}]")
        stack = []
        for v in range(1, m + 1):
            if p[v - 1] > v:
                stack.append(p[v - 1])
            elif stack.pop() != v:
                raise ValueError(f"{p} has crossing strands")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], n: int) -> "NonCrossingMatching":
        partner = [0] * (2 * n)
        for a, b in pairs:
            if not (1 <= a <= 2 * n and 1 <= b <= 2 * n) or partner[a - 1] or partner[b - 1]:
                raise ValueError(f"invalid pair ({a}, {b}) for n={n}")
            partner[a - 1], partner[b - 1] = b, a
        if 0 in partner:
            raise ValueError("pairs do not cover every vertex")
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.partner, 1) if v < w]

    def mate(self, v: int) -> int:
        return self.partner[v - 1]

    def is_compatible(self, colored: Iterable[int]) -> bool:
        s = set(colored)
        return all((v in s) != (w in s) for v, w in self.pairs())

    def mirror(self) -> "NonCrossingMatching":
        """Reflect left and right sides (vertex ``v`` goes to ``2n+1-v``)."""
        m = len(self.partner) + 1
        return NonCrossingMatching(tuple(m - self.partner[m - v - 1] for v in range(1, m)))

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "NonCrossingMatching":
        return cls.from_pairs(data["pairs"], data["n"])

    def ascii(self) -> str:
        return "\n".join(f"{a}-{b}" for a, b in self.pairs())

    def __str__(self):
        return " ".join(f"{a}-{b}" for a, b in self.pairs())


def identity_matching(n: int) -> NonCrossingMatching:
    return NonCrossingMatching(tuple(2 * n + 1 - v for v in range(1, 2 * n + 1)))


def generator_matching(i: int, n: int) -> NonCrossingMatching:
    """Diagram of ``t_i``: cup on ``i, i+1``, cap on ``2n+1-i, 2n-i``, straight elsewhere."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for TL_{n}")
    p = list(identity_matching(n).partner)
    m = 2 * n
    for a, b in ((i, i + 1), (m + 1 - i, m - i)):
        p[a - 1], p[b - 1] = b, a
    return NonCrossingMatching(tuple(p))


@functools.lru_cache(maxsize=None)
def all_matchings(n: int) -> tuple[NonCrossingMatching, ...]:
    """Every non-crossing matching on ``[2n]``, in canonical (partner-array) order."""
    m = 2 * n
    out = []
    partner = [0] * m

    def rec(start, stop):
        # fill [start, stop) with a non-crossing matching
        if start >= stop:
            yield
            return
        for mate in range(start + 1, stop, 2):
            partner[start], partner[mate] = mate + 1, start + 1
            for _ in rec(start + 1, mate):
                yield from rec(mate + 1, stop)

    for _ in rec(0, m):
        out.append(NonCrossingMatching(tuple(partner)))
    return tuple(sorted(out))


def compose(a: NonCrossingMatching, b: NonCrossingMatching) -> tuple[NonCrossingMatching, int]:
    """Concatenate ``a`` (left) with ``b`` (right); return the diagram and its loop count."""
    n = a.n
    if b.n != n:
        raise ValueError(f"size mismatch: TL_{n} vs TL_{b.n}")
    m = 2 * n
    result = [0] * m
    visited_mid = [False] * (n + 1)

    # A vertex on the glued middle line at height h is a's vertex m+1-h and b's vertex h.
    def walk(side, v):
        while True:
            if side == "a":
                w = a.partner[v - 1]
                if w <= n:
                    return w
                h = m + 1 - w
                visited_mid[h] = True
                side, v = "b", h
            else:
                w = b.partner[v - 1]
                if w > n:
                    return w
                visited_mid[w] = True
                side, v = "a", m + 1 - w

    for v in range(1, m + 1):
        if result[v - 1]:
            continue
        w = walk("a", v) if v <= n else walk("b", v)
        result[v - 1], result[w - 1] = w, v

    loops = 0
    for h in range(1, n + 1):
        if visited_mid[h]:
            continue
        loops += 1
        start = h
        while True:
            visited_mid[h] = True
            w = b.partner[h - 1]  # stays on the middle line inside a loop
            visited_mid[w] = True
            h = m + 1 - a.partner[m - w]
            if h == start:
                break
    return NonCrossingMatching(tuple(result)), loops


class TLElement:
    """Integer combination of basis diagrams of TL_n(2)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[NonCrossingMatching, int] | None = None):
        self.n = n
        self.terms: dict[NonCrossingMatching, int] = {}
        for mtc, c in (terms or {}).items():
            if mtc.n != n:
                raise ValueError(f"diagram on [{2 * mtc.n}] in TL_{n}")
            if c:
                self.terms[mtc] = self.terms.get(mtc, 0) + c
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def one(cls, n: int) -> "TLElement":
        return cls(n, {identity_matching(n): 1})

    @classmethod
    def generator(cls, i: int, n: int) -> "TLElement":
        return cls(n, {generator_matching(i, n): 1})

    @classmethod
    def basis(cls, mtc: NonCrossingMatching) -> "TLElement":
        return cls(mtc.n, {mtc: 1})

    def _check(self, other: "TLElement"):
        if other.n != self.n:
            raise ValueError(f"size mismatch: TL_{self.n} vs TL_{other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TLElement(self.n, out)

    def __neg__(self):
        return TLElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TLElement(self.n, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for x, cx in self.terms.items():
            for y, cy in other.terms.items():
                z, loops = compose(x, y)
                out[z] = out.get(z, 0) + cx * cy * LOOP_WEIGHT ** loops
        return TLElement(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __getitem__(self, mtc: NonCrossingMatching) -> int:
        return self.terms.get(mtc, 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{k}]" for k, c in sorted(self.terms.items()))


def tl_multiply(a: TLElement, b: TLElement) -> TLElement:
    return a * b


def word_product(word: Sequence[int], n: int, shift: int = 0) -> TLElement:
    """``(t_{i_1} - shift) ... (t_{i_l} - shift)`` in TL_n(2)."""
    out = TLElement.one(n)
    for i in word:
        factor = TLElement.generator(i, n)
        if shift:
            factor = factor - TLElement.one(n) * shift
        out = out * factor
    return out


def matching_of_permutation(w: Sequence[int]) -> NonCrossingMatching:
    """The diagram of ``t_w`` for a 321-avoiding ``w``."""
    w = check_permutation(w)
    if not is_321_avoiding(w):
        raise ValueError(f"{w} contains the pattern 321")
    n = len(w)
    elem = word_product(reduced_word(w), n)
    if len(elem.terms) != 1 or next(iter(elem.terms.values())) != 1:
        raise ArithmeticError(f"t_w for w={w} did not reduce to a single basis diagram: {elem}")
    return next(iter(elem.terms))


@functools.lru_cache(maxsize=None)
def _f_table(n: int) -> dict[tuple[int, ...], TLElement]:
    """``(t_{i_1} - 1) ... (t_{i_l} - 1)`` for every ``v`` in ``S_n``.

    Built along the canonical reduced word, one factor at a time; the prefix of
    a reduced word is a reduced word of the prefix permutation.
    """
    table: dict[tuple[int, ...], TLElement] = {}
    one = TLElement.one(n)
    factors = {i: TLElement.generator(i, n) - one for i in range(1, n)}

    def get(v):
        if v in table:
            return table[v]
        word = reduced_word(v)
        if not word:
            table[v] = one
            return one
        u = list(v)
        last = word[-1]
        u[last - 1], u[last] = u[last], u[last - 1]
        table[v] = get(tuple(u)) * factors[last]
        return table[v]

    for v in itertools.permutations(range(1, n + 1)):
        get(v)
    return table


def f_coefficients(v: Sequence[int]) -> dict[NonCrossingMatching, int]:
    """Coefficients ``f_w(v)``, keyed by the diagram of ``w``."""
    v = check_permutation(v)
    return dict(_f_table(len(v))[v].terms)


def f_coefficients_from_word(word: Sequence[int], n: int) -> dict[NonCrossingMatching, int]:
    """Same expansion computed directly from the given word (no tables)."""
    return dict(word_product(word, n, shift=1).terms)


def theta(colored: Iterable[int], n: int) -> list[NonCrossingMatching]:
    """All basis diagrams whose strands each join a vertex in ``colored`` to one outside it."""
    s = frozenset(colored)
    if any(not 1 <= v <= 2 * n for v in s):
        raise ValueError(f"color set {sorted(s)} is not inside [1, {2 * n}]")
    if len(s) != n:
        return []
    return [mtc for mtc in all_matchings(n) if mtc.is_compatible(s)]


def _check_square(X: Sequence[Sequence[Any]], n: int):
    if len(X) != n or any(len(row) != n for row in X):
        raise ValueError(f"expected a {n}x{n} matrix")


def _zero(X):
    sample = X[0][0] if X and X[0] else 0
    return type(sample).const(0) if isinstance(sample, Poly) else 0


def all_immanants(X: Sequence[Sequence[Any]]) -> dict[NonCrossingMatching, Any]:
    """``Imm_w(X)`` for every basis diagram at once, by a single pass over ``S_n``."""
    n = len(X)
    _check_square(X, n)
    table = _f_table(n)
    acc: dict[NonCrossingMatching, Any] = {mtc: _zero(X) for mtc in all_matchings(n)}
    for v, elem in table.items():
        prod = None
        for i in range(n):
            entry = X[i][v[i] - 1]
            if not entry:
                prod = None
                break
            prod = entry if prod is None else prod * entry
        if prod is None:
            continue
        for mtc, c in elem.terms.items():
            acc[mtc] = acc[mtc] + prod * c
    return acc


def tl_immanant(mtc: NonCrossingMatching, X: Sequence[Sequence[Any]]):
    """``sum_v f_w(v) x_{1,v(1)} ... x_{n,v(n)}`` for the diagram ``mtc`` of ``w``."""
    n = mtc.n
    _check_square(X, n)
    total = _zero(X)
    for v, elem in _f_table(n).items():
        c = elem[mtc]
        if not c:
            continue
        prod = c
        for i in range(n):
            entry = X[i][v[i] - 1]
            if not entry:
                break
            prod = entry * prod
        else:
            total = total + prod
    return total


def minor_color_set(I: Iterable[int], J: Iterable[int], n: int) -> frozenset[int]:
    """``J`` together with the reflections ``2n+1-i`` of the rows outside ``I``."""
    I, J = set(I), set(J)
    return frozenset(J) | {2 * n + 1 - i for i in range(1, n + 1) if i not in I}


@dataclass
class MinorDecomposition:
    colors: frozenset[int]
    terms: list[tuple[NonCrossingMatching, Any]]
    minor_product: Any

    @property
    def immanant_sum(self):
        total = 0
        for _, value in self.terms:
            total = value + total
        return total

    def holds(self) -> bool:
        return self.immanant_sum == self.minor_product


def minor_product_decomposition(X: Sequence[Sequence[Any]], I: Iterable[int], J: Iterable[int]) -> MinorDecomposition:
    """Both sides of the complementary-minor expansion over compatible diagrams."""
    n = len(X)
    _check_square(X, n)
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise ValueError(f"row set {I} and column set {J} differ in size")
    colors = minor_color_set(I, J, n)
    Ibar = [i for i in range(1, n + 1) if i not in I]
    Jbar = [j for j in range(1, n + 1) if j not in J]
    lhs = minor(X, I, J) * minor(X, Ibar, Jbar)
    imms = all_immanants(X)
    terms = [(mtc, imms[mtc]) for mtc in theta(colors, n)]
    return MinorDecomposition(colors, terms, lhs)
