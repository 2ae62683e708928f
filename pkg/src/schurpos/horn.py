"""
Horn-Klyachko triples and inequalities.

``T_r^n`` is computed straight from its definition: ``(I, J, K)`` belongs to it
when ``c^{lambda(K)}_{lambda(I), lambda(J)} > 0``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .alcoved import in_box_of_differences
from .combinatorics import Partition, check_subset, partition_from_subset
from .schur import lr_coefficient


@dataclass(frozen=True, order=True)
class Triple:
    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]

    def __post_init__(self):
        for name in ("I", "J", "K"):
            object.__setattr__(self, name, check_subset(getattr(self, name), self.n))
        if not len(self.I) == len(self.J) == len(self.K):
            raise ValueError(f"subsets {self.I}, {self.J}, {self.K} differ in size")
        if not 1 <= self.r < self.n:
            raise ValueError(f"need 1 <= r < n, got r={self.r}, n={self.n}")

    @property
    def r(self) -> int:
        return len(self.I)

    def partitions(self) -> tuple[Partition, Partition, Partition]:
        return tuple(partition_from_subset(s) for s in (self.I, self.J, self.K))

    def to_json(self) -> dict:
        return {"n": self.n, "I": list(self.I), "J": list(self.J), "K": list(self.K)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Triple":
        return cls(data["n"], tuple(data["I"]), tuple(data["J"]), tuple(data["K"]))


@dataclass(frozen=True)
class Pairing:
    """Orderings ``l`` of ``I`` and ``m`` of ``J``; position ``p`` pairs ``l[p]`` with ``m[p]``."""

    l: tuple[int, ...]
    m: tuple[int, ...]

    def __post_init__(self):
        if len(self.l) != len(self.m):
            raise ValueError(f"orderings {self.l} and {self.m} differ in length")

    def is_pairing_of(self, I: Sequence[int], J: Sequence[int]) -> bool:
        return sorted(self.l) == sorted(I) and sorted(self.m) == sorted(J)

    def to_json(self) -> dict:
        return {"l": list(self.l), "m": list(self.m)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Pairing":
        return cls(tuple(data["l"]), tuple(data["m"]))


def triple_in_T(t: Triple) -> bool:
    a, b, c = t.partitions()
    return lr_coefficient(a, b, c) > 0


@functools.lru_cache(maxsize=None)
def _triples(r: int, n: int) -> tuple[Triple, ...]:
    subsets = list(itertools.combinations(range(1, n + 1), r))
    lam = {s: partition_from_subset(s) for s in subsets}
    out = []
    for I, J, K in itertools.product(subsets, repeat=3):
        if lr_coefficient(lam[I], lam[J], lam[K]) > 0:
            out.append(Triple(n, I, J, K))
    return tuple(out)


def enumerate_triples(r: int, n: int) -> list[Triple]:
    """All of ``T_r^n``, ordered lexicographically by ``(I, J, K)``."""
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    return list(_triples(r, n))


def _coord(p: Sequence[int], i: int) -> int:
    return p[i - 1] if i <= len(p) else 0


def hk_sides(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], t: Triple) -> tuple[int, int]:
    """``(sum_K gamma_k, sum_I alpha_i + sum_J beta_j)``, coordinates 1-based, zero-padded."""
    for p in (alpha, beta, gamma):
        if len(p) > t.n:
            raise ValueError(f"{list(p)} has more than n={t.n} coordinates")
    lhs = sum(_coord(gamma, k) for k in t.K)
    rhs = sum(_coord(alpha, i) for i in t.I) + sum(_coord(beta, j) for j in t.J)
    return lhs, rhs


def hk_inequality(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], t: Triple) -> bool:
    lhs, rhs = hk_sides(alpha, beta, gamma, t)
    return lhs <= rhs


def failing_inequalities(alpha, beta, gamma, n: int) -> list[Triple]:
    return [
        t
        for r in range(1, n)
        for t in _triples(r, n)
        if not hk_inequality(alpha, beta, gamma, t)
    ]


def lr_positive_via_hk(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], n: int) -> bool:
    """Decide ``c^gamma_{alpha, beta} > 0`` from the size condition and the inequalities."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if max(len(alpha), len(beta), len(gamma)) > n:
        raise ValueError(f"partitions must have at most n={n} parts")
    if gamma.size != alpha.size + beta.size:
        return False
    for r in range(1, n):
        for t in _triples(r, n):
            if not hk_inequality(alpha, beta, gamma, t):
                return False
    return True


def swap_variants(p: Pairing) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The ``2^r`` pairs ``(I', J')`` from exchanging ``l_p`` and ``m_p`` over subsets of positions.

    Variant ``s`` swaps position ``p`` when bit ``p`` of ``s`` is set, so variant 0
    is ``(I, J)`` itself.  Repeats are kept.
    """
    r = len(p.l)
    out = []
    for mask in range(1 << r):
        I2, J2 = [], []
        for q in range(r):
            a, b = p.l[q], p.m[q]
            if mask >> q & 1:
                a, b = b, a
            I2.append(a)
            J2.append(b)
        out.append((tuple(sorted(I2)), tuple(sorted(J2))))
    return out


def transfer_chain(lam, mu, nu, rho, p: Pairing, gamma, t: Triple) -> tuple[int, int, int]:
    """``(sum_I nu + sum_J rho, sum_p min(...), sum_K gamma)`` for weight vectors of length n.

    Raises ``ValueError`` unless ``lam + mu == nu + rho`` and ``nu, rho`` lie in the
    minimal alcoved polytope of ``lam, mu``.
    """
    n = t.n
    vecs = [tuple(v) + (0,) * (n - len(v)) for v in (lam, mu, nu, rho)]
    if any(len(v) != n for v in vecs):
        raise ValueError(f"weights must have at most n={n} coordinates")
    lam, mu, nu, rho = vecs
    if any(a + b != c + d for a, b, c, d in zip(lam, mu, nu, rho)):
        raise ValueError("lambda + mu != nu + rho")
    if not (in_box_of_differences(nu, lam, mu) and in_box_of_differences(rho, lam, mu)):
        raise ValueError("nu and rho must lie in the minimal alcoved polytope of lambda, mu")
    if not p.is_pairing_of(t.I, t.J):
        raise ValueError(f"{p} is not a pairing of I={t.I} and J={t.J}")
    top = sum(nu[i - 1] + rho[j - 1] for i, j in zip(p.l, p.m))
    mid = sum(min(lam[i - 1] + mu[j - 1], lam[j - 1] + mu[i - 1]) for i, j in zip(p.l, p.m))
    bottom = sum(_coord(gamma, k) for k in t.K)
    return top, mid, bottom


def transfer_inequality(lam, mu, nu, rho, p: Pairing, gamma, t: Triple) -> bool:
    """Check ``sum_I nu + sum_J rho >= sum_p min(...) >= sum_K gamma``."""
    top, mid, bottom = transfer_chain(lam, mu, nu, rho, p, gamma, t)
    return top >= mid >= bottom
