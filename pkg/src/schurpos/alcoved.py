"""
Minimal alcoved polytope ``P_{lambda, mu}`` of two sl_n weights.

A weight ``tau`` lies in it when every difference ``tau_i - tau_j`` is weakly
between ``lambda_i - lambda_j`` and ``mu_i - mu_j``.  Differences do not see
the shift by ``(1, ..., 1)``, so any representatives may be used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinatorics import DominantWeight, reduce_mod_ones


def in_box_of_differences(tau: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> bool:
    n = len(tau)
    if len(lam) != n or len(mu) != n:
        raise ValueError("vectors of different lengths")
    for i in range(n):
        for j in range(i + 1, n):
            d = tau[i] - tau[j]
            a = lam[i] - lam[j]
            b = mu[i] - mu[j]
            if not min(a, b) <= d <= max(a, b):
                return False
    return True


@dataclass(frozen=True)
class PolytopeSpec:
    lam: DominantWeight
    mu: DominantWeight

    def __post_init__(self):
        if self.lam.rank != self.mu.rank:
            raise ValueError(f"rank mismatch: {self.lam.rank} vs {self.mu.rank}")

    @property
    def rank(self) -> int:
        return self.lam.rank


def in_minimal_alcoved(tau: DominantWeight, spec: PolytopeSpec) -> bool:
    if tau.rank != spec.rank:
        raise ValueError(f"rank mismatch: {tau.rank} vs {spec.rank}")
    # (i, j) and (j, i) impose the same condition up to sign, so i < j suffices
    return in_box_of_differences(tau.vector(), spec.lam.vector(), spec.mu.vector())


def polytope_members(spec: PolytopeSpec) -> Iterator[DominantWeight]:
    """Lattice points of ``P_{lambda, mu}`` in lexicographic order of representatives.

    With last coordinate 0, ``tau_i = tau_i - tau_n`` is pinned between
    ``lambda_i`` and ``mu_i``; the pairwise conditions then filter the box.
    Every member is automatically dominant.
    """
    lam, mu = spec.lam.vector(), spec.mu.vector()
    n = spec.rank
    ranges = [range(min(a, b), max(a, b) + 1) for a, b in zip(lam[:-1], mu[:-1])]
    for head in itertools.product(*ranges):
        tau = head + (0,)
        if in_box_of_differences(tau, lam, mu):
            yield DominantWeight(n, tau)


def enumerate_complementary_pairs(spec: PolytopeSpec) -> list[tuple[DominantWeight, DominantWeight]]:
    """Ordered pairs ``(nu, rho)`` in ``P_{lambda, mu}`` with ``nu + rho = lambda + mu``.

    Representatives with last coordinate 0 turn the quotient equality into a
    coordinatewise one, so ``rho`` is determined by ``nu``.
    """
    total = [a + b for a, b in zip(spec.lam.vector(), spec.mu.vector())]
    pairs = []
    for nu in polytope_members(spec):
        rho_vec = [t - x for t, x in zip(total, nu.vector())]
        if any(y > x for x, y in zip(rho_vec, rho_vec[1:])):
            continue
        rho = reduce_mod_ones(rho_vec)
        if in_minimal_alcoved(rho, spec):
            pairs.append((nu, rho))
    return sorted(pairs)
