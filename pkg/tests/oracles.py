"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from collections import Counter, deque


# --- Schur polynomials by semistandard tableaux -------------------------------


def ssyt_polynomial(shape, nvars):
    """``s_shape(x_1..x_nvars)`` as a Counter of exponent vectors, by listing tableaux."""
    shape = [p for p in shape if p]
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = Counter()
    if len(shape) > nvars:
        return out
    filling = {}

    def rec(idx):
        if idx == len(cells):
            exps = [0] * nvars
            for v in filling.values():
                exps[v] += 1
            out[tuple(exps)] += 1
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, nvars):
            filling[(i, j)] = v
            rec(idx + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def schur_decompose(poly, nvars):
    """Peel off leading monomials; valid for symmetric polynomials in ``nvars`` variables."""
    poly = Counter({k: v for k, v in poly.items() if v})
    result = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        shape = tuple(p for p in lead if p)
        result[shape] = c
        for e, v in ssyt_polynomial(shape, nvars).items():
            poly[e] -= c * v
            if not poly[e]:
                del poly[e]
    return result


def lr_by_polynomials(a, b):
    nvars = max(1, len([p for p in a if p]) + len([p for p in b if p]))
    return schur_decompose(poly_mul(ssyt_polynomial(a, nvars), ssyt_polynomial(b, nvars)), nvars)


# --- permutations -------------------------------------------------------------


def apply_word(word, n):
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length_by_bfs(n):
    """Coxeter length of every permutation by breadth-first search on adjacent swaps."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for i in range(n - 1):
            v = list(u)
            v[i], v[i + 1] = v[i + 1], v[i]
            v = tuple(v)
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_reduced_words_brute(v):
    n = len(v)
    length = length_by_bfs(n)[tuple(v)]
    return sorted(
        w for w in itertools.product(range(1, n), repeat=length) if apply_word(w, n) == tuple(v)
    )


def has_321_brute(v):
    return any(v[i] > v[j] > v[k] for i, j, k in itertools.combinations(range(len(v)), 3))


# --- matchings ----------------------------------------------------------------


def perfect_matchings(vertices):
    if not vertices:
        yield []
        return
    a = vertices[0]
    for idx in range(1, len(vertices)):
        b = vertices[idx]
        rest = vertices[1:idx] + vertices[idx + 1:]
        for m in perfect_matchings(rest):
            yield [(a, b)] + m


def crosses(p, q):
    (a, b), (c, d) = sorted(p), sorted(q)
    return a < c < b < d or c < a < d < b


def noncrossing_brute(n):
    """Non-crossing perfect matchings of ``1..2n`` (boundary order) as sorted pair lists."""
    out = []
    for m in perfect_matchings(list(range(1, 2 * n + 1))):
        if not any(crosses(p, q) for p, q in itertools.combinations(m, 2)):
            out.append(sorted(tuple(sorted(p)) for p in m))
    return out


def theta_brute(S, n):
    S = set(S)
    return [m for m in noncrossing_brute(n) if all((a in S) != (b in S) for a, b in m)]


# --- determinants and minors --------------------------------------------------


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = (-1) ** sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = sign
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + term
    return total


# --- polytope -----------------------------------------------------------------


def polytope_brute(lam, mu, margin=2):
    """Scan a box wider than needed; all conditions over ordered pairs ``i != j``."""
    n = len(lam)
    hi = max(max(lam), max(mu)) + margin
    out = []
    for head in itertools.product(range(-margin, hi + 1), repeat=n - 1):
        tau = head + (0,)
        ok = all(
            min(lam[i] - lam[j], mu[i] - mu[j]) <= tau[i] - tau[j] <= max(lam[i] - lam[j], mu[i] - mu[j])
            for i in range(n) for j in range(n) if i != j
        )
        if ok:
            out.append(tau)
    return out
