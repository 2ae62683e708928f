"""
Checks of the tensor-product containment statements, and the constructive
pairing behind them.

The pairing construction works on the generalized Jacobi-Trudi matrix
``X_{V,U}`` with ``V`` the rows ``I u J`` (nonincreasing) and
``U = (r, r, r-1, r-1, ..., 1, 1)``.  Diagrams are drawn with the rows on the
left (vertex ``i`` is row ``i``) and the columns on the right (vertex
``4r+1-j`` is column ``j``).  That is the mirror image of the convention in
:mod:`schurpos.temperley_lieb`, where columns sit on the left, so the
immanant attached to a rows-left diagram ``M`` is ``Imm_{mirror(M)}``.
"""

from __future__ import annotations

import functools
import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alcoved import PolytopeSpec, enumerate_complementary_pairs, in_minimal_alcoved
from .combinatorics import (
    Dominance,
    DominantWeight,
    Partition,
    dominance_leq,
    dominant_weights,
    partition_from_subset,
)
from .horn import Pairing, Triple, swap_variants, triple_in_T
from .ring import generalized_jacobi_trudi, x_matrix
from .schur import CharacterVector, SchurVector, character_product, h_poly_to_schur
from .temperley_lieb import (
    NonCrossingMatching,
    all_immanants,
    minor_color_set,
    minor_product_decomposition,
    theta,
)

log = logging.getLogger(__name__)


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly did not."""


# --- containment and nonnegativity ------------------------------------------


@dataclass
class ContainmentReport:
    lam: DominantWeight
    mu: DominantWeight
    nu: DominantWeight
    rho: DominantWeight
    support_lm: list[DominantWeight]
    support_nr: list[DominantWeight]
    missing: list[DominantWeight]
    difference: CharacterVector
    precondition_violations: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.lam.rank

    @property
    def holds(self) -> bool:
        return not self.missing

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.lam.vector()),
            "mu": list(self.mu.vector()),
            "nu": list(self.nu.vector()),
            "rho": list(self.rho.vector()),
            "support_lambda_mu": [list(w.vector()) for w in self.support_lm],
            "support_nu_rho": [list(w.vector()) for w in self.support_nr],
            "missing": [list(w.vector()) for w in self.missing],
            "difference": self.difference.to_json(),
            "precondition_violations": list(self.precondition_violations),
        }


def _preconditions(lam, mu, nu, rho) -> list[str]:
    ranks = {w.rank for w in (lam, mu, nu, rho)}
    if len(ranks) != 1:
        raise ValueError(f"rank mismatch among weights: {sorted(ranks)}")
    problems = []
    left = [a + b for a, b in zip(lam.vector(), mu.vector())]
    right = [a + b for a, b in zip(nu.vector(), rho.vector())]
    if left != right:
        problems.append(f"lambda+mu={left} differs from nu+rho={right}")
    elif dominance_leq(left, right) is not Dominance.LEQ:
        problems.append("lambda+mu is not dominated by nu+rho")
    spec = PolytopeSpec(lam, mu)
    for name, w in (("nu", nu), ("rho", rho)):
        if not in_minimal_alcoved(w, spec):
            problems.append(f"{name}={w} lies outside P(lambda, mu)")
    return problems


def support_containment_check(lam, mu, nu, rho) -> ContainmentReport:
    """Compare the supports of ``chi_lam chi_mu`` and ``chi_nu chi_rho``."""
    problems = _preconditions(lam, mu, nu, rho)
    lm = character_product(lam, mu)
    nr = character_product(nu, rho)
    supp_lm, supp_nr = lm.support(), nr.support()
    return ContainmentReport(
        lam, mu, nu, rho,
        sorted(supp_lm), sorted(supp_nr), sorted(supp_lm - supp_nr),
        nr - lm, problems,
    )


def chi_nonnegativity_check(lam, mu, nu, rho) -> tuple[CharacterVector, bool]:
    """``chi_nu chi_rho - chi_lam chi_mu`` and whether it is chi-nonnegative."""
    _preconditions(lam, mu, nu, rho)
    diff = character_product(nu, rho) - character_product(lam, mu)
    return diff, diff.is_nonnegative()


# --- the pairing construction -----------------------------------------------


@dataclass
class PairingTrace:
    triple: Triple
    V: list[int]
    origins: list[str]  # "I" or "J" per row, top to bottom
    U: list[int]
    colors: list[int]  # black vertices, rows-left picture
    matching: NonCrossingMatching  # rows-left picture
    k: int
    l_vertices: list[int]
    m_vertices: list[int]
    p: list[int]  # U-partners of l_{k+1}, ..., l_r
    q: list[int]  # U-partners of m_{k+1}, ..., m_r
    pairing: Pairing
    candidates: int  # size of the compatible set searched

    @property
    def r(self) -> int:
        return self.triple.r

    def to_json(self) -> dict:
        return {
            "triple": self.triple.to_json(),
            "V": self.V,
            "origins": self.origins,
            "U": self.U,
            "S": self.colors,
            "matching": self.matching.to_json(),
            "k": self.k,
            "l_vertices": self.l_vertices,
            "m_vertices": self.m_vertices,
            "p": self.p,
            "q": self.q,
            "pairing": self.pairing.to_json(),
            "candidates": self.candidates,
        }


def arrange_rows(I: Sequence[int], J: Sequence[int]) -> tuple[list[int], list[str]]:
    """Nonincreasing arrangement of ``I u J``; on ties the ``I`` entry comes first."""
    rows = sorted([(v, "I") for v in I] + [(v, "J") for v in J], key=lambda x: (-x[0], x[1]))
    return [v for v, _ in rows], [o for _, o in rows]


def doubled_columns(r: int) -> list[int]:
    return [r - j // 2 for j in range(2 * r)]


def _mirror_set(colors: Iterable[int], size: int) -> frozenset[int]:
    return frozenset(2 * size + 1 - v for v in colors)


@functools.lru_cache(maxsize=None)
def convention_self_test(seed: int = 0, trials: int = 2) -> bool:
    """Confirm the complementary-minor expansion on the worked 4x4 example and random matrices."""
    d = minor_product_decomposition(x_matrix(4), (1, 2), (1, 3))
    if sorted(d.colors) != [1, 3, 5, 6] or not d.holds():
        raise ConsistencyError("minor expansion fails on the 4x4 symbolic example")
    rng = random.Random(seed)
    for n in (2, 3):
        for _ in range(trials):
            X = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            for r in range(n + 1):
                for I in itertools.combinations(range(1, n + 1), r):
                    for J in itertools.combinations(range(1, n + 1), r):
                        if not minor_product_decomposition(X, I, J).holds():
                            raise ConsistencyError(f"minor expansion fails for X={X}, I={I}, J={J}")
    return True


@functools.lru_cache(maxsize=4096)
def _matrix_data(V: tuple[int, ...], U: tuple[int, ...]):
    X = generalized_jacobi_trudi(V, U)
    return all_immanants(X)


def rows_left_immanant_schur(V: Sequence[int], U: Sequence[int], mtc: NonCrossingMatching) -> SchurVector:
    """Schur expansion of the immanant of ``X_{V,U}`` for a rows-left diagram."""
    return h_poly_to_schur(_matrix_data(tuple(V), tuple(U))[mtc.mirror()])


@dataclass
class _Setup:
    V: list[int]
    origins: list[str]
    U: list[int]
    colors: frozenset[int]
    target: Partition
    candidates: list[NonCrossingMatching]


def _setup(t: Triple) -> _Setup:
    if not triple_in_T(t):
        raise ValueError(f"{t} is not in T_{t.r}^{t.n}")
    convention_self_test()
    r = t.r
    size = 2 * r  # TL_{2r}; diagram vertices 1..4r
    V, origins = arrange_rows(t.I, t.J)
    U = doubled_columns(r)
    rows_I = [i + 1 for i, o in enumerate(origins) if o == "I"]
    rows_J = [i + 1 for i, o in enumerate(origins) if o == "J"]
    odds = list(range(1, size, 2))

    # Delta_{#I, odd columns} * Delta_{#J, even columns} = s_{lambda(I)} s_{lambda(J)}
    colors = _mirror_set(minor_color_set(rows_I, odds, size), size)
    expected = set(rows_J) | set(range(2 * size, size + 1, -2))
    if colors != expected:
        raise ConsistencyError(f"color set {sorted(colors)} differs from {sorted(expected)}")
    return _Setup(V, origins, U, colors, partition_from_subset(t.K), theta(colors, size))


def qualifying_matchings(t: Triple) -> list[NonCrossingMatching]:
    """Compatible rows-left diagrams whose immanant contains ``s_{lambda(K)}``."""
    st = _setup(t)
    return [m for m in st.candidates if rows_left_immanant_schur(st.V, st.U, m)[st.target] > 0]


def construct_pairing(t: Triple, matching: NonCrossingMatching | None = None) -> tuple[Pairing, PairingTrace]:
    """Build orderings of ``I`` and ``J`` whose swap variants all stay in ``T_r^n``.

    By default the first qualifying diagram in canonical order is used; passing
    ``matching`` runs the labeling on that diagram instead.
    """
    st = _setup(t)
    if matching is None:
        for mtc in st.candidates:
            if rows_left_immanant_schur(st.V, st.U, mtc)[st.target] > 0:
                matching = mtc
                break
        else:
            raise ConsistencyError(f"no compatible immanant contains s_{list(st.target)} for {t}")
    elif matching not in st.candidates:
        raise ValueError(f"{matching} is not compatible with the coloring {sorted(st.colors)}")

    r = t.r
    size = 2 * r
    V, origins, colors = st.V, st.origins, st.colors
    in_V = lambda v: v <= size
    l_vertices, m_vertices = [], []
    for v in range(1, size + 1):
        w = matching.mate(v)
        if origins[v - 1] == "I" and in_V(w):
            if origins[w - 1] != "J":
                raise ConsistencyError(f"strand {v}-{w} joins two rows of the same color")
            l_vertices.append(v)
            m_vertices.append(w)
    k = len(l_vertices)
    used = set(l_vertices) | set(m_vertices)
    p, q = [], []
    for v in range(1, size + 1):
        if v in used:
            continue
        w = matching.mate(v)
        if in_V(w):
            raise ConsistencyError(f"strand {v}-{w} inside V is not an I-J strand")
        if v in colors:
            m_vertices.append(v)
            q.append(w)
        else:
            l_vertices.append(v)
            p.append(w)
    if len(l_vertices) != r or len(m_vertices) != r:
        raise ConsistencyError(f"labeling produced {len(l_vertices)} l's and {len(m_vertices)} m's, expected {r}")

    pairing = Pairing(tuple(V[v - 1] for v in l_vertices), tuple(V[v - 1] for v in m_vertices))
    trace = PairingTrace(
        t, V, origins, st.U, sorted(colors), matching, k,
        l_vertices, m_vertices, p, q, pairing, len(st.candidates),
    )
    return pairing, trace


def labeling_failures(trace: PairingTrace) -> list[str]:
    """Parity, color and interleaving conditions on the labels ``l, m, p, q`` past ``k``."""
    S = set(trace.colors)
    k, r = trace.k, trace.r
    out = []
    tail = list(zip(trace.l_vertices[k:], trace.m_vertices[k:], trace.p, trace.q))
    if len(tail) != r - k:
        out.append("p/q labels do not cover positions k+1..r")
    for f, (lv, mv, pv, qv) in enumerate(tail, start=1):
        tag = f"k+{f}"
        if lv in S or lv % 2 == 0:
            out.append(f"l_{tag}={lv} is not white and odd")
        if qv in S or qv % 2 == 0:
            out.append(f"q_{tag}={qv} is not white and odd")
        if pv not in S or pv % 2:
            out.append(f"p_{tag}={pv} is not black and even")
        if mv not in S or mv % 2:
            out.append(f"m_{tag}={mv} is not black and even")
        if not lv < mv:
            out.append(f"l_{tag}={lv} is not above m_{tag}={mv}")
        if not qv < pv:
            out.append(f"q_{tag}={qv} is not below p_{tag}={pv}")
        if f < len(tail):
            nl, _, npv, _ = tail[f]
            if not mv < nl:
                out.append(f"m_{tag}={mv} is not above l_k+{f + 1}={nl}")
            if not npv < qv:
                out.append(f"p_k+{f + 1}={npv} is not below q_{tag}={qv}")
    return out


def recolor(trace: PairingTrace, mask: int) -> frozenset[int]:
    """Coloring after exchanging ``l_p, m_p`` for every position ``p`` set in ``mask``.

    Exchanged rows trade colors; for positions past ``k`` the column vertices
    from ``p`` down to ``q`` flip as well, which only swaps colors inside
    pairs of identical columns.
    """
    S = set(trace.colors)
    k = trace.k
    for pos in range(trace.r):
        if not mask >> pos & 1:
            continue
        S ^= {trace.l_vertices[pos], trace.m_vertices[pos]}
        if pos >= k:
            hi, lo = trace.p[pos - k], trace.q[pos - k]
            S ^= set(range(lo, hi + 1))
    return frozenset(S)


def recoloring_failures(trace: PairingTrace) -> list[str]:
    """Check every swap subset: compatibility with the chosen diagram, and the
    recolored rows and columns describing ``s_{lambda(I')} s_{lambda(J')}``."""
    out = []
    size = 2 * trace.r
    variants = swap_variants(trace.pairing)
    for mask in range(1 << trace.r):
        S2 = recolor(trace, mask)
        if not trace.matching.is_compatible(S2):
            out.append(f"mask {mask}: chosen diagram is not compatible with the recolored set")
        for top in range(2 * size, size + 1, -2):
            if (top in S2) == (top - 1 in S2):
                out.append(f"mask {mask}: identical columns at vertices {top - 1},{top} share a color")
        black_rows = sorted(trace.V[v - 1] for v in S2 if v <= size)
        if tuple(black_rows) != variants[mask][1]:
            out.append(f"mask {mask}: black rows {black_rows} differ from J'={list(variants[mask][1])}")
    return out


def recolored_expansion(trace: PairingTrace, mask: int) -> SchurVector:
    """Schur expansion of the immanant sum over diagrams compatible with a recoloring."""
    size = 2 * trace.r
    total = SchurVector()
    for mtc in theta(recolor(trace, mask), size):
        total = total + rows_left_immanant_schur(trace.V, trace.U, mtc)
    return total


def verify_pairing(t: Triple, p: Pairing) -> bool:
    """Every distinct swap variant ``(I', J', K)`` must lie in ``T_r^n``."""
    if not p.is_pairing_of(t.I, t.J):
        return False
    for I2, J2 in sorted(set(swap_variants(p))):
        if len(set(I2)) != len(I2) or len(set(J2)) != len(J2):
            return False
        if not triple_in_T(Triple(t.n, I2, J2, t.K)):
            return False
    return True


# --- sweeps -----------------------------------------------------------------


@dataclass
class SweepReport:
    mode: str
    n: int
    bound: int
    pairs_examined: int = 0
    quadruples: int = 0
    max_support: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = {
            "mode": self.mode,
            "n": self.n,
            "bound": self.bound,
            "pairs_examined": self.pairs_examined,
            "quadruples": self.quadruples,
            "max_support": self.max_support,
            "violations": self.violations,
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SweepReport":
        return cls(
            data["mode"], data["n"], data["bound"], data["pairs_examined"],
            data["quadruples"], data["max_support"], list(data["violations"]),
            data.get("elapsed_ms"),
        )


def _vec(w: DominantWeight) -> list[int]:
    return list(w.vector())


def _check_pair(args) -> tuple[int, int, list[dict]]:
    mode, lam, mu = args
    quadruples = 0
    max_support = 0
    found = []
    seen = set()
    for nu, rho in enumerate_complementary_pairs(PolytopeSpec(lam, mu)):
        key = tuple(sorted((nu, rho)))
        if key in seen:
            continue
        seen.add(key)
        quadruples += 1
        inputs = {"lambda": _vec(lam), "mu": _vec(mu), "nu": _vec(nu), "rho": _vec(rho)}
        report = support_containment_check(lam, mu, nu, rho)
        max_support = max(max_support, len(report.support_lm), len(report.support_nr))
        if report.precondition_violations:
            found.append({**inputs, "precondition_violations": report.precondition_violations})
        if mode == "theorem":
            if report.missing:
                found.append({**inputs, "missing": [_vec(w) for w in report.missing]})
        else:
            diff, nonneg = chi_nonnegativity_check(lam, mu, nu, rho)
            if nonneg and report.missing:
                raise ConsistencyError(f"nonnegative difference but missing support for {inputs}")
            if not nonneg:
                found.append({
                    **inputs,
                    "negative_terms": [[_vec(w), c] for w, c in diff.negative_terms()],
                    "difference": diff.to_json(),
                })
    return quadruples, max_support, found


def _sweep(mode: str, n: int, bound: int, workers: int = 1, targets=None) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(mode, n, bound)
    if targets is None:
        if bound < 1:
            report.elapsed_ms = round((time.perf_counter() - start) * 1000)
            return report
        weights = list(dominant_weights(n, bound))
        jobs = [(mode, a, b) for a, b in itertools.combinations_with_replacement(weights, 2)]
    else:
        jobs = [(mode, *sorted((a, b))) for a, b in targets]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_pair, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_check_pair(job) for job in jobs]
    for quads, support, found in results:
        report.quadruples += quads
        report.max_support = max(report.max_support, support)
        report.violations.extend(found)
    report.pairs_examined = len(jobs)
    report.violations.sort(key=lambda d: (d["lambda"], d["mu"], d["nu"], d["rho"]))
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    log.info("%s sweep n=%d bound=%d: %d quadruples, %d violations",
             mode, n, bound, report.quadruples, len(report.violations))
    return report


def sweep_theorem(n: int, part_bound: int, workers: int = 1, targets=None) -> SweepReport:
    """Support containment over every complementary pair in every ``P_{lambda, mu}``."""
    return _sweep("theorem", n, part_bound, workers, targets)


def sweep_conjecture(n: int, part_bound: int, workers: int = 1, targets=None) -> SweepReport:
    """Coefficientwise nonnegativity over the same range; negatives are counterexamples."""
    return _sweep("conjecture", n, part_bound, workers, targets)
