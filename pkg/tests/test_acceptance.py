"""Acceptance criteria, one test each; every test logs a PASS/FAIL line."""

import itertools
import math
import random

from schurpos.cli import run as cli_run
from schurpos.combinatorics import (
    enumerate_reduced_words,
    parse_weight,
    partitions,
    partitions_in_box,
    permutations_321_avoiding,
)
from schurpos.horn import enumerate_triples, lr_positive_via_hk, swap_variants, triple_in_T, Triple
from schurpos.ring import determinant, generalized_jacobi_trudi
from schurpos.schur import CharacterVector, h_poly_to_schur, lr_coefficient
from schurpos.temperley_lieb import (
    all_immanants,
    all_matchings,
    f_coefficients,
    f_coefficients_from_word,
    identity_matching,
    matching_of_permutation,
    minor_product_decomposition,
)
from schurpos.verifier import (
    chi_nonnegativity_check,
    labeling_failures,
    construct_pairing,
    support_containment_check,
    sweep_conjecture,
    sweep_theorem,
    verify_pairing,
)

WORKED_DIFFERENCE = [
    "13,12,0", "6,4,0", "7,6,0", "8,8,0", "7,3,0", "8,5,0", "9,7,0",
    "10,9,0", "11,11,0", "8,2,0", "9,4,0", "10,6,0", "11,8,0", "12,10,0",
]


def test_01_worked_character_example(criterion):
    criterion.start("criterion 1: worked sl_3 character difference", 5)
    lam, mu, nu, rho = (parse_weight(w, 3) for w in ("12,7,0", "4,2,0", "5,2,0", "11,7,0"))
    diff, nonneg = chi_nonnegativity_check(lam, mu, nu, rho)
    assert diff == CharacterVector(3, {parse_weight(w, 3): 1 for w in WORKED_DIFFERENCE})
    assert len(diff) == 14 and nonneg
    report = support_containment_check(lam, mu, nu, rho)
    assert report.missing == [] and report.precondition_violations == []


def test_02_catalan_counts(criterion):
    criterion.start("criterion 2: Catalan counts and permutation-diagram bijection", 10)
    expected = [1, 2, 5, 14, 42, 132]
    for n, cat in zip(range(1, 7), expected):
        assert cat == math.comb(2 * n, n) // (n + 1)
        avoiders = list(permutations_321_avoiding(n))
        assert len(avoiders) == cat
        assert len(all_matchings(n)) == cat
        images = {matching_of_permutation(w) for w in avoiders}
        assert images == set(all_matchings(n))


def _random_matrix(rng, n):
    return [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]


def test_03_complementary_minor_expansion(criterion):
    criterion.start("criterion 3: complementary minors equal compatible immanant sums", 120)
    V0, U0 = (4, 3, 3, 2), (3, 2, 1, 0)
    checked = 0
    for n in (2, 3, 4):
        matrices = [generalized_jacobi_trudi(V0[:n], U0[:n])]
        rng = random.Random(1000 + n)
        matrices += [_random_matrix(rng, n) for _ in range(5)]
        for X in matrices:
            for r in range(n + 1):
                for I in itertools.combinations(range(1, n + 1), r):
                    for J in itertools.combinations(range(1, n + 1), r):
                        assert minor_product_decomposition(X, I, J).holds(), (n, X, I, J)
                        checked += 1
    criterion.detail = f"[{checked} identities]"


def test_04_inequalities_decide_lr_positivity(criterion):
    criterion.start("criterion 4: Horn-Klyachko test agrees with LR positivity", 300)
    mismatches = 0
    checked = 0
    box = list(partitions_in_box(3, 4))
    for a, b in itertools.product(box, repeat=2):
        for c in partitions(a.size + b.size, max_part=4, max_len=3):
            checked += 1
            if lr_positive_via_hk(a, b, c, 3) != (lr_coefficient(a, b, c) > 0):
                mismatches += 1
    rng = random.Random(4)
    box4 = list(partitions_in_box(4, 3))
    by_size = {}
    for p in box4:
        by_size.setdefault(p.size, []).append(p)
    sampled = 0
    while sampled < 500:
        a, b = rng.choice(box4), rng.choice(box4)
        if a.size + b.size not in by_size:
            continue
        c = rng.choice(by_size[a.size + b.size])
        sampled += 1
        if lr_positive_via_hk(a, b, c, 4) != (lr_coefficient(a, b, c) > 0):
            mismatches += 1
    criterion.detail = f"[{checked} exhaustive at n=3, {sampled} sampled at n=4, {mismatches} mismatches]"
    assert mismatches == 0


def _nonincreasing(length, top):
    return [tuple(sorted(c, reverse=True)) for c in itertools.combinations_with_replacement(range(top + 1), length)]


def test_05_immanants_schur_nonnegative(criterion):
    criterion.start("criterion 5: Temperley-Lieb immanants are Schur nonnegative", 600)
    negatives = 0
    matrices = 0
    for k in range(1, 5):
        seqs = _nonincreasing(k, 4)
        for V in seqs:
            for U in seqs:
                matrices += 1
                for mtc, value in all_immanants(generalized_jacobi_trudi(V, U)).items():
                    if value and not h_poly_to_schur(value).is_nonnegative():
                        negatives += 1
    criterion.detail = f"[{matrices} matrices, {negatives} negative expansions]"
    assert negatives == 0


def test_06_f_independent_of_reduced_word(criterion):
    criterion.start("criterion 6: f_w(v) independent of the reduced word for S_4", 30)
    words = 0
    for v in itertools.permutations(range(1, 5)):
        expected = f_coefficients(v)
        for word in enumerate_reduced_words(v):
            words += 1
            assert f_coefficients_from_word(word, 4) == expected, (v, word)
    criterion.detail = f"[{words} reduced words]"


def _pairing_ok(t):
    pairing, trace = construct_pairing(t)
    if labeling_failures(trace):
        return False
    variants = set(swap_variants(pairing))
    return verify_pairing(t, pairing) and all(triple_in_T(Triple(t.n, I2, J2, t.K)) for I2, J2 in variants)


def test_07_pairing_construction(criterion):
    criterion.start("criterion 7: pairing construction over small T_r^n", 900)
    failures = []
    count = 0
    for n in range(2, 6):
        for r in (1, 2):
            if r >= n:
                continue
            for t in enumerate_triples(r, n):
                count += 1
                if not _pairing_ok(t):
                    failures.append(t)
    for t in random.Random(0).sample(enumerate_triples(3, 5), 20):
        count += 1
        if not _pairing_ok(t):
            failures.append(t)
    criterion.detail = f"[{count} triples, {len(failures)} failures]"
    assert failures == []


def test_08_support_containment_sweep(criterion):
    criterion.start("criterion 8: support containment sweep n=3, parts <= 4", 600)
    report = sweep_theorem(3, 4, workers=4)
    criterion.detail = f"[{report.quadruples} quadruples, {len(report.violations)} violations]"
    assert report.violations == []


def test_09_nonnegativity_probe(criterion, capsys):
    criterion.start("criterion 9: chi-nonnegativity probe n=3, parts <= 4", 900)
    report = sweep_conjecture(3, 4, workers=4)
    criterion.detail = f"[{report.quadruples} quadruples, {len(report.violations)} negative cases]"
    code = cli_run(["sweep-conjecture", "--n", "3", "--bound", "4", "--workers", "4"])
    capsys.readouterr()
    assert code == (1 if report.violations else 0)
    assert report.violations == [], report.violations


def test_10_identity_immanant_is_determinant(criterion):
    criterion.start("criterion 10: identity-diagram immanant equals det", 10)
    for n in (2, 3, 4):
        rng = random.Random(10 + n)
        for _ in range(5):
            X = _random_matrix(rng, n)
            assert all_immanants(X)[identity_matching(n)] == determinant(X)
