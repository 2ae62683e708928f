import itertools

import pytest
from hypothesis import given, strategies as st

from schurpos.combinatorics import Partition, parse_weight, partitions
from schurpos.ring import HPolynomial, determinant, jacobi_trudi
from schurpos.schur import (
    CharacterVector,
    SchurVector,
    character_product,
    h_poly_to_schur,
    horizontal_strips,
    lr_coefficient,
    pieri_h_multiply,
    schur_product,
    set_memo_cap,
)

from oracles import lr_by_polynomials

h = HPolynomial.h


def small_partitions(max_size):
    return [p for s in range(max_size + 1) for p in partitions(s)]


def test_known_lr_coefficients():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((2,), (1,), (4,)) == 0
    assert lr_coefficient((2, 1), (1,), (2, 2)) == 1
    assert lr_coefficient((), (3, 1), (3, 1)) == 1


@pytest.mark.parametrize(
    "a,b", [(a, b) for a in small_partitions(3) for b in small_partitions(3) if a.size + b.size <= 6]
)
def test_schur_product_matches_polynomial_oracle(a, b):
    expected = lr_by_polynomials(a, b)
    assert schur_product(a, b) == SchurVector({Partition(k): v for k, v in expected.items()})


@given(st.sampled_from(small_partitions(4)), st.sampled_from(small_partitions(4)))
def test_lr_symmetry(a, b):
    assert schur_product(a, b) == schur_product(b, a)


@given(st.sampled_from(small_partitions(4)), st.sampled_from(small_partitions(3)))
def test_lr_conjugation_symmetry(a, b):
    prod = schur_product(a, b)
    conj = schur_product(a.conjugate(), b.conjugate())
    assert conj == SchurVector({p.conjugate(): c for p, c in prod})


def test_product_is_associative_on_samples():
    for a, b, c in [((1,), (1,), (1,)), ((2,), (1, 1), (1,)), ((2, 1), (1,), (2,))]:
        left = SchurVector()
        for p, x in schur_product(a, b):
            for q, y in schur_product(p, c):
                left = left + SchurVector({q: x * y})
        right = SchurVector()
        for p, x in schur_product(b, c):
            for q, y in schur_product(a, p):
                right = right + SchurVector({q: x * y})
        assert left == right


def test_max_rows_truncation():
    full = schur_product((2, 1), (1, 1))
    cut = schur_product((2, 1), (1, 1), max_rows=2)
    assert cut == SchurVector({p: c for p, c in full if len(p) <= 2})


def test_pieri():
    assert pieri_h_multiply(2, SchurVector.basis((2,))) == SchurVector({(4,): 1, (3, 1): 1, (2, 2): 1})
    strips = sorted(horizontal_strips((2, 1), 2))
    assert strips == sorted(Partition(p) for p in [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)])


def test_h_to_schur_examples():
    assert h_poly_to_schur(h(2) * h(1) - h(3)) == SchurVector.basis((2, 1))
    assert h_poly_to_schur(h(1) * h(1) * h(1)) == SchurVector({(3,): 1, (2, 1): 2, (1, 1, 1): 1})


@pytest.mark.parametrize("shape", [p for s in range(1, 6) for p in partitions(s)])
def test_jacobi_trudi_identity(shape):
    assert h_poly_to_schur(determinant(jacobi_trudi(shape))) == SchurVector.basis(shape)


def test_character_product_small():
    # V_(1) (x) V_(1) for sl_2: chi_2 + chi_0
    w = parse_weight("1,0", 2)
    assert character_product(w, w) == CharacterVector(2, {parse_weight("2,0", 2): 1, parse_weight("0,0", 2): 1})
    with pytest.raises(ValueError):
        character_product(w, parse_weight("1,0,0", 3))


@pytest.mark.parametrize("n", [2, 3])
def test_character_product_dimension(n):
    # Weyl dimension formula as an independent check on the truncation and reduction
    def dim(w):
        v = w.vector()
        num = den = 1
        for i, j in itertools.combinations(range(n), 2):
            num *= v[i] - v[j] + j - i
            den *= j - i
        return num // den

    for a in [parse_weight(s, n) for s in ("2,1,0"[: 2 * n - 1], "3,0,0"[: 2 * n - 1])]:
        for b in [parse_weight(s, n) for s in ("1,0,0"[: 2 * n - 1], "2,2,0"[: 2 * n - 1])]:
            prod = character_product(a, b)
            assert prod.is_nonnegative()
            assert sum(c * dim(w) for w, c in prod) == dim(a) * dim(b)


def test_json_round_trips():
    v = schur_product((2, 1), (1,))
    assert SchurVector.from_json(v.to_json()) == v
    c = character_product(parse_weight("2,1,0", 3), parse_weight("1,0,0", 3))
    assert CharacterVector.from_json(c.to_json()) == c
    assert all(len(entry["partition"]) == 3 for entry in c.to_json())


def test_memo_cap_does_not_change_results():
    before = schur_product((3, 2, 1), (2, 1))
    set_memo_cap(2)
    try:
        assert schur_product((3, 2, 1), (2, 1)) == before
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    finally:
        set_memo_cap(None)
