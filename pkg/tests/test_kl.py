import pytest

from deodhar import UnsupportedError, build_system, bruhat_interval, bruhat_leq, enumerate_elements, inverse, reduced_words
from deodhar.kl import (
    describe, kl_deodhar, kl_deodhar_bruteforce, kl_recursive, kl_recursive_pairs, kl_table, mu,
    verify_zero_one,
)
from deodhar.masks import deodhar_polynomials, is_deodhar, mu_masks
from deodhar.patterns import is_smooth_typeA
from deodhar.polynomial import QPolynomial

ONE = QPolynomial((1,))
ONE_PLUS_Q = QPolynomial((1, 1))


def test_recursion_examples(A2, A3):
    w = A3.element([3, 4, 1, 2])
    assert kl_recursive(w, w) == ONE
    assert kl_recursive(A2.identity(), A2.element([3, 2, 1])) == ONE
    assert kl_recursive(A3.identity(), w) == ONE_PLUS_Q


def test_deodhar_examples(A3):
    w = A3.element([3, 4, 1, 2])
    assert kl_deodhar(A3.identity(), w) == ONE_PLUS_Q
    assert kl_deodhar(A3.gen(2), w) == ONE_PLUS_Q
    assert kl_deodhar(w, w) == ONE


def test_deodhar_refuses_non_deodhar(A2):
    with pytest.raises(UnsupportedError):
        kl_deodhar(A2.identity(), A2.element([3, 2, 1]))


def test_mu_examples(A3):
    w = A3.element([3, 4, 1, 2])
    assert mu(A3.identity(), A3.gen(1)) == 1
    assert mu(A3.identity(), w) == 0
    assert mu(A3.gen(2), w) == 1
    assert mu(w, w) == 0
    assert mu(w, A3.identity()) == 0
    assert mu(A3.gen(2), w, route=True) == (1, "masks")
    assert mu(A3.identity(), A3.element([4, 3, 2, 1]), route=True)[1] == "recursion"


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_row_engine_matches_pair_oracle(family, rank):
    W = build_system(family, rank)
    elems = list(enumerate_elements(W))
    step = 1 if len(elems) <= 48 else 7
    for w in elems[::step]:
        for x in elems:
            assert kl_recursive(x, w) == kl_recursive_pairs(x, w)


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("D", 4), ("F", 4)])
def test_contract(family, rank):
    W = build_system(family, rank)
    elems = list(enumerate_elements(W))
    step = 1 if len(elems) <= 200 else 23
    for w in elems[::step]:
        below = bruhat_interval(w)
        for x in elems:
            p = kl_recursive(x, w)
            if x.key not in below:
                assert p.is_zero()
                continue
            assert p[0] == 1
            assert all(c >= 0 for c in p.coefficients)
            if x != w:
                assert 2 * p.degree <= w.length() - x.length() - 1


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_mask_sum_matches_bruteforce(family, rank):
    W = build_system(family, rank)
    elems = list(enumerate_elements(W))
    for w in elems:
        if not is_deodhar(w) or w.length() > 8:
            continue
        for x in elems:
            assert kl_deodhar(x, w) == kl_deodhar_bruteforce(x, w)


def test_mask_polynomials_match_recursion_a4(A4):
    for w in enumerate_elements(A4):
        if not is_deodhar(w):
            continue
        for x in enumerate_elements(A4):
            assert kl_deodhar(x, w) == kl_recursive(x, w)


def test_mask_polynomials_independent_of_word(A4):
    for w in enumerate_elements(A4):
        if not is_deodhar(w):
            continue
        tables = {frozenset(deodhar_polynomials(A4, word).items()) for word in reduced_words(w)}
        assert len(tables) == 1


def test_mu_counts_mu_masks(A4):
    for w in enumerate_elements(A4):
        if not is_deodhar(w):
            continue
        word = next(iter(reduced_words(w)))
        for x in enumerate_elements(A4):
            assert len(mu_masks(A4, word, x)) == mu(x, w)


def test_mu_symmetric_under_inverse_s4(A3):
    elems = list(enumerate_elements(A3))
    for w in elems:
        for x in elems:
            assert mu(x, w) == mu(inverse(x), inverse(w))


def test_smooth_implies_trivial_polynomials(A4):
    for w in enumerate_elements(A4):
        if not is_smooth_typeA(w):
            continue
        for x in enumerate_elements(A4):
            if bruhat_leq(x, w):
                assert kl_recursive(x, w) == ONE


def test_known_nontrivial_value_s4(A3):
    # the classic P_{e, 4231} = 1 + q pair: both singular permutations in S4
    w = A3.element([4, 2, 3, 1])
    assert kl_recursive(A3.identity(), w) == ONE_PLUS_Q
    assert kl_recursive(A3.element([2, 1, 3, 4]), w) == ONE_PLUS_Q


def test_table_rows_are_cached(A3):
    K = kl_table(A3)
    assert kl_table(A3) is K
    w = K.table.index[A3.element([4, 3, 2, 1]).key]
    assert K.row(w) is K.row(w)


@pytest.mark.parametrize("family,rank,count", [("A", 2, 5), ("A", 3, 14), ("G", 2, 5), ("B", 3, 14)])
def test_verify_examples(family, rank, count):
    report = verify_zero_one(build_system(family, rank))
    assert report.deodhar_count == count
    assert report.violations == []
    assert report.passed
    assert max(report.mu_histogram) <= 1
    assert report.to_text().endswith(f"deodhar={count} violations=0 PASS")


def test_verify_full_group_uses_both_routes(A3):
    report = verify_zero_one(A3, deodhar_only=False)
    assert report.elements_checked == 24
    assert report.routes == {"masks": 14, "recursion": 10}
    assert report.passed


def test_verify_parallel_matches_serial(A4):
    a = verify_zero_one(A4, jobs=1)
    b = verify_zero_one(A4, jobs=3)
    assert a.to_dict() == b.to_dict()


def test_verify_max_length(A4):
    report = verify_zero_one(A4, max_length=3)
    assert report.elements_checked == sum(1 for w in enumerate_elements(A4, max_length=3) if is_deodhar(w))


def test_describe(A3, G2):
    assert describe(A3.element([3, 4, 1, 2])) == "A3[3,4,1,2]"
    assert describe(G2.gen(1)).startswith("G2(")
