from hypothesis import given, strategies as st

from deodhar.polynomial import QPolynomial

coeffs = st.lists(st.integers(-20, 20), max_size=6)


def test_str_and_parse():
    p = QPolynomial((1, 1, 2))
    assert str(p) == "1 + q + 2q^2"
    assert QPolynomial.parse("1 + q + 2q^2") == p
    assert str(QPolynomial()) == "0"
    assert str(QPolynomial((0, -1, 0, 3))) == "-q + 3q^3"


def test_trailing_zeros_trimmed():
    assert QPolynomial((1, 0, 0)) == QPolynomial((1,))
    assert QPolynomial((0, 0)).is_zero()


def test_from_counts_and_indexing():
    p = QPolynomial.from_counts({0: 1, 2: 3})
    assert p.coefficients == (1, 0, 3)
    assert p[2] == 3 and p[7] == 0 and p[-1] == 0
    assert p.degree == 2


@given(coeffs, coeffs, st.integers(-3, 3))
def test_ring_laws_by_evaluation(a, b, q):
    P, Q = QPolynomial(a), QPolynomial(b)
    assert (P + Q)(q) == P(q) + Q(q)
    assert (P * Q)(q) == P(q) * Q(q)
    assert (P - Q)(q) == P(q) - Q(q)
    assert (2 * P)(q) == 2 * P(q)


@given(coeffs)
def test_parse_roundtrip(a):
    P = QPolynomial(a)
    assert QPolynomial.parse(str(P)) == P
