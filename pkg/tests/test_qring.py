import itertools
import random
from fractions import Fraction

import pytest

from errors import InexactDivision, InvalidInput, NonIntegralEvaluation, ProblemParseError
from qring import (
    ONE,
    Q,
    QPoly,
    QRat,
    XLaurent,
    add,
    eval_dim,
    mul,
    power,
    q_binomial,
    q_factorial,
    q_factorial_base,
    q_int,
    q_multinomial,
    scale,
)

X = XLaurent.monomial(1)
GL2_LEVEL0 = XLaurent.monomial(1, Q + 1) - 2


def test_q_int():
    assert q_int(1) == ONE
    assert q_int(3) == QPoly((1, 1, 1))
    assert q_int(4).evaluate(2) == 15


@pytest.mark.parametrize("n", [0, -3])
def test_q_int_rejects_nonpositive(n):
    with pytest.raises(InvalidInput):
        q_int(n)


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == Q + 1
    assert q_factorial(3).evaluate(2) == 21


def test_q_factorial_base():
    assert q_factorial_base(2, 2) == QPoly((1, 0, 1))
    assert q_factorial_base(3, 2).evaluate(2) == 105
    for r in range(5):
        assert q_factorial_base(r, 1) == q_factorial(r)


def test_q_multinomial_examples():
    assert q_multinomial(3, [2, 1]) == q_int(3)
    assert q_multinomial(5, [5]) == ONE
    assert q_multinomial(4, [2, 2]).evaluate(2) == 35


@pytest.mark.parametrize("parts", [[1, 2, 3], [2, 2, 1], [1, 1, 1, 1], [4, 1]])
def test_q_multinomial_times_factorials(parts):
    n = sum(parts)
    denominator = ONE
    for k in parts:
        denominator = denominator * q_factorial(k)
    assert q_multinomial(n, parts) * denominator == q_factorial(n)
    for perm in itertools.permutations(parts):
        assert q_multinomial(n, list(perm)) == q_multinomial(n, parts)


@pytest.mark.parametrize("n,parts", [(3, [1, 1]), (2, [0, 2]), (2, [])])
def test_q_multinomial_rejects_bad_parts(n, parts):
    with pytest.raises(InvalidInput):
        q_multinomial(n, parts)


def _subspace_count(n, k, p):
    """k-dimensional subspaces of F_p^n, by collecting spans of k-tuples"""
    vectors = list(itertools.product(range(p), repeat=n))
    spans = set()
    for basis in itertools.product(vectors, repeat=k):
        span = frozenset(
            tuple(sum(c * v[i] for c, v in zip(coeffs, basis)) % p for i in range(n))
            for coeffs in itertools.product(range(p), repeat=k)
        )
        if len(span) == p ** k:
            spans.add(span)
    return len(spans)


@pytest.mark.parametrize("n,k,p", [(2, 1, 2), (3, 1, 2), (4, 2, 2), (3, 1, 3), (4, 1, 3), (3, 2, 3)])
def test_q_multinomial_counts_subspaces(n, k, p):
    assert q_multinomial(n, [k, n - k]).evaluate(p) == _subspace_count(n, k, p)


def test_q_binomial_edges():
    assert q_binomial(4, 0) == ONE
    assert q_binomial(4, 4) == ONE
    assert q_binomial(4, 2) == q_multinomial(4, [2, 2])
    with pytest.raises(InvalidInput):
        q_binomial(3, 4)


def test_exact_div_remainder():
    with pytest.raises(InexactDivision):
        q_int(3).exact_div(q_int(2))


def test_qrat_canonical_form():
    # (q^2 - 1) / (-q - 1) = 1 - q
    r = QRat(QPoly((-1, 0, 1)), QPoly((-1, -1)))
    assert r == QRat(QPoly((1, -1)))
    assert r.den == ONE
    s = QRat(QPoly((2,)), QPoly((-4, -2)))
    assert s.den.leading_coeff > 0
    assert s == QRat(QPoly((-1,)), QPoly((2, 1)))


def test_qrat_zero_denominator():
    with pytest.raises(InvalidInput):
        QRat(ONE, QPoly())


def test_qrat_arithmetic_matches_evaluation():
    rng = random.Random(1234)

    def rand_poly():
        return QPoly(tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 4))))

    for _ in range(30):
        a, b, c, d = rand_poly(), rand_poly(), rand_poly(), rand_poly()
        if b.is_zero() or d.is_zero():
            continue
        x, y = QRat(a, b), QRat(c, d)
        for q0 in (2, 3, 5, 7, 11):
            if b.evaluate(q0) == 0 or d.evaluate(q0) == 0:
                continue
            assert (x + y).evaluate(q0) == x.evaluate(q0) + y.evaluate(q0)
            assert (x * y).evaluate(q0) == x.evaluate(q0) * y.evaluate(q0)


def test_qrat_negative_power():
    r = QRat(Q + 1)
    assert r ** -2 == QRat(ONE, (Q + 1) ** 2)
    assert (r ** -2).evaluate(2) == Fraction(1, 9)


def test_laurent_arithmetic():
    assert add(X, -X).is_zero()
    assert mul(GL2_LEVEL0, XLaurent.const(1)) == GL2_LEVEL0
    expected = XLaurent.from_dict({2: (Q + 1) ** 2, 1: -4 * (Q + 1), 0: 4})
    assert power(GL2_LEVEL0, 2) == expected
    assert scale(QRat(ONE, Q + 1), XLaurent.monomial(1, Q + 1)) == X


def test_laurent_ring_axioms():
    f = GL2_LEVEL0
    g = XLaurent.from_dict({3: q_factorial(3), -1: QRat(ONE, Q + 1)})
    h = XLaurent.from_dict({0: 5, 2: Q})
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_laurent_leading_and_constant():
    assert GL2_LEVEL0.degree == 1
    assert GL2_LEVEL0.leading_term() == (1, QRat(Q + 1))
    assert GL2_LEVEL0.constant_term() == QRat(-2)
    with pytest.raises(InvalidInput):
        XLaurent().leading_term()


def test_eval_dim():
    assert eval_dim(GL2_LEVEL0, 2, 1) == 1
    assert eval_dim(GL2_LEVEL0, 3, 2) == 10
    assert eval_dim(XLaurent.const(1), 7, 5) == 1


def test_eval_dim_non_integral():
    with pytest.raises(NonIntegralEvaluation):
        eval_dim(XLaurent.const(QRat(1, 2)), 3, 1)
    # 1 - 2/(q+1) X^-1 at q=2, N=2 is 1 - 2/6
    with pytest.raises(NonIntegralEvaluation):
        eval_dim(XLaurent.from_dict({0: 1, -1: QRat(-2, Q + 1)}), 2, 2)


@pytest.mark.parametrize("q0,N", [(1, 1), (2, 0)])
def test_eval_dim_rejects_domain(q0, N):
    with pytest.raises(InvalidInput):
        eval_dim(GL2_LEVEL0, q0, N)


def test_is_integral():
    assert GL2_LEVEL0.is_integral()
    assert not XLaurent.monomial(1, QRat(ONE, Q + 1)).is_integral()
    assert not XLaurent.monomial(-1, 2).is_integral()


@pytest.mark.parametrize("poly,text", [
    (GL2_LEVEL0, "(q + 1)*X - 2"),
    (XLaurent.monomial(1, Q + 1) - 1, "(q + 1)*X - 1"),
    (XLaurent.from_dict({3: q_factorial(3), 2: -2 * q_int(3), 0: 1}),
     "(q^3 + 2*q^2 + 2*q + 1)*X^3 - (2*q^2 + 2*q + 2)*X^2 + 1"),
    (XLaurent.from_dict({0: 1, -1: QRat(-2, Q + 1)}), "1 - (2)/(q + 1)*X^(-1)"),
    (XLaurent.monomial(2, Q), "q*X^2"),
    (XLaurent(), "0"),
])
def test_render_and_parse(poly, text):
    assert poly.render() == text
    assert XLaurent.parse(text) == poly


def test_parse_accepts_loose_input():
    assert XLaurent.parse("(q+1)X - 2") == GL2_LEVEL0
    assert XLaurent.parse("q**2*X**2 + X/(q+1)") == XLaurent.from_dict({2: Q ** 2, 1: QRat(ONE, Q + 1)})


@pytest.mark.parametrize("text", ["(q + 1)*X -", "y*X + 1", "X^(1/2)", "q^(1/2)*X"])
def test_parse_errors(text):
    with pytest.raises(ProblemParseError):
        XLaurent.parse(text)


def test_substitute_and_contract():
    p = QPoly((1, 2, 3))
    assert p.substitute_power(2) == QPoly((1, 0, 2, 0, 3))
    assert p.substitute_power(2).contract_power(2) == p
    assert p.contract_power(2) is None
