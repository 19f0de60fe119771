import pytest

from conftest import ms, seg
from errors import InvalidInput, ProblemParseError, UnknownSymbol
from growth import leading_term
from qring import QRat, q_factorial, q_factorial_base
from segments import CuspidalSymbol
from sln import TwistActionTable, sl_leading_term, twist_multisegment, twist_stabilizer_count


def gl1_symbols(*ids):
    return {sid: CuspidalSymbol(sid, 1) for sid in ids}


@pytest.fixture
def cyclic_four():
    """Four GL_1 characters permuted by the twists of a cyclic group of order 4"""
    symbols = gl1_symbols("rho", "psi", "chirho", "chipsi")
    cycles = [
        [],
        [["rho", "psi", "chirho", "chipsi"]],
        [["rho", "chirho"], ["psi", "chipsi"]],
        [["rho", "chipsi", "chirho", "psi"]],
    ]
    return symbols, TwistActionTable.from_cycles(4, cycles, symbols)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_table_fixes_everything(n):
    symbols = gl1_symbols("rho")
    table = TwistActionTable.from_cycles(n, [[] for _ in range(n)], symbols)
    a = ms(seg(symbols["rho"], 0, n))
    assert twist_stabilizer_count(a, table) == n


def test_swap_table():
    symbols = gl1_symbols("rho", "sigma")
    table = TwistActionTable.from_cycles(2, [[], [["rho", "sigma"]]], symbols)
    rho, sigma = symbols["rho"], symbols["sigma"]
    assert twist_multisegment(ms(seg(rho, 0), seg(rho, 1)), table.perm(1)) == ms(seg(sigma, 0), seg(sigma, 1))
    assert twist_stabilizer_count(ms(seg(rho, 0), seg(sigma, 0)), table) == 2
    assert twist_stabilizer_count(ms(seg(rho, 0), seg(sigma, 1)), table) == 1
    assert twist_stabilizer_count(ms(seg(rho, 0, 2)), table) == 1


def test_free_action_gives_one(cyclic_four):
    symbols, table = cyclic_four
    a = ms(seg(symbols["rho"], 0), seg(symbols["rho"], 1), seg(symbols["psi"], 0), seg(symbols["psi"], 1))
    assert twist_stabilizer_count(a, table) == 1


def test_two_segment_example(cyclic_four):
    symbols, table = cyclic_four
    a = ms(seg(symbols["rho"], 0, 2), seg(symbols["chirho"], 0, 2))
    d = twist_stabilizer_count(a, table)
    assert d == 2
    term = sl_leading_term(a, d)
    assert term.exponent == 4
    assert term.coeff == QRat(q_factorial(4), 2 * q_factorial_base(2, 1) ** 2)
    assert term.coeff.render() == "(q^4 + q^3 + 2*q^2 + q + 1)/(2)"


def test_sl_leading_term_divides_gl_term(gl2_rho):
    a = ms(seg(gl2_rho, 0, 2))
    lt = leading_term(a)
    term = sl_leading_term(a, 3)
    assert term.exponent == lt.exponent
    assert term.coeff * 3 == lt.coeff
    with pytest.raises(InvalidInput):
        sl_leading_term(a, 0)


def test_twist_undefined_symbol():
    symbols = gl1_symbols("rho")
    table = TwistActionTable.from_cycles(1, [[]], symbols)
    stranger = CuspidalSymbol("sigma", 1)
    with pytest.raises(UnknownSymbol):
        twist_stabilizer_count(ms(seg(stranger, 0)), table)


def test_from_cycles_errors():
    symbols = gl1_symbols("rho", "sigma")
    with pytest.raises(UnknownSymbol):
        TwistActionTable.from_cycles(2, [[], [["rho", "tau"]]], symbols)
    with pytest.raises(ProblemParseError):
        TwistActionTable.from_cycles(2, [[], ["rho"]], symbols)


def test_table_validation():
    symbols = gl1_symbols("rho", "sigma")
    with pytest.raises(InvalidInput):
        TwistActionTable.from_cycles(3, [[], [["rho", "sigma"]]], symbols)
    with pytest.raises(InvalidInput):
        TwistActionTable.from_cycles(2, [[["rho", "sigma"]], []], symbols)
    with pytest.raises(InvalidInput):
        TwistActionTable.from_cycles(0, [], symbols)
    mixed = {"rho": CuspidalSymbol("rho", 1), "big": CuspidalSymbol("big", 2)}
    with pytest.raises(InvalidInput):
        TwistActionTable.from_cycles(2, [[], [["rho", "big"]]], mixed)
