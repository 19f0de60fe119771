import itertools
import random

import pytest

from errors import AmbiguousExpansion, InvalidInput, MismatchedSize, NotInImage
from orbits import (
    CharacterExpansion,
    Partition,
    division_unit_index,
    dominance_leq,
    expansion_to_growth,
    gl2_jl_dimension,
    growth_to_expansion,
    jl_constant_term,
    jl_transfer,
    murnaghan_coefficient,
    orbit_dim,
    partitions_of,
    w_orbit,
)
from qring import Q, QPoly, XLaurent, q_factorial, q_int


def P(*parts):
    return Partition.of(*parts)


def test_partition_canonical_order():
    assert P(1, 2, 1).parts == (2, 1, 1)
    assert P(3, 1) == Partition((1, 3))
    with pytest.raises(InvalidInput):
        P(2, 0)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)])
def test_partitions_of_counts(n, count):
    found = partitions_of(n)
    assert len(found) == count
    assert found[0] == P(n)
    assert found[-1] == Partition((1,) * n)
    assert all(p.n == n for p in found)


def test_partitions_of_three_order():
    assert partitions_of(3) == [P(3), P(2, 1), P(1, 1, 1)]


def test_orbit_dim_and_w():
    assert orbit_dim(P(3)) == 0
    assert orbit_dim(P(2, 1)) == 4
    assert orbit_dim(P(1, 1, 1)) == 6
    assert w_orbit(P(2, 2, 1)) == 2
    assert w_orbit(P(1, 1, 1)) == 6
    for n in range(1, 7):
        for p in partitions_of(n):
            assert orbit_dim(p) % 2 == 0


def test_dominance():
    assert dominance_leq(P(1, 1, 1), P(2, 1))
    assert dominance_leq(P(2, 1), P(3))
    assert not dominance_leq(P(3), P(2, 1))
    assert dominance_leq(P(2, 2), P(3, 1))
    # (3,1,1,1) and (2,2,2) are incomparable
    assert not dominance_leq(P(3, 1, 1, 1), P(2, 2, 2))
    assert not dominance_leq(P(2, 2, 2), P(3, 1, 1, 1))
    with pytest.raises(MismatchedSize):
        dominance_leq(P(2), P(2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_is_partial_order(n):
    parts = partitions_of(n)
    for p in parts:
        assert dominance_leq(p, p)
    for p1, p2 in itertools.product(parts, repeat=2):
        if p1 != p2:
            assert not (dominance_leq(p1, p2) and dominance_leq(p2, p1))
    for p1, p2, p3 in itertools.product(parts, repeat=3):
        if dominance_leq(p1, p2) and dominance_leq(p2, p3):
            assert dominance_leq(p1, p3)


def test_murnaghan_coefficients_gl3():
    assert murnaghan_coefficient(P(1, 1, 1)) == 1
    assert murnaghan_coefficient(P(2, 1)) == -3
    assert murnaghan_coefficient(P(3)) == 3


def test_expansion_to_growth_gl3():
    ce = CharacterExpansion.from_mapping(3, {P(1, 1, 1): 1, P(2, 1): -3, P(3): 3})
    expected = XLaurent.from_dict({3: q_factorial(3), 2: -3 * q_int(3), 0: 3})
    assert expansion_to_growth(ce) == expected


def test_expansion_to_growth_gl2():
    ce = CharacterExpansion(2, ((P(1, 1), 1), (P(2), -2)))
    assert expansion_to_growth(ce) == XLaurent.monomial(1, Q + 1) - 2


def test_expansion_drops_zero_and_checks_size():
    ce = CharacterExpansion(2, ((P(1, 1), 1), (P(2), 0)))
    assert ce.as_dict() == {P(1, 1): 1}
    with pytest.raises(MismatchedSize):
        CharacterExpansion(3, ((P(1, 1), 1),))


def test_growth_to_expansion_round_trip():
    ce = CharacterExpansion.from_mapping(3, {P(1, 1, 1): 1, P(2, 1): -3, P(3): 3})
    assert growth_to_expansion(expansion_to_growth(ce), 3) == ce


def test_growth_to_expansion_not_in_image():
    with pytest.raises(NotInImage):
        growth_to_expansion(XLaurent.monomial(1, Q), 2)
    with pytest.raises(NotInImage):
        growth_to_expansion(XLaurent.monomial(2, 1), 2)


def test_growth_to_expansion_ambiguous():
    # (4,1,1) and (3,3) are the first pair of GL_6 orbits sharing a dimension
    assert orbit_dim(P(4, 1, 1)) == orbit_dim(P(3, 3)) == 18
    with pytest.raises(AmbiguousExpansion) as info:
        growth_to_expansion(XLaurent.const(1), 6)
    assert set(info.value.partitions) == {P(4, 1, 1), P(3, 3)}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_orbit_dims_distinct_up_to_five(n):
    dims = [orbit_dim(p) for p in partitions_of(n)]
    assert len(set(dims)) == len(dims)


@pytest.mark.parametrize("seed", range(10))
def test_growth_to_expansion_random_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    ce = CharacterExpansion.from_mapping(n, {p: rng.randint(-4, 4) for p in partitions_of(n)})
    assert growth_to_expansion(expansion_to_growth(ce), n) == ce


def test_expansion_json_round_trip():
    ce = CharacterExpansion.from_mapping(3, {P(2, 1): -3, P(3): 3})
    assert CharacterExpansion.from_json(ce.to_json()) == ce


def test_jl_transfer():
    ce_d = CharacterExpansion(1, ((P(1), 1),))
    transferred = jl_transfer(ce_d, 2)
    assert transferred.n == 2
    assert transferred.as_dict() == {P(2): -1}
    with pytest.raises(InvalidInput):
        jl_transfer(ce_d, 0)


def test_jl_transfer_scales_every_part():
    ce_d = CharacterExpansion.from_mapping(2, {P(1, 1): 3, P(2): -5})
    transferred = jl_transfer(ce_d, 2)
    assert transferred.n == 4
    assert transferred.as_dict() == {P(2, 2): 3, P(4): -5}


def test_jl_constant_term():
    assert jl_constant_term(2, 2) == -2
    assert jl_constant_term(5, 3) == 5
    assert jl_constant_term(Q + 1, 2) == -(Q + 1)
    with pytest.raises(InvalidInput):
        jl_constant_term(0, 2)


def test_division_unit_index():
    assert division_unit_index(1, 1) == QPoly((2,))
    assert division_unit_index(1, 2) == Q + 1
    assert division_unit_index(2, 1) == 2 * Q ** 2
    assert division_unit_index(3, 2) == (Q + 1) * Q ** 2
    with pytest.raises(InvalidInput):
        division_unit_index(1, 3)


@pytest.mark.parametrize("level", [1, 2, 3, 4, 5])
def test_gl2_jl_dimension(level):
    assert gl2_jl_dimension("level0") == QPoly((2,))
    assert gl2_jl_dimension("e2", level) == (Q + 1) * Q ** (level // 2)
    assert gl2_jl_dimension("e1", level) == 2 * Q ** level


def test_gl2_jl_dimension_needs_level():
    with pytest.raises(InvalidInput):
        gl2_jl_dimension("e1")
    with pytest.raises(InvalidInput):
        gl2_jl_dimension("e3", 1)


def test_constant_term_comes_from_partition_n():
    # the partition (n) sits at X^0
    ce = CharacterExpansion.from_mapping(2, {P(1, 1): 1, P(2): -2})
    assert expansion_to_growth(ce).constant_term().num == QPoly((-2,))
