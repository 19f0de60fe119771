import numpy as np
import pytest

from cuspidal import level_zero
from errors import InvalidInput, OracleInconsistency, SizeLimitExceeded, UnsupportedSize
from growth import parabolic_coset_count
from orbits import partitions_of
from oracle import (
    MatRing,
    cartan_coset_bruteforce,
    cartan_coset_size,
    count_right_cosets,
    enumerate_gl,
    flag_count_bruteforce,
    invertible_codes,
    level_zero_dim_sum,
    subgroup_order_bruteforce,
)
from qring import Q, eval_dim


def test_matring_validation():
    with pytest.raises(InvalidInput):
        MatRing(2, 4, 1)
    with pytest.raises(InvalidInput):
        MatRing(0, 2, 1)
    with pytest.raises(InvalidInput):
        MatRing(2, 2, 0)
    with pytest.raises(SizeLimitExceeded):
        MatRing(2, 2, 63)


def test_matring_size_and_guard():
    ring = MatRing(2, 3, 2)
    assert ring.modulus == 9
    assert ring.size == 9 ** 4
    ring.check_guard(9 ** 4)
    with pytest.raises(SizeLimitExceeded):
        ring.check_guard(9 ** 4 - 1)


def test_encode_decode():
    ring = MatRing(2, 2, 2)
    codes = np.arange(ring.size, dtype=np.int64)
    mats = ring.decode(codes)
    assert mats.shape == (ring.size, 2, 2)
    assert mats.max() == 3
    assert np.array_equal(ring.encode(mats), codes)


@pytest.mark.parametrize("n,p,N,order", [
    (1, 3, 2, 6),
    (2, 2, 1, 6),
    (2, 3, 1, 48),
    (2, 2, 2, 96),
    (3, 2, 1, 168),
])
def test_gl_orders(n, p, N, order):
    mats = list(enumerate_gl(n, p, N))
    assert len(mats) == order
    assert len({m.tobytes() for m in mats}) == order
    for m in mats:
        assert m.shape == (n, n)
        assert round(np.linalg.det(m % p)) % p != 0


def test_enumeration_guard():
    with pytest.raises(SizeLimitExceeded):
        invertible_codes(MatRing(2, 3, 2), limit=100)


def test_borel_of_gl2_f2():
    ring = MatRing(2, 2, 1)
    borel = [[0, 0], [1, 0]]
    assert subgroup_order_bruteforce(ring, borel) == 2
    assert count_right_cosets(ring, borel) == 3


def test_count_right_cosets_catches_non_subgroup():
    # matrices with h[0][0] divisible by p do not form a group
    with pytest.raises(OracleInconsistency):
        count_right_cosets(MatRing(2, 2, 1), [[1, 0], [0, 0]])


def test_flag_count_example():
    assert flag_count_bruteforce([1, 1], 2, 2) == 6


def _flag_grid():
    for n in (1, 2, 3):
        for parts in partitions_of(n):
            for p in (2, 3):
                for N in (1, 2):
                    if (n, p, N) != (3, 3, 2):
                        yield list(parts.parts), p, N


@pytest.mark.parametrize("parts,p,N", list(_flag_grid()))
def test_flag_count_matches_closed_form(parts, p, N):
    assert flag_count_bruteforce(parts, p, N) == eval_dim(parabolic_coset_count(parts), p, N)


def test_flag_count_rejects_bad_input():
    with pytest.raises(InvalidInput):
        flag_count_bruteforce([], 2, 1)
    with pytest.raises(InvalidInput):
        flag_count_bruteforce([2, 0], 2, 1)
    with pytest.raises(SizeLimitExceeded):
        flag_count_bruteforce([1, 1], 2, 2, limit=10)


def test_cartan_coset_size_examples():
    assert cartan_coset_size((0, 0), 3).evaluate(5) == 1
    assert cartan_coset_size((1, 0), 1) == Q + 1
    assert cartan_coset_size((2, 0), 2) == Q * (Q + 1)
    assert cartan_coset_size((2, 0), 2).evaluate(2) == 6
    assert cartan_coset_bruteforce((2, 0), 2, 2) == 6


@pytest.mark.parametrize("a,p,N", [
    ((a, 0), p, N) for a in range(4) for p in (2, 3) for N in (1, 2)
] + [((0, 0, 0), 2, 1), ((1, 0, 0), 2, 1), ((1, 1, 0), 2, 1)])
def test_cartan_bruteforce_matches_closed_form(a, p, N):
    assert cartan_coset_bruteforce(a, p, N) == cartan_coset_size(a, N).evaluate(p)


@pytest.mark.parametrize("a", [(0, 1), (1, 1), (), (2, 3, 0)])
def test_cartan_exponents_validation(a):
    with pytest.raises(InvalidInput):
        cartan_coset_size(a, 1)


def test_cartan_size_needs_positive_level():
    with pytest.raises(InvalidInput):
        cartan_coset_size((1, 0), 0)


def test_level_zero_dim_sum_gl3():
    assert level_zero_dim_sum(3, 2, 2) == 87
    assert level_zero_dim_sum(3, 2, 2) == eval_dim(level_zero(3), 2, 2)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("q0", [2, 3, 4, 5])
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_level_zero_dim_sum_matches_growth(n, q0, N):
    assert level_zero_dim_sum(n, q0, N) == eval_dim(level_zero(n), q0, N)


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("q0", [2, 3])
@pytest.mark.parametrize("N", [5, 6])
def test_level_zero_dim_sum_matches_growth_deep_levels(n, q0, N):
    assert level_zero_dim_sum(n, q0, N) == eval_dim(level_zero(n), q0, N)


def test_level_zero_dim_sum_rejects():
    with pytest.raises(UnsupportedSize):
        level_zero_dim_sum(4, 2, 1)
    with pytest.raises(InvalidInput):
        level_zero_dim_sum(2, 1, 1)
    with pytest.raises(InvalidInput):
        level_zero_dim_sum(2, 2, 0)
