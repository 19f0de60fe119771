# Brute-force ground truth over the finite rings Z/p^N
#
# GL_n(Z/p^N) is enumerated as integer codes (entries read as base-p^N digits,
# row-major), decoded in numpy batches.  A subgroup H is described by valuation
# bounds: entry (i, j) of every h in H lies in p^e[i][j] Z/p^N.  Right cosets
# H\G are the orbits of left multiplication by H, counted as connected
# components of the generator graph with scipy.
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import isprime
from sympy.combinatorics import Permutation

from config import ENUMERATION_CHUNK, ENUMERATION_LIMIT, MAX_MODULUS
from errors import InvalidInput, OracleInconsistency, SizeLimitExceeded, UnsupportedSize
from logging_config import log_debug, log_enumeration
from qring import QPoly, q_multinomial


@dataclass(frozen=True)
class MatRing:
    """n x n matrices over Z/p^N"""

    n: int
    p: int
    N: int

    def __post_init__(self):
        if self.n < 1 or self.N < 1:
            raise InvalidInput(f"need n >= 1 and N >= 1, got n={self.n}, N={self.N}")
        if not isprime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.p ** self.N >= MAX_MODULUS:
            raise SizeLimitExceeded(f"modulus {self.p}^{self.N} does not fit a machine word")

    @property
    def modulus(self):
        return self.p ** self.N

    @property
    def size(self):
        """Number of all n x n matrices over Z/p^N"""
        return self.modulus ** (self.n * self.n)

    def check_guard(self, limit: Optional[int] = None):
        limit = ENUMERATION_LIMIT if limit is None else limit
        if self.size > limit:
            raise SizeLimitExceeded(f"M_{self.n}(Z/{self.p}^{self.N}) has {self.size} matrices, "
                                    f"above the enumeration limit {limit}")

    def powers(self):
        return self.modulus ** np.arange(self.n * self.n, dtype=np.int64)

    def decode(self, codes: np.ndarray) -> np.ndarray:
        digits = (codes[:, None] // self.powers()[None, :]) % self.modulus
        return digits.reshape(-1, self.n, self.n)

    def encode(self, mats: np.ndarray) -> np.ndarray:
        return mats.reshape(-1, self.n * self.n) @ self.powers()


def _det_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Leibniz determinant of a batch of matrices, reduced mod p"""
    n = mats.shape[1]
    reduced = mats % p
    det = np.zeros(mats.shape[0], dtype=np.int64)
    for perm in permutations(range(n)):
        term = np.full(mats.shape[0], Permutation(list(perm)).signature(), dtype=np.int64)
        for i, j in enumerate(perm):
            term = (term * reduced[:, i, j]) % p
        det = (det + term) % p
    return det


def invertible_codes(ring: MatRing, limit: Optional[int] = None) -> np.ndarray:
    """Sorted codes of GL_n(Z/p^N); a matrix is invertible iff it is invertible mod p"""
    ring.check_guard(limit)
    found: List[np.ndarray] = []
    for start in range(0, ring.size, ENUMERATION_CHUNK):
        codes = np.arange(start, min(start + ENUMERATION_CHUNK, ring.size), dtype=np.int64)
        mask = _det_mod_p(ring.decode(codes), ring.p) != 0
        found.append(codes[mask])
    result = np.concatenate(found)
    log_enumeration(ring.n, ring.p, ring.N, len(result))
    return result


def enumerate_gl(n: int, p: int, N: int, limit: Optional[int] = None) -> Iterator[np.ndarray]:
    """Yield every element of GL_n(Z/p^N) exactly once, as an n x n int64 array"""
    ring = MatRing(n, p, N)
    codes = invertible_codes(ring, limit)
    for start in range(0, len(codes), ENUMERATION_CHUNK):
        yield from ring.decode(codes[start:start + ENUMERATION_CHUNK])


def _subgroup_generators(ring: MatRing, bounds) -> List[np.ndarray]:
    n, m = ring.n, ring.modulus
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j and bounds[i][j] < ring.N:
                g = np.eye(n, dtype=np.int64)
                g[i, j] = ring.p ** bounds[i][j]
                gens.append(g)
    units = [u for u in range(1, m) if u % ring.p]
    for i in range(n):
        for u in units:
            g = np.eye(n, dtype=np.int64)
            g[i, i] = u
            gens.append(g)
    return gens


def subgroup_order_bruteforce(ring: MatRing, bounds, codes: Optional[np.ndarray] = None) -> int:
    """|H| counted directly from its valuation bounds"""
    codes = invertible_codes(ring) if codes is None else codes
    mats = ring.decode(codes)
    inside = np.ones(len(codes), dtype=bool)
    for i in range(ring.n):
        for j in range(ring.n):
            if bounds[i][j]:
                inside &= mats[:, i, j] % (ring.p ** min(bounds[i][j], ring.N)) == 0
    return int(inside.sum())


def count_right_cosets(ring: MatRing, bounds, limit: Optional[int] = None) -> int:
    """|H \\ GL_n(Z/p^N)| for the subgroup H given by valuation bounds"""
    codes = invertible_codes(ring, limit)
    mats = ring.decode(codes)
    rows, cols = [], []
    for g in _subgroup_generators(ring, bounds):
        images = ring.encode(np.einsum("ij,kjl->kil", g, mats) % ring.modulus)
        rows.append(np.arange(len(codes)))
        cols.append(np.searchsorted(codes, images))
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(len(codes), len(codes)))
    count, _ = connected_components(graph, directed=True, connection="weak")

    order = subgroup_order_bruteforce(ring, bounds, codes)
    if count * order != len(codes):
        raise OracleInconsistency(f"{count} orbits of a group of order {order} on {len(codes)} elements")
    log_debug(f"H of order {order} has {count} right cosets in GL_{ring.n}(Z/{ring.p}^{ring.N})")
    return int(count)


def _parabolic_bounds(parts: Sequence[int], N: int):
    block = [k for k, size in enumerate(parts) for _ in range(size)]
    n = len(block)
    return [[N if block[i] > block[j] else 0 for j in range(n)] for i in range(n)]


def flag_count_bruteforce(parts: Sequence[int], p: int, N: int, limit: Optional[int] = None) -> int:
    """|P_lambda(Z/p^N) \\ GL_n(Z/p^N)| with P_lambda block upper triangular"""
    parts = list(parts)
    if not parts or any(k < 1 for k in parts):
        raise InvalidInput(f"{parts} is not a composition")
    ring = MatRing(sum(parts), p, N)
    return count_right_cosets(ring, _parabolic_bounds(parts, N), limit)


def _check_exponents(exponents: Sequence[int]):
    a = list(exponents)
    if not a or a[-1] != 0 or any(x < y for x, y in zip(a, a[1:])):
        raise InvalidInput(f"Cartan exponents must be descending and end in 0, got {a}")
    return a


def _cartan_bounds(a: Sequence[int], N: int):
    n = len(a)
    return [[min(N, a[i] - a[j]) if i < j else 0 for j in range(n)] for i in range(n)]


def cartan_coset_bruteforce(exponents: Sequence[int], p: int, N: int, limit: Optional[int] = None) -> int:
    """|K_0 \\ K_0 g K_0 / K_N| for g = diag(p^a_1, ..., p^a_n), via H = K_0 cap g K_0 g^-1"""
    a = _check_exponents(exponents)
    ring = MatRing(len(a), p, N)
    return count_right_cosets(ring, _cartan_bounds(a, N), limit)


def cartan_coset_size(exponents: Sequence[int], N: int) -> QPoly:
    """Closed form q^(((sum n_i^2) - n^2)/2 + sum_(i<j) min(a_i - a_j, N)) [n; lambda]_q"""
    a = _check_exponents(exponents)
    if N < 1:
        raise InvalidInput(f"N must be >= 1, got {N}")
    n = len(a)
    blocks = []
    for k, x in enumerate(a):
        if k and x == a[k - 1]:
            blocks[-1] += 1
        else:
            blocks.append(1)
    exponent = (sum(b * b for b in blocks) - n * n) // 2
    exponent += sum(min(a[i] - a[j], N) for i in range(n) for j in range(i + 1, n))
    return QPoly.monomial(exponent) * q_multinomial(n, blocks)


def level_zero_dim_sum(n: int, q0: int, N: int) -> int:
    """dim rho^(K_N) for a level zero supercuspidal of GL_2 or GL_3, summed over Cartan cells"""
    if q0 < 2 or N < 1:
        raise InvalidInput(f"need q0 >= 2 and N >= 1, got q0={q0}, N={N}")

    def coset(*a):
        return cartan_coset_size(a, N).evaluate(q0)

    if n == 2:
        return sum((q0 - 1) * coset(a, 0) for a in range(N))
    if n == 3:
        d = (q0 - 1) * (q0 * q0 - 1)
        full = sum(d * coset(a, b, 0) for a in range(N) for b in range(a + 1))
        # one-parameter unipotent fixed space of dimension d/(q+1)
        partial = sum(d // (q0 + 1) * coset(a, b, 0)
                      for a in range(N, 2 * N - 1) for b in range(a + 1)
                      if b < N and a - b < N)
        return full + partial
    raise UnsupportedSize(f"level zero summation is implemented for n = 2, 3, not {n}")
