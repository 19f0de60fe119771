# Nilpotent orbits of GL_n as partitions, character expansions and the
# Jacquet-Langlands transfer of their coefficients
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Tuple, Union

from sympy.utilities.iterables import partitions

from errors import AmbiguousExpansion, InexactDivision, InvalidInput, MismatchedSize, NotInImage
from qring import Q, QPoly, XLaurent, q_multinomial


@dataclass(frozen=True, order=True)
class Partition:
    """Jordan type of a nilpotent orbit; parts are stored in descending order"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise InvalidInput(f"partition parts must be positive, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    @property
    def n(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last"""
    if n < 1:
        raise InvalidInput(f"partitions_of needs n >= 1, got {n}")
    found = [Partition(tuple(p for part, mult in sorted(d.items(), reverse=True) for p in [part] * mult))
             for d in partitions(n)]
    return sorted(found, key=lambda p: p.parts, reverse=True)


def orbit_dim(p: Partition) -> int:
    """dim O_lambda = n^2 - sum of squared parts (always even)"""
    return p.n ** 2 - sum(k * k for k in p.parts)


def w_orbit(p: Partition) -> int:
    """Number of permutations of the parts fixing the tuple: product of multiplicity factorials"""
    result = 1
    for mult in Counter(p.parts).values():
        result *= factorial(mult)
    return result


def dominance_leq(p1: Partition, p2: Partition) -> bool:
    """Closure order of orbits, realized as dominance of partitions"""
    if p1.n != p2.n:
        raise MismatchedSize(f"{p1} and {p2} are partitions of different integers")
    s1 = s2 = 0
    for k in range(max(p1.length, p2.length)):
        s1 += p1.parts[k] if k < p1.length else 0
        s2 += p2.parts[k] if k < p2.length else 0
        if s1 > s2:
            return False
    return True


def murnaghan_coefficient(p: Partition) -> int:
    """(-1)^(n+r) n (r-1)! / w_lambda, the level-zero character coefficient"""
    value = Fraction((-1) ** (p.n + p.length) * p.n * factorial(p.length - 1), w_orbit(p))
    if value.denominator != 1:
        raise InexactDivision(f"Murnaghan coefficient for {p} is not integral: {value}")
    return value.numerator


@dataclass(frozen=True)
class CharacterExpansion:
    """Coefficients c_O of the local character expansion, keyed by partition of n"""

    n: int
    coeffs: Tuple[Tuple[Partition, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"character expansion needs n >= 1, got {self.n}")
        merged: Dict[Partition, int] = {}
        for p, c in self.coeffs:
            if not isinstance(p, Partition):
                p = Partition(tuple(p))
            if p.n != self.n:
                raise MismatchedSize(f"partition {p} in an expansion over GL_{self.n}")
            if int(c) != c:
                raise InvalidInput(f"coefficient {c!r} of {p} is not an integer")
            merged[p] = merged.get(p, 0) + int(c)
        coeffs = tuple(sorted(((p, c) for p, c in merged.items() if c), key=lambda t: t[0].parts, reverse=True))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping):
        return cls(n, tuple(mapping.items()))

    def as_dict(self) -> Dict[Partition, int]:
        return dict(self.coeffs)

    def get(self, p: Partition) -> int:
        return self.as_dict().get(p, 0)

    def to_json(self):
        return {"n": self.n, "coeffs": [{"partition": list(p.parts), "c": c} for p, c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["n"]), tuple((Partition(tuple(e["partition"])), e["c"]) for e in data["coeffs"]))
        except (KeyError, TypeError) as e:
            raise InvalidInput(f"malformed character expansion: {e}") from e


def expansion_to_growth(ce: CharacterExpansion) -> XLaurent:
    """G = sum over orbits of c_O [n; lambda]_q X^(dim O / 2)"""
    return XLaurent(tuple((orbit_dim(p) // 2, c * q_multinomial(ce.n, p.parts)) for p, c in ce.coeffs))


def _orbits_by_half_dim(n: int) -> Dict[int, List[Partition]]:
    table: Dict[int, List[Partition]] = {}
    for p in partitions_of(n):
        table.setdefault(orbit_dim(p) // 2, []).append(p)
    return table


def growth_to_expansion(G: XLaurent, n: int) -> CharacterExpansion:
    """Read c_O back off a growth polynomial; refuses when orbit dimensions collide"""
    table = _orbits_by_half_dim(n)
    collisions = [ps for ps in table.values() if len(ps) > 1]
    if collisions:
        first = collisions[0]
        raise AmbiguousExpansion(f"partitions {', '.join(map(str, first))} of {n} share orbit dimension "
                                 f"{orbit_dim(first[0])}", partitions=first)
    coeffs = []
    for e, c in G.terms:
        if e not in table:
            raise NotInImage(f"X^{e} is not X^(dim O/2) for any orbit of GL_{n}")
        p = table[e][0]
        if not c.is_polynomial():
            raise NotInImage(f"coefficient {c.render()} of X^{e} is not in Z[q]")
        try:
            quotient = c.num.exact_div(q_multinomial(n, p.parts))
        except InexactDivision as err:
            raise NotInImage(f"coefficient of X^{e} is not a multiple of [{n};{p}]_q") from err
        if not quotient.is_constant():
            raise NotInImage(f"coefficient of X^{e} is not an integer multiple of [{n};{p}]_q")
        coeffs.append((p, quotient.constant_value()))
    return CharacterExpansion(n, tuple(coeffs))


def jl_transfer(ce_D: CharacterExpansion, d: int) -> CharacterExpansion:
    """Coefficients over GL_m(D) -> GL_(md)(F): parts scale by d, sign (-1)^(n-m)"""
    if d < 1:
        raise InvalidInput(f"division algebra degree must be >= 1, got {d}")
    m, n = ce_D.n, ce_D.n * d
    sign = (-1) ** (n - m)
    return CharacterExpansion(n, tuple((Partition(tuple(k * d for k in p.parts)), sign * c)
                                       for p, c in ce_D.coeffs))


def jl_constant_term(dim_piD: Union[int, QPoly], n: int) -> Union[int, QPoly]:
    """Constant term (-1)^(n-1) dim(pi_D) of a discrete series growth polynomial"""
    if isinstance(dim_piD, int) and dim_piD < 1:
        raise InvalidInput(f"dimension must be positive, got {dim_piD}")
    return (-1) ** (n - 1) * dim_piD


def division_unit_index(m: int, e: int) -> QPoly:
    """|E^x U_D^m \\ D^x| for the quaternion algebra D and a quadratic E of ramification e"""
    if e not in (1, 2):
        raise InvalidInput(f"ramification index of a quadratic extension is 1 or 2, got {e}")
    if m < 1:
        raise InvalidInput(f"unit filtration level must be >= 1, got {m}")
    f = 2 // e
    ratio = (Q ** 2 - 1).exact_div(Q ** f - 1)
    exponent = 2 * (m - 1) - f * ((e * (m - 1)) // 2)
    return f * ratio * QPoly.monomial(exponent)


def gl2_jl_dimension(case: str, level: Optional[int] = None) -> QPoly:
    """dim pi_D for the GL_2 supercuspidal cases level0, e2{level}, e1{level}"""
    if case == "level0":
        return division_unit_index(1, 1)
    if level is None or level < 1:
        raise InvalidInput(f"GL_2 case {case} needs a stratum level >= 1")
    if case == "e2":
        return division_unit_index(level // 2 + 1, 2)
    if case == "e1":
        if level % 2:
            return Q * division_unit_index(level, 1)
        return division_unit_index(level + 1, 1)
    raise InvalidInput(f"unknown GL_2 case {case!r}")
