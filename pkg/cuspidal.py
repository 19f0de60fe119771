# Growth polynomial sources for supercuspidal building blocks
#
# Every variant knows its GL_n size and either produces the full growth
# polynomial G_rho or, for LeadingOnly, only [n!]_q X^(n(n-1)/2).
from dataclasses import dataclass
from math import factorial
from typing import Optional, Tuple, Union

from errors import InsufficientCuspidalData, InvalidInput, ProblemParseError
from logging_config import log_ramified_exponents
from orbits import CharacterExpansion, expansion_to_growth, murnaghan_coefficient, orbit_dim, partitions_of, w_orbit
from qring import Q, QPoly, QRat, XLaurent, q_factorial, q_multinomial


def cusp_leading(n1: int) -> Tuple[QPoly, int]:
    """Leading coefficient and X-degree of any supercuspidal of GL_n1"""
    if n1 < 1:
        raise InvalidInput(f"supercuspidal size must be >= 1, got {n1}")
    return q_factorial(n1), n1 * (n1 - 1) // 2


def murnaghan_unramified(n: int, j: int) -> XLaurent:
    """Full growth polynomial for E/F unramified and a generic character of level j"""
    _check_level(n, j)
    terms = []
    for p in partitions_of(n):
        dim = orbit_dim(p)
        weight = QPoly.monomial((n * n - n - dim) * j // 2, murnaghan_coefficient(p))
        terms.append((dim // 2, weight * q_multinomial(n, p.parts)))
    return XLaurent(tuple(terms))


@dataclass(frozen=True)
class RamifiedGrowth:
    """Totally ramified Murnaghan sum in s = q^(1/root); q_growth is set when exponents are integral"""

    s_growth: XLaurent
    root: int
    integral_exponents: bool
    q_growth: Optional[XLaurent] = None


def _contract(c: QRat, root: int) -> Optional[QRat]:
    num, den = c.num.contract_power(root), c.den.contract_power(root)
    if num is None or den is None:
        return None
    return QRat(num, den)


def murnaghan_ramified(n: int, j: int) -> RamifiedGrowth:
    """Full growth polynomial for E/F totally ramified; q-exponents (n^2-n-dim O)j/(2n)"""
    _check_level(n, j)
    root = 2 * n
    terms = []
    integral = True
    for p in partitions_of(n):
        dim = orbit_dim(p)
        r = p.length
        sign = (-1) ** (n + r)
        base = QRat(QPoly.const(sign * factorial(r - 1)), QPoly.const(w_orbit(p)))
        # q/(q-1) * (r - sum q^(-n_i)), computed in Q(q)
        tail = QRat(r) - sum((QRat(1, QPoly.monomial(k)) for k in p.parts), QRat())
        factor = base * QRat(Q, Q - 1) * tail * q_multinomial(n, p.parts)
        s_power = (n * n - n - dim) * j
        integral = integral and s_power % root == 0
        terms.append((dim // 2, factor.substitute_power(root) * QPoly.monomial(s_power)))
    s_growth = XLaurent(tuple(terms))

    q_growth = None
    if integral:
        q_growth = s_growth.map_coeffs(lambda c: _contract(c, root))
    else:
        log_ramified_exponents(n, j)
    return RamifiedGrowth(s_growth=s_growth, root=root, integral_exponents=integral, q_growth=q_growth)


def level_zero(n: int) -> XLaurent:
    if n < 1:
        raise InvalidInput(f"level_zero needs n >= 1, got {n}")
    ce = CharacterExpansion(n, tuple((p, murnaghan_coefficient(p)) for p in partitions_of(n)))
    return expansion_to_growth(ce)


def gl2_growth(case: str, level: Optional[int] = None) -> XLaurent:
    """GL_2 supercuspidals read off the Jacquet-Langlands index computations"""
    leading = XLaurent.monomial(1, Q + 1)
    if case == "level0":
        return leading - 2
    if level is None or level < 1:
        raise InvalidInput(f"GL_2 case {case!r} needs a stratum level >= 1")
    if case == "e2":
        return leading - (Q + 1) * QPoly.monomial(level // 2)
    if case == "e1":
        return leading - QPoly.monomial(level, 2)
    raise InvalidInput(f"unknown GL_2 case {case!r}; expected level0, e2 or e1")


def ai_unramified_quadratic(ell: int) -> XLaurent:
    """Automorphic induction from an unramified quadratic E/F, theta^tau theta^-1 of level ell"""
    if ell < 0:
        raise InvalidInput(f"level must be >= 0, got {ell}")
    return XLaurent.monomial(1, Q + 1) - QPoly.monomial(ell, 2)


def _check_level(n, j):
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    if j < 0:
        raise InvalidInput(f"level j must be >= 0, got {j}")


# CuspidalGrowth variants

@dataclass(frozen=True)
class LeadingOnly:
    n1: int
    kind = "leading"

    @property
    def n(self):
        return self.n1

    def full_growth(self) -> XLaurent:
        raise InsufficientCuspidalData(f"only the leading term of a GL_{self.n1} supercuspidal is known")


@dataclass(frozen=True)
class Explicit:
    """User supplied polynomial, valid for N >= threshold"""

    n1: int
    poly: XLaurent
    threshold: int = 1
    kind = "explicit"

    def __post_init__(self):
        coeff, exponent = cusp_leading(self.n1)
        if self.poly.is_zero() or self.poly.leading_term() != (exponent, QRat(coeff)):
            raise InvalidInput(f"explicit growth {self.poly.render()} does not start with "
                               f"[{self.n1}!]_q X^{exponent}")
        if not self.poly.is_integral():
            raise InvalidInput(f"explicit growth {self.poly.render()} must lie in Z[q][X]")
        if self.threshold < 1:
            raise InvalidInput(f"validity threshold must be >= 1, got {self.threshold}")

    @property
    def n(self):
        return self.n1

    def full_growth(self) -> XLaurent:
        return self.poly


@dataclass(frozen=True)
class MurnaghanUnramified:
    n1: int
    j: int = 0
    kind = "murnaghan_unr"

    @property
    def n(self):
        return self.n1

    def full_growth(self) -> XLaurent:
        return murnaghan_unramified(self.n1, self.j)


@dataclass(frozen=True)
class MurnaghanRamified:
    n1: int
    j: int = 0
    kind = "murnaghan_ram"

    @property
    def n(self):
        return self.n1

    def full_growth(self) -> XLaurent:
        result = murnaghan_ramified(self.n1, self.j)
        if result.q_growth is None:
            raise InsufficientCuspidalData(f"totally ramified formula for n={self.n1}, j={self.j} "
                                           f"has fractional q-exponents")
        return result.q_growth


@dataclass(frozen=True)
class LevelZero:
    n1: int
    kind = "level0"

    @property
    def n(self):
        return self.n1

    def full_growth(self) -> XLaurent:
        return level_zero(self.n1)


@dataclass(frozen=True)
class GL2Case:
    case: str = "level0"
    level: Optional[int] = None
    kind = "gl2"

    @property
    def n(self):
        return 2

    def full_growth(self) -> XLaurent:
        return gl2_growth(self.case, self.level)


@dataclass(frozen=True)
class AIUnramifiedQuadratic:
    ell: int = 0
    kind = "ai_quad"

    @property
    def n(self):
        return 2

    def full_growth(self) -> XLaurent:
        return ai_unramified_quadratic(self.ell)


CuspidalGrowth = Union[LeadingOnly, Explicit, MurnaghanUnramified, MurnaghanRamified, LevelZero,
                       GL2Case, AIUnramifiedQuadratic]


def has_full_growth(source: CuspidalGrowth) -> bool:
    try:
        source.full_growth()
    except InsufficientCuspidalData:
        return False
    return True


# JSON sub-schema

def laurent_to_json(G: XLaurent):
    return [{"x": e, "num": list(c.num.coeffs), "den": list(c.den.coeffs)} for e, c in G.terms]


def laurent_from_json(data) -> XLaurent:
    try:
        return XLaurent(tuple((int(t["x"]), QRat(QPoly(tuple(t["num"])), QPoly(tuple(t.get("den", [1])))))
                              for t in data))
    except (KeyError, TypeError, ValueError, InvalidInput) as e:
        raise ProblemParseError(f"malformed explicit polynomial: {e}") from e


def source_to_json(source: CuspidalGrowth):
    data = {"kind": source.kind}
    if isinstance(source, Explicit):
        data.update(n=source.n1, poly=laurent_to_json(source.poly), threshold=source.threshold)
    elif isinstance(source, (MurnaghanUnramified, MurnaghanRamified)):
        data.update(n=source.n1, j=source.j)
    elif isinstance(source, (LeadingOnly, LevelZero)):
        data.update(n=source.n1)
    elif isinstance(source, GL2Case):
        data.update(case=source.case)
        if source.level is not None:
            data.update(level=source.level)
    elif isinstance(source, AIUnramifiedQuadratic):
        data.update(ell=source.ell)
    return data


def source_from_json(data, size: Optional[int] = None) -> CuspidalGrowth:
    """Build a source from its JSON form; size (the symbol's n1) fills in a missing "n" """
    if not isinstance(data, dict) or "kind" not in data:
        raise ProblemParseError(f"cuspidal source must be an object with a \"kind\", got {data!r}")
    kind = data["kind"]
    n = data.get("n", size)
    try:
        if kind == "leading":
            return LeadingOnly(int(n))
        if kind == "explicit":
            poly = data["poly"]
            G = XLaurent.parse(poly) if isinstance(poly, str) else laurent_from_json(poly)
            return Explicit(int(n), G, int(data.get("threshold", 1)))
        if kind == "murnaghan_unr":
            return MurnaghanUnramified(int(n), int(data.get("j", 0)))
        if kind == "murnaghan_ram":
            return MurnaghanRamified(int(n), int(data.get("j", 0)))
        if kind == "level0":
            return LevelZero(int(n))
        if kind == "gl2":
            level = data.get("level")
            return GL2Case(data.get("case", "level0"), None if level is None else int(level))
        if kind == "ai_quad":
            return AIUnramifiedQuadratic(int(data.get("ell", 0)))
    except InvalidInput:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ProblemParseError(f"malformed {kind!r} source: {e}") from e
    raise ProblemParseError(f"unknown cuspidal source kind {kind!r}")

