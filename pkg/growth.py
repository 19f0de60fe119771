# Growth polynomials and Gelfand-Kirillov dimensions of GL_n representations
#
# Supported exactly: single segments <Delta>, rho-rigid multisegments whose
# segments are pairwise disjoint or pairwise unlinked, and products of those
# over distinct cuspidal symbols.  Anything else only has a leading term.
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional, Sequence, Tuple

from cuspidal import CuspidalGrowth
from errors import InexactDivision, InsufficientCuspidalData, InvalidInput, UnsupportedMultisegment
from logging_config import log_debug
from qring import QRat, XLaurent, product, q_binomial, q_factorial, q_factorial_base, q_multinomial
from segments import Multisegment, Segment, is_unlinked, linked, poset_below, supports_pairwise_disjoint

Sources = Optional[Mapping[str, CuspidalGrowth]]


@dataclass(frozen=True)
class LeadingTerm:
    """coeff * X^exponent, the top term of a growth polynomial"""

    coeff: QRat
    exponent: int

    def as_laurent(self) -> XLaurent:
        return XLaurent.monomial(self.exponent, self.coeff)

    def render(self):
        return self.as_laurent().render()


def parabolic_coset_count(parts: Sequence[int]) -> XLaurent:
    """|P_lambda(O/p^N) \\ GL_n(O/p^N)| as [n; lambda]_q X^((n^2 - sum n_i^2)/2)"""
    parts = list(parts)
    n = sum(parts)
    return XLaurent.monomial((n * n - sum(k * k for k in parts)) // 2, q_multinomial(n, parts))


def product_growth(factors: Sequence[Tuple[int, XLaurent]]) -> XLaurent:
    """Growth of a parabolically induced pi_1 x ... x pi_r from (n_i, G_i) pairs"""
    factors = list(factors)
    if not factors:
        raise InvalidInput("product_growth needs at least one factor")
    return parabolic_coset_count([size for size, _ in factors]) * product(G for _, G in factors)


def _source_for(symbol, sources: Sources) -> CuspidalGrowth:
    source = sources.get(symbol.id) if sources is not None else None
    if source is None:
        source = symbol.source
    if source is None:
        raise InsufficientCuspidalData(f"no growth source declared for cuspidal {symbol.id}")
    if source.n != symbol.size:
        raise InvalidInput(f"source of {symbol.id} describes GL_{source.n}, symbol has size {symbol.size}")
    return source


def _checked_source(d: Segment, source: Optional[CuspidalGrowth]) -> CuspidalGrowth:
    if source is None:
        return _source_for(d.symbol, None)
    if source.n != d.symbol.size:
        raise InvalidInput(f"source describes GL_{source.n}, segment symbol {d.symbol.id} has size {d.symbol.size}")
    return source


def segment_growth(d: Segment, source: Optional[CuspidalGrowth] = None) -> XLaurent:
    """G_<Delta> = [r!]_(q^n1)^-1 [n; n1,...,n1]_q X^(n1(n1-1)r(r-1)/2) G_rho^r"""
    source = _checked_source(d, source)
    G_rho = source.full_growth()
    n1, r = d.symbol.size, d.length
    coeff = QRat(q_multinomial(d.size, [n1] * r), q_factorial_base(r, n1))
    return XLaurent.monomial(n1 * (n1 - 1) * r * (r - 1) // 2, coeff) * G_rho ** r


def segment_growth_recursive(d: Segment, source: Optional[CuspidalGrowth] = None) -> XLaurent:
    """Same polynomial built one cuspidal at a time from G_<Delta^->"""
    source = _checked_source(d, source)
    G_rho = source.full_growth()
    n1 = d.symbol.size
    G = G_rho
    for k in range(2, d.length + 1):
        m = n1 * k
        step = XLaurent.monomial((m - n1) * (n1 - 1), q_binomial(m - 1, n1 - 1))
        G = step * G * G_rho
    return G


def leading_term(a: Multisegment) -> LeadingTerm:
    """[n!]_q / prod [r_i!]_(q^n_i) * X^((n^2 - sum n_i r_i^2)/2); needs no cuspidal data"""
    if not len(a):
        raise InvalidInput("the empty multisegment has no leading term")
    n = a.n
    twice = n * n - sum(s.symbol.size * s.length ** 2 for s in a)
    if twice % 2:
        raise InexactDivision(f"parity violated for {a.render()}: n^2 - sum n_i r_i^2 = {twice}")
    coeff = QRat(q_factorial(n))
    for s in a:
        coeff = coeff / q_factorial_base(s.length, s.symbol.size)
    return LeadingTerm(coeff=coeff, exponent=twice // 2)


def gk_dimension(a: Multisegment) -> int:
    return leading_term(a).exponent


def standard_module_growth(b: Multisegment, sources: Sources = None) -> XLaurent:
    """G of the standard module pi(b), the product of its segments' <Delta>"""
    return product_growth([(s.size, segment_growth(s, _source_for(s.symbol, sources))) for s in b])


def langlands_quotient_growth_disjoint(a: Multisegment, sources: Sources = None) -> XLaurent:
    """Alternating sum of pi(b) over the poset below a rho-rigid a with disjoint segments"""
    if not supports_pairwise_disjoint(a):
        raise UnsupportedMultisegment(f"{a.render()} is not a rho-rigid multisegment with disjoint segments")
    poset = poset_below(a)
    total = XLaurent()
    for b in poset.nodes:
        sign = (-1) ** (len(a) - len(b))
        total = total + standard_module_growth(b, sources).scale(sign)
    log_debug(f"<{a.render()}> summed over {len(poset.nodes)} standard modules")
    return total


def rigid_cofactor(a: Multisegment) -> XLaurent:
    """Q(X) with G_<a> = Q(X) G_rho^s for rho-rigid a with disjoint segments (s = support size)"""
    if not supports_pairwise_disjoint(a):
        raise UnsupportedMultisegment(f"{a.render()} is not a rho-rigid multisegment with disjoint segments")
    n1 = a[0].symbol.size
    s = sum(seg.length for seg in a)
    inner = XLaurent()
    for b in poset_below(a).nodes:
        term = product(XLaurent.monomial(-seg.length * (seg.length - 1) * n1 // 2,
                                         QRat(1, q_factorial_base(seg.length, n1))) for seg in b)
        inner = inner + term.scale((-1) ** (len(a) - len(b)))
    return XLaurent.monomial(s * (s - 1) * n1 * n1 // 2, q_multinomial(n1 * s, [n1] * s)) * inner


def _first_linked_pair(a: Multisegment):
    for d1, d2 in combinations(a.segments, 2):
        if linked(d1, d2):
            return d1, d2
    return None


def exact_growth(a: Multisegment, sources: Sources = None) -> XLaurent:
    """Full growth polynomial of <a> where one is available, else UnsupportedMultisegment"""
    if not len(a):
        raise InvalidInput("the empty multisegment has no growth polynomial")
    factors = []
    for sid, group in a.by_symbol().items():
        if len(group) == 1:
            G = segment_growth(group[0], _source_for(group[0].symbol, sources))
        elif supports_pairwise_disjoint(group):
            G = langlands_quotient_growth_disjoint(group, sources)
        elif is_unlinked(group):
            # no linked pair: pi(a) is irreducible, so <a> = pi(a)
            G = standard_module_growth(group, sources)
        else:
            d1, d2 = _first_linked_pair(group)
            raise UnsupportedMultisegment(
                f"segments {d1.render()} and {d2.render()} of {sid} are linked; "
                f"exact growth needs Zelevinsky multiplicities", linked_pair=(d1, d2))
        factors.append((group.n, G))
    return product_growth(factors)


def normalize_I(n: int, G: XLaurent) -> XLaurent:
    """[n!]_q^-1 X^(-(n^2-n)/2) G, multiplicative across parabolic induction"""
    if n < 1:
        raise InvalidInput(f"normalize_I needs n >= 1, got {n}")
    return G.scale(QRat(1, q_factorial(n))).shift(-(n * n - n) // 2)
