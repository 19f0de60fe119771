# Exact arithmetic in Z[q], its fraction field, and Laurent polynomials in X
#
# X stands for q^(N-1); a growth polynomial G_pi is an XLaurent with
# dim pi^(K_N) = G_pi(q^(N-1)).  Dense Z[q] arithmetic is delegated to sympy's
# dup_* routines, which work on descending coefficient lists over ZZ.
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy import ZZ
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.densearith import dup_add, dup_exquo, dup_mul, dup_neg, dup_pow, dup_sub
from sympy.polys.densetools import dup_eval
from sympy.polys.euclidtools import dup_cancel
from sympy.polys.polyerrors import BasePolynomialError, ExactQuotientFailed

from errors import InexactDivision, InvalidInput, NonIntegralEvaluation, ProblemParseError

_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication_application)
_Q, _X = sympy.symbols("q X")


@dataclass(frozen=True)
class QPoly:
    """Z[q] element, ascending coefficients with trailing zeros stripped"""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # construction

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise InvalidInput(f"negative power q^{k} is not a polynomial")
        return cls((0,) * k + (c,))

    @classmethod
    def from_dup(cls, f):
        return cls(tuple(int(c) for c in reversed(f)))

    def to_dup(self):
        return [ZZ(c) for c in reversed(self.coeffs)]

    # queries

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_monomial(self):
        return sum(1 for c in self.coeffs if c) == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else 0

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else 0

    # arithmetic

    def __add__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return QPoly.from_dup(dup_add(self.to_dup(), other.to_dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return QPoly.from_dup(dup_sub(self.to_dup(), other.to_dup(), ZZ))

    def __rsub__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QPoly.from_dup(dup_neg(self.to_dup(), ZZ))

    def __mul__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return QPoly.from_dup(dup_mul(self.to_dup(), other.to_dup(), ZZ))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InvalidInput("QPoly powers must be nonnegative; use QRat for inverses")
        return QPoly.from_dup(dup_pow(self.to_dup(), k, ZZ))

    def exact_div(self, other):
        """Exact quotient in Z[q]; raises InexactDivision if a remainder is left"""
        other = _as_qpoly(other)
        if other is None or other.is_zero():
            raise InvalidInput("division by the zero polynomial")
        try:
            return QPoly.from_dup(dup_exquo(self.to_dup(), other.to_dup(), ZZ))
        except ExactQuotientFailed as e:
            raise InexactDivision(f"{other.render()} does not divide {self.render()}") from e

    def substitute_power(self, m):
        """f(q) -> f(q^m)"""
        if m < 1:
            raise InvalidInput(f"substitution power must be >= 1, got {m}")
        if not self.coeffs:
            return self
        out = [0] * (self.degree * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return QPoly(tuple(out))

    def contract_power(self, m) -> Optional["QPoly"]:
        """Inverse of substitute_power: f(q^m) -> f(q), or None if some power is not a multiple of m"""
        if any(c and i % m for i, c in enumerate(self.coeffs)):
            return None
        return QPoly(self.coeffs[::m])

    def evaluate(self, q0):
        return int(dup_eval(self.to_dup(), ZZ(q0), ZZ))

    # rendering

    def render(self, var="q"):
        """Expanded text, descending powers, e.g. "q^2 + q + 1" """
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            body = _monomial_text(abs(c), k, var)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.render()


def _monomial_text(c, k, var):
    if k == 0:
        return str(c)
    power = var if k == 1 else f"{var}^{k}"
    return power if c == 1 else f"{c}*{power}"


def _as_qpoly(value) -> Optional[QPoly]:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly.const(value)
    return None


ONE = QPoly((1,))
ZERO = QPoly()
Q = QPoly((0, 1))


@dataclass(frozen=True)
class QRat:
    """Element of Q(q) as num/den with gcd 1 and den having positive leading coefficient"""

    num: QPoly = ZERO
    den: QPoly = ONE

    def __post_init__(self):
        num, den = _as_qpoly(self.num), _as_qpoly(self.den)
        if num is None or den is None:
            raise InvalidInput("QRat parts must be QPoly or int")
        if den.is_zero():
            raise InvalidInput("QRat denominator is zero")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not den.is_one():
            p, q = dup_cancel(num.to_dup(), den.to_dup(), ZZ)
            num, den = QPoly.from_dup(p), QPoly.from_dup(q)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value) -> "QRat":
        if isinstance(value, QRat):
            return value
        if isinstance(value, Fraction):
            return cls(QPoly.const(value.numerator), QPoly.const(value.denominator))
        poly = _as_qpoly(value)
        if poly is None:
            raise InvalidInput(f"cannot read {value!r} as an element of Q(q)")
        return cls(poly)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def __add__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den)

    def __sub__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_qrat(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num ** k, self.den ** k)

    def substitute_power(self, m):
        return QRat(self.num.substitute_power(m), self.den.substitute_power(m))

    def evaluate(self, q0) -> Fraction:
        den = self.den.evaluate(q0)
        if den == 0:
            raise NonIntegralEvaluation(f"denominator {self.den.render()} vanishes at q={q0}")
        return Fraction(self.num.evaluate(q0), den)

    def render(self, var="q"):
        if self.den.is_one():
            return self.num.render(var)
        return f"({self.num.render(var)})/({self.den.render(var)})"

    def __str__(self):
        return self.render()


def _as_qrat(value) -> Optional[QRat]:
    if isinstance(value, QRat):
        return value
    poly = _as_qpoly(value)
    return QRat(poly) if poly is not None else None


Scalar = Union[QRat, QPoly, int]


@dataclass(frozen=True)
class XLaurent:
    """Laurent polynomial in X over Q(q); terms descend by exponent, no zero coefficients"""

    terms: Tuple[Tuple[int, QRat], ...] = ()

    def __post_init__(self):
        merged: Dict[int, QRat] = {}
        for exponent, coeff in self.terms:
            if not isinstance(exponent, int):
                raise InvalidInput(f"X-exponent must be an integer, got {exponent!r}")
            merged[exponent] = merged.get(exponent, QRat()) + QRat.of(coeff)
        terms = tuple(sorted(((e, c) for e, c in merged.items() if not c.is_zero()),
                             key=lambda t: -t[0]))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, mapping: Mapping[int, Scalar]):
        return cls(tuple(mapping.items()))

    @classmethod
    def const(cls, c: Scalar):
        return cls(((0, c),))

    @classmethod
    def monomial(cls, exponent: int, c: Scalar = 1):
        return cls(((exponent, c),))

    # queries

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, exponent) -> QRat:
        for e, c in self.terms:
            if e == exponent:
                return c
        return QRat()

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            raise InvalidInput("the zero growth polynomial has no degree")
        return self.terms[0][0]

    def leading_term(self) -> Tuple[int, QRat]:
        if not self.terms:
            raise InvalidInput("the zero growth polynomial has no leading term")
        return self.terms[0]

    def constant_term(self) -> QRat:
        return self.coeff(0)

    def is_integral(self):
        return all(e >= 0 and c.is_polynomial() for e, c in self.terms)

    # arithmetic

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return XLaurent(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return XLaurent(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return XLaurent(tuple((e1 + e2, c1 * c2)
                              for e1, c1 in self.terms for e2, c2 in other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InvalidInput("XLaurent powers must be nonnegative")
        result = XLaurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar):
        c = QRat.of(c)
        return XLaurent(tuple((e, c * coeff) for e, coeff in self.terms))

    def shift(self, k: int):
        return XLaurent(tuple((e + k, c) for e, c in self.terms))

    def map_coeffs(self, fn):
        return XLaurent(tuple((e, fn(c)) for e, c in self.terms))

    # rendering and parsing

    def render(self, var="q"):
        """Canonical text, e.g. "(q + 1)*X - 2"; parse() reads it back"""
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            negative, body = _coeff_text(c, var)
            xpart = "" if e == 0 else ("X" if e == 1 else f"X^{e}" if e > 0 else f"X^({e})")
            if not xpart:
                text = body
            elif body == "1":
                text = xpart
            else:
                text = f"{body}*{xpart}"
            if not pieces:
                pieces.append(("-" if negative else "") + text)
            else:
                pieces.append((" - " if negative else " + ") + text)
        return "".join(pieces)

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "XLaurent":
        """Read a rendered growth polynomial (any sympy-readable expression in q and X)"""
        try:
            expr = parse_expr(text, local_dict={"q": _Q, "X": _X}, transformations=_TRANSFORMATIONS)
        except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
            raise ProblemParseError(f"cannot parse growth polynomial {text!r}: {e}") from e
        if not expr.free_symbols <= {_Q, _X}:
            raise ProblemParseError(f"unexpected symbols {sorted(map(str, expr.free_symbols - {_Q, _X}))} in {text!r}")

        grouped: Dict[int, sympy.Expr] = {}
        for term in sympy.Add.make_args(sympy.expand(expr)):
            coeff, exponent = term.as_coeff_exponent(_X)
            if coeff.has(_X) or not exponent.is_Integer:
                raise ProblemParseError(f"term {term} is not a Laurent monomial in X")
            grouped[int(exponent)] = grouped.get(int(exponent), sympy.Integer(0)) + coeff

        terms = []
        for exponent, coeff in grouped.items():
            num, den = sympy.fraction(sympy.cancel(sympy.together(coeff)))
            terms.append((exponent, QRat(_poly_from_expr(num, text), _poly_from_expr(den, text))))
        return cls(tuple(terms))


def _poly_from_expr(expr, text) -> QPoly:
    try:
        poly = sympy.Poly(expr, _Q)
    except BasePolynomialError as e:
        raise ProblemParseError(f"coefficient {expr} of {text!r} is not rational in q") from e
    coeffs = poly.all_coeffs()
    if not all(c.is_Integer for c in coeffs):
        raise ProblemParseError(f"coefficient {expr} of {text!r} has non-integer rational entries")
    return QPoly(tuple(int(c) for c in reversed(coeffs)))


def _coeff_text(c: QRat, var) -> Tuple[bool, str]:
    """Sign and body of a coefficient; multi-term polynomials are parenthesized"""
    num = c.num
    negative = num.leading_coeff < 0
    if negative:
        num = -num
    if c.den.is_one():
        text = num.render(var)
        return negative, (text if num.is_monomial() else f"({text})")
    return negative, f"({num.render(var)})/({c.den.render(var)})"


def _as_laurent(value) -> Optional[XLaurent]:
    if isinstance(value, XLaurent):
        return value
    if isinstance(value, (QRat, QPoly, int)):
        return XLaurent.const(value)
    return None


# laurent arithmetic as free functions

def add(f: XLaurent, g: XLaurent) -> XLaurent:
    return f + g


def mul(f: XLaurent, g: XLaurent) -> XLaurent:
    return f * g


def scale(c: Scalar, f: XLaurent) -> XLaurent:
    return f.scale(c)


def power(f: XLaurent, k: int) -> XLaurent:
    return f ** k


def product(factors: Iterable[XLaurent]) -> XLaurent:
    return reduce(lambda a, b: a * b, factors, XLaurent.const(1))


# q-analogues

def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)"""
    if n < 1:
        raise InvalidInput(f"[n]_q needs n >= 1, got {n}")
    return QPoly((1,) * n)


def q_factorial(n: int) -> QPoly:
    """[n!]_q = [1]_q [2]_q ... [n]_q"""
    if n < 0:
        raise InvalidInput(f"[n!]_q needs n >= 0, got {n}")
    return reduce(lambda acc, k: acc * q_int(k), range(1, n + 1), ONE)


def q_factorial_base(r: int, m: int) -> QPoly:
    """[r!]_(q^m)"""
    return q_factorial(r).substitute_power(m)


def q_multinomial(n: int, parts: Sequence[int]) -> QPoly:
    """[n!]_q / ([n_1!]_q ... [n_r!]_q); counts partial flags of type parts over F_q"""
    parts = list(parts)
    if not parts or any(p < 1 for p in parts) or sum(parts) != n:
        raise InvalidInput(f"parts {parts} do not form a composition of {n}")
    denominator = reduce(lambda acc, p: acc * q_factorial(p), parts, ONE)
    return q_factorial(n).exact_div(denominator)


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial; k = 0 and k = n give 1"""
    if n < 0 or not 0 <= k <= n:
        raise InvalidInput(f"q-binomial ({n} over {k}) is undefined")
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def eval_dim(G: XLaurent, q0: int, N: int) -> int:
    """Value of G at q = q0, X = q0^(N-1); must be an integer"""
    if q0 < 2:
        raise InvalidInput(f"residue field size must be >= 2, got {q0}")
    if N < 1:
        raise InvalidInput(f"level N must be >= 1, got {N}")
    x = Fraction(q0) ** (N - 1)
    total = sum((c.evaluate(q0) * x ** e for e, c in G.terms), Fraction(0))
    if total.denominator != 1:
        raise NonIntegralEvaluation(f"{G.render()} at q={q0}, N={N} is {total}, not an integer")
    return total.numerator
