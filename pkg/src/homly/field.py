"""Exact scalar arithmetic over Q and over the rational-function field Q(l).

Scalars are either ``fractions.Fraction`` (domain Q) or :class:`RationalFunction`
(domain Q(l), one indeterminate spelled ``l`` in text form).  Everything is
kept in a unique canonical form so that equality is structural: fractions are
reduced with positive denominator, rational functions are reduced by the
polynomial gcd and carry a monic denominator.  There are no floating-point
paths anywhere.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import DomainError, ParseError, PoleError


class ScalarDomain(Enum):
    """Coefficient field of an algebra: the rationals or Q(l)."""

    Q = "rational"
    QL = "rational_function"


_F0 = Fraction(0)
_F1 = Fraction(1)


class Polynomial:
    """Dense univariate polynomial over Q, coefficients indexed by degree.

    The coefficient tuple never has a trailing zero; the zero polynomial is
    the empty tuple.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _F0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        if len(a) == 1:
            c = a[0]
            return Polynomial(tuple(c * x for x in b))
        if len(b) == 1:
            c = b[0]
            return Polynomial(tuple(c * x for x in a))
        out = [_F0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return Polynomial(out)

    def scale(self, factor: Fraction) -> "Polynomial":
        if not factor:
            return _P_ZERO
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return _P_ZERO, self
        quot = [_F0] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c:
                q = c / lead
                quot[k] = q
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= q * oc
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("polynomial exponent must be nonnegative")
        result = _P_ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self or self.leading == _F1:
            return self
        return self.scale(1 / self.leading)

    def __call__(self, point) -> Fraction:
        point = Fraction(point)
        acc = _F0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


_P_ZERO = Polynomial(())
_P_ONE = Polynomial((_F1,))
_P_LAMBDA = Polynomial((_F0, _F1))


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) = 0)."""
    while b:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Quotient of two polynomials over Q in canonical form.

    Canonical means: denominator nonzero and monic, gcd(num, den) = 1, and
    zero is 0/1.  Arithmetic accepts ints, Fractions and Polynomials on either
    side, embedding them as constants.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num) if not isinstance(num, tuple) else Polynomial(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den) if not isinstance(den, tuple) else Polynomial(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = _P_ONE
        else:
            g = polynomial_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != _F1:
                inv = 1 / lead
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den == _P_ONE

    def as_fraction(self) -> Fraction:
        """Value of a constant rational function; DomainError otherwise."""
        if not self.is_constant:
            raise DomainError(f"'{format_scalar(self)}' is not a constant")
        return self.num.coeffs[0] if self.num else _F0

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Polynomial.constant(other))
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RF_ZERO
        if self is RF_ONE or (self.num == _P_ONE and self.den == _P_ONE):
            return other
        if other.num == _P_ONE and other.den == _P_ONE:
            return self
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("scalar division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (RF_ONE / self) ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent)

    def __call__(self, point) -> Fraction:
        """Evaluate at l = point; PoleError when the denominator vanishes."""
        point = Fraction(point)
        d = self.den(point)
        if not d:
            raise PoleError(f"pole of '{format_scalar(self)}' at l = {point}")
        return self.num(point) / d

    def __repr__(self):
        return f"RationalFunction({format_scalar(self)!r})"


RF_ZERO = RationalFunction(_P_ZERO)
RF_ONE = RationalFunction(_P_ONE)
RF_LAMBDA = RationalFunction(_P_LAMBDA)

Scalar = Union[Fraction, RationalFunction]


def zero(domain: ScalarDomain) -> Scalar:
    return _F0 if domain is ScalarDomain.Q else RF_ZERO


def one(domain: ScalarDomain) -> Scalar:
    return _F1 if domain is ScalarDomain.Q else RF_ONE


def to_domain(value, domain: ScalarDomain) -> Scalar:
    """Coerce an int/Fraction/Polynomial/RationalFunction into the domain.

    Rationals embed into Q(l) as constants; a rational function fits into Q
    only when it is constant (DomainError otherwise).
    """
    if domain is ScalarDomain.Q:
        if isinstance(value, RationalFunction):
            return value.as_fraction()
        if isinstance(value, Polynomial):
            return RationalFunction(value).as_fraction()
        return Fraction(value)
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    return RationalFunction(Polynomial.constant(Fraction(value)))


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_div(a: Scalar, b: Scalar) -> Scalar:
    if not b:
        raise ZeroDivisionError("scalar division by zero")
    return a / b


def scalar_eval(a: Scalar, point) -> Fraction:
    """Exact value of a scalar at l = point (identity on plain rationals)."""
    if isinstance(a, RationalFunction):
        return a(point)
    return Fraction(a)


# --- text form ------------------------------------------------------------
#
# Grammar (whitespace insignificant, unary minus allowed before atoms):
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := atom ['^' uint]
#   atom   := ['-'] (integer | 'l' | '(' expr ')')


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def next(self):
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos].isspace():
            self.pos += 1
        if self.pos >= n:
            return ("end", "", self.pos)
        start = self.pos
        ch = text[start]
        if ch in "+-*/^()":
            self.pos += 1
            return (ch, ch, start)
        if ch.isdigit():
            while self.pos < n and text[self.pos].isdigit():
                self.pos += 1
            return ("int", text[start : self.pos], start)
        if ch == "l":
            self.pos += 1
            return ("l", ch, start)
        raise ParseError(f"unexpected character {ch!r}", start)


class _Parser:
    def __init__(self, text: str, domain: ScalarDomain):
        self.tokens = _Tokenizer(text)
        self.domain = domain
        self.tok = self.tokens.next()

    def advance(self):
        self.tok = self.tokens.next()

    def parse(self) -> Scalar:
        value = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self.tok[0] in "+-":
            op = self.tok[0]
            self.advance()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.tok[0] in "*/":
            op = self.tok[0]
            pos = self.tok[2]
            self.advance()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def factor(self) -> Scalar:
        # Unary minus sits before the atom but binds looser than '^',
        # so -l^2 means -(l^2).
        negate = False
        while self.tok[0] == "-":
            negate = not negate
            self.advance()
        value = self.atom()
        if self.tok[0] == "^":
            self.advance()
            if self.tok[0] != "int":
                raise ParseError("expected integer exponent after '^'", self.tok[2])
            value = value ** int(self.tok[1])
            self.advance()
        return -value if negate else value

    def atom(self) -> Scalar:
        kind, text, pos = self.tok
        if kind == "int":
            self.advance()
            return to_domain(int(text), self.domain)
        if kind == "l":
            if self.domain is ScalarDomain.Q:
                raise DomainError(
                    f"symbolic 'l' at offset {pos} not allowed in the rational domain"
                )
            self.advance()
            return RF_LAMBDA
        if kind == "(":
            self.advance()
            value = self.expr()
            if self.tok[0] != ")":
                raise ParseError("expected ')'", self.tok[2])
            self.advance()
            return value
        raise ParseError(f"expected a number, 'l' or '(' but found {text!r}", pos)


def parse_scalar(text: str, domain: ScalarDomain) -> Scalar:
    """Parse coefficient text into a canonical scalar of the given domain."""
    return _Parser(text, domain).parse()


def _format_term(coeff: Fraction, degree: int) -> str:
    if degree == 0:
        return str(coeff)
    if degree == 1:
        var = "l"
    else:
        var = f"l^{degree}"
    if coeff == 1:
        return var
    if coeff == -1:
        return f"-{var}"
    return f"{coeff}*{var}"


def format_polynomial(p: Polynomial) -> str:
    """Render a polynomial in ascending degree order, e.g. ``2-2*l^4``."""
    if not p:
        return "0"
    parts = []
    for degree, coeff in enumerate(p.coeffs):
        if not coeff:
            continue
        term = _format_term(coeff, degree)
        if parts and not term.startswith("-"):
            parts.append("+")
        parts.append(term)
    return "".join(parts)


def _term_count(p: Polynomial) -> int:
    return sum(1 for c in p.coeffs if c)


def format_scalar(s: Scalar) -> str:
    """Canonical text form; ``parse_scalar(format_scalar(s)) == s``."""
    if isinstance(s, Fraction):
        return str(s)
    if s.den == _P_ONE:
        return format_polynomial(s.num)
    num_s = format_polynomial(s.num)
    den_s = format_polynomial(s.den)
    if _term_count(s.num) > 1:
        num_s = f"({num_s})"
    if _term_count(s.den) > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"
