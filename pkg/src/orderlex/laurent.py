"""Exact Laurent polynomial arithmetic over the rationals.

The single variable is always called t.  A polynomial is a finitely
supported map from integer exponents (possibly negative) to nonzero
rational coefficients.  Values are immutable and hashable; every
operation returns a fresh object.

Canonical form: minimum exponent 0, integer coefficients with content 1,
positive leading coefficient.  Two Laurent polynomials agree up to a unit
c * t^k exactly when their canonical forms are equal, so unit equality is
plain equality downstream.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import PolynomialParseError

_ZERO = Fraction(0)


class LaurentPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for e, v in items:
                v = Fraction(v)
                if v:
                    e = int(e)
                    w = data.get(e, _ZERO) + v
                    if w:
                        data[e] = w
                    else:
                        del data[e]
        self._c = data

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @classmethod
    def term(cls, coeff, exp=0):
        return cls({int(exp): Fraction(coeff)})

    @classmethod
    def from_dense(cls, coeffs):
        """Build from a list [c0, c1, ...] of coefficients of t^0, t^1, ..."""
        return cls(dict(enumerate(coeffs)))

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def coefficient(self, exp):
        return self._c.get(int(exp), _ZERO)

    @property
    def degree(self):
        """Largest exponent with nonzero coefficient."""
        if not self._c:
            raise ValueError("the zero polynomial has no degree")
        return max(self._c)

    @property
    def order(self):
        """Smallest exponent with nonzero coefficient."""
        if not self._c:
            raise ValueError("the zero polynomial has no order")
        return min(self._c)

    @property
    def leading_coefficient(self):
        return self._c[self.degree]

    def items(self):
        return self._c.items()

    def to_dense(self):
        """Coefficient list indexed by exponent; requires order >= 0."""
        if not self._c:
            return []
        if self.order < 0:
            raise ValueError("negative exponents present")
        out = [_ZERO] * (self.degree + 1)
        for e, c in self._c.items():
            out[e] = c
        return out

    # -- arithmetic --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == LaurentPolynomial.term(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.term(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            w = out.get(e, _ZERO) + c
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        r = LaurentPolynomial()
        r._c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPolynomial()
        r._c = {e: -c for e, c in self._c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.term(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return LaurentPolynomial()
            r = LaurentPolynomial()
            r._c = {e: c * q for e, c in self._c.items()}
            return r
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                w = out.get(e, _ZERO) + c1 * c2
                if w:
                    out[e] = w
                else:
                    del out[e]
        r = LaurentPolynomial()
        r._c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        r = LaurentPolynomial.one()
        for _ in range(k):
            r = r * self
        return r

    def shift(self, k):
        """Multiply by the unit t^k."""
        r = LaurentPolynomial()
        r._c = {e + k: c for e, c in self._c.items()}
        return r

    def evaluate(self, x):
        x = Fraction(x)
        if x == 0 and self._c and self.order < 0:
            raise ZeroDivisionError("evaluation at 0 with negative exponents")
        total = _ZERO
        for e, c in self._c.items():
            total += c * x**e
        return total

    def derivative(self):
        return LaurentPolynomial({e - 1: c * e for e, c in self._c.items() if e})

    def substitute_power(self, d):
        """Return p(t^d) for an integer d >= 1."""
        d = int(d)
        if d < 1:
            raise ValueError("substitution power must be >= 1")
        r = LaurentPolynomial()
        r._c = {e * d: c for e, c in self._c.items()}
        return r

    # -- canonical form ----------------------------------------------

    def content(self):
        """gcd of the coefficients as a positive rational."""
        if not self._c:
            raise ValueError("the zero polynomial has no content")
        num = 0
        den = 1
        for c in self._c.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def canonicalize(self):
        """Unique unit multiple with order 0, integer content-1 coefficients,
        and positive leading coefficient.  Zero maps to zero."""
        if not self._c:
            return self
        shift = -self.order
        scale = 1 / self.content()
        if self.leading_coefficient < 0:
            scale = -scale
        r = LaurentPolynomial()
        r._c = {e + shift: c * scale for e, c in self._c.items()}
        return r

    @property
    def is_one(self):
        return self._c == {0: Fraction(1)}

    def is_unit(self):
        """True for c * t^k with c != 0."""
        return len(self._c) == 1

    def __repr__(self):
        return f"LaurentPolynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


# -- division and gcd ------------------------------------------------


def poly_divmod(a, b):
    """Euclidean division in Q[t].  Both arguments must have order >= 0
    (or be zero); returns (q, r) with a = q*b + r and deg r < deg b."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return LaurentPolynomial.zero(), LaurentPolynomial.zero()
    ad = a.to_dense()
    bd = b.to_dense()
    q = {}
    r = list(ad)
    db = len(bd) - 1
    lead = bd[-1]
    while len(r) - 1 >= db and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < db or not r:
            break
        k = len(r) - 1 - db
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(bd):
            r[k + i] -= f * c
    return LaurentPolynomial(q), LaurentPolynomial(dict(enumerate(r)))


def exact_div(a, b):
    """Exact quotient a / b in Q[t]; raises if the division leaves a remainder."""
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise ArithmeticError("division was expected to be exact")
    return q


def divides(p, q):
    """Laurent divisibility p | q.  The zero polynomial is divisible by
    everything; division by the zero polynomial is an error."""
    if p.is_zero:
        raise ZeroDivisionError("divisibility by the zero polynomial")
    if q.is_zero:
        return True
    # units t^k do not affect divisibility
    a = q.shift(-q.order)
    b = p.shift(-p.order)
    _, r = poly_divmod(a, b)
    return r.is_zero


def poly_gcd(p, q):
    """Canonical gcd in Q[t, 1/t] (canonicalized, so gcd of units is 1)."""
    a = p.canonicalize()
    b = q.canonicalize()
    while not b.is_zero:
        a2 = a.shift(-a.order) if not a.is_zero else a
        _, r = poly_divmod(a2, b.shift(-b.order))
        a, b = b, r.canonicalize()
    return a.canonicalize()


def squarefree_part(p):
    """p divided by gcd(p, p'), canonicalized.  Same root set, simple roots."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no square-free part")
    c = p.canonicalize()
    if c.degree == 0:
        return c
    g = poly_gcd(c, c.derivative())
    if g.is_one:
        return c
    return exact_div(c, g).canonicalize()


# -- text form --------------------------------------------------------


def format_polynomial(p):
    """Render with descending exponents and explicit '*', e.g. "t^2 - 3*t + 1"."""
    if p.is_zero:
        return "0"
    parts = []
    for e in sorted(p._c, reverse=True):
        c = p._c[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if mag == 1 else f"{mag}*{tpart}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def parse_polynomial(s):
    """Parse the grammar produced by format_polynomial.

    Accepted terms: integer or a/b coefficients, 't', 't^k' with k possibly
    negative, '*' between coefficient and t optional.
    """
    text = s
    if not text.strip():
        raise PolynomialParseError("empty polynomial string")
    # split into signed terms; a +/- is a separator unless it follows '^'
    terms = []
    cur = []
    prev_sig = ""
    for i, ch in enumerate(text):
        if ch in "+-" and prev_sig and prev_sig != "^":
            terms.append(("".join(cur), i))
            cur = [ch]
        else:
            cur.append(ch)
        if not ch.isspace():
            prev_sig = ch
    terms.append(("".join(cur), len(text)))

    import re

    term_re = re.compile(
        r"^\s*([+-]?)\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?(t(?:\^(-?\d+))?)?\s*$"
    )
    coeffs = {}
    for chunk, pos in terms:
        m = term_re.match(chunk)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise PolynomialParseError(f"unrecognized term {chunk.strip()!r}", pos)
        sign, num, tvar, exp = m.groups()
        c = Fraction(num.replace(" ", "")) if num else Fraction(1)
        if sign == "-":
            c = -c
        if tvar is None:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp)
        coeffs[e] = coeffs.get(e, _ZERO) + c
    return LaurentPolynomial(coeffs)


def canonicalize(p):
    return p.canonicalize()


def substitute_power(p, d):
    return p.substitute_power(d)
