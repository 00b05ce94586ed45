"""Exact coefficient arithmetic: rationals and rational functions in q.

Rationals are stdlib ``fractions.Fraction`` (re-exported as ``Rational``).

``RatFunc`` is the field Q(q), represented as a pair of integer-coefficient
dense polynomials (little-endian coefficient tuples, no trailing zeros, the
zero polynomial is the empty tuple).  Canonical form, maintained by every
constructor and operation:

* numerator and denominator have polynomial gcd 1 over Q[q] (their primitive
  parts are coprime in Z[q] and their integer contents are coprime),
* the denominator is nonzero with positive leading coefficient,
* zero is ((), (1,)).

Equality and hashing are structural, which the canonical form makes
well-defined.  ``parse`` accepts Laurent-style input such as ``q^-2``,
``(q - q^-1)``, ``3/4`` or ``(q^2 - 1)/(q - 1)``; ``str`` renders a string
``parse`` accepts back.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "RatFunc",
    "PoleError",
    "ParseError",
    "parse",
    "parse_rational",
]


class PoleError(ArithmeticError):
    """Specialization at a zero of the denominator."""


class ParseError(ValueError):
    """Malformed rational-function text."""


# ---------------------------------------------------------------------------
# integer polynomials as little-endian tuples


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _content(a):
    # nonnegative gcd of the coefficients; 0 for the zero polynomial
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g


def _primitive(a):
    c = _content(a)
    if c <= 1:
        return a
    return tuple(x // c for x in a)


def _pdiv_exact(a, d):
    """Divide every coefficient by the integer d (must be exact)."""
    return tuple(x // d for x in a)


def _prem(a, b):
    """Pseudo-remainder of a by b (b nonzero): lc(b)^(k) * a mod b over Z."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        lead = r[i + db]
        if lead:
            for j in range(len(r)):
                r[j] *= lb
            for j, y in enumerate(b):
                r[i + db - len(b) + 1 + j] -= lead * y
            # after scaling, the eliminated coefficient is exactly zero
        # keep going; lower coefficients already include the scale factor
    return _trim(r[:db])


def _poly_gcd(a, b):
    """gcd in Z[q], content included, positive leading coefficient."""
    if not a:
        return _abs_lc(b)
    if not b:
        return _abs_lc(a)
    ca, cb = _content(a), _content(b)
    f, g = _primitive(a), _primitive(b)
    if len(f) < len(g):
        f, g = g, f
    while g:
        f, g = g, _primitive(_prem(f, g))
    if f[-1] < 0:
        f = _pneg(f)
    return _pscale(f, math.gcd(ca, cb))


def _abs_lc(a):
    if not a:
        return ()
    return a if a[-1] > 0 else _pneg(a)


def _pquo_exact(a, b):
    """Exact quotient a / b in Q[q] that is known to land in Z[q]."""
    if not a:
        return ()
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    out = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        lead = r[i + db]
        if lead % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        c = lead // lb
        out[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    if _trim(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _peval(a, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_str(a) -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        elif k == 1:
            body = "q" if c == 1 else f"{c}*q"
        else:
            body = f"q^{k}" if c == 1 else f"{c}*q^{k}"
        parts.append((sign, body))
    sign, body = parts[0]
    text = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class RatFunc:
    """An element of Q(q) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            object.__setattr__(self, "num", ())
            object.__setattr__(self, "den", (1,))
            return
        g = _poly_gcd(num, den)
        if g != (1,):
            num = _pquo_exact(num, g)
            den = _pquo_exact(den, g)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, x) -> "RatFunc":
        x = Fraction(x)
        return cls((x.numerator,), (x.denominator,))

    @classmethod
    def q_power(cls, n: int) -> "RatFunc":
        """The monomial q**n for any integer n."""
        mono = (0,) * abs(n) + (1,)
        return cls(mono, 1) if n >= 0 else cls(1, mono)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- ring/field operations ----------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc(x)
        if isinstance(x, Fraction):
            return RatFunc.from_fraction(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        object.__setattr__(out, "num", _pneg(self.num))
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = _ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == (1,) and len(self.num) <= 1:
            # agree with int/Fraction hashing for constants
            return hash(Fraction(self.num[0] if self.num else 0))
        return hash((self.num, self.den))

    def specialize(self, q0) -> Fraction:
        """Evaluate at q = q0 (a Fraction or int); raises PoleError at poles."""
        q0 = Fraction(q0)
        d = _peval(self.den, q0)
        if d == 0:
            raise PoleError(f"pole of {self} at q = {q0}")
        return _peval(self.num, q0) / d

    def as_fraction(self) -> Fraction:
        """The value of a constant element; error if q actually occurs."""
        if len(self.num) > 1 or len(self.den) > 1:
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def __str__(self):
        if self.den == (1,):
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"


_ONE = RatFunc(1)

ZERO = RatFunc(0)
ONE = _ONE
Q = RatFunc.q_power(1)


# ---------------------------------------------------------------------------
# parser


_TOKEN_CHARS = set("+-*/^()")


def _tokenize(text):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _TOKEN_CHARS:
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        elif ch == "q":
            out.append("q")
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    return out


class _Parser:
    def __init__(self, tokens, text):
        self.toks = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def expr(self):
        if self.peek() in ("+", "-"):
            sign = self.take()
            acc = self.term()
            if sign == "-":
                acc = -acc
        else:
            acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "/" and rhs.is_zero():
                raise ParseError(f"division by zero in {self.text!r}")
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.signed_int()
            if base.is_zero() and exp < 0:
                raise ParseError(f"zero to a negative power in {self.text!r}")
            return base**exp
        return base

    def signed_int(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        tok = self.take()
        if not isinstance(tok, int):
            raise ParseError(f"expected integer exponent in {self.text!r}")
        return sign * tok

    def atom(self):
        tok = self.take()
        if tok == "q":
            return Q
        if isinstance(tok, int):
            return RatFunc(tok)
        if tok == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {tok!r} in {self.text!r}")


def parse(text: str) -> RatFunc:
    """Parse Laurent-style rational-function text into canonical form."""
    parser = _Parser(_tokenize(text), text)
    out = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input after position {parser.pos} in {text!r}")
    return out


def parse_rational(text: str) -> Fraction:
    """Parse a plain rational like '2', '-3/2' (no q allowed)."""
    value = parse(text)
    try:
        return value.as_fraction()
    except ValueError:
        raise ParseError(f"{text!r} is not a plain rational") from None
