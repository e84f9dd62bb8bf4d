"""Exact arithmetic in the Gaussian rationals Q(i).

A :class:`Scalar` is ``re + im*i`` with both parts stored as ``gmpy2.mpq``,
which keeps numerator/denominator pairs reduced with a positive denominator.
Instances are immutable and hashable.

Literal grammar accepted by :func:`parse_scalar` (whitespace is ignored)::

    R | Ri | R+Ri | R-Ri        where R ::= [-]digits[/digits]
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq

from .errors import ParseError

__all__ = ["Scalar", "ZERO", "ONE", "I", "parse_scalar", "as_scalar"]

_MPQ_TYPE = type(mpq(0))


def _q(x) -> mpq:
    if isinstance(x, _MPQ_TYPE):
        return x
    if isinstance(x, (int, Fraction, str)):
        return mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class Scalar:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    @staticmethod
    def _make(re: mpq, im: mpq) -> "Scalar":
        s = _new(Scalar)
        _set_re(s, re)
        _set_im(s, im)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                         Fraction(int(self.im.numerator), int(self.im.denominator))))

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, b)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero in Q(i)")
            return Scalar._make(1 / a, b)
        n = a * a + b * b
        return Scalar._make(a / n, -b / n)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def norm(self) -> mpq:
        """Field norm ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self) -> tuple:
        return (self.re, self.im)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({render_scalar(self)!r})"


_new = object.__new__
_set_re = Scalar.re.__set__
_set_im = Scalar.im.__set__

ZERO = Scalar._make(mpq(0), mpq(0))
ONE = Scalar._make(mpq(1), mpq(0))
I = Scalar._make(mpq(0), mpq(1))


def as_scalar(x, strict: bool = True):
    """Coerce ints, rationals, strings and Scalars to :class:`Scalar`.

    With ``strict=False`` unsupported types yield ``NotImplemented`` instead
    of raising, for use inside binary operators.
    """
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, _MPQ_TYPE, Fraction)):
        return Scalar._make(_q(x), mpq(0))
    if isinstance(x, str):
        return parse_scalar(x)
    if strict:
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")
    return NotImplemented


def _render_rational(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_scalar(x: Scalar) -> str:
    """Canonical text form; ``parse_scalar(render_scalar(x)) == x``."""
    if not x.im:
        return _render_rational(x.re)
    im = _render_rational(x.im) + "i"
    if not x.re:
        return im
    sign = "" if x.im < 0 else "+"
    return f"{_render_rational(x.re)}{sign}{im}"


_R = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_R})(?P<im>[+-]\d+(?:/\d+)?)i|(?P<only_im>{_R})i|(?P<only_re>{_R}))$"
)


def _parse_rational(text: str) -> mpq:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    """Parse a Gaussian-rational literal such as ``"2/3"`` or ``"-1+1/2i"``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    compact = "".join(text.split())
    m = _SCALAR_RE.match(compact)
    if m is None:
        raise ParseError(f"malformed scalar literal {text!r}")
    if m["only_re"] is not None:
        return Scalar._make(_parse_rational(m["only_re"]), mpq(0))
    if m["only_im"] is not None:
        return Scalar._make(mpq(0), _parse_rational(m["only_im"]))
    im = m["im"]
    im = im[1:] if im.startswith("+") else im
    return Scalar._make(_parse_rational(m["re"]), _parse_rational(im))


def parse_pair(text: str) -> tuple[Scalar, Scalar]:
    """Parse ``"a,b"`` into two scalars (used for ``--p``, ``--lambda``...)."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected two comma-separated scalars, got {text!r}")
    return parse_scalar(parts[0]), parse_scalar(parts[1])
