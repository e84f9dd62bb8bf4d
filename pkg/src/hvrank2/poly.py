"""Sparse polynomials in two commuting variables ``d1``, ``d2`` over Q(i).

Terms live in a dict keyed by exponent pairs ``(e1, e2)``; zero coefficients
are never stored, so two polynomials are equal iff their term maps are.

Text form (see :func:`parse_poly`)::

    3*d1^2*d2 - (1+2i)*d2 + 1/2

Rendering lists terms in descending graded-lex order and is deterministic.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import ParseError
from .scalars import ONE, ZERO, Scalar, as_scalar, parse_scalar, render_scalar

__all__ = ["Poly", "D1", "D2", "monomials", "parse_poly", "grlex_key"]

Exponent = tuple[int, int]


def grlex_key(e: Exponent) -> tuple[int, int]:
    """Sort key placing higher graded-lex monomials first."""
    return (-(e[0] + e[1]), -e[0])


def monomials(degree: int) -> list[Exponent]:
    """All exponent pairs of total degree <= ``degree``, descending graded-lex."""
    out = [(a, t - a) for t in range(degree + 1) for a in range(t + 1)]
    out.sort(key=grlex_key)
    return out


class Poly:
    """Immutable sparse bivariate polynomial."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, Scalar] = {}
        if terms:
            for (e1, e2), c in terms.items():
                if e1 < 0 or e2 < 0:
                    raise ValueError(f"negative exponent {(e1, e2)}")
                c = as_scalar(c)
                if c:
                    clean[(int(e1), int(e2))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exponent, Scalar]) -> "Poly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        c = as_scalar(c)
        return cls._wrap({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> "Poly":
        return cls({(e1, e2): c})

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Scalar]]:
        """Terms in descending graded-lex order."""
        for e in sorted(self._terms, key=grlex_key):
            yield e, self._terms[e]

    def coeff(self, e1: int, e2: int) -> Scalar:
        return self._terms.get((e1, e2), ZERO)

    def constant_term(self) -> Scalar:
        return self._terms.get((0, 0), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        try:
            return Poly.constant(as_scalar(other))
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Poly":
        c = as_scalar(c)
        if not c:
            return Poly._wrap({})
        if c == ONE:
            return self
        return Poly._wrap({e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict[Exponent, Scalar] = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                e = (a1 + b1, a2 + b2)
                s = out.get(e)
                out[e] = c * d if s is None else s + c * d
        return Poly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- substitution -------------------------------------------------------

    def shift(self, s1, s2) -> "Poly":
        """Return ``f(d1 - s1, d2 - s2)`` by exact binomial expansion."""
        s1, s2 = as_scalar(s1), as_scalar(s2)
        if not s1 and not s2:
            return self
        if not self._terms:
            return self
        n1 = max(e[0] for e in self._terms)
        n2 = max(e[1] for e in self._terms)
        # (d1 - s1)^k = sum_i comb(k, i) (-s1)^(k-i) d1^i; work on raw (re, im)
        rows1 = _expansion_rows(-s1, n1)
        rows2 = _expansion_rows(-s2, n2)
        acc: dict[Exponent, list] = {}
        for (k, l), a in self._terms.items():
            ar, ai = a.re, a.im
            r2 = rows2[l]
            for i, (xr, xi) in enumerate(rows1[k]):
                if not xr and not xi:
                    continue
                br, bi = ar * xr - ai * xi, ar * xi + ai * xr
                for j, (yr, yi) in enumerate(r2):
                    if not yr and not yi:
                        continue
                    cr, ci = br * yr - bi * yi, br * yi + bi * yr
                    slot = acc.get((i, j))
                    if slot is None:
                        acc[(i, j)] = [cr, ci]
                    else:
                        slot[0] += cr
                        slot[1] += ci
        make = Scalar._make
        return Poly._wrap({e: make(r, im) for e, (r, im) in acc.items() if r or im})

    def eval(self, a1, a2) -> Scalar:
        """Exact value ``f(a1, a2)``."""
        a1, a2 = as_scalar(a1), as_scalar(a2)
        if not self._terms:
            return ZERO
        pw1 = _powers(a1, max(e[0] for e in self._terms))
        pw2 = _powers(a2, max(e[1] for e in self._terms))
        total = ZERO
        for (k, l), c in self._terms.items():
            total = total + c * pw1[k] * pw2[l]
        return total

    # -- equality / text ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)!r})"


@lru_cache(maxsize=1024)
def _expansion_rows(x: Scalar, n: int) -> tuple[tuple[tuple, ...], ...]:
    """Row k holds the (re, im) coefficients of d^i in (d + x)^k."""
    pw = [(x.re ** 0, x.im * 0)]
    xr, xi = x.re, x.im
    for _ in range(n):
        r, i = pw[-1]
        pw.append((r * xr - i * xi, r * xi + i * xr))
    rows = []
    for k in range(n + 1):
        row = []
        for i in range(k + 1):
            c = comb(k, i)
            r, im = pw[k - i]
            row.append((r * c, im * c))
        rows.append(tuple(row))
    return tuple(rows)


def _powers(x: Scalar, n: int) -> list[Scalar]:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


D1 = Poly._wrap({(1, 0): ONE})
D2 = Poly._wrap({(0, 1): ONE})


def _render_monomial(e1: int, e2: int) -> str:
    parts = []
    for name, e in (("d1", e1), ("d2", e2)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    pieces: list[str] = []
    for (e1, e2), c in f.items():
        negative = False
        if c.is_real and c.re < 0:
            negative, c = True, -c
        elif not c.is_real and not c.re and c.im < 0:
            negative, c = True, -c
        mono = _render_monomial(e1, e2)
        text = render_scalar(c)
        if c.re and c.im:
            text = f"({text})"
        if mono:
            body = mono if c == ONE else f"{text}*{mono}"
        else:
            body = text
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"{'-' if negative else '+'} {body}")
    return " ".join(pieces)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?i?)|(?P<var>d[12])|(?P<unit>i)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character in polynomial at {pos}: {text!r}")
        kind = m.lastgroup
        toks.append((kind, m[kind]))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError(f"unexpected end of polynomial {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise ParseError("empty polynomial literal")
        f = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in polynomial {self.text!r}")
        return f

    def expr(self) -> Poly:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        f = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self) -> Poly:
        f = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Poly:
        f = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or not val.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            f = f ** int(val)
        return f

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.constant(parse_scalar(val))
        if kind == "var":
            return D1 if val == "d1" else D2
        if kind == "unit":
            return Poly.constant(Scalar(0, 1))
        if (kind, val) == ("op", "("):
            f = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError(f"unbalanced parenthesis in {self.text!r}")
            return f
        if (kind, val) == ("op", "-"):
            return -self.factor()
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str) -> Poly:
    """Parse the textual polynomial form; accepts parentheses and ``^``."""
    return _Parser(text).parse()


def span_contains(basis: Iterable[Poly], f: Poly) -> bool:
    """Whether ``f`` lies in the Q(i)-span of ``basis`` (exact)."""
    from .linalg import in_row_span

    basis = list(basis)
    cols = sorted({e for g in [*basis, f] for e in g._terms}, key=grlex_key)
    rows = [{j: g._terms[e] for j, e in enumerate(cols) if e in g._terms} for g in basis]
    target = {j: f._terms[e] for j, e in enumerate(cols) if e in f._terms}
    return in_row_span(rows, target)
