"""The rank-two generalized Heisenberg-Virasoro algebra and its extension.

``L(p1, p2)`` has basis ``T(m)`` (the commuting elements ``t^m``) and ``E(m)``
for ``m`` in Z^2; the extended algebra adds the degree derivations ``D1``,
``D2``. Brackets on basis elements::

    [T(a), T(b)] = 0
    [T(a), E(b)] = -|a+p, b+p| T(a+b)
    [E(a), E(b)] = -|a+p, b+p| E(a+b)
    [Di, E(m)]   = m_i E(m)
    [Di, T(m)]   = (m_i + p_i) T(m)
    [D1, D2]     = 0

where ``|u, v| = u1*v2 - u2*v1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import ParseError, UnsupportedDomainError
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "AlgebraParams",
    "Generator",
    "LieElement",
    "T",
    "E",
    "D1",
    "D2",
    "det2",
    "bracket",
    "outer_derivation",
    "window_indices",
    "window_generators",
    "jacobi_residual",
    "bracket_generators",
    "parse_generator",
]

Index = tuple[int, int]


@dataclass(frozen=True)
class AlgebraParams:
    """The fixed shift vector ``p = (p1, p2)``."""

    p1: Scalar
    p2: Scalar

    def __post_init__(self):
        object.__setattr__(self, "p1", as_scalar(self.p1))
        object.__setattr__(self, "p2", as_scalar(self.p2))

    @property
    def is_zero(self) -> bool:
        return not self.p1 and not self.p2

    def __iter__(self):
        return iter((self.p1, self.p2))

    def __str__(self) -> str:
        return f"{self.p1},{self.p2}"


_KIND_ORDER = {"T": 0, "E": 1, "D1": 2, "D2": 3}


class Generator(NamedTuple):
    kind: str  # "T", "E", "D1" or "D2"
    m1: int = 0
    m2: int = 0

    @property
    def index(self) -> Index:
        return (self.m1, self.m2)

    @property
    def is_derivation(self) -> bool:
        return self.kind in ("D1", "D2")

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.m1, self.m2)

    def __str__(self) -> str:
        if self.is_derivation:
            return self.kind
        return f"{self.kind}({self.m1},{self.m2})"


def T(m1: int, m2: int) -> Generator:
    return Generator("T", m1, m2)


def E(m1: int, m2: int) -> Generator:
    return Generator("E", m1, m2)


D1 = Generator("D1")
D2 = Generator("D2")

_GEN_RE = re.compile(r"^\s*(?:(?P<kind>[TE])\s*\(\s*(?P<a>-?\d+)\s*,\s*(?P<b>-?\d+)\s*\)|(?P<d>D[12]))\s*$")


def parse_generator(text: str) -> Generator:
    """Parse ``T(m1,m2)``, ``E(m1,m2)``, ``D1`` or ``D2``."""
    m = _GEN_RE.match(text)
    if m is None:
        raise ParseError(f"malformed generator literal {text!r}")
    if m["d"]:
        return Generator(m["d"])
    return Generator(m["kind"], int(m["a"]), int(m["b"]))


class LieElement:
    """A finite Q(i)-linear combination of generators.

    An element is *extended* when it carries a ``D1``/``D2`` term, i.e. it
    only makes sense in the extended algebra.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Generator, object] | None = None):
        self._terms: dict[Generator, Scalar] = {}
        for g, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self._terms[g] = c

    @classmethod
    def _wrap(cls, terms: dict[Generator, Scalar]) -> "LieElement":
        x = object.__new__(cls)
        x._terms = terms
        return x

    @classmethod
    def of(cls, x) -> "LieElement":
        if isinstance(x, LieElement):
            return x
        if isinstance(x, Generator):
            return cls._wrap({x: ONE})
        raise TypeError(f"cannot convert {type(x).__name__} to LieElement")

    def items(self) -> Iterator[tuple[Generator, Scalar]]:
        for g in sorted(self._terms, key=Generator.sort_key):
            yield g, self._terms[g]

    def coeff(self, g: Generator) -> Scalar:
        return self._terms.get(g, ZERO)

    @property
    def is_extended(self) -> bool:
        return any(g.is_derivation for g in self._terms)

    @property
    def flavor(self) -> str:
        return "Lt" if self.is_extended else "L"

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        other = LieElement.of(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            s = out.get(g, ZERO) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return LieElement._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LieElement._wrap({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-LieElement.of(other))

    def __rsub__(self, other):
        return LieElement.of(other) - self

    def __mul__(self, c):
        c = as_scalar(c, strict=False)
        if c is NotImplemented:
            return NotImplemented
        if not c:
            return LieElement._wrap({})
        return LieElement._wrap({g: v * c for g, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Generator):
            other = LieElement.of(other)
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g, c in self.items():
            parts.append(str(g) if c == ONE else f"({c})*{g}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LieElement({str(self)!r})"


def det2(u, v) -> Scalar:
    """Determinant of the 2x2 matrix with rows ``u`` and ``v``."""
    return as_scalar(u[0]) * as_scalar(v[1]) - as_scalar(u[1]) * as_scalar(v[0])


def _det_shifted(a: Index, b: Index, p: AlgebraParams) -> Scalar:
    return (p.p1 + a[0]) * (p.p2 + b[1]) - (p.p2 + a[1]) * (p.p1 + b[0])


def bracket_generators(x: Generator, y: Generator, p: AlgebraParams) -> tuple[Generator, Scalar] | None:
    """Bracket of two basis elements as a single term, or None when zero."""
    kx, ky = x.kind, y.kind
    if kx == "T" and ky == "T":
        return None
    if x.is_derivation and y.is_derivation:
        return None
    if x.is_derivation:
        i = 0 if kx == "D1" else 1
        m = y.index
        c = as_scalar(m[i]) if ky == "E" else (p.p1, p.p2)[i] + m[i]
        return (y, c) if c else None
    if y.is_derivation:
        r = bracket_generators(y, x, p)
        return None if r is None else (r[0], -r[1])
    a, b = x.index, y.index
    s = (a[0] + b[0], a[1] + b[1])
    if kx == "E" and ky == "T":
        c = _det_shifted(b, a, p)
        return (Generator("T", *s), c) if c else None
    c = -_det_shifted(a, b, p)
    if not c:
        return None
    return (Generator("T" if kx == "T" else "E", *s), c)


def bracket(x, y, p: AlgebraParams) -> LieElement:
    """Bilinear extension of the basis brackets."""
    x, y = LieElement.of(x), LieElement.of(y)
    out: dict[Generator, Scalar] = {}
    for gx, cx in x._terms.items():
        for gy, cy in y._terms.items():
            r = bracket_generators(gx, gy, p)
            if r is None:
                continue
            g, c = r
            s = out.get(g, ZERO) + cx * cy * c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
    return LieElement._wrap(out)


def outer_derivation(x) -> LieElement:
    """The outer derivation fixing every ``T(m)`` and killing every ``E(m)``.

    Its value on ``D1``/``D2`` is not an element of the algebra, so those
    inputs are rejected.
    """
    x = LieElement.of(x)
    if x.is_extended:
        raise UnsupportedDomainError("outer derivation is not defined on D1/D2 terms")
    return LieElement._wrap({g: c for g, c in x._terms.items() if g.kind == "T"})


def window_indices(radius: int) -> list[Index]:
    """Indices of ``[-radius, radius]^2`` in lexicographic order."""
    r = range(-radius, radius + 1)
    return [(a, b) for a, b in product(r, r)]


def window_generators(radius: int, extended: bool = True) -> list[Generator]:
    gens = [T(*m) for m in window_indices(radius)] + [E(*m) for m in window_indices(radius)]
    if extended:
        gens += [D1, D2]
    return gens


def jacobi_residual(x, y, z, p: AlgebraParams) -> LieElement:
    return (
        bracket(bracket(x, y, p), z, p)
        + bracket(bracket(y, z, p), x, p)
        + bracket(bracket(z, x, p), y, p)
    )


def iter_pairs(gens: Iterable[Generator]) -> Iterator[tuple[Generator, Generator]]:
    gens = list(gens)
    for x in gens:
        for y in gens:
            yield x, y
