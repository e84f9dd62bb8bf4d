"""Operator realization on formal weight vectors ``u_gamma``.

``u_gamma`` stands for the generalized monomial ``t1^gamma1 t2^gamma2``.
The generators act as operators::

    Di   u_gamma = gamma_i u_gamma
    T(m) u_gamma = u_{gamma + m + p}
    E(m) u_gamma = [(m2 + p2) gamma1 - (m1 + p1) gamma2] u_{gamma + m}

Commutators of operators obey the Jacobi identity automatically, so comparing
them with :func:`hvrank2.lie.bracket` certifies the structure constants
independently.
"""

from __future__ import annotations

from typing import Iterator

from .lie import AlgebraParams, Generator, LieElement, bracket
from .scalars import ONE, ZERO, Scalar, as_scalar

Weight = tuple[Scalar, Scalar]


def weight(g1, g2) -> Weight:
    return (as_scalar(g1), as_scalar(g2))


class RealizationElement:
    """Finite linear combination of weight vectors."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Weight, object] | None = None):
        self._terms: dict[Weight, Scalar] = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self._terms[weight(*w)] = c

    @classmethod
    def basis(cls, g1, g2) -> "RealizationElement":
        return cls({weight(g1, g2): ONE})

    def items(self) -> Iterator[tuple[Weight, Scalar]]:
        key = lambda w: (w[0].sort_key(), w[1].sort_key())  # noqa: E731
        for w in sorted(self._terms, key=key):
            yield w, self._terms[w]

    def weights(self) -> set[Weight]:
        return set(self._terms)

    def coeff(self, g1, g2) -> Scalar:
        return self._terms.get(weight(g1, g2), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _accumulate(self, out: dict[Weight, Scalar], w: Weight, c: Scalar):
        s = out.get(w, ZERO) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)

    def __add__(self, other: "RealizationElement") -> "RealizationElement":
        out = dict(self._terms)
        for w, c in other._terms.items():
            self._accumulate(out, w, c)
        r = RealizationElement()
        r._terms = out
        return r

    def __neg__(self):
        r = RealizationElement()
        r._terms = {w: -c for w, c in self._terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RealizationElement):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*u({w[0]},{w[1]})" for w, c in self.items())


def _apply_generator(g: Generator, w: Weight, p: AlgebraParams) -> tuple[Weight, Scalar] | None:
    g1, g2 = w
    if g.kind == "D1":
        return (w, g1) if g1 else None
    if g.kind == "D2":
        return (w, g2) if g2 else None
    m1, m2 = g.index
    if g.kind == "T":
        return ((g1 + m1 + p.p1, g2 + m2 + p.p2), ONE)
    c = (p.p2 + m2) * g1 - (p.p1 + m1) * g2
    if not c:
        return None
    return ((g1 + m1, g2 + m2), c)


def realize_apply(x, w: RealizationElement, p: AlgebraParams) -> RealizationElement:
    """Apply a Lie element to a weight-vector combination."""
    x = LieElement.of(x)
    out: dict[Weight, Scalar] = {}
    for g, cg in x.items():
        for wt, cw in w._terms.items():
            r = _apply_generator(g, wt, p)
            if r is None:
                continue
            w2, c = r
            w._accumulate(out, w2, cg * cw * c)
    res = RealizationElement()
    res._terms = out
    return res


def cross_check_bracket(x: Generator, y: Generator, gamma, p: AlgebraParams) -> RealizationElement:
    """``[x,y] u - (x(y u) - y(x u))``; zero iff realization and brackets agree."""
    u = RealizationElement.basis(*gamma)
    lhs = realize_apply(bracket(x, y, p), u, p)
    xy = realize_apply(x, realize_apply(y, u, p), p)
    yx = realize_apply(y, realize_apply(x, u, p), p)
    return lhs - (xy - yx)
