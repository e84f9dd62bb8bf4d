"""Rank-one U(h)-free modules on the polynomial ring Q(i)[d1, d2].

Two families are implemented.

``NonzeroPSpec`` (``p != 0``), parameters ``lam, alpha, b0``::

    E(m) f = lam^m [(m2+p2)(d1 + p1 alpha) - (m1+p1)(d2 + p2 alpha)] f(d - m)
    T(m) f = lam^m b0 f(d - m - p)

``ZeroPSpec`` (``p = 0``), parameters ``lam, beta, b0, k``::

    E(m) f = lam^m [m2 (d1 + beta1) - m1 (d2 + beta2)] f(d - m)
    T(m) f = lam^m k f(d - m)     (m != 0)
    T(0) f = b0 f

In both, ``D1`` and ``D2`` act by left multiplication and ``lam^m`` means
``lam1^m1 * lam2^m2``. ``b0 = 0`` (resp. ``k = 0``) is allowed; the
``T``-action then degenerates and only the ``E``/``D`` part acts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Union

from .errors import PreconditionError
from .lie import AlgebraParams, Generator, LieElement, bracket
from .poly import D1 as X1
from .poly import D2 as X2
from .poly import Poly
from .scalars import ONE, Scalar, as_scalar

__all__ = [
    "NonzeroPSpec",
    "ZeroPSpec",
    "ModuleSpec",
    "act",
    "module_axiom_residual",
    "distinguished_point",
    "in_distinguished_submodule",
    "simplicity_witness",
    "factorization_residuals",
]

ZERO_P = AlgebraParams(0, 0)


def _pair(v) -> tuple[Scalar, Scalar]:
    a, b = v
    return (as_scalar(a), as_scalar(b))


@dataclass(frozen=True)
class NonzeroPSpec:
    p: AlgebraParams
    lam: tuple[Scalar, Scalar]
    alpha: Scalar
    b0: Scalar

    def __post_init__(self):
        p = self.p if isinstance(self.p, AlgebraParams) else AlgebraParams(*self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "lam", _pair(self.lam))
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        object.__setattr__(self, "b0", as_scalar(self.b0))
        if p.is_zero:
            raise PreconditionError("NonzeroPSpec requires p != (0,0)")
        if not (self.lam[0] and self.lam[1]):
            raise PreconditionError("lambda components must be nonzero")

    @property
    def t_acts(self) -> bool:
        return bool(self.b0)


@dataclass(frozen=True)
class ZeroPSpec:
    lam: tuple[Scalar, Scalar]
    beta: tuple[Scalar, Scalar]
    b0: Scalar
    k: Scalar
    p: AlgebraParams = field(default=ZERO_P)

    def __post_init__(self):
        p = self.p if isinstance(self.p, AlgebraParams) else AlgebraParams(*self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "lam", _pair(self.lam))
        object.__setattr__(self, "beta", _pair(self.beta))
        object.__setattr__(self, "b0", as_scalar(self.b0))
        object.__setattr__(self, "k", as_scalar(self.k))
        if not p.is_zero:
            raise PreconditionError("ZeroPSpec requires p = (0,0)")
        if not (self.lam[0] and self.lam[1]):
            raise PreconditionError("lambda components must be nonzero")

    @property
    def t_acts(self) -> bool:
        return bool(self.k)


ModuleSpec = Union[NonzeroPSpec, ZeroPSpec]


@lru_cache(maxsize=4096)
def lam_power(lam: tuple[Scalar, Scalar], m1: int, m2: int) -> Scalar:
    return lam[0] ** m1 * lam[1] ** m2


@lru_cache(maxsize=4096)
def _e_factor(spec: ModuleSpec, m1: int, m2: int) -> Poly:
    """Degree-one polynomial multiplying ``f(d - m)`` in ``E(m) f``."""
    if isinstance(spec, NonzeroPSpec):
        p1, p2 = spec.p
        a = spec.alpha
        lin = (X1 + p1 * a) * (p2 + m2) - (X2 + p2 * a) * (p1 + m1)
    else:
        b1, b2 = spec.beta
        lin = (X1 + b1) * m2 - (X2 + b2) * m1
    return lin * lam_power(spec.lam, m1, m2)


def _act_generator(g: Generator, f: Poly, spec: ModuleSpec) -> Poly:
    kind = g.kind
    if kind == "D1":
        return X1 * f
    if kind == "D2":
        return X2 * f
    m1, m2 = g.index
    if kind == "E":
        return _e_factor(spec, m1, m2) * f.shift(m1, m2)
    if isinstance(spec, NonzeroPSpec):
        if not spec.b0:
            return Poly()
        p1, p2 = spec.p
        return f.shift(p1 + m1, p2 + m2) * (lam_power(spec.lam, m1, m2) * spec.b0)
    if m1 == 0 and m2 == 0:
        return f * spec.b0
    if not spec.k:
        return Poly()
    return f.shift(m1, m2) * (lam_power(spec.lam, m1, m2) * spec.k)


def act(x, f: Poly, spec: ModuleSpec) -> Poly:
    """Action of a Lie element (or generator) on ``f``."""
    if isinstance(x, Generator):
        return _act_generator(x, f, spec)
    out = Poly()
    for g, c in LieElement.of(x).items():
        out = out + _act_generator(g, f, spec) * c
    return out


def module_axiom_residual(x, y, f: Poly, spec: ModuleSpec) -> Poly:
    """``[x,y] f - (x(y f) - y(x f))``; zero iff the module axiom holds."""
    lhs = act(bracket(x, y, spec.p), f, spec)
    xy = act(x, act(y, f, spec), spec)
    yx = act(y, act(x, f, spec), spec)
    return lhs - (xy - yx)


def distinguished_point(spec: ModuleSpec) -> tuple[Scalar, Scalar]:
    """Common zero of the two degree-one generators of the proper submodule.

    The submodule is generated by ``d1 + p1 alpha`` and ``d2 + p2 alpha``
    (resp. ``d1 + beta1``, ``d2 + beta2``), i.e. it is the maximal ideal of
    polynomials vanishing at this point.
    """
    if isinstance(spec, NonzeroPSpec):
        p1, p2 = spec.p
        return (-(p1 * spec.alpha), -(p2 * spec.alpha))
    return (-spec.beta[0], -spec.beta[1])


def in_distinguished_submodule(f: Poly, spec: ModuleSpec) -> bool:
    return not f.eval(*distinguished_point(spec))


def simplicity_witness(f: Poly, spec: ModuleSpec, bound: int) -> tuple[int, int] | None:
    """First ``m`` (lex order from ``(-bound, -bound)``) with ``T(m) f`` outside
    the distinguished submodule, or None if the window has none.

    For ``p = 0`` the index ``m = 0`` is skipped, since ``T(0)`` acts by the
    scalar ``b0`` and cannot move ``f`` out of the submodule.
    """
    if f.is_zero():
        raise PreconditionError("simplicity witness needs a nonzero polynomial")
    if not in_distinguished_submodule(f, spec):
        raise PreconditionError("polynomial is not in the distinguished submodule")
    if not spec.t_acts:
        raise PreconditionError("T-action is trivial (b0 = 0 or k = 0)")
    if bound < 0:
        raise PreconditionError("bound must be nonnegative")
    r = range(-bound, bound + 1)
    for m in product(r, r):
        if isinstance(spec, ZeroPSpec) and m == (0, 0):
            continue
        if not in_distinguished_submodule(_act_generator(Generator("T", *m), f, spec), spec):
            return m
    return None


def factorization_residuals(m: tuple[int, int], f: Poly, spec: ModuleSpec) -> tuple[Poly, Poly]:
    """Check that ``E(m)`` and ``T(m)`` commute past ``f(d)`` as shifts.

    Returns ``(E(m) f - f(d-m) E(m)1, T(m) f - f(d-m-p) T(m)1)``.
    """
    one = Poly.constant(ONE)
    m1, m2 = m
    p1, p2 = spec.p
    e, t = Generator("E", m1, m2), Generator("T", m1, m2)
    r_e = act(e, f, spec) - f.shift(m1, m2) * act(e, one, spec)
    r_t = act(t, f, spec) - f.shift(p1 + m1, p2 + m2) * act(t, one, spec)
    return r_e, r_t
