"""Constraints satisfied by every rank-one U(h)-free module, and their solutions.

In such a module with generator ``1`` write ``E(m).1 = g_m(d)`` and
``T(m).1 = h_m(d)``. Commuting ``E``/``T`` past polynomials turns the bracket
relations into three families of polynomial identities, for all ``m, n``::

    hh:  h_n(d-m-p) h_m(d) - h_m(d-n-p) h_n(d)                    = 0
    gh:  h_n(d-m)   g_m(d) - g_m(d-n-p) h_n(d) - |n+p, m+p| h_{m+n}(d) = 0
    gg:  g_n(d-m)   g_m(d) - g_m(d-n)   g_n(d) - |n+p, m+p| g_{m+n}(d) = 0

Everything here works on a finite symmetric window of indices and reports
the window it used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import NotClassifiedError, PreconditionError, WindowError
from .lie import AlgebraParams, Generator, window_indices
from .linalg import Echelon, nullspace
from .modules import ModuleSpec, NonzeroPSpec, ZeroPSpec, act, lam_power
from .poly import D1, D2, Poly, grlex_key, monomials
from .scalars import ONE, ZERO, Scalar, as_scalar

Index = tuple[int, int]

__all__ = [
    "ActionFamily",
    "x_index",
    "x_params",
    "delta",
    "solve_translation_invariance",
    "classified_family",
    "family_from_module",
    "constraint_residuals",
    "failing_residuals",
    "Residual",
    "HSolution",
    "Recovery",
    "classified_g",
    "classified_h",
    "solve_h_linear",
    "recover_parameters",
]


# -- notation helpers ---------------------------------------------------------


def x_index(m: Index) -> Poly:
    """``m2*d1 - m1*d2``."""
    return D1 * m[1] - D2 * m[0]


def x_params(p: AlgebraParams) -> Poly:
    """``p2*d1 - p1*d2``."""
    return D1 * p.p2 - D2 * p.p1


def delta(m: Index, p: AlgebraParams) -> Scalar:
    """``p2*m1 - p1*m2``; vanishes for every m only when p = 0."""
    return p.p2 * m[0] - p.p1 * m[1]


def _det_shifted(n: Index, m: Index, p: AlgebraParams) -> Scalar:
    return (p.p1 + n[0]) * (p.p2 + m[1]) - (p.p2 + n[1]) * (p.p1 + m[0])


# -- translation invariance ---------------------------------------------------


def solve_translation_invariance(q1, q2, degree: int) -> list[Poly]:
    """Basis of ``{F : F(Y, Z) = F(Y - q1, Z - q2), deg F <= degree}``.

    ``Y``, ``Z`` are the variables ``d1``, ``d2``. The basis is the reduced
    echelon form of the solution space with columns in descending graded-lex
    order, hence deterministic and monic in its leading monomials.
    """
    q1, q2 = as_scalar(q1), as_scalar(q2)
    cols = monomials(degree)
    col_of = {e: j for j, e in enumerate(cols)}
    rows: dict[tuple, dict[int, Scalar]] = {}
    for j, e in enumerate(cols):
        mono = Poly.monomial(*e)
        diff = mono - mono.shift(q1, q2)
        for out_e, c in diff.terms.items():
            rows.setdefault(out_e, {})[j] = c
    basis = nullspace(rows.values(), len(cols))
    return [Poly({cols[j]: c for j, c in v.items()}) for v in basis]


# -- action families ----------------------------------------------------------


@dataclass
class ActionFamily:
    """Values ``g_m = E(m).1`` and ``h_m = T(m).1`` on a finite window."""

    window: tuple[Index, ...]
    g: dict[Index, Poly]
    h: dict[Index, Poly]

    def __post_init__(self):
        self.window = tuple(sorted(set(self.window)))
        w = set(self.window)
        if (0, 0) not in w:
            raise WindowError("window must contain 0")
        if any((-a, -b) not in w for a, b in w):
            raise WindowError("window must be symmetric")
        if set(self.g) != w or set(self.h) != w:
            raise WindowError("g and h must be defined exactly on the window")

    @classmethod
    def square(cls, radius: int, g, h) -> "ActionFamily":
        idx = window_indices(radius)
        return cls(tuple(idx), {m: g(m) for m in idx}, {m: h(m) for m in idx})

    def replace(self, *, g: Mapping | None = None, h: Mapping | None = None) -> "ActionFamily":
        return ActionFamily(self.window, {**self.g, **(g or {})}, {**self.h, **(h or {})})


def classified_g(spec: ModuleSpec, m: Index) -> Poly:
    lam = lam_power(spec.lam, *m)
    if isinstance(spec, NonzeroPSpec):
        return (x_params(spec.p) + x_index(m) - delta(m, spec.p) * spec.alpha) * lam
    b1, b2 = spec.beta
    return ((D1 + b1) * m[1] - (D2 + b2) * m[0]) * lam


def classified_h(spec: ModuleSpec, m: Index) -> Poly:
    if isinstance(spec, ZeroPSpec):
        if m == (0, 0):
            return Poly.constant(spec.b0)
        return Poly.constant(lam_power(spec.lam, *m) * spec.k)
    return Poly.constant(lam_power(spec.lam, *m) * spec.b0)


def classified_family(spec: ModuleSpec, radius: int) -> ActionFamily:
    """The family predicted by the classification, built from closed forms."""
    return ActionFamily.square(radius, lambda m: classified_g(spec, m), lambda m: classified_h(spec, m))


def family_from_module(spec: ModuleSpec, probes: Iterable[Index]) -> ActionFamily:
    """Read ``g_m``, ``h_m`` off the module action on ``1``."""
    one = Poly.constant(ONE)
    probes = tuple(probes)
    g = {m: act(Generator("E", *m), one, spec) for m in probes}
    h = {m: act(Generator("T", *m), one, spec) for m in probes}
    return ActionFamily(probes, g, h)


# -- constraint residuals -------------------------------------------------------


@dataclass(frozen=True)
class Residual:
    equation: str  # "hh", "gh" or "gg"
    m: Index
    n: Index
    value: Poly


def _pairs(window: Iterable[Index], need_sum: bool):
    w = set(window)
    for m in sorted(w):
        for n in sorted(w):
            s = (m[0] + n[0], m[1] + n[1])
            if need_sum and s not in w:
                continue
            yield m, n, s


def hh_residual(h: Mapping[Index, Poly], m: Index, n: Index, p: AlgebraParams) -> Poly:
    return (h[n].shift(p.p1 + m[0], p.p2 + m[1]) * h[m]
            - h[m].shift(p.p1 + n[0], p.p2 + n[1]) * h[n])


def gh_residual(g, h, m: Index, n: Index, p: AlgebraParams) -> Poly:
    s = (m[0] + n[0], m[1] + n[1])
    return (h[n].shift(*m) * g[m]
            - g[m].shift(p.p1 + n[0], p.p2 + n[1]) * h[n]
            - h[s] * _det_shifted(n, m, p))


def gg_residual(g, m: Index, n: Index, p: AlgebraParams) -> Poly:
    s = (m[0] + n[0], m[1] + n[1])
    return g[n].shift(*m) * g[m] - g[m].shift(*n) * g[n] - g[s] * _det_shifted(n, m, p)


def constraint_residuals(fam: ActionFamily, p: AlgebraParams) -> list[Residual]:
    """All residuals over the window, in deterministic order.

    ``hh`` runs over every pair in the window; ``gh`` and ``gg`` over the
    pairs whose sum is also in the window.
    """
    out = []
    for m, n, s in _pairs(fam.window, need_sum=False):
        out.append(Residual("hh", m, n, hh_residual(fam.h, m, n, p)))
    for m, n, s in _pairs(fam.window, need_sum=True):
        out.append(Residual("gh", m, n, gh_residual(fam.g, fam.h, m, n, p)))
        out.append(Residual("gg", m, n, gg_residual(fam.g, m, n, p)))
    return out


def failing_residuals(fam: ActionFamily, p: AlgebraParams) -> list[Residual]:
    return [r for r in constraint_residuals(fam, p) if r.value]


# -- linear solve for h given the classified g --------------------------------


@dataclass
class HSolution:
    window: tuple[Index, ...]
    degree: int
    basis: list[dict[Index, Poly]]
    classified_in_span: bool
    classified_passes_hh: bool
    surviving: int  # basis elements whose hh residuals all vanish
    constraints: int = 0
    unknowns: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _in_span(ech_rows: list[dict[int, Scalar]], v: dict[int, Scalar]) -> bool:
    ech = Echelon()
    for r in ech_rows:
        ech.add(r)
    return not ech.add(v)


def solve_h_linear(spec: ModuleSpec, radius: int, degree: int) -> HSolution:
    """Solve the ``gh`` identities for the unknown h-family, g fixed.

    With ``g`` set to its classified form the ``gh`` identities are linear
    in the coefficients of ``h_m`` (``deg h_m <= degree``, ``m`` in the
    square window of the given radius). The solution space is computed
    exactly; ``hh`` is quadratic and only used to filter basis elements.
    Unknowns are ordered monomial-major (descending graded-lex), then by
    window position.
    """
    if radius < 1:
        raise WindowError("solve_h_linear needs a window of radius >= 1")
    p = spec.p
    window = tuple(window_indices(radius))
    wpos = {m: i for i, m in enumerate(window)}
    monos = monomials(degree)
    nw = len(window)
    col = lambda mono_i, m: mono_i * nw + wpos[m]  # noqa: E731
    g = {m: classified_g(spec, m) for m in window}
    unit = [Poly.monomial(*e) for e in monos]

    rows: list[dict[int, Scalar]] = []
    for m, n, s in _pairs(window, need_sum=True):
        eq: dict[tuple[int, int], dict[int, Scalar]] = {}

        def add(poly: Poly, column: int):
            for e, c in poly.terms.items():
                r = eq.setdefault(e, {})
                v = r.get(column, ZERO) + c
                if v:
                    r[column] = v
                else:
                    r.pop(column, None)

        det = _det_shifted(n, m, p)
        g_shift = g[m].shift(p.p1 + n[0], p.p2 + n[1])
        for i, mono in enumerate(unit):
            add(mono.shift(*m) * g[m] - g_shift * mono, col(i, n))
            if det:
                add(mono * (-det), col(i, s))
        rows.extend(r for r in eq.values() if r)
    if not rows:
        raise WindowError("window generates no constraints")
    ncols = len(monos) * nw
    vecs = nullspace(rows, ncols)

    def to_family(v: dict[int, Scalar]) -> dict[Index, Poly]:
        fam: dict[Index, dict] = {m: {} for m in window}
        for j, c in v.items():
            fam[window[j % nw]][monos[j // nw]] = c
        return {m: Poly(t) for m, t in fam.items()}

    def hh_ok(h: Mapping[Index, Poly]) -> bool:
        return all(not hh_residual(h, m, n, p) for m, n, _ in _pairs(window, need_sum=False))

    basis = [to_family(v) for v in vecs]
    target_h = {m: classified_h(spec, m) for m in window}
    target = {}
    zero_idx = monos.index((0, 0))
    for m, poly in target_h.items():
        c = poly.constant_term()
        if c:
            target[col(zero_idx, m)] = c
    return HSolution(
        window=window,
        degree=degree,
        basis=basis,
        classified_in_span=_in_span(vecs, target),
        classified_passes_hh=hh_ok(target_h),
        surviving=sum(1 for b in basis if hh_ok(b)),
        constraints=len(rows),
        unknowns=ncols,
    )


# -- parameter recovery -------------------------------------------------------

REQUIRED_PROBES = ((1, 0), (0, 1), (-1, 0), (0, -1), (0, 0))


@dataclass
class Recovery:
    spec: ModuleSpec
    route: list[str] = field(default_factory=list)


def _ratio(poly: Poly, shape: Poly) -> Scalar | None:
    """``c`` with ``poly == c*shape`` (shape nonzero), else None."""
    e, s = next(shape.items())
    c = poly.coeff(*e) / s
    return c if poly == shape * c else None


def _linear_part(f: Poly) -> Poly:
    return f - f.constant_term()


def _recover_lambda_component(i: int, fam: ActionFamily, p: AlgebraParams, route: list[str]) -> Scalar:
    unit = [(1, 0), (0, 1)][i]
    for sign in (1, -1):
        m = (sign * unit[0], sign * unit[1])
        g = fam.g[m]
        if g.degree() > 1:
            raise NotClassifiedError(f"g{m} has degree {g.degree()} > 1")
        shape = D1 * (p.p2 + m[1]) - D2 * (p.p1 + m[0])
        if not shape:
            continue
        r = _ratio(_linear_part(g), shape)
        if r is None or not r:
            raise NotClassifiedError(f"linear part of g{m} is not a multiple of the expected shape")
        route.append(f"lambda{i + 1} from g{m}")
        return r if sign == 1 else r.inverse()
    h0 = fam.h[(0, 0)].constant_term()
    if h0:
        route.append(f"lambda{i + 1} from h{unit}/h(0,0)")
        return fam.h[unit].constant_term() / h0
    raise NotClassifiedError(f"cannot determine lambda{i + 1}")


def recover_parameters(oracle, probes: Iterable[Index] | None = None, p: AlgebraParams | None = None) -> Recovery:
    """Invert the classified shapes of ``g_m``, ``h_m`` to module parameters.

    ``oracle`` is a module spec (its action on ``1`` is probed) or an
    :class:`ActionFamily` together with ``p``. The candidate parameters are
    then checked against every probe, so inconsistent data raises
    :class:`NotClassifiedError`.
    """
    if isinstance(oracle, ActionFamily):
        if p is None:
            raise PreconditionError("p is required when recovering from an ActionFamily")
        fam = oracle
    else:
        p = oracle.p
        probes = tuple(probes) if probes is not None else tuple(window_indices(1))
        fam = family_from_module(oracle, probes)
    missing = [m for m in REQUIRED_PROBES if m not in fam.g]
    if missing:
        raise PreconditionError(f"probes must include {missing}")
    route: list[str] = []
    if p.is_zero:
        spec = _recover_zero_p(fam, route)
    else:
        spec = _recover_nonzero_p(fam, p, route)
    for m in fam.window:
        if fam.g[m] != classified_g(spec, m) or fam.h[m] != classified_h(spec, m):
            raise NotClassifiedError(f"probe {m} disagrees with the recovered parameters")
    route.append(f"verified {len(fam.window)} probes")
    return Recovery(spec, route)


def _recover_nonzero_p(fam: ActionFamily, p: AlgebraParams, route: list[str]) -> NonzeroPSpec:
    lam = (_recover_lambda_component(0, fam, p, route), _recover_lambda_component(1, fam, p, route))
    alpha = None
    for m in ((1, 0), (0, 1), (-1, 0), (0, -1)):
        d = delta(m, p)
        if d:
            alpha = -fam.g[m].constant_term() / (lam_power(lam, *m) * d)
            route.append(f"alpha from constant term of g{m}")
            break
    h0 = fam.h[(0, 0)]
    if not h0.is_constant():
        raise NotClassifiedError("h(0,0) is not constant")
    route.append("b0 from h(0,0)")
    try:
        return NonzeroPSpec(p, lam, alpha, h0.constant_term())
    except PreconditionError as exc:
        raise NotClassifiedError(str(exc)) from exc


def _recover_zero_p(fam: ActionFamily, route: list[str]) -> ZeroPSpec:
    g10, g01 = fam.g[(1, 0)], fam.g[(0, 1)]
    lam1 = -g10.coeff(0, 1)
    lam2 = g01.coeff(1, 0)
    if not lam1 or not lam2:
        raise NotClassifiedError("g(1,0) or g(0,1) lacks the expected linear term")
    beta = (g01.constant_term() / lam2, -g10.constant_term() / lam1)
    route += ["lambda1, beta2 from g(1,0)", "lambda2, beta1 from g(0,1)"]
    h0, h10 = fam.h[(0, 0)], fam.h[(1, 0)]
    if not (h0.is_constant() and h10.is_constant()):
        raise NotClassifiedError("h is not constant")
    route += ["b0 from h(0,0)", "k from h(1,0)/lambda1"]
    return ZeroPSpec((lam1, lam2), beta, h0.constant_term(), h10.constant_term() / lam1)
