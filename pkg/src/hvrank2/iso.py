"""Isomorphisms between the Omega-modules and the classification of their classes.

Between modules that differ only in ``alpha`` (resp. ``beta``) the
intertwiner is the affine change of coordinates sending
``(d1 + p1 alpha)^i (d2 + p2 alpha)^j`` to ``(d1 + p1 gamma)^i (d2 + p2 gamma)^j``,
i.e. a single shift. It commutes with every ``T(m)`` and ``E(m)`` but not
with ``D1``, ``D2`` unless the shift vanishes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import IncompatibleSpecError
from .lie import D1, D2, Generator, window_indices
from .modules import ModuleSpec, NonzeroPSpec, ZeroPSpec, act
from .poly import Poly, monomials
from .scalars import Scalar


class Flavor(str, enum.Enum):
    """Whether the degree derivations are part of the acting algebra."""

    PLAIN = "L"
    EXTENDED = "Lt"


def _check_same_family(a: ModuleSpec, b: ModuleSpec):
    if type(a) is not type(b):
        raise IncompatibleSpecError("cannot compare a p != 0 module with a p = 0 module")
    if a.p != b.p:
        raise IncompatibleSpecError(f"algebra parameters differ: p={a.p} vs p={b.p}")


def phi_offset(src: ModuleSpec, dst: ModuleSpec) -> tuple[Scalar, Scalar]:
    """Shift vector ``s`` with ``phi(f) = f(d - s)``."""
    _check_same_family(src, dst)
    if src.lam != dst.lam:
        raise IncompatibleSpecError("phi needs equal lambda")
    if src.b0 != dst.b0:
        raise IncompatibleSpecError("phi needs equal b0")
    if isinstance(src, NonzeroPSpec):
        p1, p2 = src.p
        d = src.alpha - dst.alpha
        return (p1 * d, p2 * d)
    if src.k != dst.k:
        raise IncompatibleSpecError("phi needs equal k")
    return (src.beta[0] - dst.beta[0], src.beta[1] - dst.beta[1])


def phi_map(f: Poly, src: ModuleSpec, dst: ModuleSpec) -> Poly:
    return f.shift(*phi_offset(src, dst))


def intertwine_residual(x, f: Poly, src: ModuleSpec, dst: ModuleSpec) -> Poly:
    """``phi(x.f) - x.phi(f)``."""
    return phi_map(act(x, f, src), src, dst) - act(x, phi_map(f, src, dst), dst)


def are_isomorphic(a: ModuleSpec, b: ModuleSpec, flavor: Flavor) -> bool:
    """Decide isomorphism by comparing the classifying parameters."""
    _check_same_family(a, b)
    flavor = Flavor(flavor)
    same = a.lam == b.lam and a.b0 == b.b0
    if isinstance(a, ZeroPSpec):
        same = same and a.k == b.k
        if flavor is Flavor.EXTENDED:
            same = same and a.beta == b.beta
    elif flavor is Flavor.EXTENDED:
        same = same and a.alpha == b.alpha
    return same


@dataclass
class Certificate:
    decision: bool
    flavor: Flavor
    cases_checked: int = 0
    nonzero: list[tuple[str, str, str]] = field(default_factory=list)
    separating: tuple[str, str] | None = None

    @property
    def ok(self) -> bool:
        return not self.nonzero


def certify(a: ModuleSpec, b: ModuleSpec, flavor: Flavor, window: int = 2, degree: int = 3) -> Certificate:
    """Decide, then back the decision with residual checks.

    A positive decision is certified by vanishing intertwiner residuals on
    the window. When the modules are isomorphic over the plain algebra but
    not the extended one, a nonzero ``D1``/``D2`` residual on ``1`` is
    recorded as the separating witness.
    """
    flavor = Flavor(flavor)
    cert = Certificate(are_isomorphic(a, b, flavor), flavor)
    if not are_isomorphic(a, b, Flavor.PLAIN):
        return cert
    gens: list[Generator] = []
    for m in window_indices(window):
        gens += [Generator("T", *m), Generator("E", *m)]
    if cert.decision and flavor is Flavor.EXTENDED:
        gens += [D1, D2]
    polys = [Poly.monomial(*e) for e in monomials(degree)]
    for g in gens:
        for f in polys:
            cert.cases_checked += 1
            r = intertwine_residual(g, f, a, b)
            if r:
                cert.nonzero.append((str(g), str(f), str(r)))
    if not cert.decision:
        one = Poly.constant(1)
        for g in (D1, D2):
            r = intertwine_residual(g, one, a, b)
            cert.cases_checked += 1
            if r:
                cert.separating = (str(g), str(r))
                break
        if cert.separating is None:
            cert.nonzero.append(("D1/D2", "1", "no separating residual"))
    return cert
