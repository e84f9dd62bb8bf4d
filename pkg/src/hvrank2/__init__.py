"""Exact computations with the rank-two generalized Heisenberg-Virasoro algebra.

Scalars live in Q(i), polynomials in Q(i)[d1, d2]. The submodules cover the
algebra itself (:mod:`.lie`), an operator realization used as an independent
oracle (:mod:`.realization`), the rank-one U(h)-free modules
(:mod:`.modules`), their isomorphisms (:mod:`.iso`) and the constraints that
classify them (:mod:`.classify`).
"""

from .classify import (
    ActionFamily,
    classified_family,
    constraint_residuals,
    recover_parameters,
    solve_h_linear,
    solve_translation_invariance,
)
from .errors import (
    HVError,
    IncompatibleSpecError,
    NotClassifiedError,
    ParseError,
    PreconditionError,
    UnsupportedDomainError,
    WindowError,
)
from .iso import Flavor, are_isomorphic, certify, intertwine_residual, phi_map
from .lie import D1, D2, AlgebraParams, E, Generator, LieElement, T, bracket, outer_derivation
from .modules import NonzeroPSpec, ZeroPSpec, act, module_axiom_residual, simplicity_witness
from .poly import Poly, parse_poly, render_poly
from .realization import RealizationElement, cross_check_bracket, realize_apply
from .scalars import I, ONE, ZERO, Scalar, parse_scalar, render_scalar

__version__ = "0.1.0"

__all__ = [
    "ActionFamily",
    "AlgebraParams",
    "D1",
    "D2",
    "E",
    "Flavor",
    "Generator",
    "HVError",
    "I",
    "IncompatibleSpecError",
    "LieElement",
    "NonzeroPSpec",
    "NotClassifiedError",
    "ONE",
    "ParseError",
    "Poly",
    "PreconditionError",
    "RealizationElement",
    "Scalar",
    "T",
    "UnsupportedDomainError",
    "WindowError",
    "ZERO",
    "ZeroPSpec",
    "act",
    "are_isomorphic",
    "bracket",
    "certify",
    "classified_family",
    "constraint_residuals",
    "cross_check_bracket",
    "intertwine_residual",
    "module_axiom_residual",
    "outer_derivation",
    "parse_poly",
    "parse_scalar",
    "phi_map",
    "realize_apply",
    "recover_parameters",
    "render_poly",
    "render_scalar",
    "simplicity_witness",
    "solve_h_linear",
    "solve_translation_invariance",
]
