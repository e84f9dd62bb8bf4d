"""Command-line front end.

Every subcommand runs one suite and prints a single JSON report::

    {"command", "params", "cases_total", "failures", "result", "wall_time_ms"}

Exit status is 0 when ``failures`` is empty, 1 otherwise, 2 for usage or
parse errors and 3 when the computation itself refuses the input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import shlex
import sys
import time
from itertools import combinations_with_replacement, product

from .classify import (
    classified_family,
    constraint_residuals,
    recover_parameters,
    solve_h_linear,
    solve_translation_invariance,
)
from .errors import HVError, ParseError
from .iso import Flavor, certify
from .lie import AlgebraParams, Generator, bracket, jacobi_residual, window_generators, window_indices
from .modules import (
    NonzeroPSpec,
    ZeroPSpec,
    act,
    factorization_residuals,
    in_distinguished_submodule,
    module_axiom_residual,
    simplicity_witness,
)
from .poly import D1 as X1
from .poly import D2 as X2
from .poly import Poly, monomials, parse_poly, render_poly
from .realization import cross_check_bracket
from .scalars import parse_pair, parse_scalar, render_scalar

DEFAULT_WINDOW = 2
DEFAULT_DEGREE = 3

# Weights used by verify-realization: integral, rational and Gaussian.
REALIZATION_WEIGHTS = ("0,0", "1,0", "0,1", "1/2,-1/3", "2+1i,-3/4i")


class UsageError(Exception):
    pass


# -- argument types ------------------------------------------------------------


def _arg(parser):
    def convert(text):
        try:
            return parser(text)
        except ParseError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    convert.__name__ = parser.__name__
    return convert


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


_pair = _arg(parse_pair)
_scalar = _arg(parse_scalar)
_poly = _arg(parse_poly)


def _pair_str(v) -> str:
    return f"{render_scalar(v[0])},{render_scalar(v[1])}"


# -- module specs from flags ---------------------------------------------------

def _add_spec_flags(ap: argparse.ArgumentParser, prefix: str = ""):
    ap.add_argument(f"--{prefix}p", type=_pair, dest=f"{prefix}p")
    ap.add_argument(f"--{prefix}lambda", type=_pair, dest=f"{prefix}lam")
    ap.add_argument(f"--{prefix}alpha", type=_scalar, dest=f"{prefix}alpha")
    ap.add_argument(f"--{prefix}beta", type=_pair, dest=f"{prefix}beta")
    ap.add_argument(f"--{prefix}b0", type=_scalar, dest=f"{prefix}b0")
    ap.add_argument(f"--{prefix}k", type=_scalar, dest=f"{prefix}k")


def _spec_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spec", add_help=False, exit_on_error=False)
    _add_spec_flags(ap)
    return ap


def _parse_spec_string(text: str) -> argparse.Namespace:
    try:
        ns, extra = _spec_parser().parse_known_args(shlex.split(text))
    except (argparse.ArgumentError, argparse.ArgumentTypeError, ValueError) as exc:
        raise UsageError(f"bad module spec {text!r}: {exc}") from None
    if extra:
        raise UsageError(f"unexpected tokens in module spec: {' '.join(extra)}")
    return ns


def _build_spec(ns: argparse.Namespace, label: str = "module spec"):
    values = {name: getattr(ns, name, None) for name in ("p", "lam", "alpha", "beta", "b0", "k")}
    spec_text = getattr(ns, "spec", None)
    if spec_text:
        inner = vars(_parse_spec_string(spec_text))
        for name, v in inner.items():
            if v is not None:
                if values[name] is not None:
                    raise UsageError(f"--{name} given both inline and inside --spec")
                values[name] = v
    missing = lambda *names: [n for n in names if values[n] is None]  # noqa: E731
    if missing("p", "lam", "b0"):
        raise UsageError(f"{label} needs --p, --lambda and --b0")
    p = AlgebraParams(*values["p"])
    if p.is_zero:
        if missing("beta", "k"):
            raise UsageError(f"{label} with p = 0,0 needs --beta and --k")
        if values["alpha"] is not None:
            raise UsageError(f"{label} with p = 0,0 takes --beta, not --alpha")
        return ZeroPSpec(values["lam"], values["beta"], values["b0"], values["k"])
    if missing("alpha"):
        raise UsageError(f"{label} with p != 0,0 needs --alpha")
    if values["beta"] is not None or values["k"] is not None:
        raise UsageError(f"{label} with p != 0,0 takes --alpha, not --beta/--k")
    return NonzeroPSpec(p, values["lam"], values["alpha"], values["b0"])


def spec_params(spec) -> dict:
    out = {"p": str(spec.p), "lambda": _pair_str(spec.lam)}
    if isinstance(spec, NonzeroPSpec):
        out["alpha"] = render_scalar(spec.alpha)
        out["b0"] = render_scalar(spec.b0)
    else:
        out["beta"] = _pair_str(spec.beta)
        out["b0"] = render_scalar(spec.b0)
        out["k"] = render_scalar(spec.k)
    return out


# -- report helpers --------------------------------------------------------------


_ZERO = object()  # "expect a vanishing residual"


class Suite:
    def __init__(self):
        self.cases_total = 0
        self.failures: list[dict] = []

    def check(self, case_id: str, actual, expected=_ZERO):
        """Record one case; ``actual`` fails when truthy unless ``expected`` is given."""
        self.cases_total += 1
        if expected is _ZERO:
            if actual:
                self.failures.append({"case_id": case_id, "expected": "0", "actual": str(actual)})
        elif actual != expected:
            self.failures.append({"case_id": case_id, "expected": str(expected), "actual": str(actual)})


def _monomial_polys(degree: int) -> list[Poly]:
    return [Poly.monomial(*e) for e in monomials(degree)]


# -- subcommands ------------------------------------------------------------------


def cmd_verify_lie(ns, suite: Suite):
    p = AlgebraParams(*ns.p)
    gens = window_generators(ns.window)
    pairs = 0
    for x, y in combinations_with_replacement(gens, 2):
        pairs += 1
        r = bracket(x, y, p) + bracket(y, x, p)
        if r:
            suite.failures.append({"case_id": f"antisym {x} {y}", "expected": "0", "actual": str(r)})
    for x, y, z in combinations_with_replacement(gens, 3):
        suite.check(f"jacobi {x} {y} {z}", jacobi_residual(x, y, z, p))
    return {"p": str(p), "window": ns.window}, {"generators": len(gens), "antisymmetry_pairs": pairs}


def cmd_verify_realization(ns, suite: Suite):
    p = AlgebraParams(*ns.p)
    gens = window_generators(ns.window)
    weights = [parse_pair(w) for w in REALIZATION_WEIGHTS]
    for x, y in product(gens, gens):
        for w in weights:
            suite.check(f"{x} {y} u({_pair_str(w)})", cross_check_bracket(x, y, w, p))
    return (
        {"p": str(p), "window": ns.window},
        {"generators": len(gens), "weights": [_pair_str(w) for w in weights]},
    )


def cmd_verify_module(ns, suite: Suite):
    spec = _build_spec(ns)
    gens = window_generators(ns.window)
    polys = _monomial_polys(ns.deg)
    counts = {"axiom": 0, "factorization": 0, "closure": 0, "codimension": 0}
    for x, y in product(gens, gens):
        for f in polys:
            counts["axiom"] += 1
            suite.check(f"axiom {x} {y} {render_poly(f)}", module_axiom_residual(x, y, f, spec))
    for m in window_indices(ns.window):
        for f in polys:
            counts["factorization"] += 1
            r_e, r_t = factorization_residuals(m, f, spec)
            suite.check(f"factor E{m} {render_poly(f)}", r_e)
            suite.check(f"factor T{m} {render_poly(f)}", r_t)
    # closure of the distinguished submodule under E(m), D1, D2
    pt = _point_poly(spec)
    sub = [pt[0] * f for f in polys] + [pt[1] * f for f in polys]
    for x in [g for g in gens if g.kind != "T"]:
        for f in sub:
            counts["closure"] += 1
            image = act(x, f, spec)
            suite.check(f"closure {x} {render_poly(f)}", in_distinguished_submodule(image, spec), True)
    counts["codimension"] += 1
    suite.check("codimension 1 not in submodule", in_distinguished_submodule(Poly.constant(1), spec), False)
    params = {**spec_params(spec), "window": ns.window, "deg": ns.deg}
    return params, counts


def _point_poly(spec) -> tuple[Poly, Poly]:
    if isinstance(spec, NonzeroPSpec):
        p1, p2 = spec.p
        return X1 + p1 * spec.alpha, X2 + p2 * spec.alpha
    return X1 + spec.beta[0], X2 + spec.beta[1]


def cmd_simplicity(ns, suite: Suite):
    spec = _build_spec(ns)
    if ns.f is None:
        raise UsageError("simplicity needs --f")
    w = simplicity_witness(ns.f, spec, ns.bound)
    suite.check("witness found", w is not None, True)
    params = {**spec_params(spec), "f": render_poly(ns.f), "bound": ns.bound}
    result = {"witness": list(w) if w is not None else None}
    if w is not None:
        result["image"] = render_poly(act(Generator("T", *w), ns.f, spec))
    return params, result


def cmd_iso(ns, suite: Suite):
    if not ns.specA or not ns.specB:
        raise UsageError("iso needs --specA and --specB")
    a = _build_spec(_parse_spec_string(ns.specA), "--specA")
    b = _build_spec(_parse_spec_string(ns.specB), "--specB")
    cert = certify(a, b, ns.flavor, window=ns.window, degree=ns.deg)
    suite.cases_total += cert.cases_checked
    for g, f, r in cert.nonzero:
        suite.failures.append({"case_id": f"intertwine {g} {f}", "expected": "0", "actual": r})
    params = {
        "flavor": cert.flavor.value,
        "specA": spec_params(a),
        "specB": spec_params(b),
        "window": ns.window,
        "deg": ns.deg,
    }
    result = {
        "isomorphic": cert.decision,
        "separating": None if cert.separating is None else {"x": cert.separating[0], "residual": cert.separating[1]},
    }
    return params, result


def cmd_invariance(ns, suite: Suite):
    if ns.q is None:
        raise UsageError("invariance needs --q")
    q1, q2 = ns.q
    basis = solve_translation_invariance(q1, q2, ns.deg)
    for f in basis:
        suite.check(f"invariant {render_poly(f)}", f - f.shift(q1, q2))
    params = {"q": _pair_str(ns.q), "deg": ns.deg}
    return params, {"dimension": len(basis), "basis": [render_poly(f) for f in basis]}


def cmd_residuals(ns, suite: Suite):
    spec = _build_spec(ns)
    fam = classified_family(spec, ns.window)
    counts = {"hh": 0, "gh": 0, "gg": 0}
    for r in constraint_residuals(fam, spec.p):
        counts[r.equation] += 1
        suite.check(f"{r.equation} m={r.m} n={r.n}", r.value)
    return {**spec_params(spec), "window": ns.window}, counts


def cmd_solve_h(ns, suite: Suite):
    spec = _build_spec(ns)
    sol = solve_h_linear(spec, ns.window, ns.deg)
    suite.check("classified h in span", sol.classified_in_span, True)
    suite.check("classified h passes hh", sol.classified_passes_hh, True)
    result = {
        "dimension": sol.dimension,
        "surviving": sol.surviving,
        "constraints": sol.constraints,
        "unknowns": sol.unknowns,
    }
    return {**spec_params(spec), "window": ns.window, "deg": ns.deg}, result


def cmd_recover(ns, suite: Suite):
    spec = _build_spec(ns)
    rec = recover_parameters(spec)
    for key, want in spec_params(spec).items():
        suite.check(f"recovered {key}", spec_params(rec.spec)[key], want)
    return spec_params(spec), {"recovered": spec_params(rec.spec), "route": rec.route}


COMMANDS = {
    "verify-lie": (cmd_verify_lie, "antisymmetry and Jacobi identity on a generator window"),
    "verify-realization": (cmd_verify_realization, "brackets against the weight-vector realization"),
    "verify-module": (cmd_verify_module, "module axioms, factorization and submodule structure"),
    "simplicity": (cmd_simplicity, "find T(m) moving f out of the distinguished submodule"),
    "iso": (cmd_iso, "isomorphism decision with intertwiner certificate"),
    "invariance": (cmd_invariance, "translation-invariant polynomials"),
    "residuals": (cmd_residuals, "constraint residuals of the classified family"),
    "solve-h": (cmd_solve_h, "linear solve for the T-action given the classified E-action"),
    "recover": (cmd_recover, "recover module parameters from the action on 1"),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hvrank2", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text)
        _add_spec_flags(sp)
        sp.add_argument("--spec", help='module spec as one flag string, e.g. "--p 1,0 --lambda 2,3 --alpha 5 --b0 7"')
        sp.add_argument("--specA")
        sp.add_argument("--specB")
        sp.add_argument("--window", type=_nonneg, default=DEFAULT_WINDOW, help="index window radius (default 2)")
        sp.add_argument("--deg", type=_nonneg, default=None, help="degree bound (default 3)")
        sp.add_argument("--q", type=_pair)
        sp.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.PLAIN.value)
        sp.add_argument("--f", type=_poly)
        sp.add_argument("--bound", type=_nonneg, default=DEFAULT_WINDOW)
    return ap


def _dump(report: dict, out) -> None:
    out.write(json.dumps(report, indent=2, ensure_ascii=False))
    out.write("\n")


def run_command(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.deg is None:
        ns.deg = DEFAULT_DEGREE
    if ns.command in ("verify-lie", "verify-realization") and ns.p is None:
        ap.print_usage(err)
        err.write(f"hvrank2 {ns.command}: error: --p is required\n")
        return 2
    fn, _ = COMMANDS[ns.command]
    suite = Suite()
    start = time.perf_counter()
    try:
        params, result = fn(ns, suite)
    except UsageError as exc:
        ap.print_usage(err)
        err.write(f"hvrank2 {ns.command}: error: {exc}\n")
        return 2
    except (HVError, ZeroDivisionError) as exc:
        report = {
            "command": ns.command,
            "params": {},
            "cases_total": 0,
            "failures": [],
            "result": {"error": type(exc).__name__, "message": str(exc)},
            "wall_time_ms": int((time.perf_counter() - start) * 1000),
        }
        _dump(report, out)
        return 3
    report = {
        "command": ns.command,
        "params": params,
        "cases_total": suite.cases_total,
        "failures": suite.failures,
        "result": result,
        "wall_time_ms": int((time.perf_counter() - start) * 1000),
    }
    _dump(report, out)
    return 0 if not suite.failures else 1


def main() -> None:
    sys.exit(run_command())
