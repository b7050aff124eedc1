"""Command-line interface: parse, compute, emit deterministic JSON.

Algebras are declared as `quat:<alpha>,<beta>@<field>` or
`oct:<alpha>,<beta>,<gamma>@<field>` where the field is `Q` or `Q(s<d>)`,
e.g. `quat:-1,-1@Q` or `quat:-1,-1@Q(s5)`.  Exit codes: 0 success, 1
mathematical error (split element, degree cap, incomplete exact
factorization, non-convergence), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from . import dynamics, solver
from .errors import AlgebraError, ParseError
from .octonions import OctSpec
from .parsing import parse_element, parse_poly, parse_scalar
from .polynomials import DEFAULT_DEGREE_CAP, Poly
from .quaternions import QuatSpec, Quaternion
from .scalars import FieldSpec

_FIELD_RE = re.compile(r"^Q\(s(-?\d+)\)$")

DEFAULT_ALGEBRA = "quat:-1,-1@Q"


def parse_field(text: str) -> FieldSpec:
    if text == "Q":
        return FieldSpec()
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"unknown field {text!r}; expected Q or Q(s<d>)")
    try:
        return FieldSpec(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_algebra(text: str) -> QuatSpec | OctSpec:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"malformed algebra declaration {text!r}")
    params, sep, field_text = rest.rpartition("@")
    if not sep:
        raise ParseError(f"algebra declaration {text!r} is missing @<field>")
    field = parse_field(field_text)
    try:
        values = [parse_scalar(p, field) for p in params.split(",")]
    except ParseError as exc:
        raise ParseError(f"bad algebra parameter in {text!r}: {exc}") from None
    if kind == "quat":
        if len(values) != 2:
            raise ParseError("quat algebras take exactly two parameters")
        return QuatSpec(field, values[0], values[1])
    if kind == "oct":
        if len(values) != 3:
            raise ParseError("oct algebras take exactly three parameters")
        return OctSpec(QuatSpec(field, values[0], values[1]), values[2])
    raise ParseError(f"unknown algebra kind {kind!r}")


# -- serialization helpers -----------------------------------------------------


def _class_dict(klass: solver.ConjClass) -> dict:
    d = {
        "trace": klass.trace.render(),
        "norm": klass.norm.render(),
        "exact": klass.exact,
    }
    if not klass.exact:
        d["precision"] = klass.precision
    return d


def _coordinates(point: Quaternion) -> dict:
    a, b, c, e = point.coords()
    return {"1": a.render(), "i": b.render(), "j": c.render(), "k": e.render()}


def _solution_dict(sol: solver.ClassSolution) -> dict:
    d = {"variant": sol.kind, "class": _class_dict(sol.klass)}
    if sol.point is not None:
        d["point"] = sol.point.render()
        d["coordinates"] = _coordinates(sol.point)
    if sol.residual is not None:
        d["residual"] = sol.residual
        d["approx"] = True
    if sol.detail:
        d["detail"] = sol.detail
    return d


def _base_payload(ns, spec, inputs: dict) -> dict:
    return {"command": ns.command, "algebra": str(spec), "inputs": inputs}


def _solver_inputs(ns, f: Poly) -> dict:
    inputs = {"poly": f.render(), "mode": ns.mode}
    if ns.mode == "numeric":
        inputs["precision"] = ns.precision
        inputs["tolerance"] = ns.tolerance
    return inputs


# -- subcommand handlers ----------------------------------------------------------


def _cmd_fixed_points(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    f = parse_poly(ns.poly, spec)
    sols = dynamics.fixed_points(
        f, mode=ns.mode, precision=ns.precision, tolerance=ns.tolerance
    )
    payload = _base_payload(ns, spec, _solver_inputs(ns, f))
    payload["result"] = [_solution_dict(s) for s in sols]
    return payload


def _cmd_roots(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    g = parse_poly(ns.poly, spec)
    sols = solver.roots(
        g, mode=ns.mode, precision=ns.precision, tolerance=ns.tolerance
    )
    payload = _base_payload(ns, spec, _solver_inputs(ns, g))
    payload["result"] = [_solution_dict(s) for s in sols]
    return payload


def _cmd_companion(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    g = parse_poly(ns.poly, spec)
    C = solver.companion(g)
    payload = _base_payload(ns, spec, {"poly": g.render()})
    payload["result"] = {
        "companion": C.render(),
        "coefficients": [c.render() for c in C.coeffs],
        "degree": C.degree,
    }
    return payload


def _cmd_compose(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    f = parse_poly(ns.poly, spec)
    composed = f.compose_iterate(ns.n, degree_cap=ns.degree_cap)
    payload = _base_payload(ns, spec, {"poly": f.render(), "n": ns.n})
    payload["result"] = {"poly": composed.render(), "degree": composed.degree}
    return payload


def _cmd_orbit(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    f = parse_poly(ns.poly, spec)
    start = parse_element(ns.point, spec)
    report = dynamics.orbit(
        f, start, ns.n_max, semantics=ns.semantics, degree_cap=ns.degree_cap
    )
    payload = _base_payload(
        ns,
        spec,
        {"poly": f.render(), "point": start.render(), "n_max": ns.n_max},
    )
    payload["result"] = {
        "semantics": report.semantics,
        "points": [p.render() for p in report.points],
        "commutes_with_start": list(report.commutes_with_start),
    }
    return payload


def _cmd_check_periodic(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    f = parse_poly(ns.poly, spec)
    start = parse_element(ns.point, spec)
    verdict = dynamics.certify_periodic(
        f, start, ns.r, n_max=ns.n_max, degree_cap=ns.degree_cap
    )
    payload = _base_payload(
        ns,
        spec,
        {
            "poly": f.render(),
            "point": start.render(),
            "r": ns.r,
            "n_max": ns.n_max,
        },
    )
    payload["result"] = {
        "r": verdict.r,
        "status": verdict.status,
        "refuted_at": verdict.refuted_at,
        "evidence": verdict.evidence,
    }
    return payload


def _cmd_oct_check(ns) -> dict:
    spec = parse_algebra(ns.algebra)
    f = parse_poly(ns.poly, spec)
    start = parse_element(ns.point, spec)
    report = dynamics.octonion_fixed_check(
        f, start, n_max=ns.n_max, degree_cap=ns.degree_cap
    )
    payload = _base_payload(
        ns,
        spec,
        {"poly": f.render(), "point": start.render(), "n_max": ns.n_max},
    )
    payload["result"] = {
        "fixed": report.fixed,
        "checked_up_to": report.checked_up_to,
        "first_failure": report.first_failure,
    }
    return payload


_HANDLERS = {
    "fixed-points": _cmd_fixed_points,
    "roots": _cmd_roots,
    "companion": _cmd_companion,
    "compose": _cmd_compose,
    "orbit": _cmd_orbit,
    "check-periodic": _cmd_check_periodic,
    "oct-check": _cmd_oct_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatdyn",
        description="Exact dynamics of left polynomials over quaternion "
        "and octonion algebras.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default=DEFAULT_ALGEBRA)
    common.add_argument("--poly", required=True)
    common.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    common.add_argument("--tolerance", type=float, default=solver.DEFAULT_TOLERANCE)
    common.add_argument("--precision", type=int, default=solver.DEFAULT_PRECISION)
    common.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    common.add_argument(
        "--json", action="store_true", default=True, help="emit JSON (the default)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("fixed-points", parents=[common])
    sub.add_parser("roots", parents=[common])
    sub.add_parser("companion", parents=[common])

    compose = sub.add_parser("compose", parents=[common])
    compose.add_argument("--n", type=int, required=True)

    orbit = sub.add_parser("orbit", parents=[common])
    orbit.add_argument("--point", required=True)
    orbit.add_argument("--n-max", type=int, default=4)
    orbit.add_argument("--semantics", choices=("compose", "eval"), default="compose")

    periodic = sub.add_parser("check-periodic", parents=[common])
    periodic.add_argument("--point", required=True)
    periodic.add_argument("--r", type=int, required=True)
    periodic.add_argument("--n-max", type=int, default=4)

    oct_check = sub.add_parser("oct-check", parents=[common])
    oct_check.add_argument("--point", required=True)
    oct_check.add_argument("--n-max", type=int, default=4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    try:
        payload = _HANDLERS[ns.command](ns)
    except ParseError as exc:
        _emit_error(ns.command, exc)
        return 2
    except (AlgebraError, ZeroDivisionError) as exc:
        _emit_error(ns.command, exc)
        return 1
    print(json.dumps(payload, indent=2))
    return 0


def _emit_error(command: str, exc: Exception) -> None:
    payload = {
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    print(json.dumps(payload, indent=2))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
