"""Orbits, fixed points, and certification or refutation of periodic points.

A point is r-periodic when every nr-fold composition fixes it, which no finite
computation can check directly.  The verdicts here make the epistemic status
explicit instead of overclaiming:

  certified_periodic  the nr-fold composition fixes the point for r and the
                      point commutes with its first r-1 repeated evaluations;
                      that commutation hypothesis makes composition and
                      repeated evaluation agree, so periodicity follows for
                      every n.
  fixed_point         r = 1; no commutation hypothesis is needed.
  refuted_at          an exact mismatch of the (n*r)-fold composition.
  inconclusive        not r-fixed, or the bounded search exhausted its budget
                      (n_max or degree cap) without deciding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeCapError, UnsupportedAlgebraError, ZeroPolynomialError
from .polynomials import DEFAULT_DEGREE_CAP, Element, Poly
from .quaternions import QuatSpec
from .solver import (
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
    ClassSolution,
    roots,
)


@dataclass(frozen=True)
class OrbitReport:
    """Orbit prefix under one of the two iteration semantics.

    points[n] is the (n+1)-fold composition evaluated at the start point
    ("compose") or the (n+1)-fold repeated evaluation ("eval");
    commutes_with_start flags each against the start point.
    """

    semantics: str
    points: tuple[Element, ...]
    commutes_with_start: tuple[bool, ...]


@dataclass
class PeriodicVerdict:
    r: int
    status: str
    refuted_at: int | None = None
    evidence: dict = field(default_factory=dict)


@dataclass
class OctFixedReport:
    """Result of probing an octonion fixed-point candidate."""

    fixed: bool
    checked_up_to: int
    first_failure: int | None


def fixed_points(
    f: Poly,
    mode: str = "exact",
    precision: int = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[ClassSolution]:
    """Class solutions of f(x) = x; every point returned re-fixes under f."""
    if not isinstance(f.spec, QuatSpec):
        raise UnsupportedAlgebraError("fixed-point solving needs a quaternion algebra")
    g = f - Poly.x(f.spec)
    if g.is_zero:
        raise ZeroPolynomialError(
            "f(x) - x is identically zero: every point is fixed and there "
            "is no class decomposition to return"
        )
    if g.degree == 0:
        return []
    sols = roots(g, mode=mode, precision=precision, tolerance=tolerance)
    if mode == "exact":
        for sol in sols:
            if sol.kind == "point" and f(sol.point) != sol.point:
                raise AssertionError("fixed-point candidate does not re-fix")
    return sols


def orbit(
    f: Poly,
    start,
    n_max: int,
    semantics: str = "compose",
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> OrbitReport:
    """First n_max orbit points under composition or repeated evaluation."""
    lam = f.spec.coerce(start)
    points: list[Element] = []
    if semantics == "compose":
        g = f
        for n in range(n_max):
            if n > 0:
                g = f._compose_capped(g, degree_cap)
            points.append(g(lam))
    elif semantics == "eval":
        value = lam
        for _ in range(n_max):
            value = f(value)
            points.append(value)
    else:
        raise ValueError(f"unknown orbit semantics {semantics!r}")
    flags = tuple(lam.commutes(p) for p in points)
    return OrbitReport(semantics, tuple(points), flags)


def certify_periodic(
    f: Poly,
    start,
    r: int,
    n_max: int = 4,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> PeriodicVerdict:
    """Decide r-periodicity of a point as far as a bounded search can.

    Checks that the r-fold composition fixes the point; certifies via the
    commutation hypothesis on the repeated evaluations when it holds; and
    otherwise hunts for an exact counterexample among the (n*r)-fold
    compositions, n up to n_max.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    lam = f.spec.coerce(start)
    evidence: dict = {}
    try:
        g = f.compose_iterate(r, degree_cap)
    except DegreeCapError as exc:
        evidence["degree_cap"] = str(exc)
        return PeriodicVerdict(r, "inconclusive", evidence=evidence)
    if g(lam) != lam:
        evidence["r_fixed"] = False
        return PeriodicVerdict(r, "inconclusive", evidence=evidence)
    evidence["r_fixed"] = True
    if r == 1:
        return PeriodicVerdict(r, "fixed_point", evidence=evidence)

    value = lam
    commute_flags: list[bool] = []
    for _ in range(r - 1):
        value = f(value)
        commute_flags.append(lam.commutes(value))
    evidence["commutes_with_evals"] = commute_flags
    failed = [t for t, ok in enumerate(commute_flags, start=1) if not ok]
    if not failed:
        return PeriodicVerdict(r, "certified_periodic", evidence=evidence)
    evidence["failed_t"] = failed

    checked: list[int] = []
    current = g
    for n in range(2, n_max + 1):
        try:
            for _ in range(r):
                current = f._compose_capped(current, degree_cap)
        except DegreeCapError as exc:
            evidence["degree_cap"] = str(exc)
            evidence["refutation_checked"] = checked
            return PeriodicVerdict(r, "inconclusive", evidence=evidence)
        checked.append(n)
        if current(lam) != lam:
            evidence["refutation_checked"] = checked
            return PeriodicVerdict(r, "refuted_at", refuted_at=n, evidence=evidence)
    evidence["refutation_checked"] = checked
    return PeriodicVerdict(r, "inconclusive", evidence=evidence)


def octonion_fixed_check(
    f: Poly,
    start,
    n_max: int = 4,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> OctFixedReport:
    """Probe whether a fixed-point candidate stays fixed under composition.

    Verifies f(start) = start, then evaluates the n-fold compositions at the
    point for n = 2..n_max, reporting the first n that fails.  Over an
    associative coefficient algebra no failure can occur; over octonions it
    can.
    """
    lam = f.spec.coerce(start)
    if f(lam) != lam:
        return OctFixedReport(fixed=False, checked_up_to=1, first_failure=1)
    g = f
    for n in range(2, n_max + 1):
        g = f._compose_capped(g, degree_cap)
        if g(lam) != lam:
            return OctFixedReport(fixed=True, checked_up_to=n, first_failure=n)
    return OctFixedReport(fixed=True, checked_up_to=n_max, first_failure=None)
