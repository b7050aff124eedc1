"""Left polynomials over a quaternion or octonion algebra.

Coefficients sit on the left of a central variable: f(x) = sum c_i x^i.
Multiplication is the convolution with coefficient products taken in written
order, and substitution f(lam) = sum c_i lam^i is *not* a ring homomorphism.
Two different iterations therefore coexist and are kept apart throughout:

  compose_iterate(n)   the polynomial f(f(...)), outer copy applied last;
  eval_iterate(lam, n) the value f(f(...f(lam))), plain repeated evaluation.

They agree when lam commutes with the intermediate values and differ in
general.  Composition of polynomials is itself non-associative over a
noncommutative coefficient algebra, so the outer-application order above is
part of the contract, as is left-nesting of powers in `compose`.
"""

from __future__ import annotations

from .errors import DegreeCapError, SpecMismatchError, UnsupportedAlgebraError
from .octonions import Octonion, OctSpec
from .quaternions import QuatSpec, Quaternion
from .scalars import RationalLike, Scalar

DEFAULT_DEGREE_CAP = 4096

AlgebraSpec = QuatSpec | OctSpec
Element = Quaternion | Octonion


class Poly:
    """Dense left-coefficient polynomial in normal form (no trailing zeros)."""

    __slots__ = ("spec", "coeffs")

    spec: AlgebraSpec
    coeffs: tuple[Element, ...]

    def __init__(self, spec: AlgebraSpec, coeffs=()) -> None:
        cs = [spec.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, spec: AlgebraSpec, value) -> Poly:
        return cls(spec, [value])

    @classmethod
    def x(cls, spec: AlgebraSpec) -> Poly:
        return cls(spec, [0, 1])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Element:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.spec.zero()

    def leading(self) -> Element:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- coercion -------------------------------------------------------------

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise SpecMismatchError("polynomials over different algebras")
            return other
        if isinstance(other, (Quaternion, Octonion, Scalar) + RationalLike):
            return Poly(self.spec, [other])
        return None

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.spec, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.spec, [self.coeff(i) - o.coeff(i) for i in range(n)])

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __neg__(self) -> Poly:
        return Poly(self.spec, [-c for c in self.coeffs])

    def __mul__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly(self.spec)
        out = [self.spec.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, dj in enumerate(o.coeffs):
                out[i + j] = out[i + j] + ci * dj
        return Poly(self.spec, out)

    def __rmul__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, t: int) -> Poly:
        """Repeated product, left-nested: f**3 is (f*f)*f."""
        if not isinstance(t, int) or t < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        if t == 0:
            return Poly.constant(self.spec, 1)
        out = self
        for _ in range(t - 1):
            out = out * self
        return out

    # -- substitution ----------------------------------------------------------------

    def __call__(self, lam) -> Element:
        """Evaluate sum c_i lam^i, powers of lam computed left-nested."""
        lam = self.spec.coerce(lam)
        acc = self.spec.zero()
        power = self.spec.one()
        for c in self.coeffs:
            acc = acc + c * power
            power = power * lam
        return acc

    def compose(self, other) -> Poly:
        """Substitute a polynomial: sum c_i * (other ** i)."""
        o = self._lift(other)
        if o is None:
            raise TypeError(f"cannot compose with {other!r}")
        if self.is_zero:
            return Poly(self.spec)
        acc = Poly.constant(self.spec, self.coeffs[0])
        gp = None
        for i in range(1, len(self.coeffs)):
            gp = o if gp is None else gp * o
            ci = self.coeffs[i]
            if not ci.is_zero:
                acc = acc + Poly.constant(self.spec, ci) * gp
        return acc

    def compose_iterate(self, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> Poly:
        """n-fold self-composition, the outer copy applied last at each step."""
        if n < 1:
            raise ValueError("n must be at least 1")
        if self.degree >= 2 and self.degree**n > degree_cap:
            raise DegreeCapError(
                f"composition degree {self.degree}**{n} exceeds cap {degree_cap}"
            )
        out = self
        for _ in range(n - 1):
            out = self._compose_capped(out, degree_cap)
        return out

    def _compose_capped(self, inner: Poly, degree_cap: int) -> Poly:
        if self.degree >= 1 and inner.degree >= 1:
            projected = self.degree * inner.degree
            if projected > degree_cap:
                raise DegreeCapError(
                    f"composition degree {projected} exceeds cap {degree_cap}"
                )
        return self.compose(inner)

    def eval_iterate(self, lam, n: int) -> Element:
        """n-fold repeated evaluation f(f(...f(lam)))."""
        if n < 1:
            raise ValueError("n must be at least 1")
        value = self.spec.coerce(lam)
        for _ in range(n):
            value = self(value)
        return value

    # -- quaternion-only structure ---------------------------------------------------

    def _require_associative(self, what: str) -> None:
        if not isinstance(self.spec, QuatSpec):
            raise UnsupportedAlgebraError(f"{what} needs an associative algebra")

    def conj_coeffs(self) -> Poly:
        """Apply the canonical involution to every coefficient."""
        self._require_associative("coefficient conjugation")
        return Poly(self.spec, [c.conj() for c in self.coeffs])

    def divmod_linear(self, lam) -> tuple[Poly, Element]:
        """Right-divide by (x - lam): f = q*(x - lam) + r with r = f(lam)."""
        self._require_associative("right division")
        lam = self.spec.coerce(lam)
        m = self.degree
        if m < 1:
            return Poly(self.spec), self.coeff(0)
        q: list[Element] = [self.spec.zero()] * m
        q[m - 1] = self.coeffs[m]
        for k in range(m - 1, 0, -1):
            q[k - 1] = self.coeffs[k] + q[k] * lam
        r = self.coeffs[0] + q[0] * lam
        return Poly(self.spec, q), r

    # -- equality and text ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs))

    def render(self) -> str:
        """Canonical text: left coefficients parenthesized, descending powers."""
        if self.is_zero:
            return "(0)"
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c.is_zero:
                continue
            if p == 0:
                parts.append(f"({c.render()})")
            elif p == 1:
                parts.append(f"({c.render()})*x")
            else:
                parts.append(f"({c.render()})*x^{p}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<{self.render()} over {self.spec}>"
