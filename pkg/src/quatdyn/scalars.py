"""Exact scalars: rationals and real/imaginary quadratic extensions Q(sqrt d).

A Scalar stores a + b*sqrt(d) with exact Fraction coordinates; over the plain
rationals b is pinned to zero.  Equality, arithmetic and (when d > 0) the
order relation are all exact.  `to_real` produces a dyadic rational within
2**-bits of the true value under the principal embedding sqrt(d) > 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import FieldMismatchError, NoRealEmbeddingError

RationalLike = (int, Fraction)


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2
    return True


class FieldSpec:
    """Ground field: Q when d is None, otherwise Q(sqrt d) for squarefree d."""

    __slots__ = ("d",)

    def __init__(self, d: int | None = None) -> None:
        if d is not None:
            if d in (0, 1):
                raise ValueError(f"d = {d} does not define a quadratic extension")
            if not _is_squarefree(d):
                raise ValueError(f"d = {d} is not squarefree")
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    @property
    def has_real_embedding(self) -> bool:
        return self.d is None or self.d > 0

    def scalar(self, a: int | Fraction = 0, b: int | Fraction = 0) -> Scalar:
        return Scalar(self, a, b)

    def sqrt_gen(self) -> Scalar:
        """The generator sqrt(d) itself."""
        if self.d is None:
            raise ValueError("the rational field has no radical generator")
        return Scalar(self, 0, 1)

    def coerce(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar from {value.field} used in {self}"
                )
            return value
        if isinstance(value, RationalLike):
            return Scalar(self, value)
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    def zero(self) -> Scalar:
        return Scalar(self, 0)

    def one(self) -> Scalar:
        return Scalar(self, 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.d))

    def __repr__(self) -> str:
        return f"FieldSpec(d={self.d})"

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(s{self.d})"


QQ = FieldSpec()


_ZERO = Fraction(0)


class Scalar:
    """An exact element a + b*sqrt(d) of the ground field."""

    __slots__ = ("field", "a", "b")

    field: FieldSpec
    a: Fraction
    b: Fraction

    def __init__(self, field: FieldSpec, a=0, b=_ZERO) -> None:
        if type(a) is not Fraction:
            a = Fraction(a)
        if type(b) is not Fraction:
            b = Fraction(b)
        if b and field.d is None:
            raise ValueError("rational field scalars cannot carry a radical part")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields {self.field} and {other.field}"
                )
            return other
        if isinstance(other, RationalLike):
            return Scalar(self.field, other)
        return None

    # -- ring and field operations ----------------------------------------

    def __add__(self, other) -> Scalar:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __neg__(self) -> Scalar:
        return Scalar(self.field, -self.a, -self.b)

    def __mul__(self, other) -> Scalar:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not (self.b or o.b):
            return Scalar(self.field, self.a * o.a)
        d = self.field.d
        return Scalar(
            self.field,
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        """Multiplicative inverse via the field conjugate over the field norm."""
        if not self:
            raise ZeroDivisionError("scalar inverse of zero")
        if self.field.is_rational:
            return Scalar(self.field, 1 / self.a)
        d = self.field.d
        n = self.a * self.a - d * self.b * self.b
        # n = 0 with self != 0 would make sqrt(d) rational; impossible.
        return Scalar(self.field, self.a / n, -self.b / n)

    def __truediv__(self, other) -> Scalar:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> Scalar:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int) or n < 0:
            raise ValueError("scalar powers take a nonnegative integer exponent")
        out = Scalar(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and order ----------------------------------------------

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalLike):
            return self.a == other and self.b == 0
        if isinstance(other, Scalar):
            return (
                self.field == other.field
                and self.a == other.a
                and self.b == other.b
            )
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.field, self.a, self.b))

    def _sign(self) -> int:
        """Exact sign under the principal real embedding."""
        if not self.field.has_real_embedding:
            raise NoRealEmbeddingError(f"{self.field} has no real embedding")
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        d = self.field.d
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with d b^2; ties impossible (sqrt d irrational)
        bigger_rational = self.a * self.a > d * self.b * self.b
        if self.a > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def __lt__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() < 0

    def __le__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() <= 0

    def __gt__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() > 0

    def __ge__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o)._sign() >= 0

    # -- real embedding -----------------------------------------------------

    def to_real(self, bits: int = 64) -> Fraction:
        """Round to the nearest multiple of 2**-bits under sqrt(d) > 0.

        The result is an exact dyadic rational within 2**-bits of the value.
        """
        if bits < 1:
            raise ValueError("bits must be positive")
        if not self.field.has_real_embedding:
            raise NoRealEmbeddingError(f"{self.field} has no real embedding")
        scale = 1 << bits
        if self.b == 0:
            return Fraction(round(self.a * scale), scale)
        d = self.field.d
        guard = bits + 16
        while True:
            # floor and ceiling of sqrt(d) at `guard` fractional bits
            lo = isqrt(d << (2 * guard))
            lo_f = Fraction(lo, 1 << guard)
            hi_f = Fraction(lo + 1, 1 << guard)
            if self.b > 0:
                x_lo, x_hi = self.a + self.b * lo_f, self.a + self.b * hi_f
            else:
                x_lo, x_hi = self.a + self.b * hi_f, self.a + self.b * lo_f
            n_lo = (x_lo * scale + Fraction(1, 2)).__floor__()
            n_hi = (x_hi * scale + Fraction(1, 2)).__floor__()
            if n_lo == n_hi:
                return Fraction(n_lo, scale)
            guard *= 2  # b*sqrt(d)*scale is irrational, so this terminates

    def __float__(self) -> float:
        if self.b == 0:
            return float(self.a)
        return float(self.to_real(128))

    # -- text ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: `p/q`, `p/q + r/s*s5`, `s5`, `-s5`, ..."""
        if self.b == 0:
            return str(self.a)
        tok = f"s{self.field.d}"
        mag = abs(self.b)
        bterm = tok if mag == 1 else f"{mag}*{tok}"
        if self.a == 0:
            return bterm if self.b > 0 else f"-{bterm}"
        op = " + " if self.b > 0 else " - "
        return f"{self.a}{op}{bterm}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.field!r}, {self.a!r}, {self.b!r})"


def render_terms(terms: list[tuple[Scalar, str]]) -> str:
    """Render a linear combination over named basis elements.

    `terms` pairs each coordinate with its basis symbol ("" for the unit).
    Produces e.g. "1 + 2*i - j" or "(1/2 + s5)*k"; zero coordinates are
    dropped and the all-zero combination renders as "0".
    """
    parts: list[str] = []
    for coeff, sym in terms:
        if not coeff:
            continue
        # fold the sign out of pure-rational and pure-radical coordinates;
        # mixed a + b*sqrt(d) coordinates stay parenthesized verbatim
        if coeff.b == 0:
            neg = coeff.a < 0
            mag = str(abs(coeff.a))
        elif coeff.a == 0:
            neg = coeff.b < 0
            mag = (-coeff if neg else coeff).render()
        else:
            neg = False
            mag = f"({coeff.render()})"
        if sym:
            body = sym if mag == "1" else f"{mag}*{sym}"
        else:
            body = mag
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    if not parts:
        return "0"
    return " ".join(parts)
