"""Hybrid numbers a + b*hi + c*eps + d*hh over an exact scalar ring.

The three non-real units satisfy hi**2 = -1, eps**2 = 0, hh**2 = 1 and
hi*hh = -hh*hi = eps + hi, which forces the full unit product table

          hi          eps        hh
    hi    -1          1 - hh     eps + hi
    eps   1 + hh      0          -eps
    hh    -eps - hi   eps        1

The ring is associative but not commutative.  Coefficients live in one
scalar ring per value (Rational or a single Q(sqrt(D))); ints are lifted
to Fraction at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import QuadExt, common_discriminant

_SCALAR_TYPES = (int, Fraction, QuadExt)


def _lift(value):
    return Fraction(value) if isinstance(value, int) else value


@dataclass(frozen=True)
class Hybrid:
    a: object  # real part
    b: object  # hi part
    c: object  # eps part
    d: object  # hh part

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, _SCALAR_TYPES):
                raise TypeError(f"hybrid coefficient {name} of bad type {type(v).__name__}")
            object.__setattr__(self, name, _lift(v))
        common_discriminant(self.components())

    @classmethod
    def zero(cls) -> "Hybrid":
        return cls(0, 0, 0, 0)

    @classmethod
    def from_scalar(cls, s) -> "Hybrid":
        return cls(s, 0, 0, 0)

    def components(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def is_scalar(self) -> bool:
        return not (self.b or self.c or self.d)

    # -- additive structure ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Hybrid):
            return NotImplemented
        return Hybrid(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Hybrid):
            return NotImplemented
        return Hybrid(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Hybrid(-self.a, -self.b, -self.c, -self.d)

    # -- multiplication ---------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Hybrid):
            a, b, c, d = self.components()
            e, f, g, h = other.components()
            return Hybrid(
                a * e - b * f + b * g + c * f + d * h,
                a * f + b * e + b * h - d * f,
                a * g + c * e + b * h - d * f - c * h + d * g,
                a * h + d * e - b * g + c * f,
            )
        if isinstance(other, _SCALAR_TYPES):
            return Hybrid(self.a * other, self.b * other, self.c * other, self.d * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars commute with everything, so left scaling equals right scaling
        if isinstance(other, _SCALAR_TYPES):
            return Hybrid(other * self.a, other * self.b, other * self.c, other * self.d)
        return NotImplemented

    def conj(self) -> "Hybrid":
        return Hybrid(self.a, -self.b, -self.c, -self.d)

    def character(self):
        """The signed scalar z * conj(z) = a^2 + (b - c)^2 - c^2 - d^2.

        This is the square of the usual norm when non-negative; no square
        root is taken so the result stays in the scalar ring.
        """
        bc = self.b - self.c
        return self.a * self.a + bc * bc - self.c * self.c - self.d * self.d

    def __bool__(self):
        return bool(self.b or self.c or self.d or self.a)

    def __str__(self):
        return render_terms(zip(self.components(), ("", "hi", "eps", "hh")))


def render_coeff(value, unit: str) -> tuple[str, str]:
    """Render one term; returns (sign, body) with sign '+' or '-'."""
    if isinstance(value, QuadExt) and value.surd_part:
        if value.rat_part:
            # mixed coefficient keeps parentheses so the term stays one
            # factor; a bare scalar term needs none
            sign = "+"
            body = f"({value})" if unit else str(value)
        elif value.surd_part < 0:
            sign = "-"
            body = str(-value)
        else:
            sign = "+"
            body = str(value)
    else:
        rat = value.rat_part if isinstance(value, QuadExt) else value
        sign = "-" if rat < 0 else "+"
        body = str(abs(rat))
    if unit:
        body = f"{body}*{unit}"
    return sign, body


def render_terms(pairs) -> str:
    """Join (coefficient, unit) pairs, omitting zero terms."""
    out: list[str] = []
    for value, unit in pairs:
        if not value:
            continue
        sign, body = render_coeff(value, unit)
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


def hybrid_mul(x: Hybrid, y: Hybrid) -> Hybrid:
    if not isinstance(x, Hybrid) or not isinstance(y, Hybrid):
        raise TypeError("hybrid_mul expects two Hybrid values")
    return x * y


def hybrid_conj(z: Hybrid) -> Hybrid:
    return z.conj()


def hybrid_character(z: Hybrid):
    return z.character()


ONE = Hybrid(1, 0, 0, 0)
HI = Hybrid(0, 1, 0, 0)
EPS = Hybrid(0, 0, 1, 0)
HH = Hybrid(0, 0, 0, 1)
