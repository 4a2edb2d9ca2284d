"""Hamilton quaternions z0 + z1*i + z2*j + z3*k over an exact scalar ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hybrid import render_terms
from .scalars import QuadExt, common_discriminant

_SCALAR_TYPES = (int, Fraction, QuadExt)


@dataclass(frozen=True)
class Quaternion:
    z0: object
    z1: object
    z2: object
    z3: object

    def __post_init__(self):
        for name in ("z0", "z1", "z2", "z3"):
            v = getattr(self, name)
            if not isinstance(v, _SCALAR_TYPES):
                raise TypeError(f"quaternion coefficient {name} of bad type {type(v).__name__}")
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))
        common_discriminant(self.components())

    @classmethod
    def zero(cls) -> "Quaternion":
        return cls(0, 0, 0, 0)

    @classmethod
    def from_scalar(cls, s) -> "Quaternion":
        return cls(s, 0, 0, 0)

    def components(self) -> tuple:
        return (self.z0, self.z1, self.z2, self.z3)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b, c, d = self.components()
        e, f, g, h = other.components()
        return Quaternion(a + e, b + f, c + g, d + h)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b, c, d = self.components()
        e, f, g, h = other.components()
        return Quaternion(a - e, b - f, c - g, d - h)

    def __neg__(self):
        return Quaternion(-self.z0, -self.z1, -self.z2, -self.z3)

    def __mul__(self, other):
        # i*j = k, j*k = i, k*i = j, anti-commuting
        if isinstance(other, Quaternion):
            a, b, c, d = self.components()
            e, f, g, h = other.components()
            return Quaternion(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g + c * e + d * f - b * h,
                a * h + d * e + b * g - c * f,
            )
        if isinstance(other, _SCALAR_TYPES):
            return Quaternion(self.z0 * other, self.z1 * other, self.z2 * other, self.z3 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return Quaternion(other * self.z0, other * self.z1, other * self.z2, other * self.z3)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.z0, -self.z1, -self.z2, -self.z3)

    def norm_sq(self):
        """z * conj(z) = z0^2 + z1^2 + z2^2 + z3^2, as a scalar."""
        a, b, c, d = self.components()
        return a * a + b * b + c * c + d * d

    def __bool__(self):
        return bool(self.z0 or self.z1 or self.z2 or self.z3)

    def __str__(self):
        return render_terms(zip(self.components(), ("", "i", "j", "k")))


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    if not isinstance(x, Quaternion) or not isinstance(y, Quaternion):
        raise TypeError("quat_mul expects two Quaternion values")
    return x * y


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def quat_norm_sq(q: Quaternion):
    return q.norm_sq()


QONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
