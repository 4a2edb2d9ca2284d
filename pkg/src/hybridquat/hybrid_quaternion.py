"""The 16-dimensional algebra of hybrid quaternions.

An element is stored as 16 coefficients on the product basis
{1, i, j, k} x {1, hi, eps, hh}, flat index 4*s + t for quaternion unit
s and hybrid unit t, in the canonical order

    (1,1), (1,hi), (1,eps), (1,hh), (i,1), ..., (k,hh).

Quaternion units commute with hybrid units, so the product of two basis
elements factors as (u_s * u_t) x (v_a * v_b) and the whole
multiplication is driven by one precomputed 256-entry table of signed
structure constants.  The two 4-coefficient presentations (four hybrid
coefficients on the quaternion units, four quaternion coefficients on
the hybrid units) are views over the same flat storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hybrid import EPS, HH, HI, ONE, Hybrid, render_coeff
from .quaternion import I, J, K, QONE, Quaternion
from .scalars import QuadExt, common_discriminant, parse_scalar, split_terms

_SCALAR_TYPES = (int, Fraction, QuadExt)

QUAT_UNITS = ("1", "i", "j", "k")
HYBRID_UNITS = ("1", "hi", "eps", "hh")

CANONICAL_PAIRS = tuple((u, v) for u in QUAT_UNITS for v in HYBRID_UNITS)
COLUMN_NAMES = tuple(f"c_{u}_{v}" for u, v in CANONICAL_PAIRS)

_QIDX = {name: s for s, name in enumerate(QUAT_UNITS)}
_HIDX = {name: t for t, name in enumerate(HYBRID_UNITS)}


def _build_structure():
    # read both unit tables off the 4-dimensional algebras themselves so
    # there is exactly one authoritative copy of each multiplication rule
    quat_units = (QONE, I, J, K)
    hybrid_units = (ONE, HI, EPS, HH)
    quat_table = [
        [(p * q).components() for q in quat_units] for p in quat_units
    ]
    hybrid_table = [
        [(x * y).components() for y in hybrid_units] for x in hybrid_units
    ]
    structure: list[list[tuple[tuple[int, int], ...]]] = []
    for left in range(16):
        s, a = divmod(left, 4)
        row = []
        for right in range(16):
            t, b = divmod(right, 4)
            entries = []
            for r, qc in enumerate(quat_table[s][t]):
                if not qc:
                    continue
                for m, hc in enumerate(hybrid_table[a][b]):
                    if not hc:
                        continue
                    entries.append((4 * r + m, int(qc * hc)))
            row.append(tuple(entries))
        structure.append(row)
    return structure


_STRUCTURE = _build_structure()


@dataclass(frozen=True)
class HybridQuaternion:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != 16:
            raise ValueError(f"need 16 coefficients, got {len(coeffs)}")
        lifted = []
        for v in coeffs:
            if not isinstance(v, _SCALAR_TYPES):
                raise TypeError(f"coefficient of bad type {type(v).__name__}")
            lifted.append(Fraction(v) if isinstance(v, int) else v)
        object.__setattr__(self, "coeffs", tuple(lifted))
        common_discriminant(self.coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "HybridQuaternion":
        return cls((0,) * 16)

    @classmethod
    def from_scalar(cls, s) -> "HybridQuaternion":
        return cls((s,) + (0,) * 15)

    @classmethod
    def from_hybrid(cls, z: Hybrid) -> "HybridQuaternion":
        """Embed z on the quaternion-scalar row: 1 x z."""
        return cls(z.components() + (0,) * 12)

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "HybridQuaternion":
        """Embed q on the hybrid-scalar column: q x 1."""
        coeffs = [0] * 16
        for s, value in enumerate(q.components()):
            coeffs[4 * s] = value
        return cls(tuple(coeffs))

    @classmethod
    def from_quaternion_basis(cls, h0: Hybrid, h1: Hybrid, h2: Hybrid, h3: Hybrid):
        """Assemble from four hybrid coefficients of 1, i, j, k."""
        coeffs = []
        for h in (h0, h1, h2, h3):
            coeffs.extend(h.components())
        return cls(tuple(coeffs))

    @classmethod
    def from_hybrid_basis(cls, q0: Quaternion, q1: Quaternion, q2: Quaternion, q3: Quaternion):
        """Assemble from four quaternion coefficients of 1, hi, eps, hh."""
        coeffs = [0] * 16
        for t, q in enumerate((q0, q1, q2, q3)):
            for s, value in enumerate(q.components()):
                coeffs[4 * s + t] = value
        return cls(tuple(coeffs))

    @classmethod
    def unit(cls, u: str, v: str) -> "HybridQuaternion":
        coeffs = [0] * 16
        coeffs[4 * _QIDX[u] + _HIDX[v]] = 1
        return cls(tuple(coeffs))

    # -- decompositions ---------------------------------------------------

    def as_quaternion_basis(self) -> tuple:
        """The four hybrid coefficients of 1, i, j, k."""
        c = self.coeffs
        return tuple(Hybrid(*c[4 * s : 4 * s + 4]) for s in range(4))

    def as_hybrid_basis(self) -> tuple:
        """The four quaternion coefficients of 1, hi, eps, hh."""
        c = self.coeffs
        return tuple(Quaternion(*(c[4 * s + t] for s in range(4))) for t in range(4))

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HybridQuaternion):
            return NotImplemented
        return HybridQuaternion(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if not isinstance(other, HybridQuaternion):
            return NotImplemented
        return HybridQuaternion(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return HybridQuaternion(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, HybridQuaternion):
            acc = [Fraction(0)] * 16
            for left, xa in enumerate(self.coeffs):
                if not xa:
                    continue
                row = _STRUCTURE[left]
                for right, yb in enumerate(other.coeffs):
                    if not yb:
                        continue
                    p = xa * yb
                    for target, sign in row[right]:
                        acc[target] = acc[target] + sign * p
            return HybridQuaternion(tuple(acc))
        if isinstance(other, _SCALAR_TYPES):
            return HybridQuaternion(tuple(a * other for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return HybridQuaternion(tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __pow__(self, exponent: int) -> "HybridQuaternion":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("the algebra has zero divisors; no negative powers")
        result = HybridQuaternion.from_scalar(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- conjugates ---------------------------------------------------------

    def conj_quaternion(self) -> "HybridQuaternion":
        """Negate every coefficient with quaternion unit i, j or k."""
        return HybridQuaternion(
            tuple(c if flat < 4 else -c for flat, c in enumerate(self.coeffs))
        )

    def conj_hybrid(self) -> "HybridQuaternion":
        """Negate every coefficient with hybrid unit hi, eps or hh."""
        return HybridQuaternion(
            tuple(-c if flat % 4 else c for flat, c in enumerate(self.coeffs))
        )

    def conj_total(self) -> "HybridQuaternion":
        """Negate coefficients where exactly one unit factor is non-trivial."""
        return self.conj_quaternion().conj_hybrid()

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __str__(self):
        out: list[str] = []
        for (u, v), value in zip(CANONICAL_PAIRS, self.coeffs):
            if not value:
                continue
            sign, body = render_coeff(value, f"{u}*{v}")
            if not out:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out) if out else "0"


# -- scalar / vector presentation -----------------------------------------


@dataclass(frozen=True)
class ScalarVectorForm:
    scalar_part: Hybrid
    vector_part: tuple  # three Hybrid values, the i, j, k coefficients


def scalar_vector_form(x: HybridQuaternion) -> ScalarVectorForm:
    h0, h1, h2, h3 = x.as_quaternion_basis()
    return ScalarVectorForm(h0, (h1, h2, h3))


def hq_dot(u: tuple, v: tuple) -> Hybrid:
    """Sum of componentwise hybrid products, left factors from u."""
    acc = Hybrid.zero()
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def hq_cross(u: tuple, v: tuple) -> tuple:
    """Hybrid cross product; within each term the u factor stays left."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def mul_via_scalar_vector(x: HybridQuaternion, y: HybridQuaternion) -> HybridQuaternion:
    """Product through the scalar/vector presentation.

    xy = S_x S_y - <V_x, V_y> + S_x V_y + V_x S_y + V_x x V_y, with every
    hybrid product keeping the x-side factor on the left (hybrid
    coefficients do not commute, so the order is part of the formula).
    """
    fx, fy = scalar_vector_form(x), scalar_vector_form(y)
    sx, vx = fx.scalar_part, fx.vector_part
    sy, vy = fy.scalar_part, fy.vector_part
    scalar = sx * sy - hq_dot(vx, vy)
    cross = hq_cross(vx, vy)
    vector = tuple(sx * vy[i] + vx[i] * sy + cross[i] for i in range(3))
    return HybridQuaternion.from_quaternion_basis(scalar, *vector)


def hq_mul(x: HybridQuaternion, y: HybridQuaternion) -> HybridQuaternion:
    if not isinstance(x, HybridQuaternion) or not isinstance(y, HybridQuaternion):
        raise TypeError("hq_mul expects two HybridQuaternion values")
    return x * y


# -- parsing ---------------------------------------------------------------


def _split_factors(body: str) -> list[str]:
    factors: list[str] = []
    depth, start = 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            factors.append(body[start:i].strip())
            start = i + 1
    factors.append(body[start:].strip())
    return factors


def parse_hybrid_quaternion(text: str) -> HybridQuaternion:
    """Parse the canonical 16-term rendering "coeff*u*v + ...".

    Every term names its quaternion and hybrid unit explicitly, including
    the trivial ones ("5*1*1", "3*1*hi").  Repeated terms accumulate.
    """
    coeffs = [Fraction(0)] * 16
    for sign, body in split_terms(text):
        if body == "0":
            continue
        factors = _split_factors(body)
        if len(factors) < 3:
            raise ValueError(f"term {body!r} lacks coeff*u*v form")
        u, v = factors[-2], factors[-1]
        if u not in _QIDX or v not in _HIDX:
            raise ValueError(f"unknown unit pair {u!r}, {v!r} in {body!r}")
        value = parse_scalar("*".join(factors[:-2]))
        flat = 4 * _QIDX[u] + _HIDX[v]
        coeffs[flat] = coeffs[flat] + sign * value
    return HybridQuaternion(tuple(coeffs))
