"""Horadam sequences, their named instances, lifts, and exact Binet forms.

A Horadam sequence w_n(w0, w1; p, q) obeys w_n = p*w_{n-1} - q*w_{n-2}.
Negative indices are reached by solving the recurrence backwards, which
needs q != 0.  Lifts place windows of consecutive terms on the hybrid,
quaternion and hybrid-quaternion bases:

    breve(w)_n = w_n + w_{n+1}*hi + w_{n+2}*eps + w_{n+3}*hh
    tilde(w)_n = w_n + w_{n+1}*i  + w_{n+2}*j   + w_{n+3}*k
    hat(w)_n   = sum over (s, t) of w_{n+s+t} * u_s * v_t

so the quaternion-basis decomposition of hat(w)_n is four consecutive
breve values and the hybrid-basis decomposition is four consecutive
tilde values, simultaneously.

The Binet route goes through the splitting field Q(sqrt(p^2 - 4q)): with
roots alpha, beta and weights A = (w1 - w0*beta)/(alpha - beta),
B = (w0*alpha - w1)/(alpha - beta),

    w_n        = A*alpha^n + B*beta^n
    breve(w)_n = A*alpha_star*alpha^n + B*beta_star*beta^n
    hat(w)_n   = A*alpha_star*alpha_under*alpha^n + B*beta_star*beta_under*beta^n

where alpha_star = 1 + alpha*hi + alpha^2*eps + alpha^3*hh and
alpha_under = 1 + alpha*i + alpha^2*j + alpha^3*k.  Everything is exact;
the surds cancel against the recurrence values coefficient by
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeIndexWithZeroQ
from .hybrid import Hybrid
from .hybrid_quaternion import HybridQuaternion
from .quaternion import Quaternion
from .scalars import QuadExt, _as_fraction, make_quad_roots


@dataclass(frozen=True)
class HoradamParams:
    w0: Fraction
    w1: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("w0", "w1", "p", "q"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    def label(self) -> str:
        return f"w({self.w0},{self.w1};{self.p},{self.q})"


@dataclass(frozen=True)
class SequenceId:
    """A named Horadam instance; the name is part of the identity."""

    name: str
    params: HoradamParams

    def label(self) -> str:
        return self.name


FIBONACCI = SequenceId("Fibonacci", HoradamParams(0, 1, 1, -1))
LUCAS = SequenceId("Lucas", HoradamParams(2, 1, 1, -1))
PELL = SequenceId("Pell", HoradamParams(0, 1, 2, -1))
PELL_LUCAS = SequenceId("PellLucas", HoradamParams(2, 2, 2, -1))
JACOBSTHAL = SequenceId("Jacobsthal", HoradamParams(0, 1, 1, -2))
JACOBSTHAL_LUCAS = SequenceId("JacobsthalLucas", HoradamParams(2, 1, 1, -2))
MERSENNE = SequenceId("Mersenne", HoradamParams(0, 1, 3, 2))
# "Fermat" names w(1,3;3,-2) = 1, 3, 11, 39, ...; these are not the
# classical Fermat numbers 3, 5, 17, 257.  The name is kept as is.
FERMAT = SequenceId("Fermat", HoradamParams(1, 3, 3, -2))


def generalized_fibonacci(p, q) -> SequenceId:
    params = HoradamParams(0, 1, p, q)
    return SequenceId(f"GeneralizedFibonacci({params.p},{params.q})", params)


def generalized_lucas(p, q) -> SequenceId:
    # w1 = p, not 1: the Lucas companion starts 2, p so that A = B = 1
    params = HoradamParams(2, p, p, q)
    return SequenceId(f"GeneralizedLucas({params.p},{params.q})", params)


REGISTRY: dict[str, SequenceId] = {
    "fibonacci": FIBONACCI,
    "lucas": LUCAS,
    "pell": PELL,
    "pell-lucas": PELL_LUCAS,
    "jacobsthal": JACOBSTHAL,
    "jacobsthal-lucas": JACOBSTHAL_LUCAS,
    "mersenne": MERSENNE,
    "fermat": FERMAT,
}


def _params(seq) -> HoradamParams:
    return seq.params if isinstance(seq, SequenceId) else seq


def window(seq, lo: int, hi: int) -> list:
    """Exact values w_lo .. w_hi computed in one pass over the range."""
    params = _params(seq)
    if lo > hi:
        raise ValueError("empty index window")
    if lo < 0 and not params.q:
        raise NegativeIndexWithZeroQ(
            f"{params.label()} cannot run backwards: q = 0"
        )
    values = {0: params.w0, 1: params.w1}
    a, b = params.w0, params.w1
    for k in range(2, hi + 1):
        a, b = b, params.p * b - params.q * a
        values[k] = b
    a, b = params.w0, params.w1
    for k in range(-1, lo - 1, -1):
        a, b = (params.p * a - b) / params.q, a
        values[k] = a
    return [values[k] for k in range(lo, hi + 1)]


def horadam(seq, n: int) -> Fraction:
    return window(seq, n, n)[0]


def lift_hybrid(seq, n: int) -> Hybrid:
    return Hybrid(*window(seq, n, n + 3))


def lift_quaternion(seq, n: int) -> Quaternion:
    return Quaternion(*window(seq, n, n + 3))


def lift_hybrid_quaternion(seq, n: int) -> HybridQuaternion:
    w = window(seq, n, n + 6)
    return HybridQuaternion(tuple(w[s + t] for s in range(4) for t in range(4)))


@dataclass(frozen=True)
class BinetData:
    alpha: QuadExt
    beta: QuadExt
    A: QuadExt
    B: QuadExt
    alpha_star: Hybrid
    beta_star: Hybrid
    alpha_under: Quaternion
    beta_under: Quaternion


def binet_data(seq) -> BinetData:
    params = _params(seq)
    alpha, beta = make_quad_roots(params.p, params.q)
    spread = alpha - beta
    A = (params.w1 - params.w0 * beta) / spread
    B = (params.w0 * alpha - params.w1) / spread
    return BinetData(
        alpha=alpha,
        beta=beta,
        A=A,
        B=B,
        alpha_star=Hybrid(1, alpha, alpha ** 2, alpha ** 3),
        beta_star=Hybrid(1, beta, beta ** 2, beta ** 3),
        alpha_under=Quaternion(1, alpha, alpha ** 2, alpha ** 3),
        beta_under=Quaternion(1, beta, beta ** 2, beta ** 3),
    )


def binet_scalar(seq, n: int) -> QuadExt:
    data = binet_data(seq)
    return data.A * data.alpha ** n + data.B * data.beta ** n


def binet_hybrid(seq, n: int) -> Hybrid:
    data = binet_data(seq)
    return (data.A * data.alpha ** n) * data.alpha_star + (
        data.B * data.beta ** n
    ) * data.beta_star


def binet_quaternion(seq, n: int) -> Quaternion:
    data = binet_data(seq)
    return (data.A * data.alpha ** n) * data.alpha_under + (
        data.B * data.beta ** n
    ) * data.beta_under


def binet_hybrid_quaternion(seq, n: int) -> HybridQuaternion:
    data = binet_data(seq)
    x = HybridQuaternion.from_hybrid(data.alpha_star) * HybridQuaternion.from_quaternion(
        data.alpha_under
    )
    y = HybridQuaternion.from_hybrid(data.beta_star) * HybridQuaternion.from_quaternion(
        data.beta_under
    )
    return (data.A * data.alpha ** n) * x + (data.B * data.beta ** n) * y
