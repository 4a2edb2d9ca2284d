"""Mechanical identity audit over exact arithmetic.

Every identity is checked index by index across an inclusive span of
integers.  Left-hand sides are always built from recurrence lifts (plain
rationals); right-hand sides follow the claimed closed forms, over
Q(sqrt(D)) where they call for roots.  The two pipelines never share
code paths, so an agreement is genuine confirmation and a disagreement
produces an exact witness: the smallest failing index together with
both values and their difference in the canonical 16-term rendering.

A claim whose right-hand side cannot even be evaluated (rational roots
where a surd is required, or two incompatible surds in one expression)
is reported as UNEVALUABLE with the offending error rather than as a
verdict either way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MixedDiscriminant, RationalRoots, RepeatedRoot
from .hybrid import Hybrid
from .hybrid_quaternion import HybridQuaternion
from .scalars import QuadExt
from .sequences import (
    FERMAT,
    FIBONACCI,
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    LUCAS,
    MERSENNE,
    PELL,
    PELL_LUCAS,
    HoradamParams,
    binet_data,
    binet_hybrid_quaternion,
    generalized_fibonacci,
    generalized_lucas,
    horadam,
    lift_hybrid,
    lift_hybrid_quaternion,
    lift_quaternion,
)

DEFAULT_SPAN = (-10, 30)

VERIFIED = "VERIFIED"
REFUTED = "REFUTED"
UNEVALUABLE = "UNEVALUABLE"

# report order for Thm 2.1: the two generalized families first, sampled
# at (p, q) = (3, -1), then the eight named sequences
AUDIT_SEQUENCES = (
    generalized_fibonacci(3, -1),
    generalized_lucas(3, -1),
    FIBONACCI,
    LUCAS,
    PELL,
    PELL_LUCAS,
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    MERSENNE,
    FERMAT,
)


@dataclass(frozen=True)
class FirstFailure:
    n: int
    lhs: str
    rhs: str
    residual: str


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    sequence: object  # SequenceId or HoradamParams
    span: tuple
    status: str
    error: str | None = None
    first_failure: FirstFailure | None = None

    def status_label(self) -> str:
        if self.status == UNEVALUABLE:
            return f"{UNEVALUABLE}({self.error})"
        return self.status

    def to_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            failure = {
                "n": self.first_failure.n,
                "lhs": self.first_failure.lhs,
                "rhs": self.first_failure.rhs,
                "residual": self.first_failure.residual,
            }
        return {
            "identity": self.identity_id,
            "sequence": self.sequence.label(),
            "range": [self.span[0], self.span[1]],
            "status": self.status_label(),
            "first_failure": failure,
        }


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def _validate_span(span) -> tuple:
    lo, hi = span
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise TypeError("span bounds must be integers")
    if lo > hi:
        raise ValueError(f"empty span [{lo}, {hi}]")
    return lo, hi


def _sign(n: int) -> int:
    return 1 if n % 2 == 0 else -1


def _scan(identity_id, sequence, span, values_fn) -> IdentityReport:
    """Evaluate values_fn at every index; adjacent values must agree.

    values_fn(n) returns two or more HybridQuaternion values forming a
    claimed chain of equalities (lhs = rhs1 = rhs2 ...).  The first
    failing adjacent pair at the smallest failing n is the witness.
    """
    lo, hi = _validate_span(span)
    for n in range(lo, hi + 1):
        values = values_fn(n)
        for left, right in zip(values, values[1:]):
            if left != right:
                return IdentityReport(
                    identity_id,
                    sequence,
                    (lo, hi),
                    REFUTED,
                    first_failure=FirstFailure(
                        n, str(left), str(right), str(left - right)
                    ),
                )
    return IdentityReport(identity_id, sequence, (lo, hi), VERIFIED)


def _unevaluable(identity_id, sequence, span, exc) -> IdentityReport:
    lo, hi = _validate_span(span)
    return IdentityReport(
        identity_id, sequence, (lo, hi), UNEVALUABLE, error=type(exc).__name__
    )


# -- Binet forms ------------------------------------------------------------


def check_binet(seq, span=DEFAULT_SPAN) -> IdentityReport:
    """Recurrence lift against the Q(sqrt(D)) closed form, coefficientwise."""
    _validate_span(span)
    try:
        binet_data(seq)
    except (RationalRoots, RepeatedRoot) as exc:
        return _unevaluable("Thm2.1", seq, span, exc)
    return _scan(
        "Thm2.1",
        seq,
        span,
        lambda n: [lift_hybrid_quaternion(seq, n), binet_hybrid_quaternion(seq, n)],
    )


def _check_literal_binet(span=DEFAULT_SPAN) -> list:
    """The two printed Binet displays, with their explicit weights.

    i:  hat(F)_n = (alpha_star alpha_under alpha^n - beta_star beta_under beta^n) / (alpha - beta)
    ii: hat(L)_n = alpha_star alpha_under alpha^n + beta_star beta_under beta^n
    """
    _validate_span(span)
    data = binet_data(FIBONACCI)
    x = HybridQuaternion.from_hybrid(data.alpha_star) * HybridQuaternion.from_quaternion(
        data.alpha_under
    )
    y = HybridQuaternion.from_hybrid(data.beta_star) * HybridQuaternion.from_quaternion(
        data.beta_under
    )
    inv_spread = (data.alpha - data.beta).inverse()
    return [
        _scan(
            "Thm3.4.i",
            FIBONACCI,
            span,
            lambda n: [
                lift_hybrid_quaternion(FIBONACCI, n),
                inv_spread * (data.alpha ** n * x - data.beta ** n * y),
            ],
        ),
        _scan(
            "Thm3.4.ii",
            LUCAS,
            span,
            lambda n: [
                lift_hybrid_quaternion(LUCAS, n),
                data.alpha ** n * x + data.beta ** n * y,
            ],
        ),
    ]


# -- Fibonacci hybrid quaternion relations ----------------------------------


def _fib_hat(n: int) -> HybridQuaternion:
    return lift_hybrid_quaternion(FIBONACCI, n)


def _lucas_hat(n: int) -> HybridQuaternion:
    return lift_hybrid_quaternion(LUCAS, n)


def check_fibonacci_relations(span=DEFAULT_SPAN) -> list:
    """Sum recurrence and the two mixed-basis combination claims."""
    _validate_span(span)
    unit = HybridQuaternion.unit

    def combination(n, units):
        # hat(F)_n - u1 hat(F)_{n+1} - u2 hat(F)_{n+2} - u3 hat(F)_{n+3},
        # the unit factors multiplying from the left
        acc = _fib_hat(n)
        for k, u in enumerate(units, start=1):
            acc = acc - u * _fib_hat(n + k)
        return acc

    quat_units = (unit("i", "1"), unit("j", "1"), unit("k", "1"))
    hybrid_units = (unit("1", "hi"), unit("1", "eps"), unit("1", "hh"))

    def breve(n):
        return HybridQuaternion.from_hybrid(lift_hybrid(FIBONACCI, n))

    def lucas_breve(n):
        return HybridQuaternion.from_hybrid(lift_hybrid(LUCAS, n))

    def tilde(n):
        return lift_quaternion(FIBONACCI, n)

    return [
        _scan(
            "Thm3.1.i",
            FIBONACCI,
            span,
            lambda n: [_fib_hat(n) + _fib_hat(n + 1), _fib_hat(n + 2)],
        ),
        _scan(
            "Thm3.1.ii",
            FIBONACCI,
            span,
            lambda n: [
                combination(n, quat_units),
                breve(n) + breve(n + 2) + breve(n + 4) + breve(n + 6),
                lucas_breve(n + 1) + lucas_breve(n + 5),
            ],
        ),
        _scan(
            "Thm3.1.iii",
            FIBONACCI,
            span,
            lambda n: [
                combination(n, hybrid_units),
                HybridQuaternion.from_quaternion(
                    tilde(n) - tilde(n + 2) - 2 * tilde(n + 3) + tilde(n + 6)
                ),
            ],
        ),
    ]


def check_lucas_relations(span=DEFAULT_SPAN) -> list:
    """hat(F) combinations that should reproduce hat(L)."""
    _validate_span(span)
    return [
        _scan(
            "Thm3.2.i",
            FIBONACCI,
            span,
            lambda n: [_fib_hat(n - 1) + _fib_hat(n + 1), _lucas_hat(n)],
        ),
        _scan(
            "Thm3.2.ii",
            FIBONACCI,
            span,
            lambda n: [_fib_hat(n + 2) - _fib_hat(n - 2), _lucas_hat(n)],
        ),
    ]


def check_conjugate_relations(span=DEFAULT_SPAN) -> list:
    """The three conjugate sums; the total-conjugate claim is read two ways.

    The printed right-hand side of the third item switches notation
    between statement (hat) and proof (breve), so each literal reading is
    audited as its own identity.
    """
    _validate_span(span)

    def scalar_tail(n):
        return HybridQuaternion.from_scalar(
            -2 * horadam(FIBONACCI, n) - 8 * horadam(FIBONACCI, n + 1)
        )

    def breve(n):
        return HybridQuaternion.from_hybrid(lift_hybrid(FIBONACCI, n))

    return [
        _scan(
            "Thm3.3.i",
            FIBONACCI,
            span,
            lambda n: [
                _fib_hat(n) + _fib_hat(n).conj_quaternion(),
                breve(n) * 2,
            ],
        ),
        _scan(
            "Thm3.3.ii",
            FIBONACCI,
            span,
            lambda n: [
                _fib_hat(n) + _fib_hat(n).conj_hybrid(),
                HybridQuaternion.from_quaternion(lift_quaternion(FIBONACCI, n)) * 2,
            ],
        ),
        _scan(
            "Thm3.3.iii-hat",
            FIBONACCI,
            span,
            lambda n: [
                _fib_hat(n) + _fib_hat(n).conj_total(),
                scalar_tail(n)
                + 2 * (_fib_hat(n + 1) + _fib_hat(n + 2) + _fib_hat(n + 3)),
            ],
        ),
        _scan(
            "Thm3.3.iii-breve",
            FIBONACCI,
            span,
            lambda n: [
                _fib_hat(n) + _fib_hat(n).conj_total(),
                scalar_tail(n) + 2 * (breve(n + 1) + breve(n + 2) + breve(n + 3)),
            ],
        ),
    ]


# -- Cassini ------------------------------------------------------------------


def _cassini_bracket(p, q):
    """alpha alpha* beta* alpha_under beta_under - beta beta* alpha* beta_under alpha_under,
    factors multiplied strictly in the printed order."""
    data = binet_data(HoradamParams(0, 1, p, q))
    embed_h = HybridQuaternion.from_hybrid
    embed_q = HybridQuaternion.from_quaternion
    first = (
        embed_h(data.alpha_star)
        * embed_h(data.beta_star)
        * embed_q(data.alpha_under)
        * embed_q(data.beta_under)
    )
    second = (
        embed_h(data.beta_star)
        * embed_h(data.alpha_star)
        * embed_q(data.beta_under)
        * embed_q(data.alpha_under)
    )
    return data, data.alpha * first - data.beta * second


def check_cassini(span=DEFAULT_SPAN) -> list:
    """Both Cassini products against the printed closed forms.

    Each closed form is evaluated under both candidate quadratics,
    x^2 - x - 1 = 0 and x^2 - 2x - 1 = 0; the left-hand sides are always
    the Fibonacci and Lucas products.  The sqrt(5) prefactor of the
    second form is literal, so under the second quadratic it cannot be
    combined with sqrt(2) values and that report is UNEVALUABLE.
    """
    _validate_span(span)
    root5 = QuadExt(0, 1, 5)
    reports = []
    for tag, p, q in (("x^2-x-1", 1, -1), ("x^2-2x-1", 2, -1)):
        data, bracket = _cassini_bracket(p, q)
        inv_spread = (data.alpha - data.beta).inverse()
        reports.append(
            _scan(
                f"C1@{tag}",
                FIBONACCI,
                span,
                lambda n, b=bracket, w=inv_spread: [
                    _fib_hat(n + 1) * _fib_hat(n - 1) - _fib_hat(n) * _fib_hat(n),
                    (_sign(n) * w) * b,
                ],
            )
        )
        try:
            scaled = root5 * bracket
        except MixedDiscriminant as exc:
            reports.append(_unevaluable(f"C2@{tag}", LUCAS, span, exc))
            continue
        reports.append(
            _scan(
                f"C2@{tag}",
                LUCAS,
                span,
                lambda n, scaled=scaled: [
                    _lucas_hat(n + 1) * _lucas_hat(n - 1) - _lucas_hat(n) * _lucas_hat(n),
                    _sign(n) * scaled,
                ],
            )
        )
    return reports


# -- entry points ---------------------------------------------------------------


def audit_all(span=DEFAULT_SPAN) -> list:
    """Every identity in the catalog, in a fixed order."""
    _validate_span(span)
    reports = [check_binet(seq, span) for seq in AUDIT_SEQUENCES]
    reports.extend(check_fibonacci_relations(span))
    reports.extend(check_lucas_relations(span))
    reports.extend(check_conjugate_relations(span))
    reports.extend(_check_literal_binet(span))
    reports.extend(check_cassini(span))
    return reports


def _select(checker, identity_id):
    def run(span):
        return [r for r in checker(span) if r.identity_id == identity_id]

    return run


CATALOG = {
    "Thm2.1": lambda span: [check_binet(seq, span) for seq in AUDIT_SEQUENCES],
    "Thm3.1.i": _select(check_fibonacci_relations, "Thm3.1.i"),
    "Thm3.1.ii": _select(check_fibonacci_relations, "Thm3.1.ii"),
    "Thm3.1.iii": _select(check_fibonacci_relations, "Thm3.1.iii"),
    "Thm3.2.i": _select(check_lucas_relations, "Thm3.2.i"),
    "Thm3.2.ii": _select(check_lucas_relations, "Thm3.2.ii"),
    "Thm3.3.i": _select(check_conjugate_relations, "Thm3.3.i"),
    "Thm3.3.ii": _select(check_conjugate_relations, "Thm3.3.ii"),
    "Thm3.3.iii-hat": _select(check_conjugate_relations, "Thm3.3.iii-hat"),
    "Thm3.3.iii-breve": _select(check_conjugate_relations, "Thm3.3.iii-breve"),
    "Thm3.4.i": _select(_check_literal_binet, "Thm3.4.i"),
    "Thm3.4.ii": _select(_check_literal_binet, "Thm3.4.ii"),
    "C1@x^2-x-1": _select(check_cassini, "C1@x^2-x-1"),
    "C2@x^2-x-1": _select(check_cassini, "C2@x^2-x-1"),
    "C1@x^2-2x-1": _select(check_cassini, "C1@x^2-2x-1"),
    "C2@x^2-2x-1": _select(check_cassini, "C2@x^2-2x-1"),
}
