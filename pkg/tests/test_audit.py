"""Identity auditor: golden verdicts, witnesses, report plumbing.

The expected statuses below were fixed by hand-expanding each identity
at small indices with the unit tables before the auditor existed; the
auditor must reproduce them exactly.
"""

import json

import pytest

from hybridquat.audit import (
    AUDIT_SEQUENCES,
    CATALOG,
    DEFAULT_SPAN,
    IdentityReport,
    audit_all,
    check_binet,
    check_cassini,
    check_conjugate_relations,
    check_fibonacci_relations,
    check_lucas_relations,
    reports_to_json,
)
from hybridquat.sequences import FIBONACCI, JACOBSTHAL, MERSENNE, horadam

SPAN = (-10, 30)

# identity id -> status expected over SPAN; Thm2.1 is per sequence
GOLDEN_STATUSES = {
    "Thm3.1.i": "VERIFIED",
    "Thm3.1.ii": "VERIFIED",
    "Thm3.1.iii": "REFUTED",
    "Thm3.2.i": "VERIFIED",
    "Thm3.2.ii": "VERIFIED",
    "Thm3.3.i": "VERIFIED",
    "Thm3.3.ii": "VERIFIED",
    "Thm3.3.iii-hat": "REFUTED",
    "Thm3.3.iii-breve": "REFUTED",
    "Thm3.4.i": "VERIFIED",
    "Thm3.4.ii": "VERIFIED",
    "C1@x^2-x-1": "VERIFIED",
    "C2@x^2-x-1": "REFUTED",
    "C1@x^2-2x-1": "REFUTED",
    "C2@x^2-2x-1": "UNEVALUABLE(MixedDiscriminant)",
}

GOLDEN_BINET = {
    "GeneralizedFibonacci(3,-1)": "VERIFIED",
    "GeneralizedLucas(3,-1)": "VERIFIED",
    "Fibonacci": "VERIFIED",
    "Lucas": "VERIFIED",
    "Pell": "VERIFIED",
    "PellLucas": "VERIFIED",
    "Jacobsthal": "UNEVALUABLE(RationalRoots)",
    "JacobsthalLucas": "UNEVALUABLE(RationalRoots)",
    "Mersenne": "UNEVALUABLE(RationalRoots)",
    "Fermat": "VERIFIED",
}


@pytest.fixture(scope="module")
def full_audit():
    return audit_all(SPAN)


def test_audit_all_cardinality_and_order(full_audit):
    assert len(full_audit) == 25
    ids = [r.identity_id for r in full_audit]
    assert ids[:10] == ["Thm2.1"] * 10
    assert ids[10:] == [
        "Thm3.1.i",
        "Thm3.1.ii",
        "Thm3.1.iii",
        "Thm3.2.i",
        "Thm3.2.ii",
        "Thm3.3.i",
        "Thm3.3.ii",
        "Thm3.3.iii-hat",
        "Thm3.3.iii-breve",
        "Thm3.4.i",
        "Thm3.4.ii",
        "C1@x^2-x-1",
        "C2@x^2-x-1",
        "C1@x^2-2x-1",
        "C2@x^2-2x-1",
    ]


def test_golden_statuses(full_audit):
    for report in full_audit[10:]:
        assert report.status_label() == GOLDEN_STATUSES[report.identity_id], (
            report.identity_id
        )


def test_golden_binet_statuses(full_audit):
    for report in full_audit[:10]:
        expected = GOLDEN_BINET[report.sequence.label()]
        assert report.status_label() == expected, report.sequence.label()


def test_verified_reports_carry_no_witness(full_audit):
    for report in full_audit:
        if report.status == "VERIFIED":
            assert report.first_failure is None
        elif report.status == "REFUTED":
            assert report.first_failure is not None


def test_thm31iii_witness():
    report = check_fibonacci_relations((0, 50))[2]
    assert report.status == "REFUTED"
    failure = report.first_failure
    assert failure.n == 0
    # hand expansion at n = 0: lhs is the pure quaternion (-11,-16,-27,-43),
    # the claimed rhs is (3,6,9,15), so the residual is (-14,-22,-36,-58)
    assert failure.lhs == "-11*1*1 - 16*i*1 - 27*j*1 - 43*k*1"
    assert failure.rhs == "3*1*1 + 6*i*1 + 9*j*1 + 15*k*1"
    assert failure.residual == "-14*1*1 - 22*i*1 - 36*j*1 - 58*k*1"


def test_refuted_first_failure_is_span_start(full_audit):
    # every refuted identity here fails at every index, so the witness
    # must sit at the very start of the span
    for report in full_audit:
        if report.status == "REFUTED":
            assert report.first_failure.n == SPAN[0], report.identity_id


def test_cassini_c2_witness_sign_alternates():
    reports = {r.identity_id: r for r in check_cassini((0, 10))}
    r = reports["C2@x^2-x-1"]
    assert r.status == "REFUTED"
    assert r.first_failure.n == 0
    # residual coefficient of 1*hi at n = 0 is -40; parity flips the
    # whole residual, so at an odd start the witness leads with +40
    assert r.first_failure.residual.startswith("-40*1*hi")
    shifted = {r.identity_id: r for r in check_cassini((1, 10))}
    assert shifted["C2@x^2-x-1"].first_failure.residual.startswith("40*1*hi")


def test_scalar_cassini_sanity():
    # F_{n+1} F_{n-1} - F_n^2 = (-1)^n, brute force
    for n in range(1, 101):
        lhs = horadam(FIBONACCI, n + 1) * horadam(FIBONACCI, n - 1) - horadam(
            FIBONACCI, n
        ) ** 2
        assert lhs == (1 if n % 2 == 0 else -1)


def test_check_binet_single_sequence():
    assert check_binet(FIBONACCI, (-10, 40)).status == "VERIFIED"
    report = check_binet(MERSENNE, (0, 5))
    assert report.status == "UNEVALUABLE"
    assert report.error == "RationalRoots"
    assert report.first_failure is None
    assert check_binet(JACOBSTHAL, (0, 5)).status_label() == "UNEVALUABLE(RationalRoots)"


def test_single_point_span():
    reports = check_lucas_relations((0, 0))
    assert [r.status for r in reports] == ["VERIFIED", "VERIFIED"]
    assert reports[0].span == (0, 0)


def test_empty_span_rejected():
    with pytest.raises(ValueError):
        audit_all((1, 0))
    with pytest.raises(ValueError):
        check_fibonacci_relations((5, -5))


def test_determinism(full_audit):
    again = audit_all(SPAN)
    assert again == full_audit
    assert reports_to_json(again) == reports_to_json(full_audit)


def test_report_json_schema(full_audit):
    parsed = json.loads(reports_to_json(full_audit))
    assert len(parsed) == 25
    for record in parsed:
        assert set(record) == {"identity", "sequence", "range", "status", "first_failure"}
        assert record["range"] == [-10, 30]
        if record["first_failure"] is not None:
            assert set(record["first_failure"]) == {"n", "lhs", "rhs", "residual"}
            assert isinstance(record["first_failure"]["n"], int)


def test_sequence_labels_in_reports(full_audit):
    labels = [r.sequence.label() for r in full_audit[:10]]
    assert labels == [s.label() for s in AUDIT_SEQUENCES]
    assert labels[0] == "GeneralizedFibonacci(3,-1)"


def test_catalog_covers_every_identity(full_audit):
    assert len(CATALOG) == 16
    from_catalog = []
    for key, run in CATALOG.items():
        reports = run(SPAN)
        assert reports, key
        for r in reports:
            assert r.identity_id == key
        from_catalog.extend(reports)
    assert {r.identity_id for r in from_catalog} == {r.identity_id for r in full_audit}


def test_default_span():
    assert DEFAULT_SPAN == (-10, 30)


def test_report_is_frozen(full_audit):
    with pytest.raises(AttributeError):
        full_audit[0].status = "REFUTED"
