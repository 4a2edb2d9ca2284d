"""
Auditing printed identities mechanically
========================================

Each identity is checked on a window of indices with two independent
pipelines: the left side only ever runs the recurrence, the right side only
ever evaluates closed forms.  A report is VERIFIED, REFUTED with a first
counterexample, or UNEVALUABLE when the needed surd does not exist.
"""

from hybridquat import audit_all, check_cassini, reports_to_json

reports = audit_all((-10, 30))

for r in reports:
    print(f"{r.identity_id:18s} {r.sequence.label():28s} {r.status_label()}")

print("################")

# the refuted ones come with an exact witness, not a float residual
for r in reports:
    if r.status == "REFUTED":
        f = r.first_failure
        print(f"{r.identity_id}: fails first at n = {f.n}")
        print("  lhs      =", f.lhs)
        print("  rhs      =", f.rhs)
        print("  residual =", f.residual)

print("################")

# the same reports serialize to JSON for tooling; shown here for Cassini
print(reports_to_json(check_cassini((0, 5))))
