"""
Closed forms over Q(sqrt(D)) with zero rounding
===============================================

"""

from hybridquat import (
    FIBONACCI,
    LUCAS,
    MERSENNE,
    PELL,
    RationalRoots,
    binet_data,
    binet_hybrid_quaternion,
    binet_scalar,
    horadam,
    lift_hybrid_quaternion,
)

# the characteristic roots of x^2 - px + q, kept symbolic
data = binet_data(FIBONACCI)
print("alpha =", data.alpha)
print("beta  =", data.beta)
print("A =", data.A, "  B =", data.B)
print("alpha* =", data.alpha_star)

print("################")

# A*alpha^n + B*beta^n is computed in Q(sqrt(5)); the surd part cancels
# exactly and the rational part is the integer term
for n in (10, 25, -7):
    closed = binet_scalar(FIBONACCI, n)
    print(f"F({n}) closed form = {closed}, recurrence = {horadam(FIBONACCI, n)}")

print("################")

# the same equality holds after lifting all the way to 16 dimensions
for seq, name in ((FIBONACCI, "fibonacci"), (LUCAS, "lucas"), (PELL, "pell")):
    agree = all(
        binet_hybrid_quaternion(seq, n) == lift_hybrid_quaternion(seq, n)
        for n in range(-10, 41)
    )
    print(f"{name}: closed form == recurrence on [-10, 40]?", agree)

# Mersenne has rational roots (1 and 2), so there is no surd to work in
try:
    binet_data(MERSENNE)
except RationalRoots as exc:
    print("mersenne:", exc)
