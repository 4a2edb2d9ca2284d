"""
Horadam sequences and their algebra lifts
=========================================

A Horadam sequence w(w0,w1;p,q) obeys w_n = p*w_{n-1} - q*w_{n-2}.  A lift
places a window of consecutive terms on the units of a bigger algebra.
"""

from hybridquat import (
    FIBONACCI,
    HoradamParams,
    REGISTRY,
    lift_hybrid,
    lift_hybrid_quaternion,
    lift_quaternion,
    window,
)

for name, seq in REGISTRY.items():
    print(f"{name:17s}", window(seq, 0, 9))

print("################")

# negative indices come from running the recurrence backwards
print("fibonacci on [-8, 8]:", window(FIBONACCI, -8, 8))

# custom parameters work the same way; this one grows like 3^n
custom = HoradamParams(1, 3, 4, 3)
print("w(1,3;4,3) on [0, 7]:", window(custom, 0, 7))

print("################")

n = 5
print("hybrid lift at n=5:    ", lift_hybrid(FIBONACCI, n))
print("quaternion lift at n=5:", lift_quaternion(FIBONACCI, n))

big = lift_hybrid_quaternion(FIBONACCI, n)
print("hybrid-quaternion lift:", big)

# the 16-dimensional lift decomposes either way: four hybrids indexed by
# quaternion units, or four quaternions indexed by hybrid units
for s, part in enumerate(big.as_quaternion_basis()):
    print(f"  quaternion-basis coefficient {s}: {part}")
for t, part in enumerate(big.as_hybrid_basis()):
    print(f"  hybrid-basis coefficient {t}: {part}")
