"""
Hybrid and quaternion arithmetic, exactly
=========================================

"""

from fractions import Fraction

from hybridquat import EPS, HH, HI, Hybrid, Quaternion, QuadExt

# the three extra units multiply by fixed rules: hi*hi = -1, eps*eps = 0,
# hh*hh = 1, and the mixed products pick up cross terms
print("hi*hi =", HI * HI)
print("eps*eps =", EPS * EPS)
print("hh*hh =", HH * HH)
print("hi*hh =", HI * HH)
print("hh*hi =", HH * HI)

print("################")

z = Hybrid(1, 2, 3, 4)
w = Hybrid(Fraction(1, 2), 0, -1, 1)
print("z =", z)
print("w =", w)
print("z*w =", z * w)
print("w*z =", w * z)

# z times its conjugate collapses to a scalar, the character
print("z*conj(z) =", z * z.conj())
print("character:", z.character())

print("################")

# quaternions follow the usual i, j, k rules and the norm is multiplicative
q = Quaternion(1, 1, 1, 1)
r = Quaternion(2, 0, -1, 3)
print("q*r =", q * r)
print("r*q =", r * q)
print("|q|^2 * |r|^2 =", q.norm_sq() * r.norm_sq())
print("|q*r|^2      =", (q * r).norm_sq())

print("################")

# coefficients can live in a quadratic extension; here the golden ratio
phi = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
print("phi =", phi)
print("phi^2 =", phi * phi)          # equals phi + 1
print("phi^-1 =", phi.inverse())     # equals phi - 1
print("as a hybrid coefficient:", Hybrid(phi, 1, 0, 0) * Hybrid(phi, 1, 0, 0))
