#!/usr/bin/env python3
"""Realizations: Euler characteristics, E-polynomials, and point counts.

chi_c realizes both products; the E-polynomial realizes action-free classes
built from tori, points, and plane Fermat curves; the finite-field oracle
validates the curve data by brute enumeration.
"""

from motivic import (MuClass, chi_c, count_fermat_points, e_polynomial,
                     forget_action, star)

one = MuClass.one()
gm = MuClass.torus()

print("== chi_c ==")
print("chi(L) =", chi_c(MuClass.lefschetz()))
for n in (2, 3, 4):
    print(f"chi(1 - ORB({n})) =", chi_c(one - MuClass.orbit(n)))
print("chi is multiplicative over star: chi(ORB(2) * ORB(2)) =",
      chi_c(star(MuClass.orbit(2), MuClass.orbit(2))))

print()
print("== E-polynomials ==")
print("E(Gm)       =", e_polynomial(gm))
print("E(L^2 + L)  =", e_polynomial(MuClass.lefschetz(2) + MuClass.lefschetz()))
for n in (2, 3, 4):
    curve = MuClass.fermat_trivial(n, 2)
    ep = e_polynomial(curve)
    print(f"E(fer({n},2)) = {ep}   E(1,1) = {ep.evaluate(1, 1)} = chi = {chi_c(curve)}")

print()
print("equivariant classes must forget the action first:")
square = star(MuClass.orbit(2), MuClass.orbit(2))
print("E(forget(ORB(2) * ORB(2))) =", e_polynomial(forget_action(square)))

print()
print("== the point-count oracle ==")
print("fer(2,2) is the circle minus four axis points:")
for q in (5, 7, 9, 11, 13, 25):
    print(f"  #fer(2,2)(F_{q}) = {count_fermat_points(2, 2, q)}")
print("at split primes (q = 1 mod 4) the count equals E at uv = q:")
for q in (5, 13):
    ep = e_polynomial(MuClass.fermat_trivial(2, 2))
    print(f"  q = {q}: count {count_fermat_points(2, 2, q)} vs E = {ep.evaluate(1, q)}")
