#!/usr/bin/env python3
"""Nearby fibers, vanishing cycles, and the measure on presentations.

Feeds the engine the resolution combinatorics of the n-th power map and of
the plane cross, checks the Thom-Sebastiani factorization connecting them,
and evaluates the measure on constant and smooth-proper generators.
"""

from motivic import (Constant, MuClass, Resolved, SmoothProper, SNCDatum,
                     Stratum, a1_star, chi_of_a1, nearby_fiber, phi_generator,
                     phi_measure, pretty, ts_check, validate_datum, vanishing_cycles)
from motivic.laurent import LaurentInt

one = MuClass.one()
L = MuClass.lefschetz()
gm = MuClass.torus()


def power_datum(n):
    """One exceptional component of multiplicity n; the fiber is one point."""
    cover = one if n == 1 else MuClass.orbit(n)
    return SNCDatum([("E", n)], [Stratum({"E"}, one, cover, "singular")],
                    MuClass.zero(), one)


cross = SNCDatum(
    [("X", 1), ("Y", 1)],
    [Stratum({"X"}, gm, gm, "regular"),
     Stratum({"Y"}, gm, gm, "regular"),
     Stratum({"X", "Y"}, one, one, "singular")],
    fiber_regular=gm + gm, fiber_singular=one)

print("== the n-th power family ==")
for n in (1, 2, 3, 6):
    d = power_datum(n)
    assert validate_datum(d) == []
    phi, phi_reg = vanishing_cycles(d)
    measure = phi_generator(Resolved([(0, d)]))
    print(f"  n={n}: nearby = {pretty(nearby_fiber(d)):8s} phi = {pretty(phi):12s}"
          f" measure = {pretty(measure):20s} chi = {chi_of_a1(measure)}")

print()
print("== the cross ==")
assert validate_datum(cross) == []
phi, phi_reg = vanishing_cycles(cross)
print("nearby fiber:", pretty(nearby_fiber(cross)))
print("phi:         ", pretty(phi), " phi_regular:", pretty(phi_reg))

print()
print("== Thom-Sebastiani: square convolved with square is the cross ==")
square = Resolved([(0, power_datum(2))])
print("measure of the square:", pretty(phi_generator(square)))
lhs = a1_star(phi_generator(square), phi_generator(square))
print("its star-square:      ", pretty(lhs))
print("ts_check report:      ", ts_check(square, square, Resolved([(0, cross)])))

print()
print("== the measure on presentations ==")
print("smooth proper family:      ", pretty(phi_measure(((1, SmoothProper()),))))
print("unit presentation:         ", pretty(phi_measure(((1, Constant(0, one)),))))
plane = MuClass([(LaurentInt({2: 1, 1: 1, 0: 1}), [])])
blown = MuClass([(LaurentInt({2: 1, 1: 2, 0: 1}), [])])
lhs = phi_measure(((1, Constant(0, plane)), (-1, Constant(0, one))))
rhs = phi_measure(((1, Constant(0, blown)), (-1, Constant(0, L + one))))
print("blow-up consistency:       ", pretty(lhs), "==", pretty(rhs), "->", lhs == rhs)
print("relative Lefschetz class:  ",
      pretty(phi_measure(((1, SmoothProper()), (-1, SmoothProper())))))
