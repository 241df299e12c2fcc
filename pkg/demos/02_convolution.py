#!/usr/bin/env python3
"""The convolution product on equivariant classes.

Reproduces the two-point-orbit square, shows that forgetting the action is
not compatible with convolution, folds orbit powers against their closed
forms, and demonstrates the opaque fallback for pairs without a closed form.
"""

from motivic import (MuClass, assoc_check, chi_c, forget_action, mul, pretty, star,
                     star_power)

one = MuClass.one()
orb2 = MuClass.orbit(2)
orb3 = MuClass.orbit(3)

print("== the orbit square ==")
square = star(orb2, orb2)
print("star(ORB(2), ORB(2)) =", pretty(square))
print("chi_c of it:          ", chi_c(square))
print("forget the action:    ", pretty(forget_action(square)))
defect = forget_action(square) - mul(forget_action(orb2), forget_action(orb2))
print("forgetful defect:     ", pretty(defect), "(nonzero, so forget is not a * -morphism)")

print()
print("== units and scalars ==")
print("star(c, 1) = c:       ", star(orb3, one) == orb3)
print("star(ORB(3), L-1):    ", pretty(star(orb3, MuClass.torus())))

print()
print("== orbit powers against closed forms ==")
for n in (2, 3, 4):
    fold = orb = MuClass.orbit(n)
    for r in range(2, 5):
        fold = star(fold, orb)
        closed = star_power(n, r)
        status = "ok" if fold == closed and chi_c(fold) == n ** r else "MISMATCH"
        print(f"  ORB({n})^*{r}: chi = {chi_c(fold):5d}  fold == closed form: {status}")
print("closed form for ORB(3)^*3:", pretty(star_power(3, 3)))

print()
print("== associativity reports ==")
print("(ORB(2), ORB(2), ORB(2)):", assoc_check(orb2, orb2, orb2))
print("(ORB(2), ORB(3), L-1):   ", assoc_check(orb2, orb3, MuClass.torus()))

print()
print("== pairs without a closed form fall back to opaque classes ==")
mixed = star(orb2, orb3)
print("star(ORB(2), ORB(3)) =", pretty(mixed))
print("chi_c is still multiplicative:", chi_c(mixed) == 6)
