#!/usr/bin/env python3
"""Normal forms in the equivariant class algebra.

Builds classes from raw factor expressions and shows what the rewrite rules
do to them: orbit fusion, torus trivialization, the quadratic Fermat
collapse, and the forgetful map.
"""

from motivic import MuClass, class_to_json, forget_action, mul, normalize, pretty
from motivic.jsonio import dumps
from motivic.laurent import LaurentInt

one = MuClass.one()
L = MuClass.lefschetz()

print("== atoms and coefficients ==")
print("the point class:        ", pretty(one))
print("the Lefschetz class:    ", pretty(L))
print("an orbit of size 4:     ", pretty(MuClass.orbit(4)))
print("L^-2 times an orbit:    ", pretty(MuClass.orbit(3) * LaurentInt.monomial(-2)))

print()
print("== rewrite rules ==")
print("a torus with mu_2-multiplication action trivializes:")
print("   GM(2) ->", pretty(MuClass.torus(2)))
print("orbit products fuse (diagonal action on the product):")
print("   ORB(2) * ORB(2) ->", pretty(mul(MuClass.orbit(2), MuClass.orbit(2))))
print("   ORB(2) * ORB(3) ->", pretty(mul(MuClass.orbit(2), MuClass.orbit(3))))
print("the quadratic Fermat pair collapses:")
print("   FER(2,2) ->", pretty(MuClass.fermat(2, 2)))
print("   fer(2,2) ->", pretty(MuClass.fermat_trivial(2, 2)))
print("   FER(2,3) ->", pretty(MuClass.fermat(2, 3)))
print("one-variable Fermat loci are just points:")
print("   fer(5,1) ->", pretty(MuClass.fermat_trivial(5, 1)))
print("higher Fermat atoms are irreducible and stay formal:")
print("   L * fer(3,2) ->", pretty(mul(L, MuClass.fermat_trivial(3, 2))))

print()
print("== the forgetful map ==")
square = normalize([(LaurentInt({1: 1, 0: -1}), []), (2, [("orb", 2)])])
print("class:          ", pretty(square))
print("forget action:  ", pretty(forget_action(square)))

print()
print("== wire format ==")
print(dumps(class_to_json(square)))
