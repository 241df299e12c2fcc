"""The Fermat-loci convolution product on normalized equivariant classes.

Psi is defined on exterior products A x B and extended bilinearly.  On a pair
of atoms the rules are tried in order:

    P1  Laurent coefficients pull out (bilinearity),
    P2  if one atom has only trivial-action factors, Psi(A x B) = A * B,
    P3  trivial-action factors split off multiplicatively from either side,
    P4  Psi(ORB(n) x ORB(n))   = n (L-1) - FER(n,2),
    P5  Psi(FER(n,r) x ORB(n)) = (L-1) fer(n,r-1) ORB(n) + FER(n,r+1)
                                  - (L-1) fer(n,r),      (either order)
    P6  anything else becomes a single opaque atom whose tag records the
        pair and whose chi is the product of the factors' chi values.

The trivial-action factors are the fer atoms; opaque atoms are treated as
equivariant, so a side containing one only short-circuits through P2 when
the *other* side is trivial.  P6 tags are canonical in the unordered pair,
which keeps star exactly commutative.  The convolution is chi_c
multiplicative on all inputs by construction of P6.
"""

from __future__ import annotations

import math
from typing import Iterable

from .classes import FER, Atom, MuClass, atom_mul, factor_str, fer, opq, orb
from .errors import ValidationError
from .laurent import L_MINUS_1, ZERO, LaurentInt
from .realize import factor_chi


class BiClass:
    """Finitely supported map from ordered atom pairs to LaurentInt."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Atom, Atom, LaurentInt]] = ()):
        acc: dict[tuple[Atom, Atom], LaurentInt] = {}
        for a, b, c in terms:
            key = (a, b)
            acc[key] = acc.get(key, ZERO) + c
        self._terms = tuple(sorted(((k, c) for k, c in acc.items() if c),
                                   key=lambda item: item[0]))

    def terms(self) -> tuple[tuple[tuple[Atom, Atom], LaurentInt], ...]:
        return self._terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiClass) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(("BiClass", self._terms))


def tensor(a: MuClass, b: MuClass) -> BiClass:
    """Exterior product A x B of two classes."""
    return BiClass((a1, a2, c1 * c2)
                   for a1, c1 in a.terms() for a2, c2 in b.terms())


def _split_trivial(atom: Atom) -> tuple[Atom, Atom]:
    triv = tuple(f for f in atom if f[0] == "fer")
    core = tuple(f for f in atom if f[0] != "fer")
    return triv, core


def _core_str(core: Atom) -> str:
    return "*".join(factor_str(f) for f in core) if core else "1"


def _psi_atoms(a: Atom, b: Atom) -> MuClass:
    triv_a, core_a = _split_trivial(a)
    triv_b, core_b = _split_trivial(b)
    if not core_a or not core_b:
        # P2: one side acts trivially, convolution degenerates to the product
        product, mult = atom_mul(a, b)
        return MuClass([(mult, product)])
    if core_a == core_b and len(core_a) == 1 and core_a[0][0] == "orb":
        n = core_a[0][1]
        inner = MuClass([(n * L_MINUS_1, ()), (-1, (FER(n, 2),))])
    elif (len(core_a) == 1 and len(core_b) == 1
          and {core_a[0][0], core_b[0][0]} == {"FER", "orb"}):
        f_fer = core_a[0] if core_a[0][0] == "FER" else core_b[0]
        f_orb = core_a[0] if core_a[0][0] == "orb" else core_b[0]
        n, r = f_fer[1], f_fer[2]
        if f_orb[1] == n:
            inner = MuClass([
                (L_MINUS_1, (fer(n, r - 1), orb(n))),
                (1, (FER(n, r + 1),)),
                (-L_MINUS_1, (fer(n, r),)),
            ])
        else:
            inner = _opaque_pair(core_a, core_b)
    else:
        inner = _opaque_pair(core_a, core_b)
    return inner * MuClass([(1, triv_a + triv_b)])


def _opaque_pair(core_a: Atom, core_b: Atom) -> MuClass:
    sa, sb = sorted((_core_str(core_a), _core_str(core_b)))
    chi = math.prod(factor_chi(f) for f in core_a + core_b)
    return MuClass([(1, (opq(f"psi({sa}|{sb})", chi),))])


def psi_pair(p: BiClass) -> MuClass:
    """Psi of an exterior product, by bilinear extension of the pair rules."""
    out = MuClass.zero()
    for (a, b), c in p.terms():
        out = out + _psi_atoms(a, b) * c
    return out


def star(a: MuClass, b: MuClass) -> MuClass:
    """The convolution product on classes over the point."""
    return psi_pair(tensor(a, b))


def star_power(n: int, r: int) -> MuClass:
    """Closed form for the r-fold convolution power of ORB(n)."""
    if not isinstance(n, int) or n < 2 or not isinstance(r, int) or r < 1:
        raise ValidationError(f"star_power wants n >= 2 and r >= 1, got ({n!r}, {r!r})")
    if r == 1:
        return MuClass.orbit(n)
    return MuClass([(L_MINUS_1, (fer(n, r - 1),)), (-1, (FER(n, r),))])


def assoc_check(a: MuClass, b: MuClass, c: MuClass) -> dict:
    """Compare the two fold orders of star on a triple.

    Symbolic comparison is skipped when opaque atoms appear (equality of
    normal forms is then not informative either way); the chi_c comparison
    always runs and must succeed.
    """
    left = star(star(a, b), c)
    right = star(a, star(b, c))
    from .realize import chi_c
    if left.has_opaque() or right.has_opaque():
        symbolic: bool | str = "skipped-opaque"
    else:
        symbolic = left == right
    return {"symbolic": symbolic, "chi_consistent": chi_c(left) == chi_c(right)}
