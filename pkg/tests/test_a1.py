from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from motivic import (A1Class, MuClass, ValidationError, a1_star, a1_unit, chi_c,
                     chi_of_a1, epsilon_push, star)
from motivic.a1 import as_point

from conftest import mu_classes

ONE = MuClass.one()
L = MuClass.lefschetz()


def orb(d):
    return MuClass.orbit(d)


def a1_classes():
    pts = st.integers(-2, 2)
    return st.lists(st.tuples(pts, mu_classes(max_terms=2)), max_size=2).map(A1Class)


def test_points_parse_exactly():
    assert as_point("3/2") == Fraction(3, 2)
    assert as_point(-4) == Fraction(-4)
    assert as_point("-7/3") + as_point("1/3") == Fraction(-2)
    with pytest.raises(ValidationError):
        as_point("1/0")
    with pytest.raises(ValidationError):
        as_point("x")


def test_zero_fibers_are_dropped():
    f = A1Class({0: ONE - ONE, 1: L})
    assert f.support() == ((Fraction(1), L),)


def test_star_of_orbit_fibers_at_zero():
    f = A1Class({0: orb(2)})
    assert a1_star(f, f) == A1Class({0: star(orb(2), orb(2))})


def test_unit_fiber_translates():
    f = A1Class({1: ONE})
    g = A1Class({2: orb(3) + L})
    assert a1_star(f, g) == A1Class({3: orb(3) + L})


def test_fractional_points_add_exactly():
    f = A1Class({"1/3": ONE})
    g = A1Class({"2/3": ONE, "1/3": ONE})
    assert a1_star(f, g) == A1Class({1: ONE, "2/3": ONE})


def test_double_sum_expansion():
    # {0 -> 1, 1 -> 1} star itself, expanded by hand
    f = A1Class({0: ONE, 1: ONE})
    assert a1_star(f, f) == A1Class({0: ONE, 1: 2 * ONE, 2: ONE})


def test_unit_element():
    u = a1_unit()
    assert u.fiber(0) == ONE
    assert chi_of_a1(u) == 1
    for f in [A1Class({0: orb(2)}), A1Class({"1/2": L, -3: ONE}), A1Class.zero()]:
        assert a1_star(u, f) == f
        assert a1_star(f, u) == f


def test_epsilon_push_sums_fibers():
    f = A1Class({0: ONE, 5: L})
    assert epsilon_push(f) == ONE + L
    assert epsilon_push(A1Class({0: L})) == L  # the localizing element at 0


def test_epsilon_push_is_a_ring_morphism_on_orbit_fibers():
    f = A1Class({0: orb(2)})
    assert epsilon_push(a1_star(f, f)) == star(epsilon_push(f), epsilon_push(f))


@given(a1_classes(), a1_classes())
def test_a1_star_commutative(f, g):
    assert a1_star(f, g) == a1_star(g, f)


@given(a1_classes(), a1_classes())
def test_epsilon_push_morphism_law(f, g):
    assert epsilon_push(a1_star(f, g)) == star(epsilon_push(f), epsilon_push(g))


@given(a1_classes())
def test_lefschetz_at_zero_scales(f):
    scaled = a1_star(A1Class({0: L}), f)
    expected = A1Class([(p, c * L) for p, c in f.support()])
    assert scaled == expected


@given(a1_classes())
def test_chi_of_a1_is_chi_after_pushforward(f):
    assert chi_of_a1(f) == chi_c(epsilon_push(f))
