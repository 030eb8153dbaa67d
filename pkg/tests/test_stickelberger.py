from fractions import Fraction

import pytest

from galideal.abelian import ResidueGroup, squares_subgroup, unit_group
from galideal.groupring import GroupRingElement, invert_unit, psi_eval
from galideal.stickelberger import (
    base_change_element,
    complex_conjugation,
    even_extension,
    half_stickelberger,
    include_subgroup,
    quadratic_character,
    ramified_places,
    roots_of_unity_count,
    stickelberger,
    stickelberger_by_characters,
)


def theta(m, r=0):
    return stickelberger(m, ramified_places(m), r).element


def test_theta_mod3():
    t = theta(3, 0)
    g = unit_group(3)
    assert t == GroupRingElement(g, {1: Fraction(1, 6), 2: Fraction(-1, 6)})
    t1 = theta(3, -1)
    assert t1 == GroupRingElement(g, {1: Fraction(1, 12), 2: Fraction(1, 12)})


def test_theta_mod7_frozen():
    t = theta(7, 0)
    g = unit_group(7)
    expected = GroupRingElement(g, {
        1: Fraction(5, 14), 2: Fraction(-1, 14), 3: Fraction(-3, 14),
        4: Fraction(3, 14), 5: Fraction(1, 14), 6: Fraction(-5, 14)})
    assert t == expected


def test_routes_agree():
    for m in [1, 3, 4, 5, 7, 8, 9, 12]:
        s = ramified_places(m)
        for r in [0, -1, -2]:
            assert stickelberger(m, s, r).element == \
                stickelberger_by_characters(m, s, r), (m, r)


def test_minus_eigenspace():
    # c theta = -theta at r = 0 (m > 2); c theta = (-1)^{1-r} theta generally
    for m in [3, 5, 7, 9]:
        g = unit_group(m)
        c = GroupRingElement.basis(g, complex_conjugation(m))
        for r in [0, -1, -2, -3]:
            t = theta(m, r)
            assert c * t == t.scale((-1) ** (1 - r)), (m, r)


def test_half_stickelberger_mod7():
    ht = half_stickelberger(7)
    h = squares_subgroup(7)
    assert h.elements == [1, 2, 4]
    expected = GroupRingElement(h, {
        1: Fraction(5, 14), 2: Fraction(-1, 14), 4: Fraction(3, 14)})
    assert ht == expected


def test_half_stickelberger_integrality():
    for m in [7, 11, 19, 23, 49]:
        ht = half_stickelberger(m)
        mu = roots_of_unity_count(m)
        for c in ht.coeffs.values():
            assert (mu * c).denominator == 1, m


def test_half_identity_one_minus_c():
    # (1 - c) theta-tilde = theta, inside Q[G]
    for m in [7, 11, 19, 23]:
        g = unit_group(m)
        ht = include_subgroup(half_stickelberger(m), g)
        c = GroupRingElement.basis(g, complex_conjugation(m))
        lhs = ht - c * ht
        assert lhs == theta(m, 0), m


def test_half_stickelberger_validations():
    with pytest.raises(ValueError):
        half_stickelberger(7, subgroup=unit_group(7))  # index 1
    with pytest.raises(ValueError):
        # index-2 subgroup of (Z/8)* containing -1 = 7
        half_stickelberger(8, subgroup=ResidueGroup(8, [1, 7]))


def test_quadratic_character_cuts_out_imaginary_field():
    g = unit_group(7)
    rho = quadratic_character(g)
    assert rho.is_odd()  # 7 = 3 mod 4: the field is imaginary
    h = squares_subgroup(7)
    assert all(rho(a) == 1 for a in h.elements)


def test_even_extension_bijection():
    g = unit_group(11)
    h = squares_subgroup(11)
    seen = set()
    for eta in h.characters():
        psi = even_extension(g, h, eta)
        assert psi.is_even()
        seen.add(psi)
    assert len(seen) == h.order


def test_l_value_equals_pairing_identity():
    # L_S(0, rho psi) = 2 psi|_H(tau theta-tilde) for every even psi
    from galideal.dirichlet import l_value

    for ell in [7, 11]:
        g = unit_group(ell)
        h = squares_subgroup(ell)
        rho = quadratic_character(g)
        tt = half_stickelberger(ell).tau()
        for eta in h.characters():
            psi = even_extension(g, h, eta)
            lhs = l_value(0, rho * psi, ramified_places(ell))
            rhs = 2 * psi_eval(tt, eta)
            assert lhs == rhs, (ell, eta.index)


def test_base_change_element():
    for ell in [7, 11]:
        b = base_change_element(ell)
        tb_inv = invert_unit(b.tau())
        assert tb_inv == half_stickelberger(ell).scale(2), ell


def test_base_change_element_frozen_mod7():
    # tau(B)^{-1} = (5 s1 - s2 + 3 s4)/7
    b = base_change_element(7)
    h = squares_subgroup(7)
    expected_inv = GroupRingElement(h, {
        1: Fraction(5, 7), 2: Fraction(-1, 7), 4: Fraction(3, 7)})
    assert invert_unit(b.tau()) == expected_inv
