from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from galideal.abelian import FiniteAbelianGroup, squares_subgroup, unit_group
from galideal.dirichlet import PlaceSet
from galideal.groupring import (
    GroupRingElement,
    map_elements,
    psi_eval,
)
from galideal.lattice import from_generators, group_labels, map_image, unit_ideal
from galideal.stickelberger import stickelberger
from galideal.towers import (
    TowerDatum,
    apply_corestriction,
    apply_fixed_point,
    apply_quotient,
    check_quotient_containment,
    coset_section,
    cyclotomic_tower,
    fixed_point_matrix,
    induced_character_sum,
    induced_det_both_routes,
    kernel_idempotent,
    quotient_matrix,
)

C2 = FiniteAbelianGroup((2,))
C4 = FiniteAbelianGroup((4,))
C3 = FiniteAbelianGroup((3,))
C6 = FiniteAbelianGroup((6,))


def c4_over_c2():
    return TowerDatum(C4, C2, lambda e: (e[0] % 2,)).validate()


def test_quotient_map_c4():
    t = c4_over_c2()
    z = GroupRingElement.basis(C4, (1,))
    z2 = GroupRingElement.basis(C4, (2,))
    assert apply_quotient(t, z) == GroupRingElement.basis(C2, (1,))
    assert apply_quotient(t, z2) == GroupRingElement.one(C2)
    # ring homomorphism on a random-ish element
    x = GroupRingElement(C4, {(0,): 2, (1,): Fraction(1, 3)})
    y = GroupRingElement(C4, {(3,): 1, (2,): -1})
    assert apply_quotient(t, x * y) == apply_quotient(t, x) * apply_quotient(t, y)


def test_quotient_carries_stickelberger_down():
    # with S fixed at the top level, pi(theta_9) = theta_3 exactly
    s = PlaceSet([3])
    t = cyclotomic_tower(9, 3)
    top = stickelberger(9, s, 0).element
    down = apply_quotient(t, top)
    assert down == stickelberger(3, s, 0).element
    # and at r = -1, - 2
    for r in [-1, -2]:
        assert apply_quotient(t, stickelberger(9, s, r).element) == \
            stickelberger(3, s, r).element


def test_quotient_of_unit_ideal():
    t = c4_over_c2()
    img = map_image(unit_ideal(C4), quotient_matrix(t), group_labels(C2))
    assert img == unit_ideal(C2)


def test_fixed_point_c4_example():
    t = c4_over_c2()
    zbar = GroupRingElement.basis(C2, (1,))
    lam = apply_fixed_point(t, zbar)
    expected = GroupRingElement(C4, {
        (0,): Fraction(1, 2), (1,): Fraction(1, 2),
        (2,): Fraction(-1, 2), (3,): Fraction(1, 2)})
    assert lam == expected
    assert apply_fixed_point(t, GroupRingElement.one(C2)) == GroupRingElement.one(C4)


def test_fixed_point_is_unital_ring_hom():
    t = TowerDatum(C6, C3, lambda e: (e[0] % 3,)).validate()
    import random

    rng = random.Random(11)
    for _ in range(25):
        x = GroupRingElement(C3, {g: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                  for g in C3.elements})
        y = GroupRingElement(C3, {g: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                  for g in C3.elements})
        assert apply_fixed_point(t, x * y) == \
            apply_fixed_point(t, x) * apply_fixed_point(t, y)
        assert apply_fixed_point(t, x + y) == \
            apply_fixed_point(t, x) + apply_fixed_point(t, y)


def test_fixed_point_character_description():
    # on basis elements q: the chi-component of lambda(q) is chi_1(q) when
    # chi inflates from the quotient (trivial on the kernel) and 1 otherwise
    t = TowerDatum(C6, C3, lambda e: (e[0] % 3,)).validate()
    ker = t.kernel
    for q in C3.elements:
        lam = apply_fixed_point(t, GroupRingElement.basis(C3, q))
        for chi in C6.characters():
            got = psi_eval(lam, chi)
            from galideal.cyclotomic import CyclotomicNumber

            if all(chi(k) == CyclotomicNumber.one() for k in ker):
                # chi = inflation of chi1 with chi1(qbar) = chi(any preimage)
                sec = coset_section(t)
                assert got == chi(sec[q])
            else:
                assert got == CyclotomicNumber.one()


def test_fixed_point_section_independence():
    t = TowerDatum(C6, C3, lambda e: (e[0] % 3,)).validate()
    # computing with an adversarial section must give the same map, since
    # z e depends only on the coset: emulate by translating the canonical
    # section by kernel elements
    e = kernel_idempotent(t)
    sec = coset_section(t)
    for q in C3.elements:
        for k in t.kernel:
            z1 = GroupRingElement.basis(C6, sec[q])
            z2 = GroupRingElement.basis(C6, C6.op(sec[q], k))
            assert z1 * e == z2 * e


def test_fixed_point_fixture_compatibility():
    # for any unit fixture R_K with augmentation 1, setting R_L = lambda(R_K)
    # satisfies lambda(R_K) = (1 - e) + R_L e
    t = c4_over_c2()
    e = kernel_idempotent(t)
    one = GroupRingElement.one(C4)
    rk = GroupRingElement(C2, {(0,): Fraction(3, 4), (1,): Fraction(1, 4)})
    assert rk.augmentation() == 1
    rl = apply_fixed_point(t, rk)
    assert rl == (one - e) + rl * e


def test_induced_det_examples():
    # 1 in C2
    triv = FiniteAbelianGroup(())
    lhs, rhs = induced_det_both_routes(
        triv, C2, lambda _: (0,), [[GroupRingElement(triv, {(): 2})]])
    assert lhs == rhs == GroupRingElement(C2, {(0,): 2})
    # C2 in C4, M = [[g]]
    H = C2
    embed = lambda h: (2 * h[0] % 4,)
    g = GroupRingElement.basis(H, (1,))
    lhs, rhs = induced_det_both_routes(H, C4, embed, [[g]])
    assert lhs == rhs == GroupRingElement.basis(C4, (2,))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_induced_det_random(data):
    cases = [
        (FiniteAbelianGroup(()), C2, lambda _: (0,)),
        (C2, C4, lambda h: (2 * h[0] % 4,)),
        (C3, C6, lambda h: (2 * h[0] % 6,)),
        (C2, FiniteAbelianGroup((2, 2)), lambda h: (h[0], 0)),
    ]
    H, G, embed = data.draw(st.sampled_from(cases))
    n = data.draw(st.integers(1, 2))
    frac = st.fractions(min_value=-2, max_value=2, max_denominator=3)
    M = [[GroupRingElement(H, {h: data.draw(frac) for h in H.elements})
          for _ in range(n)] for _ in range(n)]
    lhs, rhs = induced_det_both_routes(H, G, embed, M)
    assert lhs == rhs


def test_corestriction_examples():
    embed = lambda h: (2 * h[0] % 4,)
    z2 = GroupRingElement.basis(C4, (2,))
    z = GroupRingElement.basis(C4, (1,))
    one = GroupRingElement.one(C4)
    got = apply_corestriction(z2, C2, C4, embed)
    assert got == GroupRingElement(C2, {(1,): 2})
    assert apply_corestriction(z, C2, C4, embed).is_zero()
    assert apply_corestriction(one, C2, C4, embed) == \
        GroupRingElement(C2, {(0,): 2})


def test_corestriction_duality():
    # component of iota(x) at eta = sum of components of x at characters
    # restricting to eta
    import random

    rng = random.Random(5)
    cases = [
        (C2, C4, lambda h: (2 * h[0] % 4,)),
        (squares_subgroup(7), unit_group(7), lambda a: a),
        (C2, FiniteAbelianGroup((2, 4)), lambda h: (0, 2 * h[0] % 4)),
    ]
    for H, G, embed in cases:
        x = GroupRingElement(G, {g: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                 for g in G.elements})
        iota = apply_corestriction(x, H, G, embed)
        for eta in H.characters():
            lhs = psi_eval(iota, eta)
            rhs = induced_character_sum(x, G, H, embed, eta)
            assert lhs == rhs


def test_corestriction_h_linearity():
    # iota(phi(h) x) = h iota(x)
    embed = lambda h: (2 * h[0] % 4,)
    x = GroupRingElement(C4, {(0,): 1, (1,): 2, (3,): Fraction(1, 2)})
    for h in C2.elements:
        hx = GroupRingElement.basis(C4, embed(h)) * x
        lhs = apply_corestriction(hx, C2, C4, embed)
        rhs = GroupRingElement.basis(C2, h) * apply_corestriction(x, C2, C4, embed)
        assert lhs == rhs


def test_negative_control_corrupted_target():
    # shrink the target by 3: containment must fail with a witness
    s = PlaceSet([3])
    t = cyclotomic_tower(9, 3)
    g3 = unit_group(3)
    top = from_generators(unit_group(9), [stickelberger(9, s, 0).element])
    good = from_generators(g3, [stickelberger(3, s, 0).element])
    bad = from_generators(g3, [stickelberger(3, s, 0).element.scale(3)])
    ok = check_quotient_containment(t, top, good)
    assert ok.passed and ok.witness is None
    broken = check_quotient_containment(t, top, bad)
    assert not broken.passed and broken.witness is not None


def test_identity_tower_trivial():
    t = TowerDatum(C4, C4, lambda e: e).validate()
    x = GroupRingElement(C4, {(1,): Fraction(5, 3)})
    assert apply_quotient(t, x) == x
    assert apply_fixed_point(t, x) == x
    assert apply_corestriction(x, C4, C4, lambda e: e) == x
