# Named check suites: each one runs a family of exact identities or
# containments and reports per-instance pass/fail with a witness.  The
# CLI `check` subcommand and the acceptance tests both drive these, so a
# suite is the single source of truth for what its checks mean.

import random
from fractions import Fraction
from typing import NamedTuple

from .abelian import FiniteAbelianGroup, squares_subgroup, unit_group
from .brauer import (alternating4, bgstar, component_images,
                     conjugation_consistency, dihedral4, duality_certificate,
                     from_group, nonabelian_J, quaternion8, quotient_group,
                     quotient_naturality, subgroup_lattice, symmetric3)
from .cycloideal import (CyclotomicLevel, ideal_J_full, ideal_J_imagquad,
                         ideal_J_minus, ideal_J_real, level_tower,
                         plus_tower)
from .cyclotomic import CyclotomicNumber
from .dirichlet import PlaceSet, generalized_bernoulli, l_value, partial_zeta
from .groupring import (EmbeddingSignature, GroupRingElement, invert_unit,
                        map_elements, psi_eval, y_rank)
from .lattice import unit_ideal
from .ncideal import (covariant_data, nc_ideal, quotient_check,
                      quotient_data, subgroup_datum, two_sided_check)
from .padic import annihilator_integrality, torsion_annihilator
from .stickelberger import (base_change_element, complex_conjugation,
                            even_extension, half_stickelberger,
                            include_subgroup, quadratic_character,
                            ramified_places, stickelberger,
                            stickelberger_by_characters)
from .towers import (TowerDatum, apply_corestriction, apply_fixed_point,
                     check_corestriction_containment,
                     check_fixed_point_containment,
                     check_quotient_containment, coset_section,
                     induced_character_sum, induced_det_both_routes)

F = Fraction


class CheckResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str


def theta(m, r=0):
    return stickelberger(m, ramified_places(m), r).element


# ---------------------------------------------------------------------------
# 1. (1 - c) theta-tilde = theta

def half_stickelberger_suite(ells=(7, 11, 19, 23), levels=(0, 1)):
    out = []
    for ell in ells:
        for n in levels:
            m = ell ** (n + 1)
            g = unit_group(m)
            ht = include_subgroup(half_stickelberger(m), g)
            c = GroupRingElement.basis(g, complex_conjugation(m))
            ok = ht - c * ht == theta(m, 0)
            out.append(CheckResult(
                "half-stickelberger", "one-minus-c:m=%d" % m, ok,
                "phi(m)=%d" % g.order))
    return out


# ---------------------------------------------------------------------------
# 2. L_S(0, rho psi) = 2 psi|_H(tau theta-tilde) for every even psi

def lvalue_identity_suite(ells=(7, 11)):
    out = []
    for ell in ells:
        g = unit_group(ell)
        h = squares_subgroup(ell)
        rho = quadratic_character(g)
        tt = half_stickelberger(ell).tau()
        bad = None
        for eta in h.characters():
            psi = even_extension(g, h, eta)
            if l_value(0, rho * psi, ramified_places(ell)) != \
                    2 * psi_eval(tt, eta):
                bad = eta.index
                break
        out.append(CheckResult(
            "lvalue-identity", "pairing:ell=%d" % ell, bad is None,
            "all %d even characters" % h.order if bad is None
            else "mismatch at character %s" % (bad,)))
    return out


# ---------------------------------------------------------------------------
# 3. tau(B)^{-1} = 2 theta-tilde

def base_change_suite(ells=(7, 11)):
    out = []
    for ell in ells:
        b = base_change_element(ell)
        ok = invert_unit(b.tau()) == half_stickelberger(ell).scale(2)
        out.append(CheckResult("base-change", "tau-inverse:ell=%d" % ell,
                               ok, ""))
    return out


# ---------------------------------------------------------------------------
# 4. quotient functoriality of the minus ideals across levels

def functoriality_suite(ells=(3, 5), levels=(1,), rs=(0, -1, -2)):
    out = []
    for ell in ells:
        for n in levels:
            up, down = CyclotomicLevel(ell, n), CyclotomicLevel(ell, n - 1)
            tow = level_tower(up, down)
            places = up.places()
            for r in rs:
                rep = check_quotient_containment(
                    tow, ideal_J_minus(up, r, places),
                    ideal_J_minus(down, r, places))
                out.append(CheckResult(
                    "functoriality",
                    "pi-minus:ell=%d,level=%d->%d,r=%d" % (ell, n, n - 1, r),
                    rep.passed,
                    "" if rep.witness is None else "witness %s" % (rep.witness,)))
    return out


# ---------------------------------------------------------------------------
# 5. determinant identity for induced matrices

def induced_det_suite(count=100, seed=2026):
    cases = [
        ("1<C2", FiniteAbelianGroup(()), FiniteAbelianGroup((2,)),
         lambda _: (0,)),
        ("C2<C4", FiniteAbelianGroup((2,)), FiniteAbelianGroup((4,)),
         lambda h: (2 * h[0] % 4,)),
        ("C3<C6", FiniteAbelianGroup((3,)), FiniteAbelianGroup((6,)),
         lambda h: (2 * h[0] % 6,)),
        ("C2<C2xC2", FiniteAbelianGroup((2,)), FiniteAbelianGroup((2, 2)),
         lambda h: (h[0], 0)),
    ]
    rng = random.Random(seed)
    out = []
    for name, H, G, embed in cases:
        bad = None
        for i in range(count):
            n = rng.choice([1, 2])
            M = [[GroupRingElement(
                H, {h: F(rng.randint(-3, 3), rng.randint(1, 4))
                    for h in H.elements})
                for _ in range(n)] for _ in range(n)]
            lhs, rhs = induced_det_both_routes(H, G, embed, M)
            if lhs != rhs:
                bad = i
                break
        out.append(CheckResult(
            "induced-det", "det:%s" % name, bad is None,
            "%d random matrices" % count if bad is None
            else "mismatch at matrix %d" % bad))
    return out


# ---------------------------------------------------------------------------
# 6. fixed-point map and corestriction

def _suite_towers():
    C2 = FiniteAbelianGroup((2,))
    C4 = FiniteAbelianGroup((4,))
    C3 = FiniteAbelianGroup((3,))
    C6 = FiniteAbelianGroup((6,))
    return [
        ("C4/C2", TowerDatum(C4, C2, lambda e: (e[0] % 2,)).validate()),
        ("C6/C3", TowerDatum(C6, C3, lambda e: (e[0] % 3,)).validate()),
        ("Z7/plus", plus_tower(7)),
    ]


def fixed_point_suite(seed=2026):
    rng = random.Random(seed)
    out = []
    for name, t in _suite_towers():
        Q = t.quotient
        one_ok = apply_fixed_point(t, GroupRingElement.one(Q)) == \
            GroupRingElement.one(t.big)
        hom_ok = True
        for _ in range(25):
            x = GroupRingElement(Q, {q: F(rng.randint(-4, 4), rng.randint(1, 3))
                                     for q in Q.elements})
            y = GroupRingElement(Q, {q: F(rng.randint(-4, 4), rng.randint(1, 3))
                                     for q in Q.elements})
            if apply_fixed_point(t, x * y) != \
                    apply_fixed_point(t, x) * apply_fixed_point(t, y):
                hom_ok = False
                break
        out.append(CheckResult("fixed-point", "lambda-ring-hom:%s" % name,
                               one_ok and hom_ok, "25 random pairs"))

        # character description: chi-component is chi(section(q)) when chi
        # kills the kernel, and 1 otherwise
        char_ok = True
        sec = coset_section(t)
        ker = t.kernel
        for q in Q.elements:
            lam = apply_fixed_point(t, GroupRingElement.basis(Q, q))
            for chi in t.big.characters():
                got = psi_eval(lam, chi)
                if all(chi(k) == CyclotomicNumber.one() for k in ker):
                    want = chi(sec[q])
                else:
                    want = CyclotomicNumber.one()
                if got != want:
                    char_ok = False
        out.append(CheckResult("fixed-point",
                               "lambda-character-description:%s" % name,
                               char_ok, ""))

    # corestriction duality against induced characters
    C2 = FiniteAbelianGroup((2,))
    C4 = FiniteAbelianGroup((4,))
    cases = [
        ("C2<C4", C2, C4, lambda h: (2 * h[0] % 4,)),
        ("H7<Z7", squares_subgroup(7), unit_group(7), lambda a: a),
        ("C2<C2xC4", C2, FiniteAbelianGroup((2, 4)),
         lambda h: (0, 2 * h[0] % 4)),
    ]
    for name, H, G, embed in cases:
        x = GroupRingElement(G, {g: F(rng.randint(-5, 5), rng.randint(1, 4))
                                 for g in G.elements})
        iota = apply_corestriction(x, H, G, embed)
        ok = all(psi_eval(iota, eta) ==
                 induced_character_sum(x, G, H, embed, eta)
                 for eta in H.characters())
        out.append(CheckResult("fixed-point", "iota-duality:%s" % name,
                               ok, "all characters of H"))

    # lambda containment (plus tower) and iota containment (imaginary
    # quadratic base) on the cyclotomic ideals
    for ell in (3, 5, 7):
        lev = CyclotomicLevel(ell, 0)
        rep = check_fixed_point_containment(
            plus_tower(ell), ideal_J_real(lev), ideal_J_full(lev))
        out.append(CheckResult("fixed-point",
                               "lambda-containment:ell=%d" % ell,
                               rep.passed,
                               "" if rep.witness is None
                               else "witness %s" % (rep.witness,)))
    for ell in (7, 11):
        lev = CyclotomicLevel(ell, 0)
        rep = check_corestriction_containment(
            squares_subgroup(ell), unit_group(ell), lambda a: a,
            ideal_J_full(lev), ideal_J_imagquad(lev))
        out.append(CheckResult("fixed-point",
                               "iota-containment:ell=%d" % ell,
                               rep.passed,
                               "" if rep.witness is None
                               else "witness %s" % (rep.witness,)))
    return out


# ---------------------------------------------------------------------------
# 7. the component map out of the class space

def brauer_suite():
    out = []
    for name, make in [("S3", symmetric3), ("D4", dihedral4),
                       ("Q8", quaternion8), ("A4", alternating4)]:
        bmap = bgstar(make())
        out.append(CheckResult(
            "brauer", "injective:%s" % name, bmap.injective,
            "rank %d = %d classes" % (bmap.rank, bmap.space.dimension)))
        duality = duality_certificate(bmap)
        out.append(CheckResult(
            "brauer", "duality-certified:%s" % name, duality.passed,
            "%d traces" % duality.checked if duality.passed
            else "witness %s" % (duality.witness,)))
    for name, G, normal in [
            ("S3/A3", symmetric3(), [0, 3, 4]),
            ("D4/center", dihedral4(), None)]:
        if normal is None:
            normal = list(G.center)
        bmap = bgstar(G)
        comps = {k: unit_ideal(rec.ab) for k, rec in enumerate(bmap.records)}
        rep = quotient_naturality(G, normal, comps)
        out.append(CheckResult(
            "brauer", "quotient-square:%s" % name,
            rep.square_commutes, ""))
        out.append(CheckResult(
            "brauer", "quotient-containment:%s" % name,
            rep.contained,
            "" if rep.contained else "witness %s" % (rep.witness,)))
    return out


# ---------------------------------------------------------------------------
# 8. abelian reduction of the class-space preimage

def abelian_reduction_suite(ells=(3, 5)):
    out = []
    for ell in ells:
        lev = CyclotomicLevel(ell, 0)
        G = from_group(lev.group)
        bmap = bgstar(G)
        J = ideal_J_full(lev)
        comps = component_images(bmap, J)
        consistent, _ = conjugation_consistency(bmap, comps)
        equal = nonabelian_J(bmap, comps) == J
        out.append(CheckResult(
            "abelian-reduction", "preimage-equals-direct:ell=%d" % ell,
            consistent and equal,
            "%d subgroup components" % len(comps)))
    return out


# ---------------------------------------------------------------------------
# 9. annihilator integrality

def integrality_suite(ells=(3, 5, 7), rs=(-1, -2)):
    out = []
    for ell in ells:
        for m in (ell, ell * ell):
            for r in rs:
                ok, worst, witness = annihilator_integrality(
                    m, ell, r, theta(m, r))
                out.append(CheckResult(
                    "integrality",
                    "annihilator:m=%d,ell=%d,r=%d" % (m, ell, r), ok,
                    "min valuation %d" % worst if ok
                    else "valuation %d at %s" % (worst, witness)))
    # the worked case: (sigma_2 - 4) theta(-1) = -(sigma_1 + sigma_2)/4
    g = unit_group(3)
    twist = GroupRingElement.basis(g, 2) - GroupRingElement.one(g).scale(4)
    expected = GroupRingElement(g, {1: F(-1, 4), 2: F(-1, 4)})
    out.append(CheckResult(
        "integrality", "worked-case:m=3", twist * theta(3, -1) == expected,
        "(s2 - 4) theta(-1) = -(s1 + s2)/4"))
    return out


# ---------------------------------------------------------------------------
# 10. non-commutative ideals

def nc_ideal_suite():
    out = []
    G = symmetric3()
    records = subgroup_lattice(G)
    rec = records[1]
    alpha = GroupRingElement(G, {0: F(1), 2: F(1)})
    base = subgroup_datum(rec, alpha, GroupRingElement.one(G), 3)

    control = two_sided_check(nc_ideal(G, [base]))
    out.append(CheckResult(
        "nc-ideal", "control-fails-two-sided:S3", not control.passed,
        "witness %s" % (control.witness,) if not control.passed
        else "control unexpectedly two-sided"))

    covariant = two_sided_check(nc_ideal(G, covariant_data(records, [base])))
    out.append(CheckResult(
        "nc-ideal", "covariant-two-sided:S3", covariant.passed,
        "" if covariant.passed else "witness %s" % (covariant.witness,)))

    full = records[-1]
    d = subgroup_datum(full, GroupRingElement(G, {0: F(1), 1: F(2)}),
                       GroupRingElement.one(G), 3)
    Q, proj = quotient_group(G, [0, 3, 4])
    rep = quotient_check(G, Q, proj, [d], quotient_data([d], Q, proj))
    out.append(CheckResult(
        "nc-ideal", "quotient:S3/A3", rep.passed,
        "" if rep.passed else "witness %s" % (rep.witness,)))

    lev9 = CyclotomicLevel(3, 1)
    G9 = from_group(lev9.group)
    move = lambda x: map_elements(x, G9, lev9.group.index)
    rec9 = subgroup_lattice(G9)[-1]
    ann = torsion_annihilator(9, 3, -1)
    data9 = [subgroup_datum(rec9, move(theta(9, -1)), move(b), 3)
             for b in ann.generators]
    normal = [lev9.group.index(a) for a in (1, 4, 7)]
    Q9, proj9 = quotient_group(G9, normal)
    rep9 = quotient_check(G9, Q9, proj9, data9,
                          quotient_data(data9, Q9, proj9))
    out.append(CheckResult(
        "nc-ideal", "quotient:C9->C3-stickelberger", rep9.passed,
        "%d data" % len(data9) if rep9.passed
        else "witness %s" % (rep9.witness,)))
    return out


# ---------------------------------------------------------------------------
# 11. oracle cross-checks

def oracles_suite(max_modulus=30, rs=(0, -1, -2, -3)):
    out = []
    bad = None
    count = 0
    for m in range(1, max_modulus + 1):
        s = ramified_places(m)
        for r in rs:
            count += 1
            if stickelberger(m, s, r).element != \
                    stickelberger_by_characters(m, s, r):
                bad = (m, r)
                break
        if bad:
            break
    out.append(CheckResult(
        "oracles", "theta-dual-routes:m<=%d" % max_modulus, bad is None,
        "%d elements, both routes" % count if bad is None
        else "mismatch at %s" % (bad,)))

    out.append(CheckResult(
        "oracles", "zeta(-1)", partial_zeta(-1, 0, 1, PlaceSet()) == F(-1, 12),
        "-1/12"))
    chi = quadratic_character(unit_group(3))
    out.append(CheckResult(
        "oracles", "B_{1,chi_-3}",
        generalized_bernoulli(1, chi) == CyclotomicNumber.from_rational(F(-1, 3)),
        "-1/3"))
    g = unit_group(7)
    expect = GroupRingElement(g, {1: F(5, 14), 2: F(-1, 14), 3: F(-3, 14),
                                  4: F(3, 14), 5: F(1, 14), 6: F(-5, 14)})
    out.append(CheckResult(
        "oracles", "theta-hurwitz:m=7", theta(7, 0) == expect,
        "[5/14, -1/14, -3/14, 3/14, 1/14, -5/14]"))
    return out


# ---------------------------------------------------------------------------
# 12. the rank table

def rank_suite():
    table = [
        ("Q(zeta5)", 0, 2, {0: 2, -1: 2, -2: 2, -3: 2}),
        ("Q(zeta7)", 0, 3, {0: 3, -1: 3, -2: 3, -3: 3}),
        ("Q(zeta7)+", 3, 0, {0: 3, -1: 0, -2: 3, -3: 0}),
    ]
    out = []
    for name, r1, r2, expect in table:
        ok = all(y_rank(EmbeddingSignature(r1, r2, r)) == expect[r]
                 for r in (0, -1, -2, -3))
        out.append(CheckResult("rank", "y-rank:%s" % name, ok,
                               "r in {0,-1,-2,-3}"))
    return out


# ---------------------------------------------------------------------------
# registry

SUITES = {
    "half-stickelberger": half_stickelberger_suite,
    "lvalue-identity": lvalue_identity_suite,
    "base-change": base_change_suite,
    "functoriality": functoriality_suite,
    "induced-det": induced_det_suite,
    "fixed-point": fixed_point_suite,
    "brauer": brauer_suite,
    "abelian-reduction": abelian_reduction_suite,
    "integrality": integrality_suite,
    "nc-ideal": nc_ideal_suite,
    "oracles": oracles_suite,
    "rank": rank_suite,
}

# alternate public names for suites
SUITE_ALIASES = {
    "annihilator": "nc-ideal",
}

# which keyword parameters each suite accepts from the outside
SUITE_PARAMS = {
    "half-stickelberger": ("ells", "levels"),
    "lvalue-identity": ("ells",),
    "base-change": ("ells",),
    "functoriality": ("ells", "levels", "rs"),
    "induced-det": ("count", "seed"),
    "fixed-point": ("seed",),
    "brauer": (),
    "abelian-reduction": ("ells",),
    "integrality": ("ells", "rs"),
    "nc-ideal": (),
    "oracles": ("max_modulus", "rs"),
    "rank": (),
}


def run_suite(name, **params):
    name = SUITE_ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError("unknown suite %r; available: %s"
                       % (name, ", ".join(sorted(SUITES))))
    allowed = SUITE_PARAMS[name]
    kwargs = {k: v for k, v in params.items()
              if v is not None and k in allowed}
    return SUITES[name](**kwargs)


def run_all(**params):
    out = []
    for name in SUITES:
        out.extend(run_suite(name, **params))
    return out
