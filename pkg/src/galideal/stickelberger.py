# Stickelberger elements at s = r <= 0, their half versions on an index-2
# subgroup, and the base-change element tying the two together through the
# imaginary quadratic subfield.
#
# Orientation convention, fixed project-wide: theta = sum_sigma zeta_S(r,
# sigma^{-1}) sigma.  The tau-flipped variant is reachable via .tau().
#
# theta has two independent construction routes (partial zetas per residue;
# lambda-assembly of chi -> L_S(r, conj(chi))) which are required to agree —
# they are kept as separate code paths on purpose.

from typing import NamedTuple

from .abelian import squares_subgroup, unit_group
from .dirichlet import PlaceSet, l_value, partial_zeta
from .groupring import GroupRingElement, lambda_assemble, map_elements


class StickelbergerElement(NamedTuple):
    element: GroupRingElement  # over (Z/m)^*
    modulus: int
    places: PlaceSet
    r: int


def ramified_places(m):
    return PlaceSet([p for p in range(2, m + 1)
                     if m % p == 0 and all(p % d for d in range(2, p))])


def stickelberger(m, places, r=0):
    # theta = sum over residues a of zeta_S(r, sigma_a^{-1}) sigma_a
    assert places.covers_modulus(m)
    g = unit_group(m)
    coeffs = {a: partial_zeta(r, g.inv(a), m, places) for a in g.elements}
    return StickelbergerElement(GroupRingElement(g, coeffs), m, places, r)


def stickelberger_by_characters(m, places, r=0):
    # independent route: the element whose chi-component is L_S(r, conj(chi))
    g = unit_group(m)
    return lambda_assemble(g, lambda chi: l_value(r, chi.conjugate(), places))


def complex_conjugation(m):
    return (-1) % m


def roots_of_unity_count(m):
    # number of roots of unity in the m-th cyclotomic field
    return m if m % 2 == 0 else 2 * m


def half_stickelberger(m, subgroup=None, places=None):
    # theta-tilde = sum over sigma in H of zeta_S(0, sigma^{-1}) sigma,
    # an element of Q[H]; H must have index 2 and omit complex conjugation
    if subgroup is None:
        subgroup = squares_subgroup(m)
    if places is None:
        places = ramified_places(m)
    g = unit_group(m)
    if 2 * subgroup.order != g.order:
        raise ValueError("subgroup index is %d, need 2" %
                         (g.order // max(subgroup.order, 1)))
    if complex_conjugation(m) in subgroup:
        raise ValueError("complex conjugation lies in the subgroup")
    coeffs = {a: partial_zeta(0, subgroup.inv(a), m, places) for a in subgroup.elements}
    return GroupRingElement(subgroup, coeffs)


def include_subgroup(x, big_group):
    # Q[H] -> Q[G] along the inclusion of residues
    return map_elements(x, big_group, lambda a: a % big_group.modulus)


def quadratic_character(group):
    quads = [chi for chi in group.characters() if chi.order() == 2]
    assert len(quads) == 1, "expected a unique quadratic character"
    return quads[0]


def even_extension(group, subgroup, eta):
    # the unique even character of `group` restricting to eta on `subgroup`
    # (exists and is unique when G = H x {+-1})
    matches = []
    for psi in group.characters():
        if not psi.is_even():
            continue
        if all(psi(h) == eta(h) for h in subgroup.elements):
            matches.append(psi)
    assert len(matches) == 1, "even extension not unique"
    return matches[0]


def base_change_element(ell, level=0):
    # B = sum over even psi of L_S(0, rho psi)^{-1} e_{psi|_H}, an element of
    # Q[H] for H the squares in (Z/ell^{level+1})^*; rho is the quadratic
    # character (cutting out the imaginary quadratic subfield when
    # ell = 3 mod 4).  Satisfies tau(B)^{-1} = 2 theta-tilde.
    assert ell % 4 == 3 and ell > 3, "need a prime = 3 mod 4, larger than 3"
    m = ell ** (level + 1)
    g = unit_group(m)
    h = squares_subgroup(m)
    places = PlaceSet([ell])
    rho = quadratic_character(g)
    values = {}
    for eta in h.characters():
        psi = even_extension(g, h, eta)
        lv = l_value(0, rho * psi, places)
        if lv.is_zero():
            raise ZeroDivisionError("L_S(0, rho psi) vanished unexpectedly")
        values[eta] = lv.inverse()
    return lambda_assemble(h, values)
