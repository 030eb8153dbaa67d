# The four natural maps between group rings of a tower of abelian groups
# (quotient, inclusion, fixed-point, corestriction), their matrices on the
# standard bases, the induced-matrix determinant identity, and executable
# containment checks for the three functoriality propositions.
#
# A TowerDatum holds G = Gal(L/F), the quotient Q = Gal(K/F) and the
# projection on elements; the kernel N = Gal(L/K) is recovered from it.
#
# The fixed-point map is determined by cosets: lambda(zN) = (1 - e) + z e
# with e the averaging idempotent of N.  It is a unital ring homomorphism
# (cross terms vanish because e is central), and the result is independent
# of the section because z e only depends on the coset zN.

from fractions import Fraction
from typing import NamedTuple

from .groupring import (
    GroupRingElement,
    det_over_group_ring,
    map_elements,
    psi_eval,
)
from .lattice import (
    compare,
    contains_vector,
    group_labels,
    map_image,
    scale_by,
)


class TowerDatum(NamedTuple):
    big: object               # G
    quotient: object          # Q
    project: object           # callable G-element -> Q-element

    @property
    def kernel(self):
        q_id = self.quotient.identity
        return [g for g in self.big.elements if self.project(g) == q_id]

    def validate(self):
        G, Q, p = self.big, self.quotient, self.project
        assert G.order % Q.order == 0
        images = {p(g) for g in G.elements}
        assert len(images) == Q.order, "projection not surjective"
        for a in G.elements[: min(8, G.order)]:
            for b in G.elements[: min(8, G.order)]:
                assert p(G.op(a, b)) == Q.op(p(a), p(b)), "not a homomorphism"
        assert len(self.kernel) * Q.order == G.order
        return self


def cyclotomic_tower(m_big, m_small):
    # (Z/m_big)^* -> (Z/m_small)^* by reduction; m_small | m_big
    from .abelian import unit_group

    assert m_big % m_small == 0
    return TowerDatum(unit_group(m_big), unit_group(m_small),
                      lambda a: a % m_small).validate()


# --- quotient map pi ---

def apply_quotient(tower, x):
    return map_elements(x, tower.quotient, tower.project)


def quotient_matrix(tower):
    G, Q = tower.big, tower.quotient
    M = [[0] * G.order for _ in range(Q.order)]
    for j, g in enumerate(G.elements):
        M[Q.index(tower.project(g))][j] = 1
    return M


# --- inclusion map phi ---

def apply_inclusion(x, group, embed):
    return map_elements(x, group, embed)


def inclusion_matrix(subgroup, group, embed):
    M = [[0] * subgroup.order for _ in range(group.order)]
    for j, h in enumerate(subgroup.elements):
        M[group.index(embed(h))][j] = 1
    return M


def induced_det_both_routes(subgroup, group, embed, M):
    # the two sides of phi(Det_{Q[H]} M) = Det_{Q[G]} (phi entrywise M):
    # the left side goes through H-characters, the right through
    # G-characters, so agreement exercises restriction-compatibility of the
    # whole determinant machinery
    n = len(M)
    for row in M:
        assert len(row) == n, "non-square matrix"
    lhs = apply_inclusion(det_over_group_ring(M), group, embed)
    induced = [[apply_inclusion(x, group, embed) for x in row] for row in M]
    rhs = det_over_group_ring(induced)
    return lhs, rhs


# --- fixed-point map lambda ---

def kernel_idempotent(tower):
    ker = tower.kernel
    return GroupRingElement(
        tower.big, {g: Fraction(1, len(ker)) for g in ker})


def coset_section(tower):
    # canonical section Q -> G: the preimage with the smallest index
    sec = {}
    for g in tower.big.elements:  # elements are in index order
        q = tower.project(g)
        if q not in sec:
            sec[q] = g
    return sec


def apply_fixed_point(tower, x):
    # lambda(sum a_q q) = (sum a_q)(1 - e) + (sum a_q z_q) e
    e = kernel_idempotent(tower)
    one = GroupRingElement.one(tower.big)
    sec = coset_section(tower)
    aug = x.augmentation()
    z = GroupRingElement(tower.big, {sec[q]: c for q, c in x.coeffs.items()})
    return (one - e).scale(aug) + z * e


def fixed_point_matrix(tower):
    G, Q = tower.big, tower.quotient
    cols = []
    for q in Q.elements:
        y = apply_fixed_point(tower, GroupRingElement.basis(Q, q))
        cols.append([y.coefficient(g) for g in G.elements])
    return [[cols[j][i] for j in range(Q.order)] for i in range(G.order)]


# --- corestriction iota ---

def apply_corestriction(x, subgroup, group, embed):
    # iota(g) = [G:H] g for g in H, 0 otherwise
    index = group.order // subgroup.order
    image = {embed(h): h for h in subgroup.elements}
    out = {}
    for g, c in x.coeffs.items():
        if g in image:
            out[image[g]] = index * c
    return GroupRingElement(subgroup, out, x.scalars)


def corestriction_matrix(subgroup, group, embed):
    index = group.order // subgroup.order
    image = {embed(h): h for h in subgroup.elements}
    M = [[0] * group.order for _ in range(subgroup.order)]
    for j, g in enumerate(group.elements):
        if g in image:
            M[subgroup.index(image[g])][j] = index
    return M


def induced_character_sum(x, group, subgroup, embed, eta):
    # psi-evaluation of x at the induced character Ind eta: the sum of the
    # components of x at every chi restricting to eta on H
    from .cyclotomic import CyclotomicNumber

    total = CyclotomicNumber.zero()
    for chi in group.characters():
        if all(chi(embed(h)) == eta(h) for h in subgroup.elements):
            total = total + psi_eval(x, chi)
    return total


# --- proposition checks ---

class ContainmentReport(NamedTuple):
    name: str
    passed: bool
    witness: object   # violating generator vector, or None


def _containment(name, image_ideal, target_ideal):
    verdict = compare(image_ideal, target_ideal)
    if verdict in ("equal", "subset"):
        return ContainmentReport(name, True, None)
    witness = next(v for v in image_ideal.vectors()
                   if not contains_vector(target_ideal, v))
    return ContainmentReport(name, False, witness)


def check_quotient_containment(tower, ideal_big, ideal_small):
    # pi(J_L) is contained in J_K
    img = map_image(ideal_big, quotient_matrix(tower),
                    group_labels(tower.quotient))
    return _containment("quotient:pi(J) in J'", img, ideal_small)


def check_fixed_point_containment(tower, ideal_small, ideal_big):
    # lambda(J_K) lands in (1-e)Q[G] + e J_L; since the first summand is a
    # full subspace, this is equivalent to e * lambda(J_K) inside e * J_L
    e = kernel_idempotent(tower)
    lam = map_image(ideal_small, fixed_point_matrix(tower),
                    group_labels(tower.big))
    lhs = scale_by(lam, tower.big, e)
    rhs = scale_by(ideal_big, tower.big, e)
    return _containment("fixed-point:e lambda(J) in e J'", lhs, rhs)


def check_corestriction_containment(subgroup, group, embed, ideal_big, ideal_sub):
    # iota(J over G) is contained in J over H
    img = map_image(ideal_big, corestriction_matrix(subgroup, group, embed),
                    group_labels(subgroup))
    return _containment("corestriction:iota(J) in J'", img, ideal_sub)
