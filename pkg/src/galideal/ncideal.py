# Left ideals in a (possibly non-commutative) group algebra built from
# per-subgroup annihilator data.  A datum pairs a component over a
# subgroup's abelianization with an integral annihilator there; its
# generator is the commutator-subgroup norm times any lift of their
# product, and the norm factor makes the generator independent of the lift.
# When the data is conjugation-covariant the resulting left ideal is
# two-sided, and pushing it through a quotient map of groups lands inside
# the quotient-level ideal built from the pushed data.

from fractions import Fraction
from typing import NamedTuple

from .groupring import GroupRingElement, map_elements
from .lattice import (contains_element, from_generators, group_labels,
                      map_image)
from .padic import valuation


class IntegralityError(ValueError):
    # the component-times-annihilator product fails to be integral at ell;
    # carries (label, valuation) of the worst coefficient
    pass


class AnnihilatorDatum(NamedTuple):
    record: object            # SubgroupRecord of the ambient group
    alpha: GroupRingElement   # over record.ab: the subgroup component
    beta: GroupRingElement    # over record.ab, ell-integral annihilator
    ell: int


def subgroup_datum(record, alpha, beta, ell):
    # build a datum from elements of the ambient group algebra supported
    # inside the subgroup, pushing both onto the abelianization
    return AnnihilatorDatum(record, record.push(alpha), record.push(beta), ell)


def datum_integrality(d):
    # (ok, worst valuation, witness label); the invariant under test is
    # that every coefficient of alpha*beta has non-negative ell-valuation
    assert d.ell % 2 == 1 and d.ell > 2
    for q, c in d.beta.coeffs.items():
        if valuation(c, d.ell) < 0:
            return False, valuation(c, d.ell), d.record.ab.label(q)
    product = d.alpha * d.beta
    worst, witness = 0, ""
    for q, c in product.coeffs.items():
        v = valuation(c, d.ell)
        if v < worst:
            worst, witness = v, d.record.ab.label(q)
    return worst >= 0, worst, witness


def lift_z(d, chooser=None):
    # any preimage in the subgroup's algebra of alpha*beta under the
    # abelianization; the default places each coefficient on the
    # smallest-label element of its coset.  Exactness of the re-projection
    # is asserted; non-integral products are surfaced as errors.
    ok, worst, witness = datum_integrality(d)
    if not ok:
        raise IntegralityError(
            "component-annihilator product is not %d-integral at %s "
            "(valuation %d)" % (d.ell, witness, worst))
    rec = d.record
    G = rec.group
    if chooser is None:
        chooser = lambda coset: min(coset, key=G.label)
    product = d.alpha * d.beta
    coeffs = {}
    for q, c in product.coeffs.items():
        rep = chooser(sorted(rec.cosets[q]))
        assert rep in rec.cosets[q]
        coeffs[rep] = coeffs.get(rep, Fraction(0)) + c
    z = GroupRingElement(G, coeffs)
    assert rec.push(z) == product
    return z


def norm_element(record):
    # the sum over the commutator subgroup, inside the ambient algebra
    G = record.group
    return GroupRingElement(G, {h: Fraction(1) for h in record.commutator})


def datum_generator(d, chooser=None):
    return norm_element(d.record) * lift_z(d, chooser)


class NCIdeal(NamedTuple):
    group: object
    generators: tuple     # the defining elements, one per datum
    lattice: object       # FractionalIdeal: the left span


def nc_ideal(G, data, chooser=None):
    # the left ideal generated by norm-times-lift for each datum
    gens = tuple(datum_generator(d, chooser) for d in data)
    for d in data:
        assert d.record.group is G, "datum lives over a different group"
    return NCIdeal(G, gens, from_generators(G, gens))


class TwoSidedReport(NamedTuple):
    passed: bool
    witness: tuple        # (conjugator label, generator index) or ()


def two_sided_check(I):
    # a left ideal is two-sided iff every conjugate of every generator
    # stays inside it
    G = I.group
    for t, x in enumerate(I.generators):
        for w in G.elements:
            conj = GroupRingElement.basis(G, w) * x * GroupRingElement.basis(G, G.inv(w))
            if not contains_element(I.lattice, G, conj):
                return TwoSidedReport(False, (G.label(w), t))
    return TwoSidedReport(True, ())


def conjugate_datum(d, target_record, w):
    # move a datum to the conjugate subgroup w H w^-1
    rec, G = d.record, d.record.group

    def move(x):
        return map_elements(
            x, target_record.ab,
            lambda u: target_record.project[G.conjugate(w, min(rec.cosets[u]))])

    return AnnihilatorDatum(target_record, move(d.alpha), move(d.beta), d.ell)


def covariant_data(records, base_data):
    # extend data to the full conjugation orbit of each datum's subgroup
    out = []
    for d in base_data:
        G = d.record.group
        seen = set()
        for w in G.elements:
            moved = frozenset(G.conjugate(w, h) for h in d.record.elements)
            if moved in seen:
                continue
            seen.add(moved)
            target = next(r for r in records if frozenset(r.elements) == moved)
            out.append(conjugate_datum(d, target, w))
    return out


# ---------------------------------------------------------------------------
# quotient behaviour

def _ab_quotient(record_big, record_small, proj):
    # abelianization-level map induced by the group quotient, as a function
    # on coset indices
    return lambda u: record_small.project[proj[min(record_big.cosets[u])]]


def push_datum(d, record_small, proj):
    f = _ab_quotient(d.record, record_small, proj)
    return AnnihilatorDatum(
        record_small,
        map_elements(d.alpha, record_small.ab, f),
        map_elements(d.beta, record_small.ab, f),
        d.ell)


def quotient_data(data, Q, proj):
    # the pushed-forward data over the quotient group, one datum per
    # original datum, over the image subgroup
    from .brauer import SubgroupRecord
    out = []
    cache = {}
    for d in data:
        jset = tuple(sorted({proj[h] for h in d.record.elements}))
        if jset not in cache:
            cache[jset] = SubgroupRecord(Q, jset)
        out.append(push_datum(d, cache[jset], proj))
    return out


class QuotientReport(NamedTuple):
    compatible: bool
    contained: bool
    witness: tuple

    @property
    def passed(self):
        return self.compatible and self.contained


def quotient_check(G, Q, proj, data, data_small):
    # 1) every datum's pushforward must appear (as an exact product match)
    #    in the quotient-level data; 2) the image of the ideal must land
    #    inside the quotient-level ideal
    compatible = True
    witness = ()
    for t, d in enumerate(data):
        jset = tuple(sorted({proj[h] for h in d.record.elements}))
        hit = False
        for d2 in data_small:
            if d2.record.elements != jset or d2.ell != d.ell:
                continue
            f = _ab_quotient(d.record, d2.record, proj)
            pushed = map_elements(d.alpha * d.beta, d2.record.ab, f)
            if pushed == d2.alpha * d2.beta:
                hit = True
                break
        if not hit:
            compatible = False
            witness = ("incompatible datum", t)
            break
    I_big = nc_ideal(G, data)
    I_small = nc_ideal(Q, data_small)
    M = [[0] * G.order for _ in range(Q.order)]
    for g in G.elements:
        M[proj[g]][g] = 1
    image = map_image(I_big.lattice, M, group_labels(Q))
    contained = True
    for v in image.vectors():
        from .lattice import contains_vector
        if not contains_vector(I_small.lattice, v):
            contained = False
            if not witness:
                witness = ("image vector escapes", tuple(v))
            break
    return QuotientReport(compatible, contained, witness)
