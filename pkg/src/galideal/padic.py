# Exact ell-adic bookkeeping: Teichmuller lifts by modular exponentiation,
# eigenprojections of group-ring elements onto the wild subgroup with
# certified coefficient valuations, and the annihilator of the cyclic
# Tate-twisted torsion module.
#
# No completion is ever formed: an ell-adic integer appears only as an
# integer residue to a stated precision, and every valuation verdict
# records whether the precision actually certifies it.

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .groupring import GroupRingElement
from .lattice import from_generators
from .abelian import unit_group


def valuation(x, ell):
    # v_ell of a nonzero Fraction (or int)
    x = Fraction(x)
    assert x != 0
    v = 0
    n = x.numerator
    while n % ell == 0:
        n //= ell
        v += 1
    d = x.denominator
    while d % ell == 0:
        d //= ell
        v -= 1
    return v


def teichmuller(a, ell, precision):
    # the (ell-1)-th root of unity in the ell-adics congruent to a mod ell,
    # as a residue mod ell^precision; (a^ell^k) stabilizes one digit per step
    assert a % ell != 0
    return pow(a, ell ** (precision - 1), ell ** precision)


class EigenCoefficient(NamedTuple):
    # one coefficient, equal to numerator / (ell^scale * unit) where the
    # numerator is known only as a residue mod ell^precision
    numerator: int
    scale: int
    precision: int
    ell: int

    @property
    def exact(self):
        # a nonzero residue pins the valuation exactly; a zero residue
        # only bounds it below by precision - scale
        return self.numerator != 0

    @property
    def min_valuation(self):
        if self.numerator == 0:
            return self.precision - self.scale
        v, n = 0, self.numerator
        while n % self.ell == 0:
            n //= self.ell
            v += 1
        return v - self.scale

    @property
    def sign_certified(self):
        return self.exact or self.min_valuation > 0


class EigenProjection(NamedTuple):
    ell: int
    power: int           # the tame character as a power of the Teichmuller one
    precision: int
    wild_elements: tuple
    coefficients: tuple  # EigenCoefficient per wild element, same order
    smoothed: bool

    @property
    def min_valuation(self):
        return min(c.min_valuation for c in self.coefficients)

    @property
    def certified(self):
        return all(c.sign_certified for c in self.coefficients)


def eigen_projection(level, power, x, precision=20):
    # component of x in the power-th Teichmuller eigenspace of the tame
    # subgroup, written over the wild subgroup mod ell^precision.  The
    # eigenspace with power = 1 mod (ell-1) additionally gets the factor
    # (1 - (1+ell) sigma^{-1}), sigma the wild generator 1+ell, which is
    # what makes the Stickelberger image land in the integers.
    ell, m = level.ell, level.modulus
    assert x.group == level.group and x.scalars == "rational"
    assert precision >= 1
    mod = ell ** precision
    denom = 1
    for c in x.coeffs.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    scale = 0
    unit_part = denom
    while unit_part % ell == 0:
        unit_part //= ell
        scale += 1
    unit_inv = pow(unit_part, -1, mod)
    residues = {}
    for w in level.wild.elements:
        total = 0
        for t in level.tame.elements:
            c = x.coeffs.get(t * w % m)
            if c is not None:
                total += int(c * denom) * pow(teichmuller(t, ell, precision),
                                              power, mod)
        residues[w] = total * unit_inv % mod
    smoothed = power % (ell - 1) == 1 % (ell - 1)
    if smoothed:
        sigma = (1 + ell) % m
        residues = {w: (residues[w]
                        - (1 + ell) * residues[sigma * w % m]) % mod
                    for w in level.wild.elements}
    coeffs = tuple(EigenCoefficient(residues[w], scale, precision, ell)
                   for w in level.wild.elements)
    return EigenProjection(ell, power, precision,
                           tuple(level.wild.elements), coeffs, smoothed)


class TorsionAnnihilator(NamedTuple):
    ideal: object        # FractionalIdeal over (Z/m)^*
    exponent: int        # the torsion module has order ell^exponent
    generators: tuple    # the defining GroupRingElements


def torsion_exponent(m, ell, r):
    # largest k such that a^(1-r) = 1 mod ell^k whenever a = 1 mod
    # ell^min(k, v_ell(m)); the order of the twisted cyclotomic torsion
    vm = 0
    mm = m
    while mm % ell == 0:
        mm //= ell
        vm += 1

    def holds(k):
        step = ell ** min(k, vm)
        mod = ell ** k
        return all(pow(a, 1 - r, mod) == 1 for a in range(1, mod + 1, step))

    k = vm  # automatic below vm: a = 1 mod ell^k forces a^(1-r) = 1 mod ell^k
    while holds(k + 1):
        k += 1
    return k


def torsion_annihilator(m, ell, r):
    # ideal generated by ell^v and the twisted differences sigma_a - a^(1-r)
    assert ell % 2 == 1 and r <= -1
    mm = m
    while mm % ell == 0:
        mm //= ell
    assert mm == 1 and m > 1, "modulus must be a power of ell"
    group = unit_group(m)
    v = torsion_exponent(m, ell, r)
    one = GroupRingElement.one(group)
    gens = [one.scale(ell ** v)]
    for a in group.elements:
        gens.append(GroupRingElement.basis(group, a) - one.scale(a ** (1 - r)))
    return TorsionAnnihilator(from_generators(group, gens), v, tuple(gens))


def annihilator_integrality(m, ell, r, theta):
    # do all products (annihilator generator) * theta have coefficients of
    # nonnegative ell-adic valuation?  Returns (verdict, worst valuation,
    # witness generator index or None).
    ann = torsion_annihilator(m, ell, r)
    group = unit_group(m)
    worst = None
    witness = None
    checks = list(ann.generators)
    d = ann.ideal.denominator
    for col in ann.ideal.columns:
        coeffs = {a: Fraction(col[i], d) for i, a in enumerate(group.elements)}
        checks.append(GroupRingElement(group, coeffs))
    for k, gen in enumerate(checks):
        prod = gen * theta
        for c in prod.coeffs.values():
            v = valuation(c, ell)
            if worst is None or v < worst:
                worst = v
                witness = k if v < 0 else witness
    return (worst is None or worst >= 0), worst, witness
