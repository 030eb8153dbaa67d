# Dirichlet characters mod m, generalized Bernoulli numbers, and exact
# values of S-modified L-functions at integers r <= 0.
#
# Conventions that matter:
#   - B_1 = -1/2 (so sum_{k<=n} C(n+1,k) B_k = 0 drives the recurrence)
#   - chi(a) = 0 when gcd(a, m) > 1; hence "removing" an Euler factor at a
#     prime dividing the conductor is a no-op
#   - a character mod m is evaluated through its primitive core chi* mod f,
#     with the Euler factors at p | m, p does not divide f, reinstated
#     explicitly: this is the imprimitive L-function, the convention used
#     for all Stickelberger assembly downstream
#   - partial zeta values have two independent routes (character sum vs
#     Hurwitz/Bernoulli) and the test suite requires exact agreement

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .abelian import unit_group
from .cyclotomic import CyclotomicNumber


@lru_cache(maxsize=None)
def bernoulli_number(n):
    assert n >= 0
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for k in range(n):
        total += comb(n + 1, k) * bernoulli_number(k)
    return -total / (n + 1)


def bernoulli_polynomial(n, x):
    x = Fraction(x)
    return sum((comb(n, k) * bernoulli_number(k) * x ** (n - k)
                for k in range(n + 1)), Fraction(0))


class PlaceSet:
    # finite set of rational primes, with the archimedean place always in
    __slots__ = ("primes",)

    def __init__(self, primes=()):
        ps = sorted(set(int(p) for p in primes))
        for p in ps:
            assert p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1)), \
                "not a prime: %d" % p
        self.primes = tuple(ps)

    def covers_modulus(self, m):
        m = abs(m)
        for p in self.primes:
            while m % p == 0:
                m //= p
        return m == 1

    def is_exactly_ramified(self, m):
        # S == {infty} union {p | m}
        return self.covers_modulus(m) and all(m % p == 0 for p in self.primes)

    def __contains__(self, p):
        return p in self.primes

    def __eq__(self, other):
        return isinstance(other, PlaceSet) and self.primes == other.primes

    def __hash__(self):
        return hash(self.primes)

    def __repr__(self):
        return "PlaceSet{infty%s}" % ("".join(",%d" % p for p in self.primes))


def characters_mod(m):
    return unit_group(m).characters()


def conductor(chi):
    # minimal f | m with chi trivial on residues = 1 mod f
    m = chi.modulus
    group = chi.group
    one = CyclotomicNumber.one()
    for f in sorted(d for d in range(1, m + 1) if m % d == 0):
        if all(chi(a) == one for a in group.elements if a % f == 1 % f):
            return f
    raise AssertionError("unreachable: f = m always works")


@lru_cache(maxsize=None)
def _primitive_core_cached(chi):
    f = conductor(chi)
    m = chi.modulus
    src = unit_group(m)
    candidates = []
    for psi in characters_mod(f):
        if all(psi(a) == chi(a) for a in src.elements):
            candidates.append(psi)
    assert len(candidates) == 1, "primitive core not unique for %r" % (chi,)
    return f, candidates[0]


def primitive_core(chi):
    # (f, chi*) with chi* primitive mod f and chi* = chi on units mod m
    return _primitive_core_cached(chi)


def generalized_bernoulli(n, chi):
    # B_{n,chi*} = f^{n-1} sum_{a=1..f} chi*(a) B_n(a/f), through the
    # primitive core; exact cyclotomic value
    if n == 0:
        raise ValueError("generalized Bernoulli number needs n >= 1")
    f, star = primitive_core(chi)
    total = CyclotomicNumber.zero()
    for a in range(1, f + 1):
        c = star(a)
        if not c.is_zero():
            total = total + c * bernoulli_polynomial(n, Fraction(a, f))
    return Fraction(f) ** (n - 1) * total


def l_value(r, chi, places):
    # S-modified L-value at s = r <= 0 of the (possibly imprimitive)
    # character chi mod m:
    #   -B_{1-r,chi*}/(1-r) * prod over {p | m, p not | f} u {p in S, p not | m}
    #                          of (1 - chi*(p) p^{-r})
    assert r <= 0
    m = chi.modulus
    f, star = primitive_core(chi)
    n = 1 - r
    value = -generalized_bernoulli(n, chi) * Fraction(1, n)
    removed = set()
    p = 2
    mm = m
    while mm > 1:
        if mm % p == 0:
            while mm % p == 0:
                mm //= p
            if f % p != 0:
                removed.add(p)
        p += 1
    for p in places.primes:
        if m % p != 0:
            removed.add(p)
    for p in sorted(removed):
        value = value * (CyclotomicNumber.one() - star(p) * (p ** (-r)))
    return value


def partial_zeta_characters(r, a, m, places):
    # route (i): |G|^{-1} sum_chi conj(chi)(a) L_S(r, chi)
    group = unit_group(m)
    assert gcd(a, m) == 1 or m == 1
    total = CyclotomicNumber.zero()
    for chi in group.characters():
        total = total + chi.conjugate()(a) * l_value(r, chi, places)
    value = total * Fraction(1, group.order)
    assert value.is_rational(), "partial zeta came out irrational"
    return value.as_fraction()


def partial_zeta_hurwitz(r, a, m, places):
    # route (ii), valid only when S is exactly {infty} u {p | m}:
    # zeta(1-n, a/m) = -m^{n-1} B_n(a/m) / n  with n = 1 - r
    assert places.is_exactly_ramified(m)
    n = 1 - r
    a = a % m
    if a == 0:
        a = m  # only for m = 1
    return -Fraction(m) ** (n - 1) * bernoulli_polynomial(n, Fraction(a, m)) / n


def partial_zeta(r, a, m, places):
    # S-modified partial zeta of the class of a mod m at s = r <= 0.
    # Requires S to contain every prime dividing m (plus infinity).
    assert r <= 0
    assert gcd(a, m) == 1 or m == 1, "class not coprime to modulus"
    assert places.covers_modulus(m), "place set must cover the modulus"
    if places.is_exactly_ramified(m):
        return partial_zeta_hurwitz(r, a, m, places)
    return partial_zeta_characters(r, a, m, places)
