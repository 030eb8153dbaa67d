# Finite abelian groups with explicit invariant-factor coordinates.
#
# Group protocol used throughout the package (duck-typed, shared with the
# Cayley-table groups in brauer.py):
#   elements    -- list, fixed enumeration order
#   order       -- len(elements)
#   identity
#   op(a, b), inv(a)
#   index(a)    -- position in `elements`
#   label(a)    -- short stable string, used for serialization
#
# FiniteAbelianGroup stores an ascending divisor chain d_1 | d_2 | ... | d_k
# of invariant factors; elements are exponent tuples enumerated
# lexicographically.  Characters are indexed by the same tuples: the
# character with tuple t sends e to zeta_N^(sum_i t_i e_i N/d_i) where
# N = d_k is the exponent.  Character index = lexicographic position.
#
# decompose() turns any concretely-given finite abelian group (elements +
# multiplication) into such coordinates, constructively: pick x of maximal
# order N, split off <x>, recurse on the quotient, and lift quotient
# generators y with y^d = x^s to honest order-d elements y * x^(-s/d).

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .cyclotomic import CyclotomicNumber, euler_phi


@lru_cache(maxsize=None)
def _zeta_cached(n, k):
    return CyclotomicNumber.zeta(n, k)


def _element_order(g, mul, identity):
    n = 1
    x = g
    while x != identity:
        x = mul(x, g)
        n += 1
    return n


def _power(g, e, mul, identity):
    x = identity
    for _ in range(e):
        x = mul(x, g)
    return x


def decompose(elems, mul, identity):
    # Returns (invariants, generators): invariants an ascending divisor
    # chain (d_1, ..., d_k), generators a list of elements with
    # order(generators[i]) == d_i and G the direct product of the <g_i>.
    elems = list(elems)
    if len(elems) == 1:
        return (), []
    orders = {g: _element_order(g, mul, identity) for g in elems}
    exponent = 1
    for o in orders.values():
        exponent = exponent * o // gcd(exponent, o)
    # build x of order == exponent from prime-power pieces
    x = identity
    n = exponent
    p = 2
    while n > 1:
        if n % p == 0:
            pa = 1
            while n % p == 0:
                n //= p
                pa *= p
            carrier = next(g for g in elems if orders[g] % pa == 0)
            piece = _power(carrier, orders[carrier] // pa, mul, identity)
            x = mul(x, piece)
        p += 1 if p == 2 else 2
    assert _element_order(x, mul, identity) == exponent

    # quotient G / <x> on frozenset cosets
    xcyc = []
    t = identity
    for _ in range(exponent):
        xcyc.append(t)
        t = mul(t, x)
    xset = set(xcyc)
    coset_of = {}
    cosets = []
    for g in elems:
        if g in coset_of:
            continue
        cs = frozenset(mul(g, h) for h in xcyc)
        for a in cs:
            coset_of[a] = cs
        cosets.append(cs)
    reps = {cs: min(range(len(elems)), key=lambda i: (elems[i] not in cs, i)) for cs in cosets}

    def qmul(c1, c2):
        return coset_of[mul(elems[reps[c1]], elems[reps[c2]])]

    qid = coset_of[identity]
    qinv, qgens = decompose(cosets, qmul, qid)

    generators = []
    for d, cbar in zip(qinv, qgens):
        y = elems[reps[cbar]]
        yd = _power(y, d, mul, identity)
        s = xcyc.index(yd)
        # y^d = x^s forces d | s (raise both sides to exponent/d), so the
        # corrected lift y * x^(-s/d) has honest order d in its coset
        assert s % d == 0
        y2 = mul(y, _power(x, (-(s // d)) % exponent, mul, identity))
        assert _element_order(y2, mul, identity) == d
        generators.append(y2)
    generators.append(x)
    invariants = tuple(qinv) + (exponent,)
    for a, b in zip(invariants, invariants[1:]):
        assert b % a == 0
    return invariants, generators


def coordinates(elems, mul, identity):
    # Full coordinate map: (FiniteAbelianGroup A, to_tuple, from_tuple)
    # where to_tuple[g] is the exponent tuple of g w.r.t. the decomposition
    # generators and from_tuple its inverse.
    invariants, gens = decompose(elems, mul, identity)
    A = FiniteAbelianGroup(invariants)
    from_tuple = {}
    for e in A.elements:
        g = identity
        for gi, ei in zip(gens, e):
            g = mul(g, _power(gi, ei, mul, identity))
        from_tuple[e] = g
    assert len(set(from_tuple.values())) == len(elems)
    to_tuple = {g: e for e, g in from_tuple.items()}
    return A, to_tuple, from_tuple


class FiniteAbelianGroup:
    # Z/d_1 x ... x Z/d_k, invariants an ascending divisor chain (each > 1;
    # empty tuple means the trivial group).

    def __init__(self, invariants):
        invariants = tuple(int(d) for d in invariants)
        assert all(d > 1 for d in invariants)
        for a, b in zip(invariants, invariants[1:]):
            assert b % a == 0
        self.invariants = invariants
        self.exponent = invariants[-1] if invariants else 1
        self.elements = list(product(*[range(d) for d in invariants]))
        self.order = len(self.elements)
        self.identity = tuple(0 for _ in invariants)
        self._index = {e: i for i, e in enumerate(self.elements)}

    def op(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariants))

    def inv(self, a):
        return tuple((-x) % d for x, d in zip(a, self.invariants))

    def index(self, a):
        return self._index[a]

    def label(self, a):
        return "a" + "_".join(str(x) for x in a) if a else "e"

    def characters(self):
        return [AbelianCharacter(self, t) for t in self.elements]

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.invariants == other.invariants

    def __hash__(self):
        return hash(self.invariants)

    def __repr__(self):
        return "FiniteAbelianGroup%r" % (self.invariants,)


class AbelianCharacter:
    # chi_t(e) = zeta_N ^ (sum_i t_i e_i N / d_i),  N the group exponent

    __slots__ = ("group", "tuple")

    def __init__(self, group, t):
        self.group = group
        self.tuple = tuple(t)

    @property
    def index(self):
        return self.group.index(self.tuple)

    def __call__(self, e):
        N = self.group.exponent
        k = sum(t * x * (N // d) for t, x, d in
                zip(self.tuple, e, self.group.invariants)) % N
        return _zeta_cached(N, k)

    def is_trivial(self):
        return all(t == 0 for t in self.tuple)

    def __mul__(self, other):
        assert self.group == other.group
        return AbelianCharacter(self.group, self.group.op(self.tuple, other.tuple))

    def inverse(self):
        return AbelianCharacter(self.group, self.group.inv(self.tuple))

    conjugate = inverse

    def __pow__(self, e):
        t = self.tuple
        return AbelianCharacter(
            self.group,
            tuple((x * e) % d for x, d in zip(t, self.group.invariants)))

    def order(self):
        n = 1
        c = self
        while not c.is_trivial():
            c = c * self
            n += 1
        return n

    def __eq__(self, other):
        return (isinstance(other, AbelianCharacter)
                and self.group == other.group and self.tuple == other.tuple)

    def __hash__(self):
        return hash((self.group, self.tuple))

    def __repr__(self):
        return "AbelianCharacter(%r, %r)" % (self.group, self.tuple)


class ResidueGroup:
    # A subgroup of (Z/m)^* given by an explicit residue list.  Elements are
    # ints in [0, m), enumerated in increasing residue order; labels "s<a>".

    def __init__(self, modulus, residues):
        self.modulus = modulus
        self.elements = sorted(int(a) % modulus for a in residues)
        assert len(set(self.elements)) == len(self.elements)
        self.order = len(self.elements)
        self.identity = 1 % modulus
        assert self.identity in self.elements
        self._index = {a: i for i, a in enumerate(self.elements)}
        for a in self.elements:
            assert gcd(a, modulus) == 1 or modulus == 1
        self._coords = None

    def op(self, a, b):
        return (a * b) % self.modulus

    def inv(self, a):
        return pow(a, -1, self.modulus) if self.modulus > 1 else 0

    def index(self, a):
        return self._index[a]

    def label(self, a):
        return "s%d" % a

    def __contains__(self, a):
        return (a % self.modulus) in self._index

    # --- abelian coordinates and characters ---

    def abelian_coordinates(self):
        if self._coords is None:
            self._coords = coordinates(self.elements, self.op, self.identity)
        return self._coords

    def characters(self):
        A, to_tuple, _ = self.abelian_coordinates()
        return [ResidueCharacter(self, chi, to_tuple) for chi in A.characters()]

    def character(self, index):
        return self.characters()[index]

    def __eq__(self, other):
        return (isinstance(other, ResidueGroup)
                and self.modulus == other.modulus
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.modulus, tuple(self.elements)))

    def __repr__(self):
        return "ResidueGroup(%d, order %d)" % (self.modulus, self.order)


class ResidueCharacter:
    # Character of a ResidueGroup.  Calling it on an integer reduces mod m;
    # integers sharing a factor with m give 0 (the Dirichlet convention),
    # integers coprime to m but outside the subgroup are an error.

    __slots__ = ("group", "inner", "_to_tuple")

    def __init__(self, group, inner, to_tuple):
        self.group = group
        self.inner = inner
        self._to_tuple = to_tuple

    @property
    def index(self):
        return self.inner.index

    @property
    def modulus(self):
        return self.group.modulus

    def __call__(self, a):
        m = self.group.modulus
        a = a % m
        if a in self._to_tuple:
            return self.inner(self._to_tuple[a])
        if m == 1 or gcd(a, m) != 1:
            return CyclotomicNumber.zero()
        raise KeyError("residue %d outside subgroup of (Z/%d)^*" % (a, m))

    def is_trivial(self):
        return self.inner.is_trivial()

    def order(self):
        return self.inner.order()

    def __mul__(self, other):
        assert self.group == other.group
        return ResidueCharacter(self.group, self.inner * other.inner, self._to_tuple)

    def inverse(self):
        return ResidueCharacter(self.group, self.inner.inverse(), self._to_tuple)

    conjugate = inverse

    def __pow__(self, e):
        return ResidueCharacter(self.group, self.inner ** e, self._to_tuple)

    def is_odd(self):
        # value at -1 is -1 (only meaningful when -1 lies in the subgroup)
        return self(-1) == CyclotomicNumber.from_rational(-1)

    def is_even(self):
        return self(-1) == CyclotomicNumber.one()

    def __eq__(self, other):
        return (isinstance(other, ResidueCharacter)
                and self.group == other.group and self.inner == other.inner)

    def __hash__(self):
        return hash((self.group, self.inner))

    def __repr__(self):
        return "ResidueCharacter(mod %d, index %d)" % (self.group.modulus, self.index)


@lru_cache(maxsize=None)
def unit_group(m):
    assert m >= 1
    return ResidueGroup(m, [a for a in range(m) if gcd(a, m) == 1])


def subgroup_of_units(m, gens):
    # subgroup of (Z/m)^* generated by the given residues
    seen = {1 % m}
    frontier = [1 % m]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = (a * g) % m
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return ResidueGroup(m, sorted(seen))


def squares_subgroup(m):
    g = unit_group(m)
    return ResidueGroup(m, sorted({(a * a) % m for a in g.elements}))
