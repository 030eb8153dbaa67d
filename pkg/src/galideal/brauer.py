# Finite groups presented by Cayley tables: subgroup lattices carrying
# commutator subgroups and abelianizations, conjugacy classes, and the
# class space (the rational vector space on conjugacy classes).
#
# The central map here sends a conjugacy class, for every subgroup H, to
# the sum over cosets xH of the images of x^-1 g x in H^ab (zero when the
# conjugate falls outside H).  Stacking these components over the full
# subgroup lattice gives an injective integer matrix out of the class
# space; ideals over the class space are defined by pulling per-subgroup
# component lattices back through it.  A quotient map of groups induces
# compatible maps on both sides, and the resulting square is checked as an
# exact matrix identity.

from fractions import Fraction
from typing import NamedTuple

from .abelian import coordinates
from .cyclotomic import CyclotomicNumber
from .groupring import GroupRingElement, psi_eval
from .intmat import mat_mul, rank
from .lattice import (canonicalize, contains_vector, map_image,
                      map_preimage)

SUBGROUP_ORDER_BUDGET = 32


class FiniteGroup:
    # Elements are the integers 0..order-1; table[a][b] is the index of the
    # product.  Construction finds the identity, builds the inverse table,
    # and (for order <= 32) checks associativity exhaustively.

    def __init__(self, table, labels=None):
        table = [tuple(row) for row in table]
        n = len(table)
        assert n >= 1
        for row in table:
            assert len(row) == n and all(0 <= x < n for x in row)
        self.order = n
        self.table = tuple(table)
        self.elements = tuple(range(n))
        if labels is None:
            labels = ["g%d" % i for i in range(n)]
        self.labels = tuple(str(s) for s in labels)
        assert len(self.labels) == n and len(set(self.labels)) == n
        ident = [e for e in range(n)
                 if all(table[e][j] == j and table[j][e] == j for j in range(n))]
        if len(ident) != 1:
            raise ValueError("table has no two-sided identity")
        self.identity = ident[0]
        invs = []
        for a in range(n):
            js = [b for b in range(n) if table[a][b] == self.identity]
            if len(js) != 1 or table[js[0]][a] != self.identity:
                raise ValueError("element %d has no two-sided inverse" % a)
            invs.append(js[0])
        self.inverses = tuple(invs)
        if n <= SUBGROUP_ORDER_BUDGET:
            for a in range(n):
                for b in range(n):
                    ab = table[a][b]
                    for c in range(n):
                        if table[ab][c] != table[a][table[b][c]]:
                            raise ValueError(
                                "table is not associative at (%d, %d, %d)" % (a, b, c))
        self._classes = None
        self._center = None

    def op(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def index(self, a):
        return a

    def label(self, a):
        return self.labels[a]

    def conjugate(self, w, a):
        # w a w^-1
        return self.table[self.table[w][a]][self.inverses[w]]

    @property
    def conjugacy_classes(self):
        if self._classes is None:
            seen = set()
            classes = []
            for a in self.elements:
                if a in seen:
                    continue
                cls = frozenset(self.conjugate(w, a) for w in self.elements)
                seen |= cls
                classes.append(cls)
            self._classes = tuple(sorted(classes, key=min))
        return self._classes

    @property
    def center(self):
        if self._center is None:
            self._center = tuple(
                z for z in self.elements
                if all(self.table[z][g] == self.table[g][z] for g in self.elements))
        return self._center

    def is_abelian(self):
        return len(self.center) == self.order

    def __repr__(self):
        return "FiniteGroup(order %d)" % self.order


def from_cayley_text(text):
    # First line: the order n.  Next n lines: rows of the table as 0-based
    # indices.  An optional final line gives the n element labels.
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty Cayley table")
    n = int(lines[0])
    if len(lines) < n + 1:
        raise ValueError("expected %d table rows, found %d" % (n, len(lines) - 1))
    table = [[int(tok) for tok in lines[1 + i].split()] for i in range(n)]
    labels = None
    if len(lines) > n + 1:
        labels = lines[n + 1].split()
    return FiniteGroup(table, labels)


def to_cayley_text(G):
    rows = [str(G.order)]
    rows += [" ".join(str(x) for x in row) for row in G.table]
    rows.append(" ".join(G.labels))
    return "\n".join(rows) + "\n"


def from_group(g):
    # Re-present any group with the elements/op/inv/label protocol as a
    # Cayley table, preserving element order and labels.
    elems = list(g.elements)
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[g.op(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, [g.label(e) for e in elems])


# ---------------------------------------------------------------------------
# permutation-built standard groups

def _perm_mul(p, q):
    # apply q first, then p
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_label(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + "".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


def _perm_group(perms):
    perms = list(perms)
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[_perm_mul(a, b)] for b in perms] for a in perms]
    return FiniteGroup(table, [_perm_label(p) for p in perms])


def cyclic_group(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, ["e"] + ["t%d" % i for i in range(1, n)])


def product_cyclic(n, m):
    pairs = [(i, j) for i in range(n) for j in range(m)]
    pos = {p: k for k, p in enumerate(pairs)}
    table = [[pos[((a + c) % n, (b + d) % m)] for (c, d) in pairs]
             for (a, b) in pairs]
    return FiniteGroup(table, ["u%dv%d" % p for p in pairs])


def symmetric3():
    from itertools import permutations
    return _perm_group(sorted(permutations(range(3))))


def alternating4():
    from itertools import permutations

    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    return _perm_group(sorted(p for p in permutations(range(4)) if sign(p) == 1))


def dihedral4():
    # symmetries of a square on vertices 1..4: rotations then reflections
    e = (0, 1, 2, 3)
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    rots = [e, r, _perm_mul(r, r), _perm_mul(r, _perm_mul(r, r))]
    return _perm_group(rots + [_perm_mul(rot, s) for rot in rots])


def quaternion8():
    # units {1, -1, i, -i, j, -j, k, -k}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def unpack(x):
        # (sign, axis) with axis in "1ijk"
        return (-1 if x.startswith("-") else 1), x.lstrip("-")

    rules = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
             ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
             ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
             ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
             ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
             ("i", "k"): (-1, "j")}

    def mul(x, y):
        sx, ax = unpack(x)
        sy, ay = unpack(y)
        s, a = rules[(ax, ay)]
        s *= sx * sy
        return ("-" if s < 0 else "") + a

    pos = {nm: i for i, nm in enumerate(names)}
    table = [[pos[mul(a, b)] for b in names] for a in names]
    return FiniteGroup(table, names)


BUILTIN_GROUPS = {
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C6": lambda: cyclic_group(6),
    "C2xC2": lambda: product_cyclic(2, 2),
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
    "A4": alternating4,
}


# ---------------------------------------------------------------------------
# subgroups

def closure(G, seed):
    # smallest subgroup containing the seed elements
    cur = {G.identity} | set(seed)
    frontier = list(cur)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(cur):
                for c in (G.op(a, b), G.op(b, a)):
                    if c not in cur:
                        cur.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(cur)


class SubgroupRecord:
    # A subgroup by its element set, with its commutator subgroup, the
    # abelianization presented as a quotient Cayley table on cosets, and
    # the projection onto it.

    def __init__(self, G, elements):
        self.group = G
        self.elements = tuple(sorted(elements))
        eset = set(self.elements)
        comm = closure(G, {
            G.op(G.op(a, b), G.op(G.inv(a), G.inv(b)))
            for a in self.elements for b in self.elements})
        assert comm <= eset
        for h in self.elements:
            assert all(G.conjugate(h, c) in comm for c in comm), \
                "commutator subgroup is not normal"
        self.commutator = tuple(sorted(comm))
        cosets = []
        placed = {}
        for h in self.elements:
            if h in placed:
                continue
            cs = frozenset(G.op(h, c) for c in self.commutator)
            for x in cs:
                placed[x] = len(cosets)
            cosets.append(cs)
        order = sorted(range(len(cosets)), key=lambda i: min(cosets[i]))
        self.cosets = tuple(cosets[i] for i in order)
        self.project = {}
        for i, cs in enumerate(self.cosets):
            for x in cs:
                self.project[x] = i
        reps = [min(cs) for cs in self.cosets]
        table = [[self.project[G.op(a, b)] for b in reps] for a in reps]
        self.ab = FiniteGroup(table, [G.label(r) for r in reps])
        self._characters = None

    @property
    def order(self):
        return len(self.elements)

    def contains(self, g):
        return g in self.project or g in set(self.elements)

    def ab_labels(self):
        return self.ab.labels

    def push(self, x):
        # Q[H] (supported inside the subgroup) -> Q[H^ab]
        out = {}
        for g, c in x.coeffs.items():
            q = self.project[g]
            out[q] = out.get(q, Fraction(0)) + c
        return GroupRingElement(self.ab, out)

    def characters(self):
        # all characters of the abelianization, as callables on its indices
        if self._characters is None:
            A, to_tuple, _ = coordinates(
                list(self.ab.elements), self.ab.op, self.ab.identity)
            self._characters = tuple(
                _AbCharacter(chi, to_tuple) for chi in A.characters())
        return self._characters

    def __repr__(self):
        return "SubgroupRecord(order %d: %s)" % (
            self.order, ",".join(self.group.label(h) for h in self.elements))


class _AbCharacter:
    __slots__ = ("inner", "to_tuple")

    def __init__(self, inner, to_tuple):
        self.inner = inner
        self.to_tuple = to_tuple

    def __call__(self, q):
        return self.inner(self.to_tuple[q])


def subgroup_lattice(G):
    # every subgroup exactly once, ordered by (order, element labels)
    if G.order > SUBGROUP_ORDER_BUDGET:
        raise ValueError("order budget exceeded: %d > %d"
                         % (G.order, SUBGROUP_ORDER_BUDGET))
    subs = {frozenset([G.identity])}
    frontier = list(subs)
    while frontier:
        nxt = []
        for S in frontier:
            for g in G.elements:
                if g in S:
                    continue
                T = closure(G, S | {g})
                if T not in subs:
                    subs.add(T)
                    nxt.append(T)
        frontier = nxt
    key = lambda S: (len(S), sorted(G.label(h) for h in S))
    return [SubgroupRecord(G, S) for S in sorted(subs, key=key)]


def conjugate_set(G, elements, w):
    return frozenset(G.conjugate(w, h) for h in elements)


def record_index(records, elements):
    eset = tuple(sorted(elements))
    for i, rec in enumerate(records):
        if rec.elements == eset:
            return i
    raise KeyError("no record for subgroup %r" % (eset,))


# ---------------------------------------------------------------------------
# the class space and the component map

class ClassSpace:
    # basis = conjugacy classes, labelled by their smallest element's label

    def __init__(self, G):
        self.group = G
        self.classes = G.conjugacy_classes
        self.labels = tuple(G.label(min(cls)) for cls in self.classes)
        self._class_of = {}
        for i, cls in enumerate(self.classes):
            for g in cls:
                self._class_of[g] = i

    @property
    def dimension(self):
        return len(self.classes)

    def class_of(self, g):
        return self._class_of[g]

    def element_class_vector(self, x):
        # Q[G] -> Q{G}: sum the coefficients within each class
        v = [Fraction(0)] * self.dimension
        for g, c in x.coeffs.items():
            v[self._class_of[g]] += c
        return v


class BrauerMap(NamedTuple):
    group: "FiniteGroup"
    records: list
    space: ClassSpace
    matrix: list          # stacked component blocks x class basis, integer
    offsets: tuple        # row offset of each record's block

    @property
    def rank(self):
        return rank(self.matrix)

    @property
    def injective(self):
        return self.rank == self.space.dimension

    def block(self, k):
        lo = self.offsets[k]
        hi = lo + self.records[k].ab.order
        return [row[:] for row in self.matrix[lo:hi]]

    def component(self, class_index, k):
        # the k-th subgroup's component of the given class, in Q[H^ab]
        rec = self.records[k]
        lo = self.offsets[k]
        coeffs = {q: Fraction(self.matrix[lo + q][class_index])
                  for q in rec.ab.elements}
        return GroupRingElement(rec.ab, coeffs)

    def long_labels(self):
        out = []
        for k, rec in enumerate(self.records):
            out.extend("H%02d:%s" % (k, lab) for lab in rec.ab_labels())
        return tuple(out)


def coset_representatives(G, elements):
    # left cosets xH, one representative each, in increasing element order
    eset = set(elements)
    reps = []
    seen = set()
    for x in G.elements:
        if x in seen:
            continue
        reps.append(x)
        seen |= {G.op(x, h) for h in eset}
    return reps


def bgstar(G, records=None):
    # For each class (by its smallest representative) and each subgroup H:
    # sum over cosets xH with x^-1 g x in H of the image of x^-1 g x in
    # H^ab.  The value is independent of the representative g and of the
    # coset representatives x.
    if records is None:
        records = subgroup_lattice(G)
    space = ClassSpace(G)
    offsets = []
    total = 0
    for rec in records:
        offsets.append(total)
        total += rec.ab.order
    matrix = [[0] * space.dimension for _ in range(total)]
    for c, cls in enumerate(space.classes):
        g = min(cls)
        for k, rec in enumerate(records):
            lo = offsets[k]
            for x in coset_representatives(G, rec.elements):
                y = G.conjugate(G.inv(x), g)
                if y in rec.project:
                    matrix[lo + rec.project[y]][c] += 1
    return BrauerMap(G, records, space, matrix, tuple(offsets))


# ---------------------------------------------------------------------------
# certification of the component map against induced characters

def _generating_set(G):
    gens = []
    cur = frozenset([G.identity])
    for g in G.elements:
        if g not in cur:
            gens.append(g)
            cur = closure(G, cur | {g})
            if len(cur) == G.order:
                break
    assert len(cur) == G.order
    return gens


def _induced_matrix(G, rec, chi, g, reps):
    # monomial matrix of g acting on the cosets xH, twisted by chi on H^ab
    zero = CyclotomicNumber.zero()
    eset = set(rec.elements)
    n = len(reps)
    M = [[zero] * n for _ in range(n)]
    for j, xj in enumerate(reps):
        gx = G.op(g, xj)
        for i, xi in enumerate(reps):
            y = G.op(G.inv(xi), gx)
            if y in eset:
                M[i][j] = chi(rec.project[y])
                break
        else:
            raise AssertionError("coset representatives do not cover")
    return M


def _cyc_mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            t = CyclotomicNumber.zero()
            for k in range(m):
                t = t + A[i][k] * B[k][j]
            row.append(t)
        out.append(row)
    return out


class DualityReport(NamedTuple):
    passed: bool
    checked: int
    witness: tuple  # (subgroup index, character index, class label) or ()


def duality_certificate(bmap):
    # Certify every component against the trace of the induced twisted
    # permutation representation, computed independently from the Cayley
    # table.  The representation property itself is verified on a
    # generating set, which extends to all elements by induction.
    G = bmap.group
    gens = _generating_set(G)
    checked = 0
    for k, rec in enumerate(bmap.records):
        reps = coset_representatives(G, rec.elements)
        for ci, chi in enumerate(rec.characters()):
            mats = {g: _induced_matrix(G, rec, chi, g, reps) for g in G.elements}
            ident = mats[G.identity]
            for i in range(len(reps)):
                for j in range(len(reps)):
                    expect = CyclotomicNumber.one() if i == j else CyclotomicNumber.zero()
                    if ident[i][j] != expect:
                        return DualityReport(False, checked, (k, ci, "identity"))
            for g in gens:
                for x in G.elements:
                    if _cyc_mat_mul(mats[g], mats[x]) != mats[G.op(g, x)]:
                        return DualityReport(False, checked,
                                             (k, ci, "hom@%s,%s" % (G.label(g), G.label(x))))
            for c in range(bmap.space.dimension):
                comp = bmap.component(c, k)
                lhs = psi_eval(comp, chi)
                M = mats[min(bmap.space.classes[c])]
                tr = CyclotomicNumber.zero()
                for i in range(len(reps)):
                    tr = tr + M[i][i]
                if lhs != tr:
                    return DualityReport(False, checked,
                                         (k, ci, bmap.space.labels[c]))
                checked += 1
    return DualityReport(True, checked, ())


# ---------------------------------------------------------------------------
# component transport along conjugation, and the preimage ideal

def transport_matrix(records, i, j, w):
    # H^ab of record i -> H^ab of record j along h -> w h w^-1
    src, dst = records[i], records[j]
    G = src.group
    assert conjugate_set(G, src.elements, w) == frozenset(dst.elements)
    P = [[0] * src.ab.order for _ in range(dst.ab.order)]
    for u, cs in enumerate(src.cosets):
        v = dst.project[G.conjugate(w, min(cs))]
        P[v][u] = 1
    return P


def transport_component(records, i, j, w, ideal):
    return map_image(ideal, transport_matrix(records, i, j, w),
                     records[j].ab_labels())


def _conjugating_element(G, records, i, j):
    dst = frozenset(records[j].elements)
    for w in G.elements:
        if conjugate_set(G, records[i].elements, w) == dst:
            return w
    return None


def complete_components(bmap, components):
    # Fill in missing subgroup components by transporting a conjugate
    # record's datum; every conjugacy orbit of subgroups must have one.
    G = bmap.group
    records = bmap.records
    full = dict(components)
    for i, rec in enumerate(records):
        if i in full:
            assert full[i].labels == rec.ab_labels(), \
                "component %d lives over the wrong ambient" % i
            continue
        for j in components:
            w = _conjugating_element(G, records, j, i)
            if w is not None:
                full[i] = transport_component(records, j, i, w, components[j])
                break
        else:
            raise ValueError(
                "no component datum for subgroup %r or any conjugate" % (rec,))
    return full


def conjugation_consistency(bmap, components):
    # are the components invariant under transporting along every w in G?
    G = bmap.group
    records = bmap.records
    for i in range(len(records)):
        for w in G.elements:
            j = record_index(records, conjugate_set(G, records[i].elements, w))
            moved = transport_component(records, i, j, w, components[i])
            if moved != components[j]:
                return False, (i, j, G.label(w))
    return True, ()


def product_lattice(bmap, components):
    full = complete_components(bmap, components)
    labels = bmap.long_labels()
    n = len(labels)
    vecs = []
    for k in range(len(bmap.records)):
        lo = bmap.offsets[k]
        for v in full[k].vectors():
            long = [Fraction(0)] * n
            for t, x in enumerate(v):
                long[lo + t] = x
            vecs.append(long)
    return canonicalize(labels, vecs)


def nonabelian_J(bmap, components):
    # the sublattice of the class space whose image under the component
    # map lands in every prescribed per-subgroup lattice
    target = product_lattice(bmap, components)
    return map_preimage(target, bmap.matrix, bmap.space.labels)


def component_images(bmap, ideal):
    # synthetic per-subgroup data: the images of one class-space lattice
    # under each component block
    assert ideal.labels == bmap.space.labels, "ambient mismatch"
    return {k: map_image(ideal, bmap.block(k), rec.ab_labels())
            for k, rec in enumerate(bmap.records)}


# ---------------------------------------------------------------------------
# quotient maps

def quotient_group(G, normal_elements):
    # (Q, proj) with proj a list sending each element to its coset's index
    nset = frozenset(normal_elements)
    assert G.identity in nset
    for h in nset:
        assert all(G.op(G.op(a, h), G.inv(a)) in nset for a in G.elements), \
            "subgroup is not normal"
    cosets = []
    placed = {}
    for g in G.elements:
        if g in placed:
            continue
        cs = frozenset(G.op(g, h) for h in nset)
        for x in cs:
            placed[x] = len(cosets)
        cosets.append(cs)
    order = sorted(range(len(cosets)), key=lambda i: min(cosets[i]))
    rank_of = {old: new for new, old in enumerate(order)}
    proj = [rank_of[placed[g]] for g in G.elements]
    cosets = [cosets[i] for i in order]
    reps = [min(cs) for cs in cosets]
    table = [[proj[G.op(a, b)] for b in reps] for a in reps]
    Q = FiniteGroup(table, [G.label(r) for r in reps])
    return Q, proj


def class_quotient_matrix(space_big, space_small, proj):
    # Q{G} -> Q{G/N} on class bases
    M = [[0] * space_big.dimension for _ in range(space_small.dimension)]
    for c, cls in enumerate(space_big.classes):
        M[space_small.class_of(proj[min(cls)])][c] = 1
    return M


def component_quotient_matrix(bmap_big, bmap_small, proj):
    # the dual of the inflation-assembly map: for each subgroup J of the
    # quotient, take the component at its full preimage H and push it
    # along H^ab -> J^ab; components at subgroups that are not full
    # preimages are dropped
    G = bmap_big.group
    rows = sum(rec.ab.order for rec in bmap_small.records)
    cols = sum(rec.ab.order for rec in bmap_big.records)
    M = [[0] * cols for _ in range(rows)]
    for kq, rec_q in enumerate(bmap_small.records):
        jset = set(rec_q.elements)
        pre = [g for g in G.elements if proj[g] in jset]
        kg = record_index(bmap_big.records, pre)
        rec_g = bmap_big.records[kg]
        lo_q = bmap_small.offsets[kq]
        lo_g = bmap_big.offsets[kg]
        for u, cs in enumerate(rec_g.cosets):
            v = rec_q.project[proj[min(cs)]]
            M[lo_q + v][lo_g + u] = 1
    return M


class NaturalityReport(NamedTuple):
    square_commutes: bool
    contained: bool
    witness: tuple

    @property
    def passed(self):
        return self.square_commutes and self.contained


def quotient_naturality(G, normal_elements, components, components_small=None):
    # 1) the matrix identity: pushing components forward after the big
    #    component map equals the small component map after the class
    #    quotient; 2) the preimage ideal maps into the quotient's.
    Q, proj = quotient_group(G, normal_elements)
    bmap_big = bgstar(G)
    bmap_small = bgstar(Q)
    clsmat = class_quotient_matrix(bmap_big.space, bmap_small.space, proj)
    alphastar = component_quotient_matrix(bmap_big, bmap_small, proj)
    left = mat_mul(alphastar, bmap_big.matrix)
    right = mat_mul(bmap_small.matrix, clsmat)
    if left != right:
        return NaturalityReport(False, False, ("matrix identity",))
    full_big = complete_components(bmap_big, components)
    if components_small is None:
        components_small = {}
        for kq, rec_q in enumerate(bmap_small.records):
            jset = set(rec_q.elements)
            pre = [g for g in G.elements if proj[g] in jset]
            kg = record_index(bmap_big.records, pre)
            rec_g = bmap_big.records[kg]
            push = [[0] * rec_g.ab.order for _ in range(rec_q.ab.order)]
            for u, cs in enumerate(rec_g.cosets):
                push[rec_q.project[proj[min(cs)]]][u] = 1
            components_small[kq] = map_image(full_big[kg], push,
                                             rec_q.ab_labels())
    J_big = nonabelian_J(bmap_big, full_big)
    J_small = nonabelian_J(bmap_small, components_small)
    image = map_image(J_big, clsmat, bmap_small.space.labels)
    for v in image.vectors():
        if not contains_vector(J_small, v):
            return NaturalityReport(True, False, (tuple(v),))
    return NaturalityReport(True, True, ())
