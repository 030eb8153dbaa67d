# Finitely generated Z[1/2][G]-submodules of Q[G] (or any labelled Q^n),
# held as canonical integer lattices.
#
# Representation: (labels, denominator d, columns).  The module is the
# Z[1/2]-span of {column / d}.  Canonical form:
#   - d odd and positive  (2-power content is absorbed: 2 is invertible)
#   - columns an integer matrix in column HNF with no zero columns
#   - every elementary divisor of the column lattice is odd, and
#     gcd(d, all elementary divisors) = 1
# Uniqueness: write the module M = L/d.  The integer lattice
# Lambda = (d M) cap Z^n is intrinsic, its 2-saturation
# {x in Z^n : 2^k x in Lambda} likewise, and d is minimal among odd
# denominators presenting M over an integer lattice — so equal modules get
# identical fields.  Canonicalization: clear denominators, diagonalize
# tracking a span-preserving unimodular W (intmat.snf_diagonal_with_span),
# strip 2-parts of the elementary divisors, cancel the common odd content
# against d, then column-HNF.
#
# Membership is decided by coordinate denominators (power of 2 <=> member),
# never by iterative doubling.  The zero module (no columns, d = 1)
# participates in everything.

from fractions import Fraction
from math import gcd

from .groupring import GroupRingElement
from .intmat import (
    column_kernel,
    hnf_columns,
    mat_vec,
    rank,
    row_kernel,
    snf_diagonal_with_span,
    solve,
)


def _odd_part(x):
    x = abs(x)
    while x and x % 2 == 0:
        x //= 2
    return x


def _is_power_of_two(x):
    return x >= 1 and (x & (x - 1)) == 0


class FractionalIdeal:
    __slots__ = ("labels", "denominator", "columns", "two_saturated")

    def __init__(self, labels, denominator, columns):
        # trusted constructor: canonicalize() is the public entry
        self.labels = tuple(labels)
        self.denominator = denominator
        self.columns = tuple(tuple(c) for c in columns)
        self.two_saturated = True
        assert denominator >= 1 and denominator % 2 == 1

    @property
    def dimension(self):
        return len(self.labels)

    @property
    def rank(self):
        return len(self.columns)

    def is_zero(self):
        return not self.columns

    def vectors(self):
        # generators as Fraction vectors
        d = self.denominator
        return [[Fraction(x, d) for x in col] for col in self.columns]

    def __eq__(self, other):
        if not isinstance(other, FractionalIdeal):
            return NotImplemented
        return (self.labels == other.labels
                and self.denominator == other.denominator
                and self.columns == other.columns)

    def __hash__(self):
        return hash((self.labels, self.denominator, self.columns))

    def __repr__(self):
        return "FractionalIdeal(dim %d, rank %d, den %d)" % (
            self.dimension, self.rank, self.denominator)


def canonicalize(labels, vectors):
    # vectors: iterable of length-n sequences of Fractions/ints
    labels = tuple(labels)
    n = len(labels)
    vs = []
    for v in vectors:
        v = [Fraction(x) for x in v]
        assert len(v) == n
        if any(v):
            vs.append(v)
    if not vs:
        return FractionalIdeal(labels, 1, [])
    d0 = 1
    for v in vs:
        for x in v:
            d0 = d0 * x.denominator // gcd(d0, x.denominator)
    A = [[int(v[r] * d0) for v in vs] for r in range(n)]
    diag, W = snf_diagonal_with_span(A)
    odds = [_odd_part(di) for di in diag]
    d = _odd_part(d0)
    g0 = d
    for o in odds:
        g0 = gcd(g0, o)
    cols = [[(o // g0) * W[r][i] for r in range(n)] for i, o in enumerate(odds)]
    d //= g0
    H = hnf_columns([[cols[i][r] for i in range(len(cols))] for r in range(n)])
    columns = [tuple(row[j] for row in H) for j in range(len(H[0]))] if H and H[0] else []
    return FractionalIdeal(labels, d, columns)


def group_labels(group):
    return tuple(group.label(g) for g in group.elements)


def element_vector(group, x):
    return [x.coefficient(g) for g in group.elements]


def element_from_vector(group, v):
    return GroupRingElement(group, dict(zip(group.elements, map(Fraction, v))))


def from_generators(group, gens):
    # Z[1/2][G]-module generated by gens: close under the G-action, then
    # canonicalize.  Empty generator list gives the zero module.
    vecs = []
    for x in gens:
        assert x.group == group and x.scalars == "rational"
        for g in group.elements:
            shifted = GroupRingElement.basis(group, g) * x
            vecs.append(element_vector(group, shifted))
    return canonicalize(group_labels(group), vecs)


def unit_ideal(group):
    return from_generators(group, [GroupRingElement.one(group)])


def zero_ideal(labels):
    return FractionalIdeal(tuple(labels), 1, [])


def contains_vector(ideal, vector):
    # is vector (Fractions) in the Z[1/2]-span?
    vector = [Fraction(x) for x in vector]
    assert len(vector) == ideal.dimension
    if not any(vector):
        return True
    if ideal.is_zero():
        return False
    A = [[col[r] for col in ideal.columns] for r in range(ideal.dimension)]
    target = [x * ideal.denominator for x in vector]
    y = solve(A, target)
    if y is None:
        return False
    return all(_is_power_of_two(c.denominator) for c in y)


def contains_vector_locally(ideal, vector, ell):
    # membership after tensoring with Z_ell (ell odd): all coordinate
    # denominators prime to ell
    assert ell % 2 == 1 and ell > 1
    vector = [Fraction(x) for x in vector]
    if not any(vector):
        return True
    if ideal.is_zero():
        return False
    A = [[col[r] for col in ideal.columns] for r in range(ideal.dimension)]
    target = [x * ideal.denominator for x in vector]
    y = solve(A, target)
    if y is None:
        return False
    return all(c.denominator % ell != 0 for c in y)


def contains_element(ideal, group, x):
    assert group_labels(group) == ideal.labels, "ambient mismatch"
    return contains_vector(ideal, element_vector(group, x))


def compare(I, J):
    # "equal" | "subset" (I in J) | "superset" | "incomparable"
    assert I.labels == J.labels, "ambient mismatch"
    if I == J:
        return "equal"
    fwd = all(contains_vector(J, v) for v in I.vectors())
    bwd = all(contains_vector(I, v) for v in J.vectors())
    if fwd and bwd:
        # same module must have identical canonical form
        raise AssertionError("canonical forms differ for equal modules")
    if fwd:
        return "subset"
    if bwd:
        return "superset"
    return "incomparable"


def ideal_sum(I, J):
    assert I.labels == J.labels, "ambient mismatch"
    return canonicalize(I.labels, I.vectors() + J.vectors())


def ideal_product(I, J, group):
    # the module product: span of pairwise products of the generators,
    # closed under the group action (for commutative group rings this is
    # the full product module)
    assert group_labels(group) == I.labels == J.labels, "ambient mismatch"
    gi = [element_from_vector(group, v) for v in I.vectors()]
    gj = [element_from_vector(group, v) for v in J.vectors()]
    return from_generators(group, [x * y for x in gi for y in gj])


def multiplication_matrix(group, x):
    # matrix of y -> x*y on Q[G] in the basis `group.elements`
    cols = []
    for g in group.elements:
        xg = x * GroupRingElement.basis(group, g)
        cols.append(element_vector(group, xg))
    return [[cols[j][i] for j in range(len(cols))] for i in range(group.order)]


def scale_by(ideal, group, x):
    # image of the ideal under multiplication by x in Q[G]
    assert group_labels(group) == ideal.labels, "ambient mismatch"
    T = multiplication_matrix(group, x)
    return map_image(ideal, T, ideal.labels)


def map_image(ideal, T, out_labels):
    # lattice generated by T(generators), canonicalized in the codomain
    out_labels = tuple(out_labels)
    assert len(T) == len(out_labels)
    if ideal.columns:
        assert len(T[0]) == ideal.dimension
    vecs = [mat_vec(T, v) for v in ideal.vectors()]
    return canonicalize(out_labels, vecs)


def _clear_denominators(T):
    lcm = 1
    for row in T:
        for x in row:
            f = Fraction(x)
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    return [[int(Fraction(x) * lcm) for x in row] for row in T]


def map_preimage(ideal, T, in_labels):
    # {x : T(x) in ideal} for an injective linear map T (matrix over Q,
    # codomain = ideal's ambient).  Intersect the ideal with im(T) via the
    # left kernel, then pull back through T.
    in_labels = tuple(in_labels)
    n_out, n_in = len(T), len(in_labels)
    assert n_out == ideal.dimension
    Ti = _clear_denominators(T)
    if rank(Ti) != n_in:
        raise ValueError("map is not injective; preimage is not a lattice")
    if ideal.is_zero():
        return zero_ideal(in_labels)
    K = row_kernel(Ti)  # rows u with u.T = 0, saturated
    B = [[col[r] for col in ideal.columns] for r in range(n_out)]
    if K:
        M = [[sum(k[r] * B[r][j] for r in range(n_out))
              for j in range(len(ideal.columns))] for k in K]
        coeffs = column_kernel(M)
    else:
        # T surjective onto the ambient: the whole ideal is in the image
        coeffs = [[1 if i == j else 0 for i in range(len(ideal.columns))]
                  for j in range(len(ideal.columns))]
    pre = []
    d = ideal.denominator
    for c in coeffs:
        v = [Fraction(sum(B[r][j] * c[j] for j in range(len(c))), d)
             for r in range(n_out)]
        u = solve(T, v)
        assert u is not None, "intersection vector fell outside the image"
        pre.append(u)
    return canonicalize(in_labels, pre)


def intersect(I, J):
    # I cap J as Z[1/2]-modules: solve B1 a / d1 = B2 b / d2 on the
    # saturated integer kernel of [d2 B1 | -d1 B2]
    assert I.labels == J.labels, "ambient mismatch"
    if I.is_zero() or J.is_zero():
        return zero_ideal(I.labels)
    n = I.dimension
    k1 = len(I.columns)
    stacked = [[J.denominator * I.columns[j][r] for j in range(k1)]
               + [-I.denominator * J.columns[j][r] for j in range(len(J.columns))]
               for r in range(n)]
    kernel = column_kernel(stacked)
    vecs = []
    for w in kernel:
        a = w[:k1]
        vecs.append([Fraction(sum(I.columns[j][r] * a[j] for j in range(k1)),
                              I.denominator) for r in range(n)])
    return canonicalize(I.labels, vecs)
