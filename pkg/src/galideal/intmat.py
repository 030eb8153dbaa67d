# Exact integer / rational linear algebra used by the lattice layer.
#
# Conventions:
#   - matrices are lists of rows; entries int or Fraction
#   - row HNF: pivot columns strictly increase, pivots positive, entries
#     above a pivot reduced into [0, pivot), zero rows at the bottom
#   - column HNF is the transpose of the row HNF of the transpose
#   - all transforms returned are unimodular, so spans are preserved exactly

from fractions import Fraction


def xgcd(a, b):
    # returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    if not A or not B:
        return [[] for _ in A]
    n, k, m = len(A), len(B), len(B[0])
    Bt = transpose(B)
    return [[sum(row[t] * col[t] for t in range(k)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in A]


def hnf_rows(A):
    # Returns (H, U) with U unimodular and U*A = H in canonical row HNF.
    H = [list(map(int, row)) for row in A]
    n = len(H)
    m = len(H[0]) if H else 0
    U = identity_matrix(n)
    pivot_rows = []
    r = 0
    for c in range(m):
        # find a row at index >= r with nonzero entry in column c
        piv = None
        for i in range(r, n):
            if H[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
        # clear below with gcd steps
        for i in range(r + 1, n):
            while H[i][c] != 0:
                if abs(H[i][c]) < abs(H[r][c]):
                    H[r], H[i] = H[i], H[r]
                    U[r], U[i] = U[i], U[r]
                q = H[i][c] // H[r][c]
                for j in range(m):
                    H[i][j] -= q * H[r][j]
                for j in range(n):
                    U[i][j] -= q * U[r][j]
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        pivot_rows.append((r, c))
        r += 1
        if r == n:
            break
    # reduce entries above each pivot
    for (i, c) in pivot_rows:
        for k in range(i):
            q = H[k][c] // H[i][c]
            if q != 0:
                for j in range(m):
                    H[k][j] -= q * H[i][j]
                for j in range(n):
                    U[k][j] -= q * U[i][j]
    return H, U


def hnf_columns(A):
    # Canonical column HNF of the column span of A; zero columns dropped.
    if not A:
        return []
    At = transpose(A)
    H, _ = hnf_rows(At)
    cols = [row for row in H if any(x != 0 for x in row)]
    return transpose(cols) if cols else [[] for _ in A]


def row_kernel(A):
    # Basis (list of rows) of the left kernel {x : x*A = 0} over Z.
    # Rows of U matching zero rows of the HNF form a saturated basis.
    H, U = hnf_rows(A)
    return [U[i] for i in range(len(H)) if all(x == 0 for x in H[i])]


def column_kernel(A):
    # Basis (list of vectors) of {v : A*v = 0} over Z, saturated.
    return row_kernel(transpose(A))


def snf_diagonal_with_span(A):
    # Diagonalizes A by row and column operations, tracking only enough to
    # recover the column span: returns (diag, W) where diag is the list of
    # diagonal entries (length min(n, k), possibly with zeros) and W is an
    # n x n unimodular matrix with  span_Z(columns of A) = span_Z{diag[i] * W[:,i]}.
    # Column operations leave the span alone; a row operation E (A -> E*A)
    # is compensated by W -> W*E^{-1}.
    M = [list(map(int, row)) for row in A]
    n = len(M)
    k = len(M[0]) if M else 0
    W = identity_matrix(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        for row in W:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j  on M;  col_j -= q * col_i  on W
        for c in range(k):
            M[i][c] += q * M[j][c]
        for row in W:
            row[j] -= q * row[i]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        for row in W:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_col(i, j, q):
        for row in M:
            row[i] += q * row[j]

    def reduce_pivot(t):
        # assumes M[t][t] != 0; clears row t and column t beyond the pivot
        while True:
            for i in range(t + 1, n):
                while M[i][t] != 0:
                    if abs(M[i][t]) < abs(M[t][t]):
                        swap_rows(t, i)
                    q = M[i][t] // M[t][t]
                    add_row(i, t, -q)
            for j in range(t + 1, k):
                while M[t][j] != 0:
                    if abs(M[t][j]) < abs(M[t][t]):
                        swap_cols(t, j)
                    q = M[t][j] // M[t][t]
                    add_col(j, t, -q)
            if all(M[i][t] == 0 for i in range(t + 1, n)):
                break
        if M[t][t] < 0:
            negate_row(t)

    t = 0
    while t < min(n, k):
        # locate a nonzero pivot in the trailing submatrix
        piv = None
        for i in range(t, n):
            for j in range(t, k):
                if M[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            swap_cols(t, j0)
        reduce_pivot(t)
        t += 1
    r = t
    # enforce the divisor chain d_t | d_j: mix offending pairs through the
    # pivot and re-reduce; each fix replaces d_t by gcd(d_t, d_j)
    for t in range(r - 1):
        stable = False
        while not stable:
            stable = True
            for j in range(t + 1, r):
                if M[j][j] % M[t][t] != 0:
                    add_col(t, j, 1)
                    reduce_pivot(t)
                    if M[j][j] < 0:
                        negate_row(j)
                    stable = False
    diag = [M[i][i] for i in range(r)]
    return diag, W


def rref(A):
    # Reduced row echelon form over Q; returns (R, pivots) with R a list of
    # Fraction rows and pivots the list of pivot column indices.
    R = [[Fraction(x) for x in row] for row in A]
    n = len(R)
    m = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if R[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(n):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots


def rank(A):
    if not A or not A[0]:
        return 0
    _, pivots = rref(A)
    return len(pivots)


def solve(A, b):
    # One solution x of A*x = b over Q, or None if inconsistent.  If A has
    # full column rank the solution is unique.
    n = len(A)
    m = len(A[0]) if A else 0
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, pivots = rref(aug)
    if m in pivots:
        return None
    x = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        x[c] = R[i][m]
    return x
