"""Exact integer matrix algebra: Smith normal form with certified
transforms, linear solving over Z and Z/n, and Hermite forms.

Matrices are lists of row lists of Python ints.  Smith forms carry both
transforms and their inverses so certification (U*A*V == S, U*Uinv == I)
is a pure multiplication check.
"""

from dataclasses import dataclass
from math import gcd


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def matmul(a, b):
    m, k = len(a), len(b)
    n = len(b[0]) if b else 0
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(n):
                    oi[j] += x * bt[j]
    return out


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_copy(a):
    return [row[:] for row in a]


@dataclass
class SmithFormZ:
    rows: int
    cols: int
    diag: list          # full diagonal of S, length min(rows, cols)
    U: list             # rows x rows, unimodular
    V: list             # cols x cols, unimodular
    Uinv: list
    Vinv: list

    @property
    def invariant_factors(self):
        return [d for d in self.diag if d != 0]

    def smith_matrix(self):
        S = zeros(self.rows, self.cols)
        for i, d in enumerate(self.diag):
            S[i][i] = d
        return S

    def verify(self, A):
        if matmul(matmul(self.U, A), self.V) != self.smith_matrix():
            return False
        if matmul(self.U, self.Uinv) != identity(self.rows):
            return False
        if matmul(self.V, self.Vinv) != identity(self.cols):
            return False
        facs = self.invariant_factors
        for a, b in zip(facs, facs[1:]):
            if b % a:
                return False
        if any(d < 0 for d in self.diag):
            return False
        n = len(facs)
        if any(d != 0 for d in self.diag[n:]):
            return False
        return True


class _Transforms:
    """Row/column operation bookkeeping shared by the SNF drivers."""

    def __init__(self, A):
        self.A = mat_copy(A)
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.U = identity(self.m)
        self.Uinv = identity(self.m)
        self.V = identity(self.n)
        self.Vinv = identity(self.n)

    def row_swap(self, i, j):
        if i == j:
            return
        self.A[i], self.A[j] = self.A[j], self.A[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]
        for row in self.Uinv:
            row[i], row[j] = row[j], row[i]

    def col_swap(self, i, j):
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        for row in self.V:
            row[i], row[j] = row[j], row[i]
        self.Vinv[i], self.Vinv[j] = self.Vinv[j], self.Vinv[i]

    def row_addmul(self, i, j, q):
        """row_i += q * row_j"""
        if q == 0:
            return
        self.A[i] = [x + q * y for x, y in zip(self.A[i], self.A[j])]
        self.U[i] = [x + q * y for x, y in zip(self.U[i], self.U[j])]
        for row in self.Uinv:
            row[j] -= q * row[i]

    def col_addmul(self, i, j, q):
        """col_i += q * col_j"""
        if q == 0:
            return
        for row in self.A:
            row[i] += q * row[j]
        for row in self.V:
            row[i] += q * row[j]
        self.Vinv[j] = [x - q * y for x, y in zip(self.Vinv[j], self.Vinv[i])]

    def row_negate(self, i):
        self.A[i] = [-x for x in self.A[i]]
        self.U[i] = [-x for x in self.U[i]]
        for row in self.Uinv:
            row[i] = -row[i]


def smith_normal_form(A):
    """Smith normal form over Z with unimodular transforms.

    Pivoting picks the minimal absolute value, ties broken at the lowest
    (row, col), which keeps outputs deterministic.
    """
    t = _Transforms(A)
    m, n = t.m, t.n
    k = 0
    while k < min(m, n):
        pivot = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                x = abs(t.A[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        t.row_swap(k, pivot[0])
        t.col_swap(k, pivot[1])
        while True:
            # clear column k
            dirty = False
            for i in range(k + 1, m):
                if t.A[i][k]:
                    q = t.A[i][k] // t.A[k][k]
                    t.row_addmul(i, k, -q)
                    if t.A[i][k]:
                        t.row_swap(i, k)
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                if t.A[k][j]:
                    q = t.A[k][j] // t.A[k][k]
                    t.col_addmul(j, k, -q)
                    if t.A[k][j]:
                        t.col_swap(j, k)
                        dirty = True
                        break
            if dirty:
                continue
            # enforce divisibility of the remaining block
            d = t.A[k][k]
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if t.A[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            t.row_addmul(k, offender, 1)
        if t.A[k][k] < 0:
            t.row_negate(k)
        k += 1
    diag = [t.A[i][i] for i in range(min(m, n))]
    return SmithFormZ(m, n, diag, t.U, t.V, t.Uinv, t.Vinv)


def rank_int(A):
    return len(smith_normal_form(A).invariant_factors)


def solve_int(A, b):
    """One integer solution x (row vector) of x * A == b, or None.

    A is m x n, b has length n.
    """
    m = len(A)
    n = len(A[0]) if A else 0
    if len(b) != n:
        raise ValueError("dimension mismatch")
    snf = smith_normal_form(A)
    # x A = b  <=>  (x Uinv) S = b V
    bv = [sum(b[t] * snf.V[t][j] for t in range(n)) for j in range(n)]
    y = [0] * m
    for i in range(min(m, n)):
        d = snf.diag[i]
        if d == 0:
            if bv[i]:
                return None
        else:
            if bv[i] % d:
                return None
            y[i] = bv[i] // d
    if any(bv[i] for i in range(min(m, n), n)):
        return None
    return [sum(y[t] * snf.U[t][j] for t in range(m)) for j in range(m)]


def solve_mod(A, b, modulus):
    """One solution x of x * A == b (mod modulus), or None."""
    m = len(A)
    n = len(A[0]) if A else 0
    stacked = [row[:] for row in A]
    for i in range(n):
        row = [0] * n
        row[i] = modulus
        stacked.append(row)
    x = solve_int(stacked, b)
    if x is None:
        return None
    return [v % modulus for v in x[:m]]


def hermite_row_basis(rows):
    """Canonical row-style Hermite basis of the lattice spanned by the
    given integer rows: pivots positive, entries above pivots reduced.
    Used to identify sublattices independently of the spanning set."""
    work = [row[:] for row in rows if any(row)]
    n = len(rows[0]) if rows else 0
    basis = []
    col = 0
    while work and col < n:
        work = [row for row in work if any(row)]
        cand = [row for row in work if row[col]]
        if not cand:
            col += 1
            continue
        while True:
            cand.sort(key=lambda r: abs(r[col]))
            p = cand[0]
            done = True
            for row in cand[1:]:
                q = row[col] // p[col]
                for j in range(n):
                    row[j] -= q * p[j]
                if row[col]:
                    done = False
            cand = [row for row in cand if row[col]]
            if done and len(cand) == 1:
                break
        pivot = cand[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        for row in basis:
            q = row[col] // pivot[col]
            if q:
                for j in range(n):
                    row[j] -= q * pivot[j]
        basis.append(pivot)
        work = [row for row in work if row is not cand[0] and any(row)]
        for row in work:
            if row[col]:
                q = row[col] // pivot[col]
                for j in range(n):
                    row[j] -= q * pivot[j]
        col += 1
    return tuple(tuple(r) for r in basis)


def primitive_vector(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def det_int(A):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = mat_copy(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def invert_unimodular(B):
    """Inverse of a unimodular integer matrix (det +-1 checked)."""
    n = len(B)
    if abs(det_int(B)) != 1:
        raise ValueError("matrix is not unimodular")
    Bt = transpose(B)
    cols = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        x = solve_int(Bt, e)
        if x is None:
            raise ArithmeticError("unimodular solve failed")
        cols.append(x)
    return transpose(cols)
