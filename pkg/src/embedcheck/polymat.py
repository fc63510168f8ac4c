"""Matrix algebra over Laurent polynomial rings.

Two engines live here: certified Smith normal form over the PID
F[t, t^-1] (F a field), and fraction-free Bareiss elimination computing
exact ranks over the fraction field Q(x_1, ..., x_k) of a multivariate
Laurent ring.
"""

from dataclasses import dataclass

from .laurent import (
    LaurentPoly,
    coefficient_of_var_power,
    divexact,
)


def poly_matmul(a, b, ring):
    m, k = len(a), len(b)
    n = len(b[0]) if b else 0
    out = [[ring.zero() for _ in range(n)] for _ in range(m)]
    for i in range(m):
        for t in range(k):
            x = a[i][t]
            if not x.is_zero():
                for j in range(n):
                    if not b[t][j].is_zero():
                        out[i][j] = out[i][j] + x * b[t][j]
    return out


def poly_identity(n, ring):
    out = [[ring.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        out[i][i] = ring.one()
    return out


def _divmod_1var(a, b, ring):
    """Ordinary polynomial division in one variable over a field."""
    sc = ring.scalars
    q = ring.zero()
    r = a
    rb = b.var_degrees(0)
    db = rb[1]
    lead_b = coefficient_of_var_power(b, 0, db).constant_value()
    while not r.is_zero():
        ra = r.var_degrees(0)
        if ra[1] < db:
            break
        c = coefficient_of_var_power(r, 0, ra[1]).constant_value()
        t = ring.monomial((ra[1] - db,), sc.divexact(c, lead_b))
        q = q + t
        r = r - t * b
    return q, r


@dataclass
class SmithFormLaurent:
    ring: object
    rows: int
    cols: int
    diag: list
    U: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def invariant_factors(self):
        return [d for d in self.diag if not d.is_zero()]

    def smith_matrix(self):
        S = [[self.ring.zero() for _ in range(self.cols)] for _ in range(self.rows)]
        for i, d in enumerate(self.diag):
            S[i][i] = d
        return S

    def verify(self, A):
        ring = self.ring
        if poly_matmul(poly_matmul(self.U, A, ring), self.V, ring) != self.smith_matrix():
            return False
        if poly_matmul(self.U, self.Uinv, ring) != poly_identity(self.rows, ring):
            return False
        if poly_matmul(self.V, self.Vinv, ring) != poly_identity(self.cols, ring):
            return False
        facs = self.invariant_factors
        for a, b in zip(facs, facs[1:]):
            _, r = _divmod_1var(b, a, ring)
            if not r.is_zero():
                return False
        n = len(facs)
        if any(not d.is_zero() for d in self.diag[n:]):
            return False
        return True


class _PolyTransforms:
    def __init__(self, A, ring):
        self.ring = ring
        self.A = [row[:] for row in A]
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.U = poly_identity(self.m, ring)
        self.Uinv = poly_identity(self.m, ring)
        self.V = poly_identity(self.n, ring)
        self.Vinv = poly_identity(self.n, ring)

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
        if q.is_zero():
            return
        self.A[i] = [x + q * y for x, y in zip(self.A[i], self.A[j])]
        self.U[i] = [x + q * y for x, y in zip(self.U[i], self.U[j])]
        for row in self.Uinv:
            row[j] = row[j] - q * row[i]

    def col_addmul(self, i, j, q):
        if q.is_zero():
            return
        for row in self.A:
            row[i] = row[i] + q * row[j]
        for row in self.V:
            row[i] = row[i] + q * row[j]
        self.Vinv[j] = [x - q * y for x, y in zip(self.Vinv[j], self.Vinv[i])]

    def row_scale_unit(self, i, u):
        """Multiply a row by a unit monomial."""
        uinv = u.unit_inverse()
        self.A[i] = [u * x for x in self.A[i]]
        self.U[i] = [u * x for x in self.U[i]]
        for row in self.Uinv:
            row[i] = row[i] * uinv


def smith_normal_form_laurent(A, ring):
    """Certified Smith normal form over F[t, t^-1], F = QQ or GF(p).

    Rows are first scaled by unit monomials to clear negative exponents;
    then a Euclidean reduction with minimal-degree pivoting (ties at the
    lowest (row, col)) runs on ordinary polynomials.  Invariant factors
    are normalized monic with lowest term t^0.
    """
    if ring.nvars != 1 or not ring.is_torsion_free or not ring.scalars.is_field:
        raise ValueError("need a one-variable Laurent ring over a field")
    t = _PolyTransforms(A, ring)
    m, n = t.m, t.n
    # Clear negative exponents row by row; everything afterwards stays an
    # ordinary polynomial (sums and products of ordinary entries).
    for i in range(m):
        lows = [p.var_degrees(0)[0] for p in t.A[i] if not p.is_zero()]
        if lows:
            low = min(lows)
            if low:
                t.row_scale_unit(i, ring.monomial((-low,)))
    k = 0
    while k < min(m, n):
        pivot = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if not t.A[i][j].is_zero():
                    d = t.A[i][j].var_degrees(0)[1]
                    if best is None or d < best:
                        best = d
                        pivot = (i, j)
        if pivot is None:
            break
        t.row_swap(k, pivot[0])
        t.col_swap(k, pivot[1])
        while True:
            dirty = False
            for i in range(k + 1, m):
                if not t.A[i][k].is_zero():
                    q, _ = _divmod_1var(t.A[i][k], t.A[k][k], ring)
                    t.row_addmul(i, k, -q)
                    if not t.A[i][k].is_zero():
                        t.row_swap(i, k)
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                if not t.A[k][j].is_zero():
                    q, _ = _divmod_1var(t.A[k][j], t.A[k][k], ring)
                    t.col_addmul(j, k, -q)
                    if not t.A[k][j].is_zero():
                        t.col_swap(j, k)
                        dirty = True
                        break
            if dirty:
                continue
            d = t.A[k][k]
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if not t.A[i][j].is_zero():
                        _, r = _divmod_1var(t.A[i][j], d, ring)
                        if not r.is_zero():
                            offender = i
                            break
                if offender is not None:
                    break
            if offender is None:
                break
            t.row_addmul(k, offender, ring.one())
        k += 1
    # normalize factors: monic, lowest term t^0
    sc = ring.scalars
    for i in range(min(m, n)):
        p = t.A[i][i]
        if p.is_zero():
            continue
        lo, hi = p.var_degrees(0)
        lead = coefficient_of_var_power(p, 0, hi).constant_value()
        unit = ring.monomial((-lo,), sc.inv_unit(lead))
        t.row_scale_unit(i, unit)
    diag = [t.A[i][i] for i in range(min(m, n))]
    return SmithFormLaurent(ring, m, n, diag, t.U, t.V, t.Uinv, t.Vinv)


def cokernel_pid(rows, ngens, ring):
    """Module structure of coker(relation rows) over F[t, t^-1]:
    returns (free_rank, nontrivial invariant factors).

    `rows` have length ngens; the module is F[t^+-]^ngens / <rows>.
    """
    if not rows:
        return ngens, []
    M = [row[:] for row in rows]
    snf = smith_normal_form_laurent(M, ring)
    if not snf.verify(M):
        raise ArithmeticError("Smith normal form certification failed")
    facs = snf.invariant_factors
    free_rank = ngens - len(facs)
    nontrivial = [d for d in facs if not d.is_one()]
    return free_rank, nontrivial


def rank_over_function_field(A, ring):
    """Rank of a matrix of multivariate Laurent polynomials over the
    rational function field, by fraction-free Bareiss elimination."""
    if not ring.is_torsion_free:
        raise ValueError("rank is over a fraction field; ring must be a domain")
    M = [row[:] for row in A]
    m = len(M)
    n = len(M[0]) if M else 0
    rank = 0
    prev = ring.one()
    while rank < min(m, n):
        pivot = None
        best = None
        for i in range(rank, m):
            for j in range(rank, n):
                if not M[i][j].is_zero():
                    key = (len(M[i][j].terms), i, j)
                    if best is None or key < best:
                        best = key
                        pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        M[rank], M[pi] = M[pi], M[rank]
        if pj != rank:
            for row in M:
                row[rank], row[pj] = row[pj], row[rank]
        p = M[rank][rank]
        for i in range(rank + 1, m):
            for j in range(rank + 1, n):
                num = M[i][j] * p - M[i][rank] * M[rank][j]
                M[i][j] = divexact(num, prev)
            M[i][rank] = ring.zero()
        prev = p
        rank += 1
    return rank


def rational_rank(rows, ring):
    """Rank over the coefficient field of a matrix of constants
    (zero-variable polynomials); degenerate case of Bareiss."""
    return rank_over_function_field(rows, ring)


def poly_det(A, ring):
    """Determinant of a square matrix over a torsion-free Laurent ring,
    fraction-free (Bareiss)."""
    n = len(A)
    if n == 0:
        return ring.one()
    M = [row[:] for row in A]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = None
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    swap = i
                    break
            if swap is None:
                return ring.zero()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = divexact(num, prev)
            M[i][k] = ring.zero()
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d
