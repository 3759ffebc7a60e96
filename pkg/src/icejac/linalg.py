"""Exact linear algebra over a field: dense helpers for module computations
and sparse elimination for the large differentials.

Dense matrices are lists of row lists.  Sparse vectors are dicts
index -> nonzero coefficient.
"""

from math import gcd

from .field import QQ


def zeros(m, n, f=QQ):
    return [[f.zero] * n for _ in range(m)]


def identity(n, f=QQ):
    M = zeros(n, n, f)
    for i in range(n):
        M[i][i] = f.one
    return M


def matmul(A, B, f=QQ):
    if not A or not B:
        return [[f.zero] * (len(B[0]) if B else 0) for _ in A]
    n = len(B[0])
    norm = f.norm
    out = []
    Bt = list(zip(*B))
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != 0]
        out.append([norm(sum((a * Bt[j][k] for k, a in nz), f.zero)) for j in range(n)])
    return out


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*A)]


def is_zero(A):
    return all(x == 0 for row in A for x in row)


def rref(A, f=QQ):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = [list(r) for r in A]
    if not R:
        return R, []
    m, n = len(R), len(R[0])
    norm, inv = f.norm, f.inv
    piv = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        s = inv(R[r][c])
        R[r] = [norm(x * s) for x in R[r]]
        row = R[r]
        for i in range(m):
            if i != r and R[i][c] != 0:
                t = R[i][c]
                R[i] = [norm(x - t * y) for x, y in zip(R[i], row)]
        piv.append(c)
        r += 1
        if r == m:
            break
    return R, piv


def rank(A, f=QQ):
    if not A or not A[0]:
        return 0
    return len(rref(A, f)[1])


def nullspace(A, n=None, f=QQ):
    """Basis (list of column vectors) of {x : A x = 0}; ``n`` = number of columns."""
    if n is None:
        n = len(A[0]) if A else 0
    if not A:
        return [[f.one if i == j else f.zero for i in range(n)] for j in range(n)]
    R, piv = rref(A, f)
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for r, pc in enumerate(piv):
            v[pc] = f.norm(-R[r][fc])
        basis.append(v)
    return basis


def column_echelon(vectors, n, f=QQ):
    """Reduced basis of span(vectors) in R^n as (basis, pivot_rows).

    basis[j][pivot_rows[j]] == 1 and basis[i][pivot_rows[j]] == 0 for i != j,
    so coordinates of any v in the span are ``[v[r] for r in pivot_rows]``.
    """
    if not vectors:
        return [], []
    R, piv = rref(vectors, f)
    return [R[i] for i in range(len(piv))], piv


def complement_units(basis_rows, n, f=QQ):
    """Indices of unit vectors extending span(basis_rows) to R^n."""
    _, piv = column_echelon(basis_rows, n, f)
    return [i for i in range(n) if i not in set(piv)]


def in_span_coords(basis, piv, v, f=QQ):
    """Coordinates of v in a column_echelon basis, or None if v is not in the span."""
    coords = [v[r] for r in piv]
    norm = f.norm
    for i in range(len(v)):
        s = norm(sum((c * b[i] for c, b in zip(coords, basis)), f.zero))
        if s != v[i]:
            return None
    return coords


# ---------------------------------------------------------------------------
# sparse elimination

def _integer_row(row):
    """Scale a rational sparse row to a primitive integer row."""
    den = 1
    for v in row.values():
        d = int(v.denominator) if hasattr(v, "denominator") else 1
        den = den * d // gcd(den, d)
    out = {k: int(v * den) for k, v in row.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def sparse_rank(rows, f=QQ):
    """Rank of a list of sparse rows.

    Over Q this is fraction-free: rows are cleared to primitive integer
    vectors and combined by integer row operations with content removal.
    Over F_p it is ordinary elimination.
    """
    pivots = {}  # column -> row with that leading column
    if f.characteristic == 0:
        for row in rows:
            r = _integer_row(row) if row else {}
            while r:
                c = min(r)
                p = pivots.get(c)
                if p is None:
                    pivots[c] = r
                    break
                a, b = p[c], r[c]
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {}
                for k, v in r.items():
                    new[k] = a * v
                for k, v in p.items():
                    w = new.get(k, 0) - b * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                r = {k: v // g for k, v in new.items()} if g > 1 else new
        return len(pivots)
    p_ = f.p
    for row in rows:
        r = {k: v % p_ for k, v in row.items() if v % p_}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                s = pow(r[c], -1, p_)
                pivots[c] = {k: v * s % p_ for k, v in r.items()}
                break
            t = r[c]
            for k, v in p.items():
                w = (r.get(k, 0) - t * v) % p_
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return len(pivots)


class SparseMatrix:
    """Columns stored as sparse dicts: ``cols[j]`` is the image of basis vector j."""

    __slots__ = ("nrows", "cols", "field")

    def __init__(self, nrows, cols, field=QQ):
        self.nrows = nrows
        self.cols = cols
        self.field = field

    @property
    def ncols(self):
        return len(self.cols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def rank(self):
        return sparse_rank(self.cols, self.field)

    def __matmul__(self, other):
        """Composition self o other."""
        if other.nrows != self.ncols:
            raise ValueError("shape mismatch")
        norm = self.field.norm
        out = []
        for col in other.cols:
            acc = {}
            for k, v in col.items():
                for i, w in self.cols[k].items():
                    acc[i] = norm(acc.get(i, 0) + v * w)
            out.append({i: v for i, v in acc.items() if v != 0})
        return SparseMatrix(self.nrows, out, self.field)

    def __neg__(self):
        n = self.field.norm
        return SparseMatrix(self.nrows, [{k: n(-v) for k, v in c.items()} for c in self.cols], self.field)

    def is_zero(self):
        return all(not c for c in self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.shape == other.shape
            and all(a == b for a, b in zip(self.cols, other.cols))
        )

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def triplets(self):
        for j, col in enumerate(self.cols):
            for i in sorted(col):
                yield i, j, col[i]

    def dense(self):
        M = zeros(self.nrows, self.ncols, self.field)
        for i, j, v in self.triplets():
            M[i][j] = v
        return M


def write_triplets(fh, name, M):
    """Dump a SparseMatrix as ``%name rows cols nnz`` then ``i j value`` lines (0-based)."""
    fh.write(f"%{name} {M.nrows} {M.ncols} {M.nnz()}\n")
    for i, j, v in M.triplets():
        fh.write(f"{i} {j} {v}\n")
