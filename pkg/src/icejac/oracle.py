"""Brute-force reference computations used to cross-check the engine.

Nothing here uses Groebner bases, normal forms or minimal resolutions:
the basis oracle is plain linear algebra on all paths up to a length cap,
and the Ext oracle evaluates res(A) (x)_A M on arrow matrices.
"""

from fractions import Fraction
from itertools import product

from .complexes import endpoints, mu_bar, res_generators


def _rank(rows):
    """Rank of a list of equal-length rows of Fractions (straight Gaussian elimination)."""
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                t = rows[i][c] / piv
                rows[i] = [x - t * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def all_paths(q, length_cap):
    """All paths of length <= length_cap as (tail, head, traversal tuple)."""
    out = [(v, v, ()) for v in range(q.n_vertices)]
    level = list(out)
    for _ in range(length_cap):
        nxt = []
        for t, h, arr in level:
            for i, a in enumerate(q.arrows):
                if a.tail == h:
                    nxt.append((t, a.head, arr + (i,)))
        out.extend(nxt)
        level = nxt
    return out


def _word_key(p):
    return (len(p[2]), p[2], p[0])


def brute_basis(q, relations, length_cap):
    """Standard monomials of (I + paths longer than the cap), up to the cap.

    The ideal is spanned by p r s for paths p, s and relations r, with terms
    longer than the cap dropped.  Columns are ordered from the largest word
    down, so the non-pivot columns are the smallest words spanning the
    quotient.  Exact for relations homogeneous in path length.
    """
    paths = all_paths(q, length_cap)
    paths.sort(key=_word_key, reverse=True)
    col = {(p[0], p[2]): k for k, p in enumerate(paths)}
    by_tail, by_head = {}, {}
    for p in paths:
        by_tail.setdefault(p[0], []).append(p)
        by_head.setdefault(p[1], []).append(p)
    pivots = {}  # pivot column -> sparse row (dict), rows kept with pivot = smallest column index
    for r in relations:
        terms = [((p.tail, p.head, p.arrows), _frac(c)) for p, c in r.terms.items()]
        (t0, h0, _), _ = terms[0]
        shortest = min(len(t[0][2]) for t in terms)
        for left in by_tail.get(h0, ()):
            if len(left[2]) + shortest > length_cap:
                continue
            for right in by_head.get(t0, ()):
                if len(left[2]) + len(right[2]) + shortest > length_cap:
                    continue
                row = {}
                for (t, h, arr), c in terms:
                    w = right[2] + arr + left[2]
                    if len(w) > length_cap:
                        continue
                    k = col[(right[0], w)]
                    row[k] = row.get(k, 0) + c
                _insert({k: v for k, v in row.items() if v != 0}, pivots)
    words = [paths[k] for k in range(len(paths)) if k not in pivots]
    return sorted(words, key=_word_key)


def _insert(row, pivots):
    """Gaussian elimination step on sparse rows: reduce ``row`` and record its pivot."""
    while row:
        c = min(row)
        p = pivots.get(c)
        if p is None:
            pivots[c] = row
            return
        t = row[c] / p[c]
        for k, v in p.items():
            x = row.get(k, 0) - t * v
            if x:
                row[k] = x
            else:
                row.pop(k, None)


def brute_basis_stable(q, relations, length_cap):
    """brute_basis at cap and cap + 1; returns (words, stable) where stable
    means no new words appear at the extra length (the counts stopped growing)."""
    a = brute_basis(q, relations, length_cap)
    b = brute_basis(q, relations, length_cap + 1)
    return a, len(a) == len(b)


# ---------------------------------------------------------------------------
# Ext through res(A) (x) M

def _path_matrix(q, mats, dims, path):
    """Matrix of a path acting on a representation (arrow matrices composed)."""
    n = dims[path.tail]
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for a in path.arrows:
        X = mats[a]
        M = [[sum((X[i][k] * M[k][j] for k in range(len(M))), Fraction(0)) for j in range(n)] for i in range(len(X))]
    return M


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if hasattr(x, "numerator"):
        return Fraction(int(x.numerator), int(x.denominator))
    return Fraction(x)


def brute_ext(q, W, M, N, max_i):
    """dim Ext^i(M, N), i <= max_i, from the complex Hom_A(res(A) (x)_A M, N).

    ``M`` and ``N`` are (dims, arrow matrices).  Only meaningful when res(A)
    is a resolution of A.  The term in position i is the sum over generators
    g of Hom_K(M_b(g), N_a(g)), and the coboundary of phi at g is
    sum of c N(u) phi_g' M(v) over the terms u (x) g' (x) v of mu(g).
    """
    dM, mM = M
    dN, mN = N
    mM = [[[_frac(x) for x in row] for row in X] for X in mM]
    mN = [[[_frac(x) for x in row] for row in X] for X in mN]
    gens = res_generators(q)
    blocks = []
    for i in range(4):
        offs, k = {}, 0
        for g in gens[i]:
            a, b = endpoints(q, g)
            offs[g] = k
            k += dN[a] * dM[b]
        blocks.append((offs, k))

    def coboundary(i):
        """Matrix C^{i-1} -> C^i."""
        src_offs, ns = blocks[i - 1]
        tgt_offs, nt = blocks[i]
        D = [[Fraction(0)] * ns for _ in range(nt)]
        for g in gens[i]:
            a, b = endpoints(q, g)
            for u, g2, v, c in mu_bar(q, W, g):
                a2, b2 = endpoints(q, g2)
                Nu = _path_matrix(q, mN, dN, u)  # N_a2 -> N_a
                Mv = _path_matrix(q, mM, dM, v)  # M_b -> M_b2
                c = _frac(c)
                # psi[r][s] += c * sum_{k,l} Nu[r][k] phi[k][l] Mv[l][s]
                for r, s, k, l in product(range(dN[a]), range(dM[b]), range(dN[a2]), range(dM[b2])):
                    x = Nu[r][k] * Mv[l][s]
                    if x:
                        D[tgt_offs[g] + r * dM[b] + s][src_offs[g2] + k * dM[b2] + l] += c * x
        return D

    ranks = [0] * 5
    for i in (1, 2, 3):
        D = coboundary(i)
        ranks[i] = _rank(D) if D and D[0] else 0
    out = []
    for i in range(max_i + 1):
        if i > 3:
            out.append(0)
            continue
        dim = blocks[i][1]
        out.append(dim - ranks[i + 1] - ranks[i] if i < 3 else dim - ranks[i])
    return out
