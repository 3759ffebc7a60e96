from icejac import fdalg as fa
from icejac import oracle
from icejac.quiver import IceQuiver


def rep(M):
    return M.dims, fa.arrow_matrices(M)


def test_brute_basis_triangle_ice(tri):
    words, stable = oracle.brute_basis_stable(tri.q, tri.relations, 5)
    assert stable and len(words) == 7
    assert len(oracle.brute_basis(tri.q, tri.relations, 2)) == 7
    eng = sorted((p.tail, p.head, p.arrows) for p in tri.basis.words)
    assert sorted(words) == eng


def test_brute_basis_triangle_plain(plain):
    assert len(oracle.brute_basis(plain.q, plain.relations, 5)) == 6


def test_brute_basis_linear_quiver():
    for n in range(1, 6):
        q = IceQuiver.build(range(n), [(f"a{i}", i, i + 1) for i in range(n - 1)])
        assert len(oracle.brute_basis(q, [], n + 2)) == n * (n + 1) // 2


def test_growth_is_flagged():
    q = IceQuiver.build([1, 2], [("a", 1, 2), ("b", 2, 1)])
    _, stable = oracle.brute_basis_stable(q, [], 4)
    assert not stable


def test_brute_ext_matches_minimal_resolutions(tri, aprime):
    for c in (tri, aprime):
        A = c.A
        mods = [fa.simple_module(A, v) for v in range(A.n_vertices)]
        mods += [fa.projective_module(A, v) for v in range(A.n_vertices)]
        mods += [fa.injective_module(A, v) for v in range(A.n_vertices)]
        for M in mods:
            for N in mods:
                assert oracle.brute_ext(c.q, c.W, rep(M), rep(N), 3) == fa.ext_dims(M, N, 3), (M, N)


def test_brute_ext_projective_first_argument(tri):
    A = tri.A
    for v in range(3):
        P = fa.projective_module(A, v)
        for w in range(3):
            ext = oracle.brute_ext(tri.q, tri.W, rep(P), rep(fa.simple_module(A, w)), 3)
            assert ext[1:] == [0, 0, 0]


def test_boundary_supported_resolution_length(tri, aprime):
    for c in (tri, aprime):
        for v in c.frozen:
            S = fa.simple_module(c.A, v)
            for N in (fa.simple_module(c.A, w) for w in range(c.A.n_vertices)):
                assert oracle.brute_ext(c.q, c.W, rep(S), rep(N), 3)[3] == 0
