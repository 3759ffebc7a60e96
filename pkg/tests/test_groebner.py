import random

import pytest

from icejac.field import GF
from icejac.groebner import (
    UncertifiedDegree, buchberger, enumerate_basis, graded_dimensions, ufnarovski_finite,
)
from icejac.jacobian import Grading, find_positive_grading, jacobian_relations
from icejac.parser import parse_ice_qp
from icejac.quiver import Element, IceQuiver, idempotent


def words(q, nb):
    return [q.word(p) for p in nb.words]


def test_triangle_ice_basis_is_monomial(tri):
    q = tri.q
    assert tri.gb.complete
    assert sorted(g.format(q) for g in tri.gb.sorted_elements()) == ["a1 a3", "a2 a1"]
    assert tri.basis.verdict_str() == "Finite(7)"
    assert words(q, tri.basis) == ["e1", "e2", "e3", "a1", "a2", "a3", "a3 a2"]


def test_triangle_plain_basis(plain):
    assert plain.basis.verdict_str() == "Finite(6)"


def test_empty_and_cancelling_relations(tri):
    q = tri.q
    gb = buchberger(q, [])
    assert gb.complete and len(gb) == 0
    x = Element({q.path("a3 a2 a1"): 1})
    assert len(buchberger(q, [x - x])) == 0


def test_degree_cap_below_relation_degree(tri):
    with pytest.raises(ValueError):
        buchberger(tri.q, tri.relations, degree_cap=1)


def test_normal_forms(tri):
    q, gb = tri.q, tri.gb
    assert gb.normal_form(q.path("a3 a2 a1")).is_zero()
    assert gb.normal_form(q.path("a3 a2")) == Element({q.path("a3 a2"): 1})
    assert gb.normal_form(idempotent(0)) == Element({idempotent(0): 1})


def test_single_arrow_no_relations():
    q = IceQuiver.build([1, 2], [("a", 1, 2)])
    nb = enumerate_basis(buchberger(q, []))
    assert nb.verdict_str() == "Finite(3)"


def test_free_cycle_is_infinite():
    q = IceQuiver.build([1, 2], [("a", 1, 2), ("b", 2, 1)])
    gb = buchberger(q, [])
    assert not ufnarovski_finite(gb)
    assert enumerate_basis(gb).verdict == "InfiniteWithGrowth"


def test_graded_dimensions_triangle(tri):
    table = graded_dimensions(tri.gb, (1, 1, 1), 3)
    assert table[(tri.v("2"), tri.v("1"), 2)] == 1
    assert sum(c for (t, h, d), c in table.items() if d == 0) == 3
    assert all(d <= 2 for (_, _, d) in table)


def test_graded_dimensions_rejects_inhomogeneous():
    q, W, _ = parse_ice_qp("vertices 1 2\narrows\n a: 1 -> 2\n b: 2 -> 1\n c: 1 -> 2\n"
                           "potential\n b a\n b c b a\n")
    gb = buchberger(q, jacobian_relations(q, W), degree_cap=8)
    with pytest.raises(ValueError):
        graded_dimensions(gb, (1, 1, 1), 4)


def test_truncated_basis_refuses_uncertified_degrees(gr26):
    q, W = gr26
    g = find_positive_grading(q, W)
    gb = buchberger(q, jacobian_relations(q, W), degree_cap=6, weights=g.degrees)
    if gb.complete:
        pytest.skip("completion finished below the cap")
    with pytest.raises(UncertifiedDegree):
        graded_dimensions(gb, g, 40)


def test_fp_mode_matches_rationals_on_corpus(tri, aprime):
    for c in (tri, aprime):
        rels = [Element({p: GF(101)(v) for p, v in r.terms.items()}, GF(101)) for r in c.relations]
        gb = buchberger(c.q, rels, field=GF(101))
        assert len(enumerate_basis(gb)) == len(c.basis)


def test_confluence_on_corpus(tri, aprime):
    rng = random.Random(5)
    for c in (tri, aprime):
        gb = c.gb
        paths = [p for p in c.basis.words]
        for _ in range(200):
            x = Element({rng.choice(paths): rng.randint(1, 3)})
            y = Element({rng.choice(paths): rng.randint(1, 3)})
            assert gb.normal_form(x * y) == gb.normal_form(gb.normal_form(x) * gb.normal_form(y))


def test_ideal_membership(aprime):
    gb, q = aprime.gb, aprime.q
    arrows = [Element({q.arrow_path(a): 1}) for a in range(q.n_arrows)]
    ids = [Element({idempotent(v): 1}) for v in range(q.n_vertices)]
    for r in aprime.relations:
        assert gb.normal_form(r).is_zero()
        for a in arrows + ids:
            for b in arrows + ids:
                assert gb.normal_form(a * r * b).is_zero()


def test_monomial_fast_path_matches_general_completion(plain, tri):
    for c in (plain, tri):
        fast = buchberger(c.q, c.relations)
        general = buchberger(c.q, c.relations, monomial_fast_path=False)
        assert fast.leading_words() == general.leading_words()
        assert len(enumerate_basis(fast)) == len(enumerate_basis(general))
