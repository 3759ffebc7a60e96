from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from icejac.field import GF, QQ
from icejac.parser import QPSyntaxError, QPValidationError, format_ice_qp, parse_ice_qp
from icejac.quiver import Element, IceQuiver, Path, compose, idempotent, validate

TRI = """field Q
vertices 1 2 3
frozen_vertices 1 2
arrows
  a1: 1 -> 2 frozen
  a2: 2 -> 3
  a3: 3 -> 1
potential
  a3 a2 a1
"""


def tri_quiver():
    return IceQuiver.build([1, 2, 3], [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1)], [1, 2], ["a1"])


# fields ---------------------------------------------------------------------

def test_rationals_are_exact():
    assert QQ(Fraction(1, 3)) * 3 == 1
    assert QQ.inv(QQ(2)) == Fraction(1, 2)


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.norm(F(3) * F.inv(F(3))) == 1
    assert F(Fraction(1, 2)) == 4
    with pytest.raises(ValueError):
        GF(9)


def test_default_prime():
    assert GF().p == 32003


# paths ----------------------------------------------------------------------

def test_compose_follows_right_to_left_convention():
    q = tri_quiver()
    a1, a2 = q.arrow_path(q.arrow("a1")), q.arrow_path(q.arrow("a2"))
    p = compose(a2, a1)
    assert p == q.path("a2 a1")
    assert (p.tail, p.head) == (q.vertex("1"), q.vertex("3"))
    assert compose(a1, a2) is None
    assert compose(idempotent(q.vertex("2")), a1) == a1
    assert compose(a1, idempotent(q.vertex("1"))) == a1


def test_word_round_trip():
    q = tri_quiver()
    assert q.word(q.path("a3 a2 a1")) == "a3 a2 a1"
    assert q.word(idempotent(0)) == "e1"
    with pytest.raises(ValueError):
        q.path("a1 a2")


def test_element_multiplication_distributes():
    q = tri_quiver()
    a1, a2, a3 = (Element({q.arrow_path(i): 1}) for i in range(3))
    assert (a2 + a3) * a1 == a2 * a1
    assert a3 * (a2 * a1) == (a3 * a2) * a1
    assert (a1 * a2).is_zero()
    x = Element({q.path("a2 a1"): 2}) * Fraction(1, 2)
    assert x.terms == {q.path("a2 a1"): 1}


def test_validate_reports_violations():
    assert validate(tri_quiver()) == []
    q = IceQuiver.build([1, 2], [("x", 1, 1)])
    assert [v.kind for v in validate(q)] == ["LoopArrow"]
    q = IceQuiver.build([1, 2, 3], [("f", 1, 3)], [1], ["f"])
    assert [v.kind for v in validate(q)] == ["FrozenArrowEndpoint"]


def test_opposite_quiver_reverses_arrows():
    q = tri_quiver()
    op = q.opposite()
    for a, b in zip(q.arrows, op.arrows):
        assert (a.tail, a.head) == (b.head, b.tail)


# parser ---------------------------------------------------------------------

def test_parse_triangle_ice():
    q, W, opts = parse_ice_qp(TRI)
    assert q.vertices == ("1", "2", "3")
    assert q.frozen_vertices == {0, 1}
    assert q.frozen_arrows == {q.arrow("a1")}
    assert opts["field"] == QQ
    assert W.terms == {q.path("a3 a2 a1"): 1}


def test_potential_is_stored_up_to_rotation():
    a = parse_ice_qp(TRI)[1]
    b = parse_ice_qp(TRI.replace("a3 a2 a1", "a1 a3 a2"))[1]
    assert a == b


def test_empty_potential_section():
    q, W, _ = parse_ice_qp(TRI.split("potential")[0] + "potential\n")
    assert W.is_zero()


def test_non_cycle_term_is_rejected():
    with pytest.raises(QPValidationError, match="not a cycle"):
        parse_ice_qp(TRI.replace("a3 a2 a1", "a2 a1"))


def test_coefficients_and_comments():
    text = TRI.replace("  a3 a2 a1", "  # comment\n  - 3/2 a3 a2 a1   # trailing")
    q, W, _ = parse_ice_qp(text)
    assert W.terms == {q.path("a3 a2 a1"): Fraction(-3, 2)}


def test_field_line_and_override():
    q, W, opts = parse_ice_qp(TRI.replace("field Q", "field Fp 101"))
    assert opts["field"] == GF(101)
    q, W, opts = parse_ice_qp(TRI, GF(7))
    assert opts["field"] == GF(7)


@pytest.mark.parametrize("text, line", [
    (TRI.replace("a1: 1 -> 2", "a1: 1 -> 9"), 5),
    (TRI.replace("vertices 1 2 3", "vertices 1 2 2"), 2),
    (TRI.replace("a2: 2 -> 3", "a2 2 -> 3"), 6),
    (TRI.replace("a3 a2 a1", "a3 zz a1"), 9),
    (TRI.replace("field Q", "field R"), 1),
    (TRI.replace("field Q", "field Fp 10"), 1),
    (TRI + "stray\n", 10),
])
def test_malformed_inputs_report_line(text, line):
    with pytest.raises(QPSyntaxError) as exc:
        parse_ice_qp(text)
    assert exc.value.line == line


def test_loop_arrow_rejected():
    with pytest.raises(QPValidationError):
        parse_ice_qp(TRI.replace("a2: 2 -> 3", "a2: 2 -> 2"))


def test_frozen_arrow_needs_frozen_endpoints():
    with pytest.raises(QPValidationError):
        parse_ice_qp(TRI.replace("a2: 2 -> 3", "a2: 2 -> 3 frozen"))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([Fraction(1), Fraction(-2), Fraction(3, 4), Fraction(-5, 3)]),
                min_size=1, max_size=3))
def test_format_parse_round_trip(coeffs):
    q = IceQuiver.build([1, 2, 3], [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1), ("b", 1, 2)], [1, 2], ["a1"])
    cycles = [q.path("a3 a2 a1"), q.path("a3 a2 b"), q.path("a3 a2 a1 a3 a2 b")]
    from icejac.quiver import Potential
    W = Potential({cycles[i]: c for i, c in enumerate(coeffs)}, q)
    q2, W2, _ = parse_ice_qp(format_ice_qp(q, W))
    assert q2 == q
    assert W2 == W
