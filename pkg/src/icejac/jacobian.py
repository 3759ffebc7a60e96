"""Potential calculus: cyclic derivatives, the splitting operator Delta,
Jacobian relations and positive gradings."""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .quiver import Element, Path, compose, idempotent


def _segment(q, arrows, start, end):
    """Path made of the given traversal-ordered arrows; empty means idempotent at ``start``."""
    if not arrows:
        return idempotent(start)
    return Path(q.arrows[arrows[0]].tail, q.arrows[arrows[-1]].head, tuple(arrows))


def cyclic_derivative(q, W, alpha):
    """Cyclic derivative of ``W`` along arrow ``alpha`` (an arrow index)."""
    a = q.arrows[alpha]
    out = {}
    for p, c in W.terms.items():
        arr = p.arrows
        for i, b in enumerate(arr):
            if b != alpha:
                continue
            r = _segment(q, arr[i + 1:] + arr[:i], a.head, a.tail)
            out[r] = out.get(r, 0) + c
    return Element(out, W.field)


class TensorTriple:
    """Element of KQ (x) KQ_1 (x) KQ as a dict (left, arrow, right) -> coefficient.

    ``left`` starts at the head of the arrow, ``right`` ends at its tail.
    """

    __slots__ = ("terms", "field")

    def __init__(self, terms, field):
        self.field = field
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __eq__(self, other):
        return isinstance(other, TensorTriple) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def collapse(self, q):
        """Multiply the three tensor factors back together."""
        out = {}
        for (left, a, right), c in self.terms.items():
            p = compose(left, compose(q.arrow_path(a), right))
            out[p] = out.get(p, 0) + c
        return Element(out, self.field)

    def format(self, q):
        parts = []
        for (left, a, right), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0].arrows, t[0][2].arrows)):
            parts.append(f"{c}*({q.word(left)} (x) {q.arrows[a].name} (x) {q.word(right)})")
        return " + ".join(parts) or "0"


def delta(q, x, alpha):
    """Delta_alpha of a path or of an :class:`Element`."""
    if isinstance(x, Path):
        x = Element({x: 1})
    out = {}
    for p, c in x.terms.items():
        arr = p.arrows
        for i, b in enumerate(arr):
            if b != alpha:
                continue
            a = q.arrows[b]
            key = (_segment(q, arr[i + 1:], a.head, p.head), b, _segment(q, arr[:i], p.tail, a.tail))
            out[key] = x.field.norm(out.get(key, x.field.zero) + c)
    return TensorTriple(out, x.field)


def jacobian_relations(q, W):
    """Cyclic derivatives of W along the unfrozen arrows, zeros dropped."""
    rels = []
    for a in q.unfrozen_arrows:
        d = cyclic_derivative(q, W, a)
        if d:
            rels.append(d)
    return rels


def vertex_potential_identity(q, W, v):
    """The two expansions of the rotation W_v of W to vertex v.

    ``lhs = sum over arrows a leaving v of (d_a W) a`` and
    ``rhs = sum over arrows b entering v of b (d_b W)``, computed in KQ.
    """
    lhs = Element(field=W.field)
    for a in q.out_arrows(v):
        lhs = lhs + cyclic_derivative(q, W, a) * Element({q.arrow_path(a): 1}, W.field)
    rhs = Element(field=W.field)
    for b in q.in_arrows(v):
        rhs = rhs + Element({q.arrow_path(b): 1}, W.field) * cyclic_derivative(q, W, b)
    return lhs, rhs


@dataclass(frozen=True)
class Grading:
    degrees: tuple  # one positive int per arrow, in arrow order
    potential_degree: int

    def degree(self, p):
        return sum(self.degrees[a] for a in p.arrows)

    def homogeneous(self, W):
        return all(self.degree(p) == self.potential_degree for p in W.terms)

    def as_dict(self, q):
        return {q.arrows[i].name: d for i, d in enumerate(self.degrees)}


def length_grading(q, W):
    """All arrows in degree 1; potential degree is the common term length (or None)."""
    lengths = {len(p) for p in W.terms}
    return Grading(tuple([1] * q.n_arrows), lengths.pop() if len(lengths) == 1 else None)


def find_positive_grading(q, W):
    """Positive integer arrow degrees making every term of W equal degree.

    Minimises the largest arrow degree, then the degrees themselves
    lexicographically in arrow order.  Returns None when no such grading
    exists.
    """
    if not W:
        raise ValueError("zero potential")
    n = q.n_arrows
    terms = sorted(W.terms, key=lambda p: (len(p), p.arrows))
    # variables: arrow degrees x_0..x_{n-1}, potential degree D, max degree t
    nv = n + 2
    rows, lo, hi = [], [], []
    for p in terms:
        row = np.zeros(nv)
        for a in p.arrows:
            row[a] += 1
        row[n] = -1
        rows.append(row)
        lo.append(0)
        hi.append(0)
    for a in range(n):
        row = np.zeros(nv)
        row[a] = 1
        row[n + 1] = -1
        rows.append(row)
        lo.append(-np.inf)
        hi.append(0)
    integrality = np.ones(nv)
    bounds = Bounds(np.ones(nv), np.full(nv, np.inf))
    base = LinearConstraint(np.array(rows), lo, hi)

    def solve(c, extra=()):
        cons = [base, *extra]
        res = milp(c, constraints=cons, integrality=integrality, bounds=bounds)
        if not res.success:
            return None
        return np.round(res.x).astype(int)

    c = np.zeros(nv)
    c[n + 1] = 1
    x = solve(c)
    if x is None:
        return None
    fixed = [LinearConstraint(np.eye(nv)[n + 1], x[n + 1], x[n + 1])]
    for a in range(n):
        c = np.zeros(nv)
        c[a] = 1
        x = solve(c, fixed)
        fixed.append(LinearConstraint(np.eye(nv)[a], x[a], x[a]))
    g = Grading(tuple(int(d) for d in x[:n]), int(x[n]))
    if not g.homogeneous(W) or min(g.degrees) < 1:
        raise ArithmeticError("solver returned an invalid grading")
    return g
