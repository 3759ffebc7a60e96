"""Ice quivers, paths and path-algebra elements.

Paths compose right to left: for arrows a1: 1 -> 2 and a2: 2 -> 3 the path
"a2 a1" traverses a1 first.  Internally a :class:`Path` stores its arrows in
traversal order (first arrow first), so the written word is the reverse of
``Path.arrows``.
"""

from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

from .field import QQ


class Arrow(NamedTuple):
    name: str
    tail: int
    head: int


class Path(NamedTuple):
    tail: int
    head: int
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_idempotent(self):
        return not self.arrows

    @property
    def is_cycle(self):
        return self.tail == self.head and bool(self.arrows)


def idempotent(v):
    return Path(v, v, ())


def compose(p, q):
    """Return the path ``p q`` (q first, then p), or None when not composable."""
    if q.head != p.tail:
        return None
    return Path(q.tail, p.head, q.arrows + p.arrows)


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}({self.detail})"


@dataclass(frozen=True)
class IceQuiver:
    """A finite loop-free quiver with a frozen subquiver.

    Vertices and arrows are referred to by integer position everywhere except
    in the textual interface.  The arrow order doubles as the precedence used
    by monomial orders.
    """

    vertices: tuple
    arrows: tuple
    frozen_vertices: frozenset = frozenset()
    frozen_arrows: frozenset = frozenset()
    _vindex: dict = dc_field(default=None, compare=False, repr=False, hash=False)
    _aindex: dict = dc_field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*a) for a in self.arrows))
        object.__setattr__(self, "frozen_vertices", frozenset(self.frozen_vertices))
        object.__setattr__(self, "frozen_arrows", frozenset(self.frozen_arrows))
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_aindex", {a.name: i for i, a in enumerate(self.arrows)})

    @classmethod
    def build(cls, vertices, arrows, frozen_vertices=(), frozen_arrows=()):
        """Construct from names: ``arrows`` is a list of (name, tail, head)."""
        vertices = [str(v) for v in vertices]
        vi = {v: i for i, v in enumerate(vertices)}
        arr = [Arrow(str(n), vi[str(t)], vi[str(h)]) for n, t, h in arrows]
        ai = {a.name: i for i, a in enumerate(arr)}
        return cls(
            tuple(vertices),
            tuple(arr),
            frozenset(vi[str(v)] for v in frozen_vertices),
            frozenset(ai[str(a)] for a in frozen_arrows),
        )

    # lookups -----------------------------------------------------------
    def vertex(self, name):
        return self._vindex[str(name)]

    def arrow(self, name):
        return self._aindex[name]

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_arrows(self):
        return len(self.arrows)

    @property
    def mutable_vertices(self):
        return [v for v in range(self.n_vertices) if v not in self.frozen_vertices]

    @property
    def unfrozen_arrows(self):
        return [a for a in range(self.n_arrows) if a not in self.frozen_arrows]

    def out_arrows(self, v):
        return [i for i, a in enumerate(self.arrows) if a.tail == v]

    def in_arrows(self, v):
        return [i for i, a in enumerate(self.arrows) if a.head == v]

    def arrow_path(self, a):
        arr = self.arrows[a]
        return Path(arr.tail, arr.head, (a,))

    def path(self, written):
        """Build a path from a written word such as ``"a3 a2 a1"`` (right to left).

        An empty word is not accepted here; use :func:`idempotent`.
        """
        names = written.split() if isinstance(written, str) else list(written)
        if not names:
            raise ValueError("empty word; use idempotent(v)")
        arrows = tuple(self.arrow(n) for n in reversed(names))
        for a, b in zip(arrows, arrows[1:]):
            if self.arrows[a].head != self.arrows[b].tail:
                raise ValueError(f"word {written!r} is not a path")
        return Path(self.arrows[arrows[0]].tail, self.arrows[arrows[-1]].head, arrows)

    def word(self, p):
        """Written (right-to-left) form of a path."""
        if not p.arrows:
            return f"e{self.vertices[p.tail]}"
        return " ".join(self.arrows[a].name for a in reversed(p.arrows))

    def frozen_idempotent(self):
        return Element({idempotent(v): QQ.one for v in sorted(self.frozen_vertices)})

    def with_frozen(self, frozen_vertices=(), frozen_arrows=()):
        """Same quiver with a different frozen subquiver (given by names)."""
        return IceQuiver.build(
            self.vertices,
            [(a.name, self.vertices[a.tail], self.vertices[a.head]) for a in self.arrows],
            frozen_vertices,
            frozen_arrows,
        )

    def opposite(self):
        return IceQuiver(
            self.vertices,
            tuple(Arrow(a.name, a.head, a.tail) for a in self.arrows),
            self.frozen_vertices,
            self.frozen_arrows,
        )


def validate(q):
    """List every violated ice-quiver invariant (empty when valid)."""
    out = []
    if len(set(q.vertices)) != len(q.vertices):
        out.append(Violation("DuplicateVertex", ",".join(sorted(q.vertices))))
    names = [a.name for a in q.arrows]
    if len(set(names)) != len(names):
        out.append(Violation("DuplicateArrow", ",".join(sorted(names))))
    for a in q.arrows:
        if a.tail == a.head:
            out.append(Violation("LoopArrow", q.vertices[a.tail]))
    for i in sorted(q.frozen_arrows):
        a = q.arrows[i]
        if a.tail not in q.frozen_vertices or a.head not in q.frozen_vertices:
            out.append(Violation("FrozenArrowEndpoint", a.name))
    return out


class Element:
    """A finite linear combination of paths with exact coefficients.

    ``x * y`` is path multiplication (y first, then x); terms whose paths do
    not compose vanish.
    """

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        out = {}
        for p, c in dict(terms or {}).items():
            v = field.norm(out.get(p, field.zero) + field(c))
            if v == 0:
                out.pop(p, None)
            else:
                out[p] = v
        self.terms = out

    @classmethod
    def from_path(cls, p, c=1, field=QQ):
        return cls({p: c}, field)

    def copy(self):
        e = Element(field=self.field)
        e.terms = dict(self.terms)
        return e

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign):
        f = self.field
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = f.norm(out.get(p, f.zero) + sign * c)
            if v == 0:
                out.pop(p, None)
            else:
                out[p] = v
        e = Element(field=f)
        e.terms = out
        return e

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        f = self.field
        c = f(c)
        e = Element(field=f)
        if c != 0:
            e.terms = {p: f.norm(v * c) for p, v in self.terms.items()}
        return e

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        f = self.field
        out = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = compose(p, q)
                if r is not None:
                    out[r] = f.norm(out.get(r, f.zero) + a * b)
        e = Element(field=f)
        e.terms = {p: c for p, c in out.items() if c != 0}
        return e

    def paths(self):
        return list(self.terms)

    def endpoints(self):
        """(tail, head) shared by all terms, or None if not endpoint-homogeneous."""
        ends = {(p.tail, p.head) for p in self.terms}
        return ends.pop() if len(ends) == 1 else None

    def max_length(self):
        return max((len(p) for p in self.terms), default=0)

    def format(self, q):
        """Human-readable form using written (right-to-left) words."""
        if not self.terms:
            return "0"
        out = []
        for p in sorted(self.terms, key=lambda p: (len(p), p.arrows, p.tail)):
            c = coefficient_str(self.terms[p], self.field)
            sign = "-" if c.startswith("-") else "+"
            c = c.lstrip("-")
            body = q.word(p) if c == "1" else f"{c} {q.word(p)}"
            out.append((sign, body))
        first = ("-" if out[0][0] == "-" else "") + out[0][1]
        return " ".join([first] + [f"{s} {b}" for s, b in out[1:]])

    def __repr__(self):
        return f"Element({self.terms!r})"


def coefficient_str(c, field):
    """Signed decimal form; F_p elements print in the symmetric range."""
    p = getattr(field, "p", None)
    if p is not None and c > p // 2:
        c = c - p
    return str(c)


def multiply(x, y):
    return x * y


def cyclic_rotations(p):
    n = len(p.arrows)
    return [p.arrows[i:] + p.arrows[:i] for i in range(n)]


def canonical_rotation(p, quiver):
    """Least rotation of a cycle under the arrow order (as a Path)."""
    best = min(cyclic_rotations(p))
    v = quiver.arrows[best[0]].tail
    return Path(v, v, best)


class Potential(Element):
    """A linear combination of cycles, stored with canonical rotations."""

    __slots__ = ()

    def __init__(self, terms, quiver, field=QQ):
        canon = {}
        for p, c in dict(terms or {}).items():
            if not p.is_cycle:
                raise ValueError(f"potential term {quiver.word(p)} is not a cycle")
            p = canonical_rotation(p, quiver)
            canon[p] = field.norm(canon.get(p, field.zero) + field(c))
        super().__init__(canon, field)

    def __repr__(self):
        return f"Potential({self.terms!r})"
