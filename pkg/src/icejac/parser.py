"""Reader and writer for the line-oriented ice-quiver-with-potential format.

Example::

    field Q
    vertices 1 2 3
    frozen_vertices 1 2
    arrows
      a1: 1 -> 2 frozen
      a2: 2 -> 3
      a3: 3 -> 1
    potential
      a3 a2 a1

Potential terms are written right to left (``a3 a2 a1`` traverses a1 first).
"""

import re
from fractions import Fraction

from .field import QQ, GF
from .quiver import IceQuiver, Path, Potential, validate

NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")
COEFF = re.compile(r"[+-]?\d+(/\d+)?$")
ARROW_LINE = re.compile(
    r"^\s*(?P<name>\S+?)\s*:\s*(?P<tail>\S+)\s*->\s*(?P<head>\S+)(?:\s+(?P<flag>\S+))?\s*$"
)


class QPSyntaxError(ValueError):
    """Malformed input; carries 1-based line and column."""

    def __init__(self, msg, line=None, col=None):
        self.msg, self.line, self.col = msg, line, col
        where = f"line {line}" + (f", column {col}" if col else "") if line else "input"
        super().__init__(f"{where}: {msg}")


class QPValidationError(QPSyntaxError):
    """Well-formed input describing an invalid ice quiver or potential."""


def _col(raw, token):
    i = raw.find(token)
    return i + 1 if i >= 0 else 1


def parse_ice_qp(text, field=None):
    """Parse quiver-file source into ``(IceQuiver, Potential, options)``.

    ``options`` holds the selected scalar field under ``"field"``; a
    ``field`` argument overrides the one named in the file.
    """
    override = field
    field = QQ
    vertices = None
    vertices_line = None
    frozen_v = []
    arrows = []
    frozen_a = []
    terms = []  # (lineno, raw, coeff, names)
    section = None
    seen = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0] in " \t"
        toks = line.split()
        key = toks[0]
        if not indented and key in ("field", "vertices", "frozen_vertices", "arrows", "potential"):
            if key in seen:
                raise QPSyntaxError(f"duplicate section '{key}'", lineno, 1)
            seen.add(key)
            section = None
            if key == "field":
                if toks[1:] == ["Q"]:
                    field = QQ
                elif len(toks) == 3 and toks[1] == "Fp":
                    try:
                        field = GF(int(toks[2]))
                    except ValueError as exc:
                        raise QPSyntaxError(str(exc), lineno, _col(raw, toks[2])) from None
                else:
                    raise QPSyntaxError("expected 'field Q' or 'field Fp <prime>'", lineno, 1)
            elif key == "vertices":
                vertices = toks[1:]
                vertices_line = lineno
                if not vertices:
                    raise QPSyntaxError("no vertices listed", lineno, 1)
            elif key == "frozen_vertices":
                frozen_v = toks[1:]
            else:
                if len(toks) != 1:
                    raise QPSyntaxError(f"unexpected text after '{key}'", lineno, _col(raw, toks[1]))
                section = key
            continue
        if section == "arrows":
            m = ARROW_LINE.match(line)
            if not m or not NAME.match(m["name"]):
                raise QPSyntaxError("expected '<name>: <tail> -> <head> [frozen]'", lineno, _col(raw, toks[0]))
            if m["flag"] not in (None, "frozen"):
                raise QPSyntaxError(f"unknown arrow flag '{m['flag']}'", lineno, _col(raw, m["flag"]))
            arrows.append((m["name"], m["tail"], m["head"], lineno, raw))
            if m["flag"]:
                frozen_a.append(m["name"])
        elif section == "potential":
            i = 0
            sign = 1
            if toks[0] in ("+", "-"):
                sign = -1 if toks[0] == "-" else 1
                i = 1
            coeff = Fraction(1)
            if i < len(toks) and COEFF.match(toks[i]):
                try:
                    coeff = Fraction(toks[i])
                except ZeroDivisionError:
                    raise QPSyntaxError(f"zero denominator in '{toks[i]}'", lineno, _col(raw, toks[i])) from None
                i += 1
            names = toks[i:]
            if not names:
                raise QPSyntaxError("potential term has no arrows", lineno, len(raw.rstrip()) + 1)
            for n in names:
                if not NAME.match(n):
                    raise QPSyntaxError(f"bad arrow name '{n}'", lineno, _col(raw, n))
            terms.append((lineno, raw, sign * coeff, names))
        else:
            raise QPSyntaxError(f"unexpected line '{line.strip()}'", lineno, _col(raw, toks[0]))

    if vertices is None:
        raise QPSyntaxError("missing 'vertices' line")
    if len(set(vertices)) != len(vertices):
        raise QPValidationError("duplicate vertex id", vertices_line)
    vset = set(vertices)
    for v in frozen_v:
        if v not in vset:
            raise QPValidationError(f"frozen vertex '{v}' is not a vertex")
    names = set()
    for name, t, h, lineno, raw in arrows:
        for v in (t, h):
            if v not in vset:
                raise QPValidationError(f"unknown vertex '{v}'", lineno, _col(raw, v))
        if name in names:
            raise QPValidationError(f"duplicate arrow '{name}'", lineno, _col(raw, name))
        names.add(name)
    q = IceQuiver.build(vertices, [a[:3] for a in arrows], frozen_v, frozen_a)
    problems = validate(q)
    if problems:
        p = problems[0]
        lineno = next((a[3] for a in arrows if a[0] == p.detail), None)
        raise QPValidationError(f"invalid ice quiver: {', '.join(map(str, problems))}", lineno)

    if override is not None:
        field = override
    pot = {}
    for lineno, raw, c, word in terms:
        try:
            p = q.path(word)
        except KeyError as exc:
            raise QPValidationError(f"unknown arrow {exc.args[0]!r}", lineno, _col(raw, exc.args[0])) from None
        except ValueError:
            raise QPValidationError(f"term '{' '.join(word)}' is not composable", lineno) from None
        if not p.is_cycle:
            raise QPValidationError(f"term '{' '.join(word)}' is not a cycle", lineno)
        try:
            c = field(c)
        except ZeroDivisionError as exc:
            raise QPValidationError(str(exc), lineno) from None
        pot[p] = pot.get(p, field.zero) + c
    W = Potential(pot, q, field)
    return q, W, {"field": field}


def format_ice_qp(q, W, field=None):
    """Render ``(q, W)`` in the quiver-file format; inverse of :func:`parse_ice_qp`."""
    field = field or W.field
    lines = [f"field {field.descriptor()}", "vertices " + " ".join(q.vertices)]
    if q.frozen_vertices:
        lines.append("frozen_vertices " + " ".join(q.vertices[v] for v in sorted(q.frozen_vertices)))
    lines.append("arrows")
    for i, a in enumerate(q.arrows):
        flag = " frozen" if i in q.frozen_arrows else ""
        lines.append(f"  {a.name}: {q.vertices[a.tail]} -> {q.vertices[a.head]}{flag}")
    lines.append("potential")
    for p in sorted(W.terms, key=lambda p: (len(p), p.arrows)):
        c = W.terms[p]
        if hasattr(field, "p") and c > field.p // 2:
            c = c - field.p
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        lines.append(f"  {sign} {abs(c)} {q.word(p)}")
    return "\n".join(lines) + "\n"


def load(path, field=None):
    with open(path, encoding="utf-8") as fh:
        return parse_ice_qp(fh.read(), field)
