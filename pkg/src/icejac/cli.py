"""Command-line front end: ``icejac <command> FILE [options]``.

FILE is a path or the name of a bundled example (triangle-ice,
triangle-plain, a-prime, gr26).  Exit codes: 0 for an internally 3-CY
verdict or a bounded certificate, 1 when res(A) is not quasi-isomorphic to A,
2 for unsupported inputs and errors.
"""

import argparse
import json
import sys

from . import fdalg as fa
from .field import QQ, GF
from .groebner import buchberger, default_degree_cap, enumerate_basis
from .jacobian import cyclic_derivative, find_positive_grading, jacobian_relations
from .parser import QPSyntaxError, load
from .pipeline import check_file, env_int, jsonable, render_text, resolve_input


def parse_field(text):
    if text is None:
        return None
    s = text.strip()
    if s in ("Q", "QQ"):
        return QQ
    parts = s.replace(":", " ").split()
    if parts and parts[0] in ("Fp", "GF", "F") and len(parts) == 2:
        return GF(int(parts[1]))
    if s.startswith("F") and s[1:].isdigit():
        return GF(int(s[1:]))
    raise argparse.ArgumentTypeError(f"field must be 'Q' or 'Fp <prime>', got {text!r}")


def _load(args):
    path = resolve_input(args.file)
    return load(path, args.field)


def _gb(args, q, W):
    cap = args.gb_degree_cap if args.gb_degree_cap is not None else env_int("ICEJAC_GB_DEGREE_CAP", default_degree_cap(W))
    return buchberger(q, jacobian_relations(q, W), degree_cap=cap, field=W.field)


def _emit(args, data, text):
    print(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(jsonable(data), fh, indent=2)
            fh.write("\n")


def cmd_check(args):
    report, code = check_file(args.file, field=args.field, degree_cap=args.degree_cap, graded=args.graded,
                              gb_degree_cap=args.gb_degree_cap, resolution_cap=args.resolution_cap,
                              stable=not args.no_stable, dump=args.dump_matrices)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return code


def cmd_relations(args):
    q, W, _ = _load(args)
    lines, data = [], {}
    for a in q.unfrozen_arrows:
        d = cyclic_derivative(q, W, a).format(q)
        data[q.arrows[a].name] = d
        lines.append(f"d_{q.arrows[a].name} W = {d}")
    _emit(args, {"relations": data}, "\n".join(lines))
    return 0


def cmd_gb(args):
    q, W, _ = _load(args)
    gb = _gb(args, q, W)
    lines = [f"status: {gb.status}"]
    for e in gb.sorted_elements():
        lines.append(f"  {e.format(q)}")
    _emit(args, {"status": gb.status, "elements": [e.format(q) for e in gb.sorted_elements()]}, "\n".join(lines))
    return 0


def cmd_basis(args):
    q, W, _ = _load(args)
    gb = _gb(args, q, W)
    nb = enumerate_basis(gb, args.length_cap)
    lines = [f"verdict: {nb.verdict_str()}"]
    by_len = {}
    for p in nb.words:
        by_len.setdefault(len(p), []).append(q.word(p))
    for n in sorted(by_len):
        lines.append(f"length {n}: " + ", ".join(by_len[n]))
    _emit(args, {"verdict": nb.verdict_str(), "words": [q.word(p) for p in nb.words]}, "\n".join(lines))
    return 0


def cmd_grade(args):
    q, W, _ = _load(args)
    g = find_positive_grading(q, W) if W else None
    if g is None:
        print("no positive grading makes the potential homogeneous")
        return 2
    ok = g.homogeneous(W)
    lines = [f"{q.arrows[i].name}: {d}" for i, d in enumerate(g.degrees)]
    lines.append(f"homogeneity verified: {'yes' if ok else 'NO'}, every term of W has degree {g.potential_degree}")
    _emit(args, {"degrees": g.as_dict(q), "potential_degree": g.potential_degree, "homogeneous": ok}, "\n".join(lines))
    return 0 if ok else 2


def module_from_name(A, q, text):
    """'S3', 'P1', 'I2' or 'radP1' with a vertex name."""
    for prefix, make in (("radP", fa.radical_of_projective), ("S", fa.simple_module),
                         ("P", fa.projective_module), ("I", fa.injective_module)):
        if text.startswith(prefix) and text[len(prefix):] in q.vertices:
            return make(A, q.vertices.index(text[len(prefix):]))
    raise ValueError(f"module name must be S<v>, P<v>, I<v> or radP<v> for a vertex v, got {text!r}")


def cmd_resolve(args):
    q, W, _ = _load(args)
    gb = _gb(args, q, W)
    nb = enumerate_basis(gb)
    if nb.verdict != "Finite":
        print(f"algebra is not finite dimensional ({nb.verdict_str()}); resolutions need a finite basis")
        return 2
    A = fa.from_groebner(gb, nb)
    M = module_from_name(A, q, args.module)
    cap = args.resolution_cap if args.resolution_cap is not None else env_int("ICEJAC_RESOLUTION_CAP", 12)
    res = fa.minimal_projective_resolution(M, cap)
    lines = [f"module {M.name}: dims {dict(zip(q.vertices, M.dims))}"]
    betti = []
    for i in range(len(res.gens)):
        b = res.betti(i)
        betti.append(b)
        terms = " + ".join(f"{n}*P{q.vertices[v]}" if n > 1 else f"P{q.vertices[v]}" for v, n in enumerate(b) if n)
        lines.append(f"P_{i} = {terms}")
    pd = res.pdim if res.terminated else f">={cap}"
    lines.append(f"projective dimension: {pd}")
    _emit(args, {"module": M.name, "betti": betti, "pdim": pd}, "\n".join(lines))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="icejac", description="Frozen Jacobian algebras: internal Calabi-Yau checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="quiver file or bundled example name")
        sp.add_argument("--field", type=parse_field, default=None, help="'Q' or 'Fp <prime>' (overrides the file)")
        sp.add_argument("--gb-degree-cap", type=int, default=None, help="truncation degree for Groebner completion")
        sp.add_argument("--report", default=None, help="write a JSON report to this path")

    sp = sub.add_parser("check", help="full pipeline with verdict")
    common(sp)
    sp.add_argument("--degree-cap", type=int, default=None, help="internal degree cap for the graded check")
    sp.add_argument("--graded", action="store_true", help="use the per-simple graded check")
    sp.add_argument("--resolution-cap", type=int, default=None)
    sp.add_argument("--no-stable", action="store_true", help="skip the experimental stable-category spot check")
    sp.add_argument("--dump-matrices", default=None, help="write the differentials as sparse triplets")
    sp.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    sp.set_defaults(func=cmd_check)

    for name, func, helptext in (("gb", cmd_gb, "Groebner basis of the Jacobian relations"),
                                 ("relations", cmd_relations, "cyclic derivatives along unfrozen arrows"),
                                 ("grade", cmd_grade, "find a positive grading")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.set_defaults(func=func)
    sp = sub.add_parser("basis", help="normal-word basis")
    common(sp)
    sp.add_argument("--length-cap", type=int, default=None)
    sp.set_defaults(func=cmd_basis)
    sp = sub.add_parser("resolve", help="minimal projective resolution of a module")
    common(sp)
    sp.add_argument("module", help="S<v>, P<v>, I<v> or radP<v>")
    sp.add_argument("--resolution-cap", type=int, default=None)
    sp.set_defaults(func=cmd_resolve)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (QPSyntaxError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
