"""End-to-end check of an ice quiver with potential, producing a JSON-ready report."""

import hashlib
import os
import time
from pathlib import Path as FsPath

from . import complexes as cx
from . import cyverify as cy
from . import fdalg as fa
from . import graded as gr
from .groebner import buchberger, default_degree_cap, enumerate_basis
from .jacobian import find_positive_grading, jacobian_relations, vertex_potential_identity
from .parser import QPSyntaxError, parse_ice_qp

SCHEMA_VERSION = "1.0"
CORPUS = FsPath(__file__).parent / "corpus"

EXIT_CODES = {
    "BimoduleInternally3CY": 0,
    "BoundedCertificate": 0,
    "NotQuasiIso": 1,
    "Unsupported": 2,
    "Error": 2,
}


def env_int(name, default):
    val = os.environ.get(name)
    if val is None or val == "":
        return default
    try:
        return int(val)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {val!r}") from None


def resolve_input(path):
    """A file path, or the name of a bundled corpus file (``triangle-ice`` or ``corpus/triangle-ice.qp``)."""
    p = FsPath(path)
    if p.exists():
        return p
    name = p.name if p.suffix == ".qp" else p.name + ".qp"
    cand = CORPUS / name
    if cand.exists():
        return cand
    raise FileNotFoundError(f"no such file or bundled example: {path}")


def jsonable(x):
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, float):
        return x
    return str(x)


class Run:
    def __init__(self):
        self.stages = {}
        self.timings = {}
        self.diagnostics = []
        self._t = None

    def stage(self, name):
        run = self

        class _Timer:
            def __enter__(self):
                self.t = time.perf_counter()

            def __exit__(self, *exc):
                run.timings[name] = round(time.perf_counter() - self.t, 6)
                return False

        return _Timer()


def _gb_stage(gb, q):
    return {
        "status": gb.status,
        "size": len(gb),
        "certified_degree": gb.certified_degree,
        "elements": [e.format(q) for e in gb.sorted_elements()],
    }


def check_text(text, name="<input>", field=None, degree_cap=None, graded=False, gb_degree_cap=None,
               resolution_cap=None, stable=True, dump=None):
    """Run the full pipeline on quiver-file source.  Returns (report, exit_code)."""
    run = Run()
    resolution_cap = resolution_cap if resolution_cap is not None else env_int("ICEJAC_RESOLUTION_CAP", 12)
    options = {"graded": graded, "degree_cap": degree_cap, "gb_degree_cap": gb_degree_cap,
               "resolution_cap": resolution_cap, "stable_spot_check": stable}
    report = {
        "schema_version": SCHEMA_VERSION,
        "input": {"name": name, "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest()},
        "field": None,
        "options": options,
        "stages": run.stages,
    }
    try:
        verdict, detail = _check(run, text, field, degree_cap, graded, gb_degree_cap, resolution_cap, stable, dump, report)
    except QPSyntaxError as exc:
        run.diagnostics.append(str(exc))
        verdict, detail = "Error", f"parse error: {exc}"
    except Exception as exc:  # reported, never swallowed silently
        run.diagnostics.append(f"{type(exc).__name__}: {exc}")
        verdict, detail = "Error", f"{type(exc).__name__}: {exc}"
    report["verdict"] = verdict
    report["verdict_detail"] = detail
    if report["field"] is None:
        report["certificate"] = None
    elif report["field"] == "Q":
        report["certificate"] = "exact over Q"
    else:
        # coefficients may collapse mod p, so the result is evidence only for characteristic 0
        report["certificate"] = "characteristic-p certificate"
    report["exit_code"] = EXIT_CODES[verdict]
    report["diagnostics"] = run.diagnostics
    report["timings"] = run.timings
    return jsonable(report), EXIT_CODES[verdict]


def check_file(path, **kw):
    p = resolve_input(path)
    text = p.read_text(encoding="utf-8")
    return check_text(text, name=p.name, **kw)


def _check(run, text, field, degree_cap, graded, gb_degree_cap, resolution_cap, stable, dump, report):
    with run.stage("parse"):
        q, W, meta = parse_ice_qp(text, field)
    F = meta["field"]
    report["field"] = F.descriptor()
    run.stages["parse"] = {
        "vertices": list(q.vertices),
        "frozen_vertices": [q.vertices[v] for v in sorted(q.frozen_vertices)],
        "arrows": len(q.arrows),
        "frozen_arrows": [q.arrows[a].name for a in sorted(q.frozen_arrows)],
        "potential": W.format(q),
        "vertex_identity": all(l == r for l, r in (vertex_potential_identity(q, W, v) for v in range(q.n_vertices))),
    }
    rels = jacobian_relations(q, W)
    run.stages["relations"] = {q.arrows[a].name: cx_format(q, W, a) for a in q.unfrozen_arrows}

    cap = gb_degree_cap if gb_degree_cap is not None else env_int("ICEJAC_GB_DEGREE_CAP", default_degree_cap(W))
    with run.stage("gb"):
        gb = buchberger(q, rels, degree_cap=cap, field=F)
    run.stages["gb"] = _gb_stage(gb, q)
    with run.stage("basis"):
        nb = enumerate_basis(gb)
    run.stages["basis"] = {"verdict": nb.verdict_str(), "size_listed": len(nb.words)}

    finite = gb.complete and nb.verdict == "Finite"
    if finite and not graded:
        return _finite_route(run, q, W, gb, nb, resolution_cap, stable, dump)
    return _graded_route(run, q, W, rels, F, degree_cap)


def cx_format(q, W, a):
    from .jacobian import cyclic_derivative
    return cyclic_derivative(q, W, a).format(q)


def _finite_route(run, q, W, gb, nb, resolution_cap, stable, dump):
    frozen = sorted(q.frozen_vertices)
    with run.stage("algebra"):
        A = fa.from_groebner(gb, nb)
        nil = A.radical_nilpotency_index()
    run.stages["algebra"] = {"dim": A.dim, "arrow_ideal_nilpotency_index": nil}
    if nil is None:
        run.diagnostics.append("the arrow ideal is not nilpotent in the polynomial quotient, "
                               "so it differs from the completed Jacobian algebra")
        return "Unsupported", "completion-sensitive: arrow ideal not nilpotent in the uncompleted quotient"
    with run.stage("complex"):
        c, d = cx.build_res_complex(A, q, W), cx.build_dual_complex(A, q, W)
        laws = cx.verify_complex(c)
    run.stages["complex"] = {"term_dims": list(c.dims), "composition_zero": laws,
                             "euler_characteristic": c.euler(), "algebra_dim": A.dim}
    if dump:
        with open(dump, "w", encoding="utf-8") as fh:
            cx.dump_triplets(c, fh)
    if not all(laws.values()):
        run.diagnostics.append("a composition law failed; this indicates an implementation bug")
        return "Error", "composition-zero law failed"
    with run.stage("homology"):
        H = cx.homology(c)
    run.stages["homology"] = H.as_dict()
    with run.stage("diagram"):
        diag = cx.verify_selfduality_diagram(c, d)
        ident = cx.check_dual_identification(q, W)
    run.stages["diagram"] = {**diag, "dual_identification": ident}
    if not H.quasi_iso:
        with run.stage("gldim"):
            gl = fa.global_dimension(A, resolution_cap)
        run.stages["global_dimension"] = gl
        pos = ",".join(str(p) for p in H.defect_positions)
        run.diagnostics.append(NOT_QUASI_ISO_NOTE)
        return "NotQuasiIso", f"NotQuasiIso(homology at {pos})"
    with run.stage("cy"):
        reps = cy.full_cy_verification(A, frozen, 3, stable=stable, resolution_cap=resolution_cap)
    run.stages["cy"] = [r.as_dict() for r in reps]
    if not diag["pass"] or not all(ident.values()):
        run.diagnostics.append("comparison diagram check failed after a quasi-isomorphism; implementation bug")
        return "Error", "diagram check failed"
    if not all(r.passed for r in reps):
        run.diagnostics.append("quasi-isomorphism certified but a consequence check failed; implementation bug")
        return "Error", "consequence check failed after QuasiIso"
    ev = "+".join(f"e{q.vertices[v]}" for v in frozen) or "0"
    return "BimoduleInternally3CY", f"bimodule internally 3-Calabi-Yau with respect to {ev}"


NOT_QUASI_ISO_NOTE = ("res(A) is not a resolution, so A is not bimodule internally 3-Calabi-Yau; "
                      "this does not show that the one-sided internal Calabi-Yau duality fails")


def _graded_route(run, q, W, rels, F, degree_cap):
    if not W:
        return "Unsupported", "zero potential and infinite-dimensional algebra: no graded route"
    with run.stage("grading"):
        g = find_positive_grading(q, W)
    if g is None:
        run.stages["grading"] = None
        return "Unsupported", "no positive grading makes the potential homogeneous"
    run.stages["grading"] = {"degrees": g.as_dict(q), "potential_degree": g.potential_degree,
                             "homogeneous": g.homogeneous(W)}
    cap = degree_cap if degree_cap is not None else env_int("ICEJAC_DEGREE_CAP", gr.default_graded_cap(g))
    with run.stage("graded_gb"):
        # homogeneous truncation is exact up to its cap, which is all the check touches
        wgb = buchberger(q, rels, degree_cap=max(cap, g.potential_degree), weights=g.degrees, field=F)
    run.stages["graded_gb"] = _gb_stage(wgb, q)
    with run.stage("graded"):
        checks = gr.graded_check_all(q, W, g, cap, gb=wgb)
    run.stages["graded"] = {"degree_cap": cap, "shift_convention": gr.SHIFT_CONVENTION,
                            "simples": [c.as_dict(q) for c in checks]}
    bad = [q.vertices[c.vertex] for c in checks if c.failing_degrees]
    if bad:
        run.diagnostics.append(NOT_QUASI_ISO_NOTE)
        return "NotQuasiIso", f"NotQuasiIso(graded check fails at simples {','.join(bad)})"
    return "BoundedCertificate", f"BoundedCertificate({cap})"


def render_text(report):
    lines = [f"input: {report['input']['name']}  field: {report['field']}"]
    st = report["stages"]
    if "gb" in st:
        lines.append(f"groebner basis: {st['gb']['status']}, {st['gb']['size']} elements")
    if "basis" in st:
        lines.append(f"basis: {st['basis']['verdict']}")
    if "complex" in st:
        lines.append(f"res(A) term dims: {tuple(st['complex']['term_dims'])}")
    if "homology" in st:
        lines.append(f"homology at P0..P3: {tuple(st['homology']['homology'])}")
    if "global_dimension" in st:
        lines.append(f"global dimension: {st['global_dimension']}")
    if st.get("cy"):
        for r in st["cy"]:
            lines.append(f"consequence checks ({r['side']}): {'pass' if r['passed'] else 'FAIL'}")
    if st.get("grading"):
        lines.append(f"grading: {st['grading']['degrees']} (deg W = {st['grading']['potential_degree']})")
    if st.get("graded"):
        ok = sum(1 for s in st["graded"]["simples"] if not s["failing_degrees"])
        lines.append(f"graded check: {ok}/{len(st['graded']['simples'])} simples exact up to degree {st['graded']['degree_cap']}")
    for d in report["diagnostics"]:
        lines.append(f"diagnostic: {d}")
    if report.get("certificate") == "characteristic-p certificate":
        lines.append(f"certificate: characteristic-p certificate over {report['field']}")
    lines.append(f"verdict: {report['verdict_detail'] if report['verdict'] != 'BimoduleInternally3CY' else report['verdict']}")
    return "\n".join(lines)
