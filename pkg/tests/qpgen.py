"""Seeded rejection sampler of small ice quivers with potential."""

import random

from icejac.fdalg import from_groebner
from icejac.groebner import buchberger, enumerate_basis, ufnarovski_finite
from icejac.jacobian import jacobian_relations
from icejac.parser import parse_ice_qp


def _cycles(n, arrows, max_len):
    """Arrow-index cycles (traversal order), one per rotation class."""
    out = set()

    def extend(start, cur, path):
        if len(path) > max_len:
            return
        for i, (t, h) in enumerate(arrows):
            if t != cur:
                continue
            p = path + [i]
            if h == start:
                rots = [tuple(p[k:] + p[:k]) for k in range(len(p))]
                out.add(min(rots))
            extend(start, h, p)

    for v in range(n):
        extend(v, v, [])
    return sorted(out, key=lambda c: (len(c), c))


def random_qp_text(rng, max_vertices=4, max_arrows=7, cycle_lengths=(2, 3, 4), homogeneous=False,
                   frozen_prob=0.4):
    n = rng.randint(2, max_vertices)
    m = rng.randint(n, max_arrows)
    arrows = []
    for _ in range(m):
        t = rng.randrange(n)
        h = rng.randrange(n - 1)
        h = h + 1 if h >= t else h
        arrows.append((t, h))
    cycles = [c for c in _cycles(n, arrows, max(cycle_lengths)) if len(c) in cycle_lengths]
    if not cycles:
        return None
    if homogeneous:
        L = rng.choice(sorted({len(c) for c in cycles}))
        cycles = [c for c in cycles if len(c) == L]
    k = rng.randint(1, min(4, len(cycles)))
    chosen = rng.sample(cycles, k)
    frozen_v = {v for v in range(n) if rng.random() < frozen_prob}
    frozen_a = {i for i, (t, h) in enumerate(arrows) if t in frozen_v and h in frozen_v and rng.random() < 0.7}
    lines = ["field Q", "vertices " + " ".join(str(v + 1) for v in range(n))]
    if frozen_v:
        lines.append("frozen_vertices " + " ".join(str(v + 1) for v in sorted(frozen_v)))
    lines.append("arrows")
    for i, (t, h) in enumerate(arrows):
        lines.append(f"  x{i}: {t + 1} -> {h + 1}" + (" frozen" if i in frozen_a else ""))
    lines.append("potential")
    for c in chosen:
        coeff = rng.choice(["1", "-1", "2", "1/2", "3"])
        lines.append(f"  + {coeff} " + " ".join(f"x{i}" for i in reversed(c)))
    return "\n".join(lines) + "\n"


class Sample:
    def __init__(self, text, q, W, gb, basis):
        self.text, self.q, self.W, self.gb, self.basis = text, q, W, gb, basis
        self._A = None

    @property
    def A(self):
        if self._A is None:
            self._A = from_groebner(self.gb, self.basis)
        return self._A


def sample_fd_qps(seed, count, max_dim=24, degree_cap=12, require_nilpotent=True, **kw):
    """``count`` finite-dimensional random ice QPs (complete basis, Finite verdict)."""
    rng = random.Random(seed)
    out = []
    seen = set()
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 200 * count:
            raise RuntimeError("sampler acceptance rate too low")
        text = random_qp_text(rng, **kw)
        if text is None or text in seen:
            continue
        seen.add(text)
        q, W, _ = parse_ice_qp(text)
        if not W:
            continue
        rels = jacobian_relations(q, W)
        try:
            gb = buchberger(q, rels, degree_cap=degree_cap)
        except ValueError:
            continue
        if not gb.complete or not ufnarovski_finite(gb):
            continue
        nb = enumerate_basis(gb)
        if nb.verdict != "Finite" or len(nb) > max_dim:
            continue
        smp = Sample(text, q, W, gb, nb)
        if require_nilpotent and smp.A.radical_nilpotency_index() is None:
            continue
        out.append(smp)
    return out


def sample_any_qps(seed, count, **kw):
    """Random valid ice QPs with nonzero potential, no finiteness requirement."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        text = random_qp_text(rng, **kw)
        if text is None:
            continue
        q, W, _ = parse_ice_qp(text)
        if W:
            out.append((text, q, W))
    return out


QUASI_ISO_PARAMS = dict(frozen_prob=0.8, cycle_lengths=(3,), max_vertices=5)


def sample_quasi_iso_qps(seed, count, max_tries=None):
    """Random finite-dimensional ice QPs whose res(A) is quasi-isomorphic to A.

    Returns (samples, examined) where ``examined`` counts every finite
    candidate looked at, so callers can report the acceptance rate.
    """
    from icejac import complexes as cx

    rng_seed = seed
    out, examined, seen = [], 0, set()
    while len(out) < count:
        batch = sample_fd_qps(rng_seed, 50, **QUASI_ISO_PARAMS)
        rng_seed += 1000003
        for s in batch:
            if s.text in seen:
                continue
            seen.add(s.text)
            examined += 1
            c = cx.build_res_complex(s.A, s.q, s.W)
            if cx.homology(c).quasi_iso:
                s.complex = c
                out.append(s)
                if len(out) == count:
                    break
        if max_tries and examined > max_tries:
            raise RuntimeError("too few quasi-isomorphic samples")
    return out, examined
