"""End-to-end machine check of a presentation, producing a JSON-ready report."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional

from .corpus import random_path, random_word
from .hilbert import expand, growth_consistent, hilbert_algebra, hilbert_quiver
from .language import is_normal, normal_words
from .morphism import (
    check_degree_span,
    classify_cyclic,
    cokernel_fdim_certificate,
    element_to_vector,
    fbar_element,
    fbar_slice,
    fbar_word,
    ker_coker_dims,
    kernel_fdim_certificate,
    multiply,
)
from .presentation import Presentation
from .quiver import (
    Path,
    Quiver,
    build_quiver,
    check_label_property,
    check_label_targets,
    count_paths,
    growth_class,
)

SCHEMA = 1


@dataclass(frozen=True)
class VerifyConfig:
    max_degree: int = 8
    m_max: Optional[int] = None  # defaults to max_degree
    seed: int = 0
    cap: int = 10**6
    mult_samples: int = 200
    mult_max_length: int = 8
    random_probes: int = 100
    probe_n_max: int = 12

    @property
    def effective_m_max(self) -> int:
        return self.max_degree if self.m_max is None else self.m_max


def _s(n: int) -> str:
    # counts go out as decimal strings so consumers never overflow
    return str(n)


def check_multiplicativity(q: Quiver, p: Presentation, rng: random.Random,
                           samples: int, max_length: int, cap: int) -> Dict:
    """f̄(uv) = f̄(u)·f̄(v) on random word pairs, forbidden words included.

    Three routes must coincide: the product of the two images, the dense
    image of uv built letter by letter, and the label-matching column of uv
    in the degree slice (zero when uv is forbidden).
    """
    failures = []
    g = p.num_generators
    if g == 0:
        return {"samples": 0, "failures": []}
    for _ in range(samples):
        total = rng.randint(0, max_length)
        split = rng.randint(0, total)
        u = random_word(rng, g, split)
        v = random_word(rng, g, total - split)
        uv = u + v
        prod = multiply(fbar_element(u, q), fbar_element(v, q), q.d)
        sl = fbar_slice(len(uv), q, p, cap)
        dense = fbar_word(uv, q, cap)
        if is_normal(uv, p):
            column = sl.column(sl.words.index(uv))
        else:
            column = [0] * len(sl.paths)
        if not (element_to_vector(prod, sl.paths) == dense == column):
            failures.append([p.spell(u), p.spell(v)])
    return {"samples": samples, "failures": failures}


def run_verify(p: Presentation, config: VerifyConfig = VerifyConfig()) -> Dict:
    """Run every check for degrees 0..max_degree and assemble the report."""
    N = config.max_degree
    m_max = config.effective_m_max
    cap = config.cap
    rng = random.Random(config.seed)
    q = build_quiver(p, cap)
    d = q.d

    label_ok, violations = check_label_property(q)
    checks: Dict[str, bool] = {
        "label_lemma": label_ok,
        "label_lemma_dual": check_label_targets(q),
    }

    rows = []
    bijection_ok = span_ok_all = char_ok = indep_ok = True
    for n in range(N + 1):
        sl = fbar_slice(n, q, p, cap)
        kc = ker_coker_dims(n, q, p, cap, sl=sl)
        span_ok = check_degree_span(n, q, p)
        paths_n = count_paths(q, n)
        bij = paths_n == len(normal_words(n + d, p, cap)) == len(sl.paths)
        bijection_ok &= bij
        span_ok_all &= span_ok
        char_ok &= sl.characterizations_agree
        indep_ok &= kc.columns_independent
        rows.append({
            "n": n,
            "dim_A": _s(kc.dim_A),
            "paths": _s(paths_n),
            "rank": _s(kc.rank),
            "ker": _s(kc.kernel_dim),
            "coker": _s(kc.cokernel_dim),
            "ker_basis": [p.spell(w) for w in kc.kernel],
            "span_ok": span_ok,
            "bijection_ok": bij,
        })
    checks["bijection"] = bijection_ok
    checks["span_lemma"] = span_ok_all
    checks["column_characterization"] = char_ok
    checks["kernel_spanned_by_zero_columns"] = indep_ok

    mult = check_multiplicativity(q, p, rng, config.mult_samples,
                                  min(config.mult_max_length, N), cap)
    checks["multiplicativity"] = not mult["failures"]

    certificates = []
    certs_ok = True
    for n in range(N + 1):
        for cert in (kernel_fdim_certificate(n, m_max, q, p, cap),
                     cokernel_fdim_certificate(n, m_max, q, p, cap)):
            certs_ok &= cert.certified
            certificates.append({
                "kind": cert.kind,
                "n": cert.degree,
                "m": cert.bound,
                "m_max": cert.m_max,
                "status": cert.status,
                "table": [[m, ok] for m, ok in cert.table],
            })
    checks["fdim_certificates"] = certs_ok

    probes: List[Path] = [Path(v) for v in range(len(q.vertices))]
    probes += [random_path(rng, q, config.probe_n_max) for _ in range(config.random_probes)]
    disagreements = []
    for path in probes:
        probe = classify_cyclic(path, config.probe_n_max, q)
        if not probe.agree:
            disagreements.append({"start": path.start, "arrows": list(path.arrows)})
    checks["cyclic_probe_agreement"] = not disagreements

    hq = hilbert_quiver(q)
    ha = hilbert_algebra(p, q)
    expansion = expand(ha, N)
    checks["hilbert_matches_dims"] = expansion == [int(r["dim_A"]) for r in rows]
    checks["hilbert_quiver_matches_paths"] = expand(hq, N) == [int(r["paths"]) for r in rows]
    checks["growth_consistent"] = growth_consistent(q, ha)

    verdict = "pass" if all(checks.values()) else "fail"
    return {
        "schema": SCHEMA,
        "presentation": {**p.to_json(), "d": d, "collapsed": p.collapsed},
        "config": {"max_degree": N, "m_max": m_max, "seed": config.seed, "cap": _s(cap)},
        "quiver": {"vertices": len(q.vertices), "arrows": len(q.arrows), "d": d},
        "degrees": rows,
        "label_violations": [
            {"vertex": q.spell(q.vertices[v.vertex]), "label": q.spell((v.label,)),
             "arrows": [q.spell(q.arrows[i].word) for i in v.arrows]}
            for v in violations
        ],
        "multiplicativity": mult,
        "certificates": certificates,
        "cyclic_probes": {"count": len(probes), "n_max": config.probe_n_max,
                          "disagreements": disagreements},
        "growth": str(growth_class(q)),
        "hilbert": {
            "algebra": {"numerator": [_s(c) for c in ha.numerator],
                        "denominator": [_s(c) for c in ha.denominator]},
            "quiver": {"numerator": [_s(c) for c in hq.numerator],
                       "denominator": [_s(c) for c in hq.denominator]},
            "expansion": [_s(c) for c in expansion],
        },
        "checks": checks,
        "verdict": verdict,
    }
