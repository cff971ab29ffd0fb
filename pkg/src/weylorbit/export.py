"""JSON/CSV documents for decompositions, grids and figure data."""
from __future__ import annotations

import csv
import io
import json
import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .decomp import Decomposition, product_continuous, product_discretized
from .galois import build_galois_map
from .grids import coset_representatives, enumerate_lambda_m, grid_with_flags
from .rootsys import AlgebraData, fmt_rational
from .weyl import dual_affine_fold_weight, weyl_orbit_signed

FIGURE_KINDS = ("grid", "foldArrows", "galoisArrows")


def decimal_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    with localcontext() as ctx:
        ctx.prec = 15
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def emit_decomposition(alg: AlgebraData, d: Decomposition, left: tuple, right: tuple) -> dict:
    """``left``/``right`` are ``(kind, weight)`` pairs."""
    doc = {
        "algebra": alg.name,
        "ring": d.ring,
        "basis": d.basis,
        "left": {"kind": left[0], "weight": list(left[1])},
        "right": {"kind": right[0], "weight": list(right[1])},
        "terms": [{"weight": list(k), "coeff": v} for k, v in d.terms()],
    }
    if d.M is not None:
        doc["M"] = d.M
    return doc


def emit_grid(alg: AlgebraData, M: int, kind: str = "F") -> list[dict]:
    if kind == "cosets":
        return [{"coords": list(x), "interior": False} for x in coset_representatives(alg, M)]
    return [{"coords": list(x), "interior": inner} for x, inner in grid_with_flags(alg, M, kind)]


def emit_figure_data(alg: AlgebraData, kind: str, **params) -> dict:
    """Plot-ready data; coordinates are omega-coordinates as decimal strings."""
    if kind == "grid":
        M = params["M"]
        n = alg.rank
        vertices = [[decimal_str(0)] * n] + [
            [decimal_str(Fraction(M, alg.dual_marks[j]) if i == j else 0) for i in range(n)]
            for j in range(n)
        ]
        return {
            "kind": kind, "algebra": alg.name, "M": M,
            "labels": [{"coords": [decimal_str(v) for v in lw.omega],
                        "interior": inner}
                       for lw, (_, inner) in zip(enumerate_lambda_m(alg, M),
                                                 grid_with_flags(alg, M, "Lambda"))],
            "domain_vertices": vertices,
            "cosets": [[decimal_str(v) for v in x] for x in coset_representatives(alg, M)],
        }
    if kind == "foldArrows":
        M = params["M"]
        kl, lam = params["left"], tuple(params["lw"])
        kr, mu = params["right"], tuple(params["rw"])
        basis = "C" if kl == kr else "S"
        arrows = []
        seen = set()
        for wmu, _ in weyl_orbit_signed(alg, mu):
            nu = tuple(a + b for a, b in zip(lam, wmu))
            if nu in seen:
                continue
            seen.add(nu)
            f = dual_affine_fold_weight(alg, nu, M)
            if f.steps == 0 and not (basis == "S" and f.on_boundary):
                continue
            sign = "vanishes" if basis == "S" and f.on_boundary else (f.sign if basis == "S" else 1)
            arrows.append((nu, {"from": [decimal_str(v) for v in nu],
                                "to": [decimal_str(v) for v in f.representative], "sign": sign}))
        cont = product_continuous(alg, kl, lam, kr, mu)
        disc = product_discretized(alg, kl, lam, kr, mu, M)
        return {
            "kind": kind, "algebra": alg.name, "M": M, "basis": basis,
            "factors": [{"kind": kl, "weight": list(lam)}, {"kind": kr, "weight": list(mu)}],
            "shifted_orbit": sorted(list(k) for k in seen),
            "continuous": [{"weight": list(k), "coeff": v} for k, v in cont.terms()],
            "arrows": [a for _, a in sorted(arrows, key=lambda t: t[0])],
            "discretized": [{"weight": list(k), "coeff": v} for k, v in disc.terms()],
        }
    if kind == "galoisArrows":
        g = build_galois_map(alg, params["M"], params["ell"])
        return {
            "kind": kind, "algebra": alg.name, "M": g.M, "ell": g.ell, "N": g.N,
            "arrows": [{"from": [decimal_str(v) for v in lam],
                        "to": [decimal_str(v) for v in t],
                        "sign": "undefined" if s is None else s}
                       for lam, (t, s) in g.label_perm.items()],
        }
    raise ValueError(f"unsupported figure kind {kind!r}; expected one of {FIGURE_KINDS}")


def algebra_document(alg: AlgebraData) -> dict:
    def mat(A):
        return [[fmt_rational(x) for x in row] for row in A]

    return {
        "algebra": alg.name,
        "rank": alg.rank,
        "cartan": [list(r) for r in alg.cartan],
        "symmetrizer": [fmt_rational(x) for x in alg.symmetrizer],
        "cartan_inverse": mat(alg.cartan_inverse),
        "quad_form_omega": mat(alg.quad_form_omega),
        "marks": list(alg.marks),
        "dual_marks": list(alg.dual_marks),
        "comarks": list(alg.comarks),
        "dual_coxeter": alg.dual_coxeter,
        "highest_root": list(alg.highest_root),
        "highest_dual_root": list(alg.highest_dual_root),
        "positive_roots": [list(r) for r in alg.positive_roots],
        "weyl_order": alg.weyl_order,
        "det_cartan": alg.det_cartan,
        "index_P_Qvee": alg.index_p_qvee,
        "rho": list(alg.rho),
        "dimension": alg.dimension,
    }


_FLAT_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(doc) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(doc, indent=2)
    return _FLAT_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text) + "\n"


def to_csv(rows: list[dict]) -> str:
    """Flatten a list of flat-ish records; list values become ``a;b;c``."""
    if not rows:
        return ""
    buf = io.StringIO()
    cols = list(rows[0])
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([";".join(map(str, r[c])) if isinstance(r[c], list) else r[c] for c in cols])
    return buf.getvalue()
