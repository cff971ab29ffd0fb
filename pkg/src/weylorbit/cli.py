"""Batch command-line front end.

Every subcommand writes one JSON (or CSV) document, to stdout or ``--output``.
Exit codes: 0 success, 1 computation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import export
from .decomp import DecompositionError, _check_labels, product
from .galois import GaloisError, build_galois_map, check_galois_symmetry
from .grids import enumerate_fm, enumerate_lambda_m
from .modular import CACHE_ENV, FusionError, fusion_triples, modular_context
from .orbitfn import compute_n, eval_orbit
from .rootsys import AlgebraError, build_algebra, fmt_rational
from .weyl import FoldError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _weight(text: str) -> tuple:
    try:
        w = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weight {text!r}; expected e.g. 3,5") from None
    if any(v < 0 for v in w):
        raise argparse.ArgumentTypeError(f"weight {text!r} has negative entries")
    return w


def _ints(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = _ints(text)
    if len(v) != 1 or v[0] < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v[0]


KINDS = ("C", "S")

# subcommand -> (uses --M / --level, [(option, argparse kwargs)])
COMMANDS: dict[str, tuple[Optional[str], list]] = {
    "algebra-info": (None, []),
    "grid": ("M", [("set", dict(choices=("F", "Lambda", "cosets"), default="F",
                                help="sample points F_M, labels Lambda_M, or P/MQ cosets")),
                   ("interior", dict(action="store_true", help="interior points only"))]),
    "eval": ("M", [("kind", dict(choices=KINDS, required=True, help="C- or S-function")),
                   ("lw", dict(type=_weight, required=True, help="label, e.g. 3,5")),
                   ("point", dict(type=_ints, help="Kac labels a_1..a_n of one point of F_M; "
                                                   "default: all of F_M"))]),
    "product": ("M?", [("left", dict(choices=KINDS, required=True)),
                       ("lw", dict(type=_weight, required=True)),
                       ("right", dict(choices=KINDS, required=True)),
                       ("rw", dict(type=_weight, required=True))]),
    "galois": ("M", [("ell", dict(type=int, required=True, help="exponent coprime to N")),
                     ("arrows", dict(action="store_true", help="emit figure arrows only")),
                     ("check", dict(action="store_true",
                                    help="verify the symmetry relations exactly"))]),
    "smatrix": ("level", []),
    "fusion": ("level", [("no-cache", dict(action="store_true",
                                           help=f"ignore ${CACHE_ENV}"))]),
    "figure": ("M", [("kind", dict(choices=export.FIGURE_KINDS, required=True)),
                     ("left", dict(choices=KINDS)), ("lw", dict(type=_weight)),
                     ("right", dict(choices=KINDS)), ("rw", dict(type=_weight)),
                     ("ell", dict(type=int))]),
    "verify": (None, [("only", dict(type=_ints, help="criterion numbers, e.g. 1,4"))]),
}

CSV_COMMANDS = ("grid", "eval", "product", "galois", "smatrix", "fusion")


@dataclass
class RunConfig:
    command: str
    algebra: Optional[str] = None
    M: Optional[int] = None
    level: Optional[int] = None
    params: dict = field(default_factory=dict)
    output: Optional[str] = None
    format: str = "json"

    def to_argv(self) -> list[str]:
        argv = [self.command]
        if self.algebra is not None:
            argv += ["--algebra", self.algebra]
        if self.M is not None:
            argv += ["--M", str(self.M)]
        if self.level is not None:
            argv += ["--level", str(self.level)]
        for key, value in self.params.items():
            flag = "--" + key.replace("_", "-")
            if value is None or value is False:
                continue
            if value is True:
                argv.append(flag)
            elif isinstance(value, tuple):
                argv += [flag, ",".join(map(str, value))]
            else:
                argv += [flag, str(value)]
        if self.output is not None:
            argv += ["--output", self.output]
        if self.format != "json":
            argv += ["--format", self.format]
        return argv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weylorbit",
        description="Exact Weyl orbit functions, their discretized products, Galois "
                    "symmetries and affine modular data.",
        epilog=f"Environment: ${CACHE_ENV} sets the directory for cached fusion tables.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "algebra-info": "root data of a simple Lie algebra",
        "grid": "points of F_M, labels of Lambda_M or coset representatives",
        "eval": "exact values of an orbit function on F_M",
        "product": "decompose a product of two orbit functions",
        "galois": "signed permutations t_ell of labels and points",
        "smatrix": "Kac-Peterson modular S matrix at level k",
        "fusion": "Verlinde fusion coefficients at level k",
        "figure": "plot-ready data for grids, folding and Galois arrows",
        "verify": "run the acceptance suite",
    }
    for name, (scale, options) in COMMANDS.items():
        sp = sub.add_parser(name, help=helps[name], description=helps[name])
        if name != "verify":
            sp.add_argument("--algebra", required=True, help="e.g. A2, C3, G2, E8")
        if scale in ("M", "M?"):
            sp.add_argument("--M", type=_positive, required=scale == "M",
                            help="discretization scale" + (" (omit for the continuous ring)"
                                                           if scale == "M?" else ""))
        elif scale == "level":
            sp.add_argument("--level", type=_nonneg, required=True, help="level k >= 0")
        for opt, kw in options:
            sp.add_argument("--" + opt, dest=opt.replace("-", "_"), **kw)
        sp.add_argument("--output", help="write here instead of stdout")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def parse_args(argv: Optional[list[str]] = None) -> RunConfig:
    """Parse and validate; usage errors exit with status 2."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    scale, options = COMMANDS[ns.command]
    params = {opt.replace("-", "_"): getattr(ns, opt.replace("-", "_")) for opt, _ in options}
    cfg = RunConfig(ns.command, getattr(ns, "algebra", None), getattr(ns, "M", None),
                    getattr(ns, "level", None), params, ns.output, ns.format)
    try:
        _validate(cfg)
    except (AlgebraError, DecompositionError, GaloisError, ValueError) as exc:
        parser.error(str(exc))
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.format == "csv" and cfg.command not in CSV_COMMANDS:
        raise ValueError(f"--format csv is not available for {cfg.command}")
    if cfg.algebra is None:
        return
    alg = build_algebra(cfg.algebra)
    p = cfg.params
    for key in ("lw", "rw", "point"):
        if p.get(key) is not None and len(p[key]) != alg.rank:
            raise ValueError(f"--{key} needs {alg.rank} entries for {alg.name}")
    if cfg.command == "eval":
        if p["kind"] == "S" and any(v == 0 for v in p["lw"]):
            raise ValueError("S-function labels must be strictly dominant")
        if p["point"] is not None:
            if any(v < 0 for v in p["point"]) or sum(
                    m * v for m, v in zip(alg.marks, p["point"])) > cfg.M:
                raise ValueError(f"--point {p['point']} is not in F_{cfg.M}")
    if cfg.command == "product":
        _check_labels(alg, p["left"], p["lw"], p["right"], p["rw"], cfg.M)
    if cfg.command == "figure" and p["kind"] == "foldArrows":
        if None in (p["left"], p["lw"], p["right"], p["rw"]):
            raise ValueError("foldArrows needs --left --lw --right --rw")
        _check_labels(alg, p["left"], p["lw"], p["right"], p["rw"], cfg.M)
    ell = p.get("ell")
    if cfg.command == "galois" or (cfg.command == "figure" and p["kind"] == "galoisArrows"):
        if ell is None:
            raise ValueError("--ell is required")
        N = compute_n(alg, cfg.M)
        if math.gcd(ell, N) != 1:
            raise GaloisError(f"--ell {ell} is not coprime to N={N}")


def _value_doc(v) -> dict:
    z = v.to_complex()
    return {
        "terms": [{"exponent": fmt_rational(Fraction(k, v.modulus)), "coeff": c}
                  for k, c in v.terms()],
        "value": [_num(z.real), _num(z.imag)],
    }


def _num(x: float) -> float:
    return round(x, 12) + 0.0


def _run(cfg: RunConfig) -> tuple[object, Optional[list], int]:
    """Returns (document, csv rows or None, exit status)."""
    if cfg.command == "verify":
        from .acceptance import run_all

        results = run_all(cfg.params["only"])
        for r in results:
            print(r.line(), file=sys.stderr)
        doc = {"criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                             "detail": r.detail} for r in results],
               "passed": all(r.passed for r in results)}
        return doc, None, EXIT_OK if doc["passed"] else EXIT_FAIL
    alg = build_algebra(cfg.algebra)
    p = cfg.params
    if cfg.command == "algebra-info":
        return export.algebra_document(alg), None, EXIT_OK
    if cfg.command == "grid":
        pts = export.emit_grid(alg, cfg.M, p["set"])
        if p["interior"]:
            pts = [x for x in pts if x["interior"]]
        doc = {"algebra": alg.name, "M": cfg.M, "set": p["set"], "count": len(pts), "points": pts}
        return doc, pts, EXIT_OK
    if cfg.command == "eval":
        N = compute_n(alg, cfg.M)
        pts = [p["point"]] if p["point"] is not None else [a.kac for a in enumerate_fm(alg, cfg.M)]
        values = []
        for a in pts:
            v = eval_orbit(alg, p["lw"], a, cfg.M, p["kind"] == "S", N)
            values.append({"point": list(a), **_value_doc(v)})
        doc = {"algebra": alg.name, "M": cfg.M, "N": N, "kind": p["kind"],
               "label": list(p["lw"]), "values": values}
        rows = [{"point": r["point"], "re": r["value"][0], "im": r["value"][1]} for r in values]
        return doc, rows, EXIT_OK
    if cfg.command == "product":
        d = product(alg, p["left"], p["lw"], p["right"], p["rw"], cfg.M)
        doc = export.emit_decomposition(alg, d, (p["left"], p["lw"]), (p["right"], p["rw"]))
        return doc, doc["terms"], EXIT_OK
    if cfg.command == "galois":
        if p["arrows"]:
            doc = export.emit_figure_data(alg, "galoisArrows", M=cfg.M, ell=p["ell"])
            return doc, doc["arrows"], EXIT_OK
        g = build_galois_map(alg, cfg.M, p["ell"])

        def perm(d):
            return [{"from": list(k), "to": list(t), "sign": "undefined" if s is None else s}
                    for k, (t, s) in d.items()]

        doc = {"algebra": alg.name, "M": cfg.M, "ell": g.ell, "N": g.N,
               "labels": perm(g.label_perm), "points": perm(g.point_perm)}
        status = EXIT_OK
        if p["check"]:
            rep = check_galois_symmetry(alg, cfg.M, p["ell"], g)
            doc["check"] = {"ok": rep.ok, "checked": rep.checked,
                            "witness": None if rep.witness is None else str(rep.witness)}
            status = EXIT_OK if rep.ok else EXIT_FAIL
        return doc, doc["labels"], status
    if cfg.command == "smatrix":
        ctx = modular_context(alg, cfg.level)
        S = ctx.S
        doc = {"algebra": alg.name, "level": cfg.level, "shifted_level": ctx.shifted_level,
               "labels": [list(x) for x in ctx.labels],
               "S": [[[_num(z.real), _num(z.imag)] for z in row] for row in S]}
        rows = [{"row": list(a), "col": list(b), "re": _num(S[i, j].real), "im": _num(S[i, j].imag)}
                for i, a in enumerate(ctx.labels) for j, b in enumerate(ctx.labels)]
        return doc, rows, EXIT_OK
    if cfg.command == "fusion":
        ctx = modular_context(alg, cfg.level)
        triples = fusion_triples(ctx, use_cache=not p["no_cache"])
        return {"algebra": alg.name, "level": cfg.level, "triples": triples}, triples, EXIT_OK
    if cfg.command == "figure":
        kw = {"M": cfg.M}
        if p["kind"] == "foldArrows":
            kw.update(left=p["left"], lw=p["lw"], right=p["right"], rw=p["rw"])
        elif p["kind"] == "galoisArrows":
            kw["ell"] = p["ell"]
        return export.emit_figure_data(alg, p["kind"], **kw), None, EXIT_OK
    raise AssertionError(cfg.command)


def run(cfg: RunConfig) -> tuple[str, int]:
    doc, rows, status = _run(cfg)
    text = export.to_csv(rows) if cfg.format == "csv" else export.dumps(doc)
    return text, status


def main(argv: Optional[list[str]] = None) -> int:
    cfg = parse_args(argv)
    try:
        text, status = run(cfg)
    except (FusionError, FoldError, ArithmeticError) as exc:
        print(f"weylorbit: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
