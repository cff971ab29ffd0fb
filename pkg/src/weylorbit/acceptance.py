"""Acceptance criteria 1-8 as plain functions.

Each criterion returns a :class:`CriterionResult`; ``run_all`` is what the
``verify`` subcommand and ``tests/test_acceptance.py`` execute.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .decomp import (fold_decomposition, orbit_gram, product_continuous,
                     product_discretized, verify_pointwise)
from .galois import check_coefficient_symmetry, check_composition, check_galois_symmetry
from .grids import coset_representatives, enumerate_fm, enumerate_lambda_m
from .modular import (kac_walton_fusion, modular_context, su2_fusion_closed_form, verlinde_fusion)
from .orbitfn import compute_n, eval_orbit
from .rootsys import build_algebra
from .weyl import (affine_fold_point, apply_generator, dominant_fold, dual_affine_fold_weight,
                   stabilizer_order)

LAM, MU, M20 = (3, 5), (1, 1), 20


def _t(*pairs):
    return {w: c for w, c in pairs}


# G2 products of (3,5) and (1,1): (left kind, right kind, M) -> {weight: coeff}
G2_IDENTITIES = {
    ("C", "C", None): _t(((4, 6), 1), ((2, 9), 1), ((5, 4), 1), ((6, 1), 1), ((1, 10), 1),
                         ((6, 0), 1), ((2, 4), 1), ((4, 1), 1), ((1, 6), 1), ((0, 9), 1),
                         ((5, 0), 1), ((0, 10), 1)),
    ("C", "C", 20): _t(((4, 2), 1), ((2, 5), 1), ((5, 1), 1), ((6, 1), 1), ((1, 7), 1),
                       ((6, 0), 1), ((2, 4), 1), ((4, 1), 1), ((1, 6), 1), ((0, 9), 1),
                       ((5, 0), 1), ((0, 10), 1)),
    ("C", "S", None): _t(((4, 6), 1), ((2, 9), -1), ((5, 4), -1), ((6, 1), 1), ((1, 10), 1),
                         ((2, 4), 1), ((4, 1), -1), ((1, 6), -1)),
    ("C", "S", 20): _t(((4, 2), -1), ((2, 5), 1), ((5, 1), 1), ((1, 7), -1), ((2, 4), 1),
                       ((4, 1), -1), ((1, 6), -1)),
    ("S", "S", None): _t(((4, 6), 1), ((2, 9), -1), ((5, 4), -1), ((6, 1), 1), ((1, 10), 1),
                         ((6, 0), -1), ((2, 4), 1), ((4, 1), -1), ((1, 6), -1), ((0, 9), 1),
                         ((5, 0), 1), ((0, 10), -1)),
    ("S", "S", 20): _t(((4, 2), 1), ((2, 5), -1), ((5, 1), -1), ((6, 1), 1), ((1, 7), 1),
                       ((6, 0), -1), ((2, 4), 1), ((4, 1), -1), ((1, 6), -1), ((0, 9), 1),
                       ((5, 0), 1), ((0, 10), -1)),
}

# |W| * M^n * det C * |Stab(lam)| is the Gram diagonal; this is |W| det C.
GRAM_BASE = {"A2": 18, "C2": 16, "G2": 12}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} [{self.number}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def g2_products() -> tuple[bool, str]:
    g2 = build_algebra("G2")
    bad = []
    slowest = 0.0
    for (kl, kr, M), expected in G2_IDENTITIES.items():
        t0 = time.perf_counter()
        if M is None:
            d = product_continuous(g2, kl, LAM, kr, MU)
        else:
            d = product_discretized(g2, kl, LAM, kr, MU, M)
        slowest = max(slowest, time.perf_counter() - t0)
        if d.coeffs != expected:
            bad.append(f"{kl}{kr} M={M}")
    if slowest >= 1.0:
        bad.append(f"slow ({slowest:.2f}s)")
    return not bad, "6 identities exact" if not bad else "mismatch: " + ", ".join(bad)


def g2_pointwise() -> tuple[bool, str]:
    g2 = build_algebra("G2")
    total = 0
    for kl, kr in (("C", "C"), ("C", "S"), ("S", "S")):
        d = product_discretized(g2, kl, LAM, kr, MU, M20)
        rep = verify_pointwise(g2, d, kl, LAM, kr, MU)
        total += rep.checked
        if not rep:
            return False, f"{kl}{kr} differs at {rep.witness}"
    return True, f"{total} exact point checks on F_20 / interior"


def _random_label(alg, rng, M, strict):
    pts = enumerate_lambda_m(alg, M, interior=strict)
    return rng.choice(pts).omega if pts else None


def folding_relations(pairs: int = 50, seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    count = 0
    for name in ("A2", "C2", "G2"):
        alg = build_algebra(name)
        for kl, kr in (("C", "C"), ("C", "S"), ("S", "S")):
            done = 0
            while done < pairs:
                M = rng.randint(5, 25)
                lam = _random_label(alg, rng, M, kl == "S")
                mu = _random_label(alg, rng, M, kr == "S")
                if lam is None or mu is None:
                    continue
                lhs = fold_decomposition(alg, product_continuous(alg, kl, lam, kr, mu), M)
                rhs = product_discretized(alg, kl, lam, kr, mu, M)
                if lhs != rhs:
                    return False, f"{name} M={M} {kl}{kr} {lam},{mu}"
                done += 1
                count += 1
    return True, f"{count} exact comparisons ({pairs} pairs x 3 products x 3 algebras)"


def grid_counts() -> tuple[bool, str]:
    g2 = build_algebra("G2")
    a1 = build_algebra("A1")
    n_lam = len(enumerate_lambda_m(g2, 6))
    n_cos = len(coset_representatives(g2, 6))
    a1_ok = all(len(enumerate_fm(a1, M)) == M + 1 for M in range(1, 51))
    ok = n_lam == 7 and n_cos == 36 and a1_ok
    return ok, f"|Lambda_6(G2)|={n_lam}, |P/6Q|={n_cos}, |F_M(A1)|=M+1 for M<=50: {a1_ok}"


def galois_symmetry() -> tuple[bool, str]:
    g2 = build_algebra("G2")
    M = 13
    checked = 0
    for ell in (7, 8, 9):
        rep = check_galois_symmetry(g2, M, ell)
        checked += rep.checked
        if not rep:
            return False, f"ell={ell} fails at {rep.witness}"
    N = compute_n(g2, M)
    units = [l for l in range(1, N) if math.gcd(l, N) == 1]
    for l1 in units:
        for l2 in units:
            if not check_composition(g2, M, l1, l2):
                return False, f"composition fails for {l1},{l2}"
    return True, f"{checked} exact relations; composition for {len(units)**2} pairs (N={N})"


def coefficient_symmetry() -> tuple[bool, str]:
    g2 = build_algebra("G2")
    N = compute_n(g2, M20)
    checked = 0
    for ell in range(1, N):
        if math.gcd(ell, N) == 1:
            rep = check_coefficient_symmetry(g2, M20, ell, LAM, MU)
            checked += rep.checked
            if not rep:
                return False, f"G2 ell={ell} {rep.witness} {rep.detail}"
    a2 = build_algebra("A2")
    M = 6
    N = compute_n(a2, M)
    interior = [lw.omega for lw in enumerate_lambda_m(a2, M, interior=True)]
    for ell in range(1, N):
        if math.gcd(ell, N) != 1:
            continue
        for lam in interior:
            for mu in interior:
                rep = check_coefficient_symmetry(a2, M, ell, lam, mu)
                checked += rep.checked
                if not rep:
                    return False, f"A2 ell={ell} {lam},{mu} {rep.witness} {rep.detail}"
    return True, f"{checked} coefficient relations"


def modular_checks() -> tuple[bool, str]:
    worst = 0.0
    for name, kmax in (("A1", 8), ("A2", 5), ("G2", 3)):
        alg = build_algebra(name)
        for k in range(kmax + 1):
            S = modular_context(alg, k).S
            worst = max(worst, float(np.max(np.abs(S - S.T))),
                        float(np.max(np.abs(S @ S.conj().T - np.eye(len(S))))))
    if worst > 1e-10:
        return False, f"unitarity/symmetry error {worst:.2e}"
    triples = 0
    for name, kmax in (("A1", 6), ("A2", 4), ("G2", 2)):
        alg = build_algebra(name)
        for k in range(kmax + 1):
            ctx = modular_context(alg, k)
            for lam in ctx.labels:
                for mu in ctx.labels:
                    kw = kac_walton_fusion(ctx, lam, mu)
                    for nu in ctx.labels:
                        v = verlinde_fusion(ctx, lam, mu, nu)
                        triples += 1
                        if v != kw.get(nu, 0):
                            return False, f"{name} k={k} {lam}x{mu}->{nu}: {v} vs {kw.get(nu, 0)}"
                        if name == "A1" and v != su2_fusion_closed_form(
                                ctx.shifted_level, lam[0], mu[0], nu[0]):
                            return False, f"su(2) closed form differs at k={k}"
    return True, f"S error {worst:.1e}; {triples} fusion triples agree"


def _word_check(alg, M, rng) -> str | None:
    n = alg.rank
    N = compute_n(alg, M)
    for _ in range(12):
        pt = rng.choice(enumerate_fm(alg, M)).kac
        lam = rng.choice(enumerate_lambda_m(alg, M)).omega
        word = [rng.randint(0, n) for _ in range(rng.randint(1, 10))]
        a, nu = pt, lam
        for g in word:
            a = apply_generator(alg, "Waff", a, g, M)
            nu = apply_generator(alg, "hatWaff", nu, g, M)
        sign = -1 if len(word) % 2 else 1
        for anti in (False, True):
            s = sign if anti else 1
            base = eval_orbit(alg, lam, pt, M, anti, N)
            if not eval_orbit(alg, lam, a, M, anti, N) == s * base:
                return f"point word {word} at {pt}"
            if not eval_orbit(alg, nu, pt, M, anti, N) == s * base:
                return f"label word {word} at {lam}"
            if not base.conjugate() == eval_orbit(alg, lam, tuple(-v for v in pt), M, anti, N):
                return f"conjugation at {lam},{pt}"
            if not base.conjugate().conjugate() == base or not base.galois(N - 1) == base.conjugate():
                return "conjugate involution"
    return None


def _fold_check(alg, M, rng) -> str | None:
    n = alg.rank
    for _ in range(30):
        x = tuple(rng.randint(-3 * M, 3 * M) for _ in range(n))
        for fold in (dominant_fold,
                     lambda a, v, **kw: dual_affine_fold_weight(a, v, M, **kw),
                     lambda a, v, **kw: affine_fold_point(a, v, M, **kw)):
            f = fold(alg, x)
            again = fold(alg, f.representative)
            if again.steps or again.representative != f.representative:
                return f"fold not idempotent at {x}"
            for strat in ("lowest_index", random.Random(rng.random())):
                g = fold(alg, x, strategy=strat)
                if g.representative != f.representative or g.on_boundary != f.on_boundary:
                    return f"representative depends on path at {x}"
                if not f.on_boundary and g.sign != f.sign:
                    return f"sign depends on path at {x}"
    return None


def property_suites(max_m: int = 12, seed: int = 7) -> tuple[bool, str]:
    rng = random.Random(seed)
    grams = 0
    for name in ("A2", "C2", "G2"):
        alg = build_algebra(name)
        for M in range(1, max_m + 1):
            err = _word_check(alg, M, rng) or _fold_check(alg, M, rng)
            if err:
                return False, f"{name} M={M}: {err}"
            labels, G = orbit_gram(alg, M, "C")
            norm = GRAM_BASE[name] * M ** alg.rank
            for i, lam in enumerate(labels):
                for j in range(len(labels)):
                    want = norm * stabilizer_order(alg, lam, "hatWaff", M) if i == j else 0
                    if G[i][j].as_integer() != want:
                        return False, f"Gram {name} M={M} entry {labels[i]},{labels[j]}"
            grams += 1
    return True, f"group words, conjugation, folds and {grams} Gram matrices"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "G2 product identities", g2_products),
    (2, "pointwise exactness on F_20", g2_pointwise),
    (3, "fold o continuous == discretized", folding_relations),
    (4, "grid counts", grid_counts),
    (5, "Galois symmetry and composition", galois_symmetry),
    (6, "coefficient symmetry", coefficient_symmetry),
    (7, "modular cross-checks", modular_checks),
    (8, "property suites", property_suites),
]

TIME_LIMITS = {1: 6.0, 2: 30.0, 5: 10.0, 7: 60.0}


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # reported, not raised: a crash is a failure
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            dt = time.perf_counter() - t0
            limit = TIME_LIMITS.get(num)
            if ok and limit is not None and dt > limit:
                ok, detail = False, f"{detail}; exceeded {limit:.0f}s budget"
            return CriterionResult(num, name, ok, detail, dt)
    raise KeyError(f"no criterion {number}")


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA if numbers is None or n in numbers]
