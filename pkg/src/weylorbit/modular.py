"""Affine modular data of WZNW models at level k.

Labels are shifted highest weights ``lam + rho`` in the open alcove of
``W^aff_{M'}``, ``M' = k + h^v``:

    lam_j > 0,  sum_j m'_j lam_j < M'   (m' the comarks).
"""
from __future__ import annotations

import cmath
import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np

from .orbitfn import eval_orbit
from .rootsys import AlgebraData, alpha_coords
from .weyl import affine_fold_weight, dominant_fold, weyl_orbit, weyl_orbit_signed

CACHE_ENV = "WEYLORBIT_CACHE_DIR"
INTEGRALITY_TOL = 1e-6


class FusionError(ArithmeticError):
    """A Verlinde sum failed to round to a non-negative integer."""


def _open_alcove(alg: AlgebraData, level: int) -> list[tuple]:
    out = []

    def rec(j, cur, budget):
        if j == alg.rank:
            if budget > 0:
                out.append(tuple(cur))
            return
        v = 1
        while v * alg.comarks[j] < budget:
            rec(j + 1, cur + [v], budget - v * alg.comarks[j])
            v += 1

    rec(0, [], level)
    return out


@dataclass(eq=False)
class ModularContext:
    alg: AlgebraData
    level: int
    shifted_level: int
    labels: list
    normalization: complex
    _s: np.ndarray | None = field(default=None, repr=False)

    @property
    def index(self) -> dict:
        return {lam: i for i, lam in enumerate(self.labels)}

    @property
    def rho(self) -> tuple:
        return self.alg.rho

    @property
    def S(self) -> np.ndarray:
        if self._s is None:
            self._s = kac_peterson_s(self)
        return self._s


@lru_cache(maxsize=64)
def modular_context(alg: AlgebraData, level: int) -> ModularContext:
    if not isinstance(level, int) or level < 0:
        raise ValueError(f"level must be a non-negative integer, got {level!r}")
    Mp = level + alg.dual_coxeter
    n = alg.rank
    R = (1j ** len(alg.positive_roots)) * alg.index_p_qvee ** -0.5 * Mp ** (-n / 2)
    return ModularContext(alg, level, Mp, _open_alcove(alg, Mp), R)


def _phase(x: Fraction) -> complex:
    # exp(2 pi i x), reduced mod 1 first so large exponents stay accurate
    return cmath.exp(2j * math.pi * float(x - math.floor(x)))


def kac_peterson_s(ctx: ModularContext) -> np.ndarray:
    """``S_{lam,mu} = R sum_w det(w) exp(-2 pi i <w lam, mu> / M')``."""
    alg, Mp = ctx.alg, ctx.shifted_level
    L = ctx.labels
    S = np.zeros((len(L), len(L)), dtype=complex)
    for i, lam in enumerate(L):
        orbit = weyl_orbit_signed(alg, lam)
        for j, mu in enumerate(L):
            re = []
            im = []
            for wl, s in orbit:
                z = s * _phase(-alg.inner(wl, mu) / Mp)
                re.append(z.real)
                im.append(z.imag)
            S[i, j] = ctx.normalization * complex(math.fsum(re), math.fsum(im))
    return S


def s_matrix_via_orbit_functions(ctx: ModularContext) -> np.ndarray:
    """The same matrix as ``R * phi_lam(-mu/M')`` computed through exact
    orbit-function values."""
    alg, Mp = ctx.alg, ctx.shifted_level
    d = alg.symmetrizer
    G = alg.quad_form_omega
    N = math.lcm(*[(Fraction(x) / Mp).denominator for row in G for x in row])
    L = ctx.labels
    S = np.zeros((len(L), len(L)), dtype=complex)
    for j, mu in enumerate(L):
        # co-weight coordinates <-mu, alpha_k> = -mu_k d_k
        kac = tuple(-v * dk for v, dk in zip(mu, d))
        for i, lam in enumerate(L):
            S[i, j] = ctx.normalization * eval_orbit(alg, lam, kac, Mp, True, N).to_complex()
    return S


def verlinde_fusion(ctx: ModularContext, lam, mu, nu) -> int:
    """Fusion coefficient via the Verlinde formula (shifted labels)."""
    idx = ctx.index
    S = ctx.S
    i, j, k, r = idx[tuple(lam)], idx[tuple(mu)], idx[tuple(nu)], idx[ctx.rho]
    terms = S[i, :] * S[j, :] * np.conj(S[k, :]) / S[r, :]
    val = complex(math.fsum(terms.real), math.fsum(terms.imag))
    n = round(val.real)
    if abs(val - n) > INTEGRALITY_TOL or n < 0:
        raise FusionError(f"Verlinde sum {val} for {lam},{mu},{nu} is not a non-negative integer")
    return n


def fusion_table(ctx: ModularContext) -> dict:
    """All non-zero ``N_{lam,mu}^nu`` keyed by shifted label triples."""
    out = {}
    L = ctx.labels
    for a, lam in enumerate(L):
        for mu in L[a:]:
            for nu in L:
                v = verlinde_fusion(ctx, lam, mu, nu)
                if v:
                    out[(lam, mu, nu)] = v
                    out[(mu, lam, nu)] = v
    return out


def weyl_dimension(alg: AlgebraData, lam: Sequence) -> int:
    """Dimension of the irreducible module of highest weight ``lam``."""
    num = Fraction(1)
    for beta in alg.positive_roots:
        br = alg.root_to_omega(beta)
        num *= alg.inner(tuple(l + 1 for l in lam), br) / alg.inner(alg.rho, br)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=1024)
def _dominant_multiplicities(alg: AlgebraData, lam: tuple) -> dict:
    # Freudenthal: (|lam+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} m(mu+ka) <mu+ka, a>
    pos = [alg.root_to_omega(b) for b in alg.positive_roots]
    dominant = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if all(v >= 0 for v in nu) and nu not in dominant:
                    dominant.add(nu)
                    nxt.append(nu)
        frontier = nxt

    def depth(mu):
        return sum(alpha_coords(alg, tuple(x - y for x, y in zip(lam, mu))))

    order = sorted(dominant, key=lambda mu: (depth(mu), mu))
    lr = tuple(x + 1 for x in lam)
    top = alg.inner(lr, lr)
    mult = {lam: 1}
    for mu in order[1:]:
        total = Fraction(0)
        for a in pos:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(dominant_fold(alg, nu).representative)
                if not m:
                    break
                total += m * alg.inner(nu, a)
                k += 1
        mr = tuple(x + 1 for x in mu)
        val = 2 * total / (top - alg.inner(mr, mr))
        assert val.denominator == 1
        if val:
            mult[mu] = int(val)
    return mult


def weight_multiplicities(alg: AlgebraData, lam: Sequence) -> dict:
    """Multiplicities of the dominant weights of ``V(lam)``."""
    return dict(_dominant_multiplicities(alg, tuple(lam)))


def all_weights(alg: AlgebraData, lam: Sequence) -> dict:
    """Every weight of ``V(lam)`` with its multiplicity."""
    out = {}
    for mu, m in _dominant_multiplicities(alg, tuple(lam)).items():
        for w, _ in weyl_orbit(alg, mu):
            out[w] = m
    return out


def tensor_coefficients(alg: AlgebraData, lam: Sequence, mu: Sequence, shifted: bool = False) -> dict:
    """``V(lam) x V(mu) = sum_nu T^nu V(nu)`` by Brauer-Klimyk.

    With ``shifted=True`` inputs and outputs are shifted weights ``lam+rho``.
    """
    lam, mu = tuple(lam), tuple(mu)
    if shifted:
        lam = tuple(v - 1 for v in lam)
        mu = tuple(v - 1 for v in mu)
    if any(v < 0 for v in lam + mu):
        raise ValueError("tensor_coefficients needs dominant highest weights")
    if weyl_dimension(alg, mu) > weyl_dimension(alg, lam):
        lam, mu = mu, lam
    out: dict = {}
    for w, m in all_weights(alg, mu).items():
        f = dominant_fold(alg, tuple(a + 1 + b for a, b in zip(lam, w)))
        if f.on_boundary:
            continue
        out[f.representative] = out.get(f.representative, 0) + f.sign * m
    res = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in res.values()):
        raise ArithmeticError("negative tensor product coefficient")
    if shifted:
        return res
    return {tuple(v - 1 for v in k): c for k, c in res.items()}


def kac_walton_fold(ctx: ModularContext, tensor: dict) -> dict:
    """Fold shifted tensor-product labels by ``W^aff_{M'}`` with signs."""
    out: dict = {}
    for nu, c in tensor.items():
        f = affine_fold_weight(ctx.alg, nu, ctx.shifted_level)
        if f.on_boundary:
            continue
        out[f.representative] = out.get(f.representative, 0) + f.sign * c
    return {k: v for k, v in out.items() if v}


def kac_walton_fusion(ctx: ModularContext, lam, mu) -> dict:
    """Fusion of two shifted labels via folded tensor products."""
    return kac_walton_fold(ctx, tensor_coefficients(ctx.alg, lam, mu, shifted=True))


def su2_fusion_closed_form(Mp: int, lam: int, mu: int, nu: int) -> int:
    """su(2) fusion in shifted labels ``1..M'-1``."""
    ok = (abs(lam - mu) + 1 <= nu <= min(lam + mu - 1, 2 * Mp - lam - mu - 1)
          and (lam + mu + nu) % 2 == 1)
    return int(ok)


def character_at(alg: AlgebraData, lam_shifted, sigma, Mp: int) -> complex:
    """Weyl character of highest weight ``lam - rho`` at ``-sigma/M'``."""
    hw = tuple(v - 1 for v in lam_shifted)
    re, im = [], []
    for w, m in all_weights(alg, hw).items():
        z = m * _phase(-alg.inner(w, sigma) / Mp)
        re.append(z.real)
        im.append(z.imag)
    return complex(math.fsum(re), math.fsum(im))


def _cache_dir() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def fusion_triples(ctx: ModularContext, use_cache: bool = True) -> list[dict]:
    """Non-zero fusion coefficients as JSON-ready records (unshifted weights).

    Cached on disk under ``$WEYLORBIT_CACHE_DIR`` when that is set; a cached
    file whose content hash does not match is recomputed.
    """
    cdir = _cache_dir() if use_cache else None
    path = cdir / f"fusion_{ctx.alg.name}_k{ctx.level}.json" if cdir else None
    if path is not None and path.exists():
        doc = json.loads(path.read_text())
        if doc.get("hash") == _content_hash(doc["triples"]):
            return doc["triples"]
    table = fusion_table(ctx)
    triples = [
        {"lambda": [v - 1 for v in a], "mu": [v - 1 for v in b], "nu": [v - 1 for v in c], "N": n}
        for (a, b, c), n in sorted(table.items())
    ]
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"algebra": ctx.alg.name, "level": ctx.level, "hash": _content_hash(triples),
               "triples": triples}
        path.write_text(json.dumps(doc, sort_keys=True))
    return triples


def _content_hash(triples) -> str:
    return hashlib.sha256(json.dumps(triples, sort_keys=True).encode()).hexdigest()
