"""Galois transformations ``t_ell`` of discretized orbit functions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .decomp import product_discretized
from .grids import enumerate_fm, enumerate_lambda_m
from .orbitfn import ExponentSum, compute_n, eval_orbit
from .rootsys import AlgebraData
from .weyl import affine_fold_point, dual_affine_fold_weight


class GaloisError(ValueError):
    pass


@dataclass(frozen=True)
class GaloisMap:
    """Signed permutations induced by ``ell``.

    ``label_perm`` and ``point_perm`` cover all of ``Lambda_M`` and ``F_M``;
    the sign is None on the boundary, where it is undefined.
    """

    M: int
    ell: int
    N: int
    label_perm: dict
    point_perm: dict

    def label(self, lam) -> tuple:
        return self.label_perm[tuple(lam)][0]

    def label_sign(self, lam) -> Optional[int]:
        return self.label_perm[tuple(lam)][1]

    def point(self, a) -> tuple:
        return self.point_perm[tuple(a)][0]

    def point_sign(self, a) -> Optional[int]:
        return self.point_perm[tuple(a)][1]


def _coprime(ell: int, N: int) -> int:
    if math.gcd(ell, N) != 1:
        raise GaloisError(f"ell={ell} is not coprime to N={N}")
    return ell % N


def build_galois_map(alg: AlgebraData, M: int, ell: int) -> GaloisMap:
    N = compute_n(alg, M)
    return _build(alg, M, _coprime(ell, N), N)


@lru_cache(maxsize=256)
def _build(alg: AlgebraData, M: int, ell: int, N: int) -> GaloisMap:
    labels = {}
    for lw in enumerate_lambda_m(alg, M):
        f = dual_affine_fold_weight(alg, tuple(ell * v for v in lw.omega), M)
        labels[lw.omega] = (f.representative, None if f.on_boundary else f.sign)
    points = {}
    for p in enumerate_fm(alg, M):
        f = affine_fold_point(alg, tuple(ell * v for v in p.kac), M)
        points[p.kac] = (f.representative, None if f.on_boundary else f.sign)
    return GaloisMap(M, ell, N, labels, points)


def apply_galois_to_value(v: ExponentSum, ell: int) -> ExponentSum:
    return v.galois(ell)


@dataclass
class SymmetryReport:
    ok: bool
    checked: int
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_galois_symmetry(alg: AlgebraData, M: int, ell: int,
                          gmap: GaloisMap | None = None) -> SymmetryReport:
    """Check, exactly and at every label/point pair,

        t(Phi_lam(a)) = Phi_{t[lam]}(a) = Phi_lam(t[a])
        t(phi_lam(a)) = e[lam] phi_{t[lam]}(a) = e'[a] phi_lam(t[a])

    the S-relation on interior labels and points only.
    """
    g = gmap or build_galois_map(alg, M, ell)
    N = g.N
    checked = 0
    for lw in enumerate_lambda_m(alg, M):
        lam = lw.omega
        tl, sl = g.label_perm[lam]
        for p in enumerate_fm(alg, M):
            a = p.kac
            ta, sa = g.point_perm[a]
            lhs = eval_orbit(alg, lam, a, M, False, N).galois(g.ell)
            if not (lhs == eval_orbit(alg, tl, a, M, False, N)
                    and lhs == eval_orbit(alg, lam, ta, M, False, N)):
                return SymmetryReport(False, checked, ("C", lam, a))
            checked += 1
            if sl is None or sa is None:
                continue
            lhs = eval_orbit(alg, lam, a, M, True, N).galois(g.ell)
            if not (lhs == sl * eval_orbit(alg, tl, a, M, True, N)
                    and lhs == sa * eval_orbit(alg, lam, ta, M, True, N)):
                return SymmetryReport(False, checked, ("S", lam, a))
            checked += 1
    return SymmetryReport(True, checked)


def compose(g1: GaloisMap, g2: GaloisMap) -> tuple[dict, dict]:
    """Maps of ``t_{g1} o t_{g2}`` with multiplied signs."""

    def comp(p1, p2):
        out = {}
        for x, (y, s2) in p2.items():
            z, s1 = p1[y]
            out[x] = (z, None if s1 is None or s2 is None else s1 * s2)
        return out

    return comp(g1.label_perm, g2.label_perm), comp(g1.point_perm, g2.point_perm)


def check_composition(alg: AlgebraData, M: int, ell1: int, ell2: int) -> bool:
    g1, g2 = build_galois_map(alg, M, ell1), build_galois_map(alg, M, ell2)
    g12 = build_galois_map(alg, M, ell1 * ell2)
    labels, points = compose(g1, g2)
    return labels == g12.label_perm and points == g12.point_perm


def check_coefficient_symmetry(alg: AlgebraData, M: int, ell: int, lam, mu) -> SymmetryReport:
    """Galois relations between discretized decomposition coefficients.

    For interior labels ``lam, mu`` and every ``nu`` in ``Lambda_M``:

        e[lam] e[mu] <C|SS>_{t lam, t mu}^{t nu} = <C|SS>_{lam, mu}^nu
                     <C|CC>_{t lam, t mu}^{t nu} = <C|CC>_{lam, mu}^nu
              e[mu]  <S|CS>_{t lam, t mu}^{t nu} = e[nu] <S|CS>_{lam, mu}^nu
    """
    g = build_galois_map(alg, M, ell)
    lam, mu = tuple(lam), tuple(mu)
    tl, sl = g.label_perm[lam]
    tm, sm = g.label_perm[mu]
    if sl is None or sm is None:
        raise GaloisError("coefficient symmetry needs interior labels")
    checked = 0
    cases = [
        ("C", "C", lambda nu, snu: 1, lambda nu, snu: 1),
        ("S", "S", lambda nu, snu: sl * sm, lambda nu, snu: 1),
        ("C", "S", lambda nu, snu: sm, lambda nu, snu: snu),
    ]
    for kl, kr, lfac, rfac in cases:
        before = product_discretized(alg, kl, lam, kr, mu, M).coeffs
        after = product_discretized(alg, kl, tl, kr, tm, M).coeffs
        interior = kl != kr
        for lw in enumerate_lambda_m(alg, M, interior=interior):
            nu = lw.omega
            tn, sn = g.label_perm[nu]
            lhs = lfac(nu, sn) * after.get(tn, 0)
            rhs = rfac(nu, sn) * before.get(nu, 0)
            checked += 1
            if lhs != rhs:
                return SymmetryReport(False, checked, (kl + kr, nu), f"{lhs} != {rhs}")
    return SymmetryReport(True, checked)
