import dataclasses
import math

import pytest

from weylorbit.galois import (GaloisError, build_galois_map, check_coefficient_symmetry,
                              check_composition, check_galois_symmetry)
from weylorbit.grids import enumerate_fm, enumerate_lambda_m
from weylorbit.orbitfn import compute_n
from weylorbit.rootsys import build_algebra


@pytest.mark.parametrize("ell", [7, 8, 9])
def test_g2_m13(g2, ell):
    assert check_galois_symmetry(g2, 13, ell)


def test_permutations_are_bijective(g2):
    g = build_galois_map(g2, 13, 7)
    labels = [lw.omega for lw in enumerate_lambda_m(g2, 13)]
    assert sorted(g.label(l) for l in labels) == sorted(labels)
    pts = [a.kac for a in enumerate_fm(g2, 13)]
    assert sorted(g.point(a) for a in pts) == sorted(pts)
    # signs are defined exactly on the interiors
    inner = {lw.omega for lw in enumerate_lambda_m(g2, 13, interior=True)}
    assert {l for l in labels if g.label_sign(l) is not None} == inner


def test_identity_and_inverse(a2):
    M = 7
    N = compute_n(a2, M)
    g = build_galois_map(a2, M, 1)
    assert all(t == l and s == 1 for l, (t, s) in g.label_perm.items() if s is not None)
    assert check_composition(a2, M, 2, pow(2, -1, N))


@pytest.mark.parametrize("name,M", [("A1", 10), ("A2", 5), ("C2", 7), ("B2", 7), ("B3", 4)])
def test_all_units(name, M):
    alg = build_algebra(name)
    N = compute_n(alg, M)
    for ell in range(1, N):
        if math.gcd(ell, N) == 1:
            assert check_galois_symmetry(alg, M, ell), ell


def test_injected_sign_is_caught(g2):
    g = build_galois_map(g2, 13, 7)
    lam = next(l for l, (_, s) in g.label_perm.items() if s is not None)
    t, s = g.label_perm[lam]
    perm = dict(g.label_perm)
    perm[lam] = (t, -s)
    rep = check_galois_symmetry(g2, 13, 7, dataclasses.replace(g, label_perm=perm))
    assert not rep and rep.witness[0] == "S"


def test_injected_point_is_caught(g2):
    g = build_galois_map(g2, 13, 8)
    perm = dict(g.point_perm)
    a, b = list(perm)[3:5]
    perm[a], perm[b] = perm[b], perm[a]
    assert not check_galois_symmetry(g2, 13, 8, dataclasses.replace(g, point_perm=perm))


def test_coefficient_symmetry_g2(g2):
    N = compute_n(g2, 20)
    for ell in (l for l in range(1, N) if math.gcd(l, N) == 1):
        assert check_coefficient_symmetry(g2, 20, ell, (3, 5), (1, 1))


def test_boundary_label_rejected(g2):
    with pytest.raises(GaloisError):
        check_coefficient_symmetry(g2, 20, 7, (0, 5), (1, 1))


def test_non_coprime(g2):
    with pytest.raises(GaloisError):
        build_galois_map(g2, 13, 13)
