import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import a1_fold, orbit_multiset, weyl_matrices
from weylorbit.grids import enumerate_fm, enumerate_lambda_m
from weylorbit.rootsys import build_algebra
from weylorbit.weyl import (FoldError, affine_fold_point, apply_generator, dominant_fold,
                            dual_affine_fold_weight, stabilizer_order, weyl_orbit,
                            weyl_orbit_signed)

SMALL = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"]


@pytest.mark.parametrize("name", SMALL)
def test_signed_orbit_matches_matrix_group(name):
    alg = build_algebra(name)
    rng = random.Random(name)
    for _ in range(4):
        lam = tuple(rng.randint(0, 3) for _ in range(alg.rank))
        assert sorted(weyl_orbit_signed(alg, lam)) == orbit_multiset(alg.cartan, lam)


@pytest.mark.parametrize("name", SMALL)
def test_group_order(name):
    alg = build_algebra(name)
    assert len(weyl_matrices(alg.cartan)) == alg.weyl_order


def test_a1_orbit():
    a1 = build_algebra("A1")
    assert sorted(weyl_orbit(a1, (3,))) == [((-3,), -1), ((3,), 1)]


def test_distinct_orbit_sign_zero_on_walls(g2):
    orbit = weyl_orbit(g2, (0, 1))
    assert len(orbit) == 6
    assert all(s == 0 for _, s in orbit)


@pytest.mark.parametrize("name", SMALL)
def test_weyl_stabilizer_against_brute_force(name):
    alg = build_algebra(name)
    mats = weyl_matrices(alg.cartan)
    rng = random.Random(1)
    for _ in range(6):
        lam = tuple(rng.choice([0, 0, 1, 2]) for _ in range(alg.rank))
        brute = sum(1 for g in mats if tuple(g @ lam) == lam)
        assert stabilizer_order(alg, lam) == brute


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "B3"])
@pytest.mark.parametrize("M", [1, 4, 7])
def test_affine_stabilizer_weights_count_torus_points(name, M):
    # sum_a |W|/|Stab(a)| over F_M counts (1/M)P^v / Q^v
    alg = build_algebra(name)
    total = sum(alg.weyl_order // stabilizer_order(alg, a.kac, "Waff", M)
                for a in enumerate_fm(alg, M))
    assert total == M ** alg.rank * alg.det_cartan


@given(st.integers(-200, 200), st.integers(1, 30))
def test_a1_dual_affine_fold_closed_form(x, M):
    a1 = build_algebra("A1")
    f = dual_affine_fold_weight(a1, (x,), M)
    rep, sign = a1_fold(x, M)
    assert f.representative == (rep,)
    if not f.on_boundary:
        assert f.sign == sign
    assert f.on_boundary == (rep in (0, M))


def test_g2_reference_folds(g2):
    f = dual_affine_fold_weight(g2, (4, 6), 20)
    assert (f.representative, f.sign, f.on_boundary) == ((4, 2), -1, False)
    f = dual_affine_fold_weight(g2, (2, 9), 20)
    assert (f.representative, f.sign) == ((2, 5), -1)
    assert dual_affine_fold_weight(g2, (6, 1), 20).on_boundary
    assert stabilizer_order(g2, (6, 1), "hatWaff", 20) == 2


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "C2", "G2", "B3"]), st.integers(1, 15), st.data())
def test_fold_idempotent_and_path_independent(name, M, data):
    alg = build_algebra(name)
    x = tuple(data.draw(st.lists(st.integers(-4 * M, 4 * M), min_size=alg.rank,
                                 max_size=alg.rank)))
    seed = data.draw(st.integers(0, 10 ** 6))
    for fold in (lambda v, s: dominant_fold(alg, v, s),
                 lambda v, s: dual_affine_fold_weight(alg, v, M, s),
                 lambda v, s: affine_fold_point(alg, v, M, s)):
        f = fold(x, "most_negative")
        assert fold(f.representative, "most_negative").steps == 0
        for strat in ("lowest_index", random.Random(seed)):
            g = fold(x, strat)
            assert g.representative == f.representative
            assert g.on_boundary == f.on_boundary
            if not f.on_boundary:
                assert g.sign == f.sign


@pytest.mark.parametrize("name", ["A2", "G2", "C3"])
def test_generators_are_involutions(name):
    alg = build_algebra(name)
    M = 9
    for group, pts in (("Waff", [a.kac for a in enumerate_fm(alg, M)]),
                       ("hatWaff", [lw.omega for lw in enumerate_lambda_m(alg, M)])):
        for x in pts[:30]:
            for i in range(alg.rank + 1):
                y = apply_generator(alg, group, x, i, M)
                assert apply_generator(alg, group, y, i, M) == x


def test_fold_domain_membership(g2):
    f = affine_fold_point(g2, (37, -11), 20)
    a = f.representative
    assert all(v >= 0 for v in a) and 2 * a[0] + 3 * a[1] <= 20


def test_bad_level(g2):
    with pytest.raises(ValueError):
        dual_affine_fold_weight(g2, (1, 1), 0)
    with pytest.raises(ValueError):
        apply_generator(g2, "W", (1, 1), 0)
    assert issubclass(FoldError, RuntimeError)
