"""Property suites: group invariance, conjugation, fold paths, orthogonality."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from weylorbit.acceptance import GRAM_BASE
from weylorbit.decomp import orbit_gram
from weylorbit.grids import enumerate_fm, enumerate_lambda_m
from weylorbit.orbitfn import compute_n, eval_orbit
from weylorbit.rootsys import build_algebra
from weylorbit.weyl import apply_generator, stabilizer_order

ALGS = ["A2", "C2", "G2", "B3"]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALGS), st.integers(1, 12), st.data())
def test_affine_weyl_invariance(name, M, data):
    alg = build_algebra(name)
    N = compute_n(alg, M)
    a = data.draw(st.sampled_from(enumerate_fm(alg, M))).kac
    lam = data.draw(st.sampled_from(enumerate_lambda_m(alg, M))).omega
    word = data.draw(st.lists(st.integers(0, alg.rank), min_size=1, max_size=12))
    b, nu = a, lam
    for g in word:
        b = apply_generator(alg, "Waff", b, g, M)
        nu = apply_generator(alg, "hatWaff", nu, g, M)
    sign = (-1) ** len(word)
    assert eval_orbit(alg, lam, b, M, False, N) == eval_orbit(alg, lam, a, M, False, N)
    assert eval_orbit(alg, nu, a, M, False, N) == eval_orbit(alg, lam, a, M, False, N)
    assert eval_orbit(alg, lam, b, M, True, N) == sign * eval_orbit(alg, lam, a, M, True, N)
    assert eval_orbit(alg, nu, a, M, True, N) == sign * eval_orbit(alg, lam, a, M, True, N)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALGS), st.integers(1, 12), st.data())
def test_conjugation(name, M, data):
    alg = build_algebra(name)
    a = data.draw(st.sampled_from(enumerate_fm(alg, M))).kac
    lam = data.draw(st.sampled_from(enumerate_lambda_m(alg, M))).omega
    for anti in (False, True):
        v = eval_orbit(alg, lam, a, M, anti)
        assert v.conjugate() == eval_orbit(alg, lam, tuple(-x for x in a), M, anti)
        assert v.galois(v.modulus - 1) == v.conjugate()


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
@pytest.mark.parametrize("M", range(1, 13))
def test_gram_diagonal(name, M):
    alg = build_algebra(name)
    labels, G = orbit_gram(alg, M, "C")
    norm = GRAM_BASE[name] * M ** alg.rank
    for i, lam in enumerate(labels):
        for j in range(len(labels)):
            want = norm * stabilizer_order(alg, lam, "hatWaff", M) if i == j else 0
            assert G[i][j].as_integer() == want


def test_gram_base_is_order_times_det():
    for name, base in GRAM_BASE.items():
        alg = build_algebra(name)
        assert base == alg.weyl_order * alg.det_cartan
