import cmath
import math
import random

import pytest
from hypothesis import given, strategies as st

from weylorbit.grids import GridPoint, enumerate_fm, enumerate_lambda_m
from weylorbit.orbitfn import (ExponentSum, PairingError, compute_n, cyclotomic_poly, eval_c,
                               eval_numeric, eval_orbit, eval_s)
from weylorbit.rootsys import build_algebra


def test_a1_modulus(a1):
    assert compute_n(a1, 4) == 8
    assert compute_n(a1, 1) == 2


def test_a1_values(a1):
    # phi_1 at a = omega^v/4: e^{i pi/4} - e^{-i pi/4}
    v = eval_s(a1, (1,), GridPoint((1,), 4))
    assert abs(v.to_complex() - 2j * math.sin(math.pi / 4)) < 1e-12
    assert eval_s(a1, (1,), GridPoint((0,), 4)).is_zero()
    c = eval_c(a1, (3,), GridPoint((1,), 5))
    assert abs(c.to_complex() - 2 * math.cos(2 * math.pi * 3 / 10)) < 1e-12


def test_exact_zero_is_algebraic(a1):
    # 1 + z + z^2 = 0 for a primitive cube root of unity
    s = ExponentSum.from_exponents(3, [(0, 1), (1, 1), (2, 1)])
    assert s.is_zero() and s == 0
    assert s.coeffs != (0, 0, 0)


def _phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 6, 8, 12, 13, 18, 30, 36, 60])
def test_cyclotomic_poly(N):
    p = cyclotomic_poly(N)
    assert len(p) - 1 == _phi(N)
    z = cmath.exp(2j * math.pi / N)
    assert abs(sum(c * z ** k for k, c in enumerate(p))) < 1e-9


@given(st.integers(2, 40), st.data())
def test_exponent_sum_ring_laws(N, data):
    vec = st.lists(st.integers(-3, 3), min_size=N, max_size=N).map(tuple)
    a, b, c = (ExponentSum(N, data.draw(vec)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-8
    assert a.conjugate().conjugate() == a
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9
    assert (a - a).is_zero()
    assert a.is_zero() == (abs(a.to_complex()) < 1e-9)
    ell = data.draw(st.integers(1, N).filter(lambda l: math.gcd(l, N) == 1))
    assert (a * b).galois(ell) == a.galois(ell) * b.galois(ell)


def test_galois_needs_coprime():
    with pytest.raises(ValueError):
        ExponentSum(6, (1, 0, 0, 0, 0, 0)).galois(2)


def test_lift_preserves_value():
    a = ExponentSum(4, (1, 2, 0, -1))
    assert abs(a.lift(12).to_complex() - a.to_complex()) < 1e-12
    assert a.lift(12) == a


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2", "D4", "F4"])
def test_exact_matches_direct_float_sum(name):
    alg = build_algebra(name)
    rng = random.Random(name)
    M = 7
    pts = enumerate_fm(alg, M)
    labels = enumerate_lambda_m(alg, M)
    for _ in range(10):
        a = rng.choice(pts)
        lam = rng.choice(labels).omega
        for kind in ("C", "S"):
            v = eval_orbit(alg, lam, a.kac, M, kind == "S")
            assert abs(v.to_complex() - eval_numeric(alg, kind, lam, a.kac, M)) < 1e-9


def test_s_function_vanishes_on_boundary(g2):
    for a in enumerate_fm(g2, 12):
        if a not in enumerate_fm(g2, 12, interior=True):
            assert eval_s(g2, (2, 3), a).is_zero()


def test_c_function_real_for_g2(g2):
    # -1 is in the Weyl group of G2
    for a in enumerate_fm(g2, 9):
        v = eval_c(g2, (1, 2), a)
        assert v == v.conjugate()


def test_c_at_origin_is_group_order(g2):
    assert eval_c(g2, (3, 5), GridPoint((0, 0), 20)).as_integer() == 12


def test_modulus_too_small_raises(a2):
    with pytest.raises(PairingError):
        eval_orbit(a2, (1, 0), (1, 0), 5, False, N=5)
