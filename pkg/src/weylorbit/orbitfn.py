"""C- and S-functions evaluated exactly as integer sums of roots of unity."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .grids import GridPoint
from .rootsys import AlgebraData, alpha_coords
from .weyl import weyl_orbit_signed


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the N-th cyclotomic
    polynomial, by dividing ``x^N - 1`` by ``Phi_d`` for proper divisors d."""
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_divexact(a: list[int], b: Sequence[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]  # b is monic
        if c:
            q[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] -= c * bi
    assert not any(a[:db]), "inexact cyclotomic division"
    return q


def _reduce_mod_cyclotomic(coeffs: Sequence[int], N: int) -> list[int]:
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    r = list(coeffs)
    for k in range(len(r) - 1, deg - 1, -1):
        c = r[k]
        if c:
            for i, pi in enumerate(phi):
                r[k - deg + i] -= c * pi
    return r[:deg]


@dataclass(frozen=True, eq=False)
class ExponentSum:
    """``sum_k coeffs[k] * exp(2 pi i k / modulus)``.

    Equality is equality of the represented algebraic numbers, not of the
    coefficient vectors (``1 + z + z^2 == 0`` for ``N = 3``).
    """

    modulus: int
    coeffs: tuple

    @classmethod
    def zero(cls, N: int) -> "ExponentSum":
        return cls(N, (0,) * N)

    @classmethod
    def from_exponents(cls, N: int, items) -> "ExponentSum":
        c = [0] * N
        for k, v in items:
            c[k % N] += v
        return cls(N, tuple(c))

    def lift(self, N: int) -> "ExponentSum":
        if N % self.modulus:
            raise ValueError(f"cannot lift modulus {self.modulus} to {N}")
        f = N // self.modulus
        c = [0] * N
        for k, v in enumerate(self.coeffs):
            c[k * f] = v
        return ExponentSum(N, tuple(c))

    def _common(self, other: "ExponentSum"):
        if self.modulus == other.modulus:
            return self, other
        N = math.lcm(self.modulus, other.modulus)
        return self.lift(N), other.lift(N)

    def __add__(self, other):
        a, b = self._common(other)
        return ExponentSum(a.modulus, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self):
        return ExponentSum(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ExponentSum(self.modulus, tuple(other * x for x in self.coeffs))
        a, b = self._common(other)
        N = a.modulus
        c = [0] * N
        bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in bnz:
                    c[(i + j) % N] += x * y
        return ExponentSum(N, tuple(c))

    __rmul__ = __mul__

    def conjugate(self) -> "ExponentSum":
        N = self.modulus
        return ExponentSum(N, tuple(self.coeffs[(-k) % N] for k in range(N)))

    def galois(self, ell: int) -> "ExponentSum":
        """Apply ``zeta -> zeta**ell``; requires ``gcd(ell, N) = 1``."""
        N = self.modulus
        if math.gcd(ell, N) != 1:
            raise ValueError(f"ell={ell} is not coprime to N={N}")
        c = [0] * N
        for k, v in enumerate(self.coeffs):
            c[(ell * k) % N] += v
        return ExponentSum(N, tuple(c))

    def is_zero(self) -> bool:
        return not any(_reduce_mod_cyclotomic(self.coeffs, self.modulus))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ExponentSum.from_exponents(self.modulus, [(0, other)])
        if not isinstance(other, ExponentSum):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def as_integer(self):
        """The rational integer represented, or None if not in Z."""
        r = _reduce_mod_cyclotomic(self.coeffs, self.modulus)
        return r[0] if not any(r[1:]) else None

    def to_complex(self) -> complex:
        """Float value; absolute error below ``sum|coeffs| * N * eps``."""
        N = self.modulus
        re = math.fsum(v * math.cos(2 * math.pi * k / N) for k, v in enumerate(self.coeffs) if v)
        im = math.fsum(v * math.sin(2 * math.pi * k / N) for k, v in enumerate(self.coeffs) if v)
        return complex(re, im)

    def terms(self) -> list[tuple[int, int]]:
        return [(k, v) for k, v in enumerate(self.coeffs) if v]

    def mass(self) -> int:
        return sum(abs(v) for v in self.coeffs)


def to_complex(v: ExponentSum) -> complex:
    return v.to_complex()


def is_zero(v: ExponentSum) -> bool:
    return v.is_zero()


def compute_n(alg: AlgebraData, M: int) -> int:
    """Least N with ``N <omega_i, omega_j^v / M>`` integral for all i, j."""
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    Ci = alg.cartan_inverse
    dens = [(Fraction(x) / M).denominator for row in Ci for x in row]
    return reduce(math.lcm, dens, 1)


class PairingError(ArithmeticError):
    pass


@lru_cache(maxsize=8192)
def _orbit_alpha(alg: AlgebraData, lam: tuple) -> tuple:
    return tuple((alpha_coords(alg, mu), s) for mu, s in weyl_orbit_signed(alg, lam))


def eval_orbit(alg: AlgebraData, lam: Sequence, kac: Sequence, M: int, antisymmetric: bool,
               N: int | None = None) -> ExponentSum:
    """Orbit sum at ``a = kac/M``; ``kac`` may be rational when ``N`` is given."""
    if N is None:
        N = compute_n(alg, M)
    c = [0] * N
    for coords, s in _orbit_alpha(alg, tuple(lam)):
        e = sum((cj * aj for cj, aj in zip(coords, kac)), Fraction(0)) * N / M
        if e.denominator != 1:
            raise PairingError(f"exponent {e}/{N} is not integral for modulus {N}")
        c[int(e) % N] += s if antisymmetric else 1
    return ExponentSum(N, tuple(c))


def eval_c(alg: AlgebraData, lam: Sequence, a: GridPoint) -> ExponentSum:
    """``Phi_lam(a)``."""
    return eval_orbit(alg, lam, a.kac, a.M, False)


def eval_s(alg: AlgebraData, lam: Sequence, a: GridPoint) -> ExponentSum:
    """``phi_lam(a)``."""
    return eval_orbit(alg, lam, a.kac, a.M, True)


def eval_kind(alg: AlgebraData, kind: str, lam: Sequence, a: GridPoint) -> ExponentSum:
    if kind not in ("C", "S"):
        raise ValueError(f"kind must be C or S, got {kind!r}")
    return eval_orbit(alg, lam, a.kac, a.M, kind == "S")


def eval_numeric(alg: AlgebraData, kind: str, lam: Sequence, kac: Sequence, M: int) -> complex:
    """Direct floating summation, independent of the exact path."""
    total = 0j
    for coords, s in _orbit_alpha(alg, tuple(lam)):
        x = float(sum((cj * aj for cj, aj in zip(coords, kac)), Fraction(0)) / M)
        total += (s if kind == "S" else 1) * cmath.exp(2j * math.pi * x)
    return total
