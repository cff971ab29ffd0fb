"""Exact root-system data for the simple Lie algebras.

Conventions used throughout the package:

* weights are integer (or rational) vectors in the basis of fundamental
  weights ``omega_1..omega_n``;
* sample points are vectors in the basis of fundamental co-weights
  ``omega_1^v..omega_n^v`` (their coordinates are ``<x, alpha_j>``);
* ``cartan[i][j] = <alpha_i, alpha_j^v>``, so row ``i`` holds the
  omega-coordinates of ``alpha_i``;
* long roots have squared length 2.

Simple roots are labelled as in Bourbaki, except for G2 where ``alpha_1`` is
the long root.  With that choice the G2 dual marks are (3, 2) and the marks
are (2, 3).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

Vector = tuple
Matrix = tuple

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class AlgebraError(ValueError):
    """Raised for an unknown series or an invalid rank."""


@dataclass(frozen=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_RULES:
            raise AlgebraError(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.series](self.rank):
            raise AlgebraError(f"invalid rank {self.rank} for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise AlgebraError(f"malformed algebra spec {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def cartan_matrix(series: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        C[i][j] = a
        C[j][i] = b

    if series in "ABCDEF":
        chain = {"A": n - 1, "B": n - 1, "C": n - 1, "D": n - 2, "F": 3}
        if series == "E":
            # 1-3-4-5-6(-7-8) with node 2 hanging off node 4
            for i, j in [(0, 2), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]:
                link(i, j)
            link(1, 3)
        else:
            for k in range(chain[series]):
                link(k, k + 1)
    if series == "B":
        link(n - 2, n - 1, -2, -1)
    elif series == "C":
        link(n - 2, n - 1, -1, -2)
    elif series == "D":
        link(n - 3, n - 1)
    elif series == "F":
        link(1, 2, -2, -1)
    elif series == "G":
        link(0, 1, -3, -1)
    return C


def _inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def determinant(A: Sequence[Sequence]) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def _symmetrizer(C) -> tuple[Fraction, ...]:
    # d_j = <alpha_j, alpha_j>/2 from C[i][j] d_j = C[j][i] d_i, max d = 1
    n = len(C)
    d: list = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if C[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(C[j][i], C[i][j])
                todo.append(j)
    top = max(d)
    return tuple(x / top for x in d)


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Static constants of a simple Lie algebra.  Instances are shared via
    :func:`build_algebra` and compared by identity."""

    id: AlgebraId
    cartan: Matrix
    symmetrizer: Vector
    cartan_inverse: Matrix
    quad_form_omega: Matrix
    marks: Vector
    dual_marks: Vector
    comarks: Vector
    dual_coxeter: int
    highest_root: Vector
    highest_short_root: Vector
    highest_dual_root: Vector
    positive_roots: tuple
    weyl_order: int
    det_cartan: int
    index_p_qvee: int
    rho: Vector

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def name(self) -> str:
        return str(self.id)

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def simple_root(self, i: int) -> Vector:
        """Omega-coordinates of ``alpha_i``."""
        return self.cartan[i]

    def root_to_omega(self, c: Sequence) -> Vector:
        n = self.rank
        return tuple(sum(c[k] * self.cartan[k][j] for k in range(n)) for j in range(n))

    def inner(self, lam: Sequence, mu: Sequence) -> Fraction:
        """``<lam, mu>`` for two weights in omega-coordinates."""
        G = self.quad_form_omega
        n = self.rank
        return sum((lam[i] * G[i][j] * mu[j] for i in range(n) for j in range(n)), Fraction(0))

    def root_norm(self, c: Sequence) -> Fraction:
        """Squared length of a root given by alpha-coordinates."""
        n = self.rank
        C, d = self.cartan, self.symmetrizer
        return sum((c[i] * c[j] * C[i][j] * d[j] for i in range(n) for j in range(n)), Fraction(0))


def _positive_roots(C, d) -> list[tuple[int, ...]]:
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pair = sum(beta[k] * C[k][i] for k in range(n))
                if pair == 0:
                    continue
                gamma = tuple(b - pair * int(k == i) for k, b in enumerate(beta))
                if gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    pos = [r for r in roots if all(x >= 0 for x in r)]
    return sorted(pos, key=lambda r: (sum(r), r))


def build_algebra(spec) -> AlgebraData:
    """Build (and memoise) the data of a simple algebra.

    ``spec`` may be an :class:`AlgebraId` or a string such as ``"G2"``.
    """
    return _build_cached(AlgebraId.parse(spec) if isinstance(spec, str) else spec)


@lru_cache(maxsize=None)
def _build_cached(aid: AlgebraId) -> AlgebraData:
    n = aid.rank
    C = cartan_matrix(aid.series, n)
    d = _symmetrizer(C)
    Cinv = _inverse(C)
    # <omega_i, omega_j> = (C^-1)_{ji} d_i; symmetric by construction of d
    G = [[Cinv[j][i] * d[i] for j in range(n)] for i in range(n)]

    pos = _positive_roots(C, d)

    def norm(c):
        return sum((c[i] * c[j] * C[i][j] * d[j] for i in range(n) for j in range(n)), Fraction(0))

    xi = pos[-1]
    short = min(norm(r) for r in pos)
    theta_s = max((r for r in pos if norm(r) == short), key=lambda r: (sum(r), r))
    marks = xi
    comarks = tuple(int(m * dj) for m, dj in zip(marks, d))
    dual = tuple(2 * c * dj / norm(theta_s) for c, dj in zip(theta_s, d))
    assert all(x.denominator == 1 for x in dual)
    dual = tuple(int(x) for x in dual)
    assert all(Fraction(m) * dj == cm for m, dj, cm in zip(marks, d, comarks))

    det_c = determinant(C)
    assert det_c.denominator == 1
    det_c = int(det_c)
    weyl_order = math.factorial(n) * det_c * reduce(lambda a, b: a * b, marks, 1)
    index = determinant([[Fraction(C[i][j]) / d[j] for j in range(n)] for i in range(n)])

    def to_omega(c):
        return tuple(sum(c[k] * C[k][j] for k in range(n)) for j in range(n))

    return AlgebraData(
        id=aid,
        cartan=tuple(tuple(r) for r in C),
        symmetrizer=d,
        cartan_inverse=tuple(tuple(r) for r in Cinv),
        quad_form_omega=tuple(tuple(r) for r in G),
        marks=marks,
        dual_marks=dual,
        comarks=comarks,
        dual_coxeter=1 + sum(comarks),
        highest_root=to_omega(xi),
        highest_short_root=to_omega(theta_s),
        highest_dual_root=dual,
        positive_roots=tuple(pos),
        weyl_order=weyl_order,
        det_cartan=det_c,
        index_p_qvee=int(index),
        rho=(1,) * n,
    )


def alpha_coords(alg: AlgebraData, lam: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of a weight in the simple-root basis (``C^-T lam``)."""
    n = alg.rank
    Ci = alg.cartan_inverse
    return tuple(sum((Ci[i][j] * lam[i] for i in range(n)), Fraction(0)) for j in range(n))


def pair_weight_point(alg: AlgebraData, lam: Sequence, kac: Sequence, M: int) -> Fraction:
    """``<lam, a>`` for ``a = (1/M) sum_j kac_j omega_j^v``."""
    c = alpha_coords(alg, lam)
    return sum((cj * aj for cj, aj in zip(c, kac)), Fraction(0)) / M


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
