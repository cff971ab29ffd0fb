"""Discrete domains ``F_M``, label sets ``Lambda_M`` and ``P/MQ`` transversals."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import AlgebraData


@dataclass(frozen=True, order=True)
class GridPoint:
    """``a = (1/M) sum_j kac_j omega_j^v``; ``a_0 = M - sum kac_j m_j``."""

    kac: tuple
    M: int


@dataclass(frozen=True, order=True)
class LabelWeight:
    omega: tuple
    M: int


def _bounded_solutions(coeffs: tuple, M: int):
    # all non-negative integer vectors with sum c_j x_j <= M, lexicographic
    n = len(coeffs)
    out = []

    def rec(j, cur, budget):
        if j == n:
            out.append((tuple(cur), budget))
            return
        for v in range(budget // coeffs[j] + 1):
            cur.append(v)
            rec(j + 1, cur, budget - v * coeffs[j])
            cur.pop()

    rec(0, [], M)
    return out


_lock = threading.Lock()


@lru_cache(maxsize=256)
def _grid(coeffs: tuple, M: int) -> tuple:
    return tuple((x, rest > 0 and all(v > 0 for v in x)) for x, rest in _bounded_solutions(coeffs, M))


def _cached_grid(coeffs, M):
    if M < 1:
        raise ValueError(f"M must be positive, got {M}")
    with _lock:
        return _grid(tuple(coeffs), M)


def enumerate_fm(alg: AlgebraData, M: int, interior: bool = False) -> list[GridPoint]:
    """Points of ``F_M`` (or of its interior) in lexicographic Kac order."""
    return [GridPoint(x, M) for x, inner in _cached_grid(alg.marks, M) if inner or not interior]


def enumerate_lambda_m(alg: AlgebraData, M: int, interior: bool = False) -> list[LabelWeight]:
    """Labels ``Lambda_M = P_+^M`` (or ``P_{++}^M``) in lexicographic order."""
    return [LabelWeight(x, M) for x, inner in _cached_grid(alg.dual_marks, M) if inner or not interior]


def grid_with_flags(alg: AlgebraData, M: int, kind: str = "F") -> list[tuple[tuple, bool]]:
    coeffs = alg.marks if kind == "F" else alg.dual_marks
    return list(_cached_grid(coeffs, M))


def label_zero(alg: AlgebraData, lam, M: int) -> int:
    return M - sum(m * v for m, v in zip(alg.dual_marks, lam))


def point_zero(alg: AlgebraData, kac, M: int) -> int:
    return M - sum(m * v for m, v in zip(alg.marks, kac))


def _hermite_upper(rows: list[list[int]]) -> list[list[int]]:
    # row-style HNF: upper triangular with positive diagonal
    A = [list(r) for r in rows]
    n = len(A)
    for c in range(n):
        while True:
            nz = [r for r in range(c, n) if A[r][c] != 0]
            p = min(nz, key=lambda r: abs(A[r][c]))
            A[c], A[p] = A[p], A[c]
            done = True
            for r in range(c + 1, n):
                q = A[r][c] // A[c][c]
                if q:
                    A[r] = [x - q * y for x, y in zip(A[r], A[c])]
                if A[r][c] != 0:
                    done = False
            if done:
                break
        if A[c][c] < 0:
            A[c] = [-x for x in A[c]]
    return A


def coset_representatives(alg: AlgebraData, M: int) -> list[tuple]:
    """A transversal of ``P / MQ``: every weight reduces to exactly one entry."""
    H = _hermite_upper([[M * x for x in row] for row in alg.cartan])
    reps = [()]
    for j in range(alg.rank):
        reps = [r + (v,) for r in reps for v in range(H[j][j])]
    return reps


def reduce_mod_mq(alg: AlgebraData, lam, M: int) -> tuple:
    """The member of :func:`coset_representatives` congruent to ``lam``."""
    H = _hermite_upper([[M * x for x in row] for row in alg.cartan])
    x = list(lam)
    for j in range(alg.rank):
        q = x[j] // H[j][j]
        x = [a - q * b for a, b in zip(x, H[j])]
    return tuple(x)
