"""Finite, affine and dual affine Weyl group actions.

Three groups act in this package:

* ``W`` on weights (omega-coordinates);
* ``W^aff`` on sample points in co-weight coordinates, extended at scale M by
  the reflection ``r_{0,M}`` (applied to ``M a``);
* the dual affine group ``hat W^aff_M = MQ x| W`` on weights, generated by
  ``r_1..r_n`` and ``r^v_{0,M}``.

One more, ``W^aff_{M'}`` acting on weights through translations by ``M' Q^v``,
is needed for the Kac-Walton construction.  All four share one greedy folding
routine, parametrised by the affine constraint and the affine root.

Every generator has retraction determinant -1, so the sign returned by a fold
is ``(-1)**(number of reflections applied)``.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .rootsys import AlgebraData


class FoldError(RuntimeError):
    """The folding loop exceeded its iteration cap."""


@dataclass(frozen=True)
class FoldResult:
    representative: tuple
    sign: int
    on_boundary: bool
    steps: int = 0


@dataclass(frozen=True)
class _Action:
    """Simple reflections ``x_k -> x_k - x_i * refl[i][k]`` and, optionally,
    the affine wall ``x_0 = level - <coeffs, x>`` crossed by adding
    ``x_0 * aff`` to ``x``."""

    refl: tuple
    coeffs: Optional[tuple] = None
    aff: Optional[tuple] = None


@lru_cache(maxsize=None)
def _action(alg: AlgebraData, kind: str) -> _Action:
    C = alg.cartan
    n = alg.rank
    Ct = tuple(tuple(C[j][i] for j in range(n)) for i in range(n))
    if kind == "W":
        return _Action(C)
    if kind == "hatWaff":
        act = _Action(C, alg.dual_marks, alg.highest_short_root)
    elif kind == "Waff_weights":
        act = _Action(C, alg.comarks, alg.highest_root)
    elif kind == "Waff":
        # xi is long, so xi^v = xi; its co-weight coordinates are <xi, alpha_k>
        d = alg.symmetrizer
        aff = tuple(int(x * dk) for x, dk in zip(alg.highest_root, d))
        act = _Action(Ct, alg.marks, aff)
    else:
        raise ValueError(f"unknown group {kind!r}")
    assert sum(c * v for c, v in zip(act.coeffs, act.aff)) == 2
    return act


def _reflect(act: _Action, x: list, i: int) -> None:
    xi = x[i]
    row = act.refl[i]
    for k in range(len(x)):
        x[k] -= xi * row[k]


def _affine_coord(act: _Action, x: Sequence, level) -> object:
    return level - sum(c * v for c, v in zip(act.coeffs, x))


def _apply_generator(act: _Action, x: list, i: int, level=None) -> None:
    """Generator 0 is the affine reflection, 1..n the simple ones."""
    if i == 0:
        a0 = _affine_coord(act, x, level)
        for k in range(len(x)):
            x[k] += a0 * act.aff[k]
    else:
        _reflect(act, x, i - 1)


def _fold(act: _Action, x: Sequence, level=None, strategy="most_negative") -> FoldResult:
    x = list(x)
    n = len(x)
    affine = act.coeffs is not None
    scale = sum(abs(v) for v in x) + (abs(level) if affine else 0) + 1
    cap = 1000 + 200 * n * int(scale) ** 2
    rng = strategy if isinstance(strategy, random.Random) else None
    steps = 0
    while True:
        coords = ([_affine_coord(act, x, level)] if affine else [None]) + x
        neg = [j for j in range(0 if affine else 1, n + 1) if coords[j] < 0]
        if not neg:
            break
        if rng is not None:
            j = rng.choice(neg)
        elif strategy == "lowest_index":
            j = neg[0]
        else:
            j = min(neg, key=lambda t: (coords[t], t))
        _apply_generator(act, x, j, level)
        steps += 1
        if steps > cap:
            raise FoldError(f"folding did not terminate after {cap} steps")
    coords = ([_affine_coord(act, x, level)] if affine else []) + x
    rep = tuple(v if isinstance(v, int) else (int(v) if Fraction(v).denominator == 1 else v)
                for v in x)
    return FoldResult(rep, -1 if steps % 2 else 1, any(c == 0 for c in coords), steps)


def dominant_fold(alg: AlgebraData, lam: Sequence, strategy="most_negative") -> FoldResult:
    """Move a weight into ``P_+`` by simple reflections."""
    return _fold(_action(alg, "W"), lam, strategy=strategy)


def dual_affine_fold_weight(alg: AlgebraData, lam: Sequence, M: int,
                            strategy="most_negative") -> FoldResult:
    """Move a weight into ``Lambda_M = P_+^M`` with ``hat W^aff_M``."""
    _check_level(M)
    return _fold(_action(alg, "hatWaff"), lam, M, strategy)


def affine_fold_point(alg: AlgebraData, x: Sequence, M: int,
                      strategy="most_negative") -> FoldResult:
    """Move ``x/M`` into ``F`` with ``W^aff``.

    ``x`` holds co-weight coordinates of ``M a``; the representative is the
    Kac label ``(a_1..a_n)`` of a point of ``F_M`` when ``x`` is integral.
    """
    _check_level(M)
    return _fold(_action(alg, "Waff"), x, M, strategy)


def affine_fold_weight(alg: AlgebraData, lam: Sequence, level: int,
                       strategy="most_negative") -> FoldResult:
    """Move a weight into the alcove ``{lam_j >= 0, sum m'_j lam_j <= level}``
    with ``W^aff_level = level Q^v x| W`` (comark constraint)."""
    _check_level(level)
    return _fold(_action(alg, "Waff_weights"), lam, level, strategy)


def apply_generator(alg: AlgebraData, group: str, x: Sequence, i: int, M: int | None = None) -> tuple:
    """Apply one generator (0 = affine, 1..n simple) of ``group`` to ``x``.

    ``group`` is one of ``"W"``, ``"Waff"`` (points), ``"hatWaff"`` (weights),
    ``"Waff_weights"``.
    """
    act = _action(alg, group)
    if i == 0 and act.coeffs is None:
        raise ValueError("finite Weyl group has no affine generator")
    y = list(x)
    _apply_generator(act, y, i, M)
    return tuple(y)


def _check_level(M) -> None:
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"M must be a positive integer, got {M!r}")


def weyl_orbit(alg: AlgebraData, lam: Sequence) -> list[tuple[tuple, int]]:
    """Distinct orbit points of a weight, each with ``det w`` for the unique
    ``w`` carrying ``lam`` there, or 0 when ``lam`` has a non-trivial
    stabiliser (the sign is then not defined)."""
    return list(_orbit_cached(alg, tuple(lam)))


@lru_cache(maxsize=4096)
def _orbit_cached(alg: AlgebraData, lam: tuple) -> tuple:
    f = dominant_fold(alg, lam)
    top = f.representative
    C = alg.cartan
    n = alg.rank
    seen = {top: 1}
    queue = deque([top])
    while queue:
        mu = queue.popleft()
        for i in range(n):
            if mu[i] == 0:
                continue
            nu = tuple(mu[k] - mu[i] * C[i][k] for k in range(n))
            if nu not in seen:
                seen[nu] = -seen[mu]
                queue.append(nu)
    regular = not f.on_boundary
    # det of the element carrying lam to mu is det(mu <- top) * det(top <- lam)
    return tuple((mu, s * f.sign if regular else 0) for mu, s in seen.items())


def weyl_orbit_signed(alg: AlgebraData, lam: Sequence) -> list[tuple[tuple, int]]:
    """The multiset ``{(w lam, det w) : w in W}`` of size ``|W|``.

    A point with stabiliser of order ``s > 1`` appears ``s`` times, half with
    each sign (the stabiliser is a reflection subgroup).
    """
    orbit = weyl_orbit(alg, lam)
    stab = alg.weyl_order // len(orbit)
    out = []
    for mu, s in orbit:
        if stab == 1:
            out.append((mu, s))
        else:
            out.extend([(mu, 1)] * (stab // 2) + [(mu, -1)] * (stab // 2))
    return out


def _reflection_roots(alg: AlgebraData, group: str) -> list[tuple]:
    # alpha-coordinates of the roots whose reflections generate the group,
    # affine root first
    n = alg.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    if group == "W":
        return simple
    if group in ("Waff", "Waff_weights"):
        xi = alg.marks
    elif group == "hatWaff":
        xi = next(r for r in alg.positive_roots if alg.root_to_omega(r) == alg.highest_short_root)
    else:
        raise ValueError(f"unknown group {group!r}")
    return [tuple(-c for c in xi)] + simple


@lru_cache(maxsize=None)
def _parabolic_order(alg: AlgebraData, group: str, nodes: tuple) -> int:
    roots = _reflection_roots(alg, group)
    C, d, n = alg.cartan, alg.symmetrizer, alg.rank

    def ip(a, b):
        return sum((a[i] * b[j] * C[i][j] * d[j] for i in range(n) for j in range(n)), Fraction(0))

    A = [[int(2 * ip(roots[i], roots[j]) / ip(roots[j], roots[j])) for j in nodes] for i in nodes]
    k = len(nodes)
    start = (1,) * k
    seen = {start}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        for i in range(k):
            nu = tuple(mu[t] - mu[i] * A[i][t] for t in range(k))
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return len(seen)


def stabilizer_order(alg: AlgebraData, x: Sequence, group: str = "W", M: int | None = None) -> int:
    """Order of the stabiliser of ``x`` in ``group``.

    ``group``: ``"W"`` (weights), ``"Waff"`` (point ``x/M`` under the affine
    Weyl group), ``"hatWaff"`` (weight under ``hat W^aff_M``).
    """
    if group == "W":
        rep = dominant_fold(alg, x).representative
        nodes = tuple(i for i in range(alg.rank) if rep[i] == 0)
        group_roots = "W"
    else:
        if group == "Waff":
            f = affine_fold_point(alg, x, M)
            coeffs = alg.marks
        elif group == "hatWaff":
            f = dual_affine_fold_weight(alg, x, M)
            coeffs = alg.dual_marks
        else:
            raise ValueError(f"unknown group {group!r}")
        rep = f.representative
        coords = (M - sum(c * v for c, v in zip(coeffs, rep)),) + tuple(rep)
        nodes = tuple(j for j, v in enumerate(coords) if v == 0)
        group_roots = group
    if not nodes:
        return 1
    return _parabolic_order(alg, group_roots, nodes)
