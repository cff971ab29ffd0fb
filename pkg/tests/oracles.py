"""Brute-force references built only from the Cartan matrix."""
from __future__ import annotations

import numpy as np


def weyl_matrices(cartan):
    """All Weyl group elements as integer matrices acting on omega-coordinates."""
    C = np.array(cartan, dtype=np.int64)
    n = len(C)
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= C[i, :]  # x -> x - x_i alpha_i, alpha_i = row i
        gens.append(s.T)
    seen = {np.eye(n, dtype=np.int64).tobytes(): np.eye(n, dtype=np.int64)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                key = h.tobytes()
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


def orbit_multiset(cartan, lam):
    """Sorted list of (w lam, det w) over every group element."""
    out = []
    for g in weyl_matrices(cartan):
        out.append((tuple(int(v) for v in g @ np.array(lam)), int(round(np.linalg.det(g)))))
    return sorted(out)


def a1_fold(x: int, M: int):
    """Fold an A1 weight into [0, M] by reflections at 0 and M."""
    r = x % (2 * M)
    if r <= M:
        return r, 1
    return 2 * M - r, -1
