"""Product decompositions of orbit functions, continuous and discretized.

A product of two orbit functions is a sum over the Weyl orbit of the right
factor,

    X_lam * Y_mu = sum_w s(w) Z_{lam + w mu},

with ``s(w) = det w`` when the right factor is an S-function and 1 otherwise;
``Z`` is a C-function when both factors have the same kind and an
S-function otherwise.  Each shifted weight is then folded into the label
domain: into ``P_+`` for the continuous ring, into ``Lambda_M`` by the dual
affine group for the ring discretized at M.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .grids import GridPoint, enumerate_fm, enumerate_lambda_m
from .orbitfn import ExponentSum, compute_n, eval_orbit
from .rootsys import AlgebraData
from .weyl import dominant_fold, dual_affine_fold_weight, stabilizer_order, weyl_orbit_signed

KINDS = ("C", "S")


class DecompositionError(ValueError):
    pass


@dataclass
class Decomposition:
    basis: str
    M: Optional[int]
    coeffs: dict = field(default_factory=dict)

    @property
    def ring(self) -> str:
        return "continuous" if self.M is None else "discretized"

    def terms(self) -> list[tuple[tuple, int]]:
        return sorted((k, v) for k, v in self.coeffs.items() if v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (self.basis, self.M, self.terms()) == (other.basis, other.M, other.terms())

    def add(self, key, value: int) -> None:
        v = self.coeffs.get(key, 0) + value
        if v:
            self.coeffs[key] = v
        else:
            self.coeffs.pop(key, None)


def output_basis(kind_left: str, kind_right: str) -> str:
    for k in (kind_left, kind_right):
        if k not in KINDS:
            raise DecompositionError(f"kind must be C or S, got {k!r}")
    return "C" if kind_left == kind_right else "S"


def _shifted_terms(alg, kind_left, lam, kind_right, mu):
    for wmu, det in weyl_orbit_signed(alg, mu):
        yield tuple(a + b for a, b in zip(lam, wmu)), det if kind_right == "S" else 1


def _check_labels(alg, kind_left, lam, kind_right, mu, M=None):
    for kind, x in ((kind_left, lam), (kind_right, mu)):
        if len(x) != alg.rank:
            raise DecompositionError(f"weight {x} has wrong length for {alg.name}")
        if any(v < 0 for v in x):
            raise DecompositionError(f"weight {x} is not dominant")
        if kind == "S" and any(v == 0 for v in x):
            raise DecompositionError(f"S-function label {x} is not strictly dominant")
        if M is not None:
            z = M - sum(m * v for m, v in zip(alg.dual_marks, x))
            if z < 0 or (kind == "S" and z == 0):
                raise DecompositionError(f"label {x} is outside the label set at M={M}")


def product_continuous(alg: AlgebraData, kind_left: str, lam: Sequence, kind_right: str,
                       mu: Sequence) -> Decomposition:
    basis = output_basis(kind_left, kind_right)
    lam, mu = tuple(lam), tuple(mu)
    _check_labels(alg, kind_left, lam, kind_right, mu)
    d = Decomposition(basis, None)
    for nu, s in _shifted_terms(alg, kind_left, lam, kind_right, mu):
        f = dominant_fold(alg, nu)
        if basis == "S":
            if f.on_boundary:
                continue
            s *= f.sign
        d.add(f.representative, s)
    return d


def fold_decomposition(alg: AlgebraData, d: Decomposition, M: int) -> Decomposition:
    """Fold the labels of a continuous decomposition into ``Lambda_M``."""
    if d.M is not None:
        raise DecompositionError("decomposition is already discretized")
    out = Decomposition(d.basis, M)
    for nu, c in d.terms():
        f = dual_affine_fold_weight(alg, nu, M)
        if d.basis == "S":
            if f.on_boundary:
                continue
            c *= f.sign
        out.add(f.representative, c)
    return out


def product_discretized(alg: AlgebraData, kind_left: str, lam: Sequence, kind_right: str,
                        mu: Sequence, M: int) -> Decomposition:
    """Folds every shifted weight straight into ``Lambda_M``."""
    basis = output_basis(kind_left, kind_right)
    lam, mu = tuple(lam), tuple(mu)
    _check_labels(alg, kind_left, lam, kind_right, mu, M)
    d = Decomposition(basis, M)
    for nu, s in _shifted_terms(alg, kind_left, lam, kind_right, mu):
        f = dual_affine_fold_weight(alg, nu, M)
        if basis == "S":
            if f.on_boundary:
                continue
            s *= f.sign
        d.add(f.representative, s)
    return d


def product(alg, kind_left, lam, kind_right, mu, M=None) -> Decomposition:
    if M is None:
        return product_continuous(alg, kind_left, lam, kind_right, mu)
    return product_discretized(alg, kind_left, lam, kind_right, mu, M)


@dataclass
class PointwiseReport:
    ok: bool
    checked: int
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _random_points(alg, rng: random.Random, count: int):
    for _ in range(count):
        M = rng.randint(3, 40)
        yield tuple(rng.randint(-2 * M, 2 * M) for _ in range(alg.rank)), M


def verify_pointwise(alg: AlgebraData, d: Decomposition, kind_left: str, lam: Sequence,
                     kind_right: str, mu: Sequence, points: Iterable | None = None,
                     rng: random.Random | None = None, samples: int = 60) -> PointwiseReport:
    """Compare ``X_lam * Y_mu`` with the expansion ``d`` as exact values.

    Discretized decompositions are checked on all of ``F_M`` (C-output) or its
    interior (S-output); continuous ones at random points of ``(1/M) P^v``.
    """
    if points is None:
        if d.M is None:
            points = list(_random_points(alg, rng or random.Random(0), samples))
        else:
            points = [(p.kac, p.M) for p in enumerate_fm(alg, d.M, interior=d.basis == "S")]
    checked = 0
    for kac, M in points:
        N = compute_n(alg, M)
        left = (eval_orbit(alg, lam, kac, M, kind_left == "S", N)
                * eval_orbit(alg, mu, kac, M, kind_right == "S", N))
        right = ExponentSum.zero(N)
        for nu, c in d.terms():
            right = right + c * eval_orbit(alg, nu, kac, M, d.basis == "S", N)
        checked += 1
        if not left == right:
            return PointwiseReport(False, checked, (kac, M))
    return PointwiseReport(True, checked)


def orthogonality_weight(alg: AlgebraData, a: GridPoint) -> int:
    """``|W| / |Stab_{W^aff}(a)|``, the weight of ``a`` in discrete sums."""
    return alg.weyl_order // stabilizer_order(alg, a.kac, "Waff", a.M)


def discrete_inner(alg: AlgebraData, f: dict, g: dict, points, weights) -> ExponentSum:
    """``sum_a eps(a) f(a) conj(g(a))`` for exact values keyed by point."""
    total = None
    for a, w in zip(points, weights):
        t = (f[a] * g[a].conjugate()) * w
        total = t if total is None else total + t
    return total


def extract_by_orthogonality(alg: AlgebraData, kind_left: str, lam: Sequence, kind_right: str,
                             mu: Sequence, M: int) -> Decomposition:
    """Discretized coefficients as normalised weighted grid inner products.

    Independent of the folding path: only exact values of the orbit functions
    on ``F_M`` are used.
    """
    basis = output_basis(kind_left, kind_right)
    interior = basis == "S"
    pts = enumerate_fm(alg, M, interior=interior)
    wts = [orthogonality_weight(alg, a) for a in pts]
    N = compute_n(alg, M)

    def values(kind, x):
        return {a: eval_orbit(alg, x, a.kac, M, kind == "S", N) for a in pts}

    fl, fr = values(kind_left, lam), values(kind_right, mu)
    prod = {a: fl[a] * fr[a] for a in pts}
    out = Decomposition(basis, M)
    for nu in enumerate_lambda_m(alg, M, interior=interior):
        g = values(basis, nu.omega)
        num = discrete_inner(alg, prod, g, pts, wts).as_integer()
        den = discrete_inner(alg, g, g, pts, wts).as_integer()
        if num is None or den is None or den == 0 or num % den:
            raise DecompositionError(f"non-integral coefficient extracted at {nu.omega}")
        out.add(nu.omega, num // den)
    return out


def orbit_gram(alg: AlgebraData, M: int, kind: str = "C"):
    """Exact Gram matrix ``sum_a eps(a) X_lam(a) conj(X_nu(a))`` over ``F_M``
    (the interior for S-functions), indexed by ``Lambda_M`` (resp. interior).

    Entries are returned as :class:`ExponentSum`.  The weighted sums are
    carried out on integer coefficient tensors with float64 matrix products,
    which are exact at these sizes (all partial sums stay far below 2**53).
    """
    import numpy as np

    interior = kind == "S"
    pts = enumerate_fm(alg, M, interior=interior)
    labels = [lw.omega for lw in enumerate_lambda_m(alg, M, interior=interior)]
    N = compute_n(alg, M)
    V = np.zeros((len(labels), len(pts), N))
    for i, lam in enumerate(labels):
        for j, a in enumerate(pts):
            V[i, j, :] = eval_orbit(alg, lam, a.kac, M, kind == "S", N).coeffs
    eps = np.array([orthogonality_weight(alg, a) for a in pts], dtype=float)
    A = (V * eps[None, :, None]).reshape(len(labels), -1)
    G = np.zeros((len(labels), len(labels), N))
    for r in range(N):
        # coefficient of zeta^r in X_lam * conj(X_nu): sum_k x_k y_{k-r}
        B = np.roll(V, r, axis=2).reshape(len(labels), -1)
        G[:, :, r] = A @ B.T
    Gi = np.rint(G).astype(np.int64)
    assert np.array_equal(Gi, G)
    gram = [[ExponentSum(N, tuple(int(x) for x in Gi[i, j])) for j in range(len(labels))]
            for i in range(len(labels))]
    return labels, gram
