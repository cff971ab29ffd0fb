"""Exact Weyl orbit functions of simple Lie algebras.

C- and S-functions are evaluated on the discrete grids ``F_M`` as exact sums
of roots of unity; products decompose by Weyl folding, both in the continuous
ring and discretized at scale M; Galois substitutions act as signed
permutations; and the same folding machinery gives affine fusion.
"""
from .decomp import (Decomposition, DecompositionError, extract_by_orthogonality,
                     fold_decomposition, orbit_gram, product, product_continuous,
                     product_discretized, verify_pointwise)
from .galois import (GaloisError, GaloisMap, build_galois_map, check_coefficient_symmetry,
                     check_galois_symmetry)
from .grids import (GridPoint, LabelWeight, coset_representatives, enumerate_fm,
                    enumerate_lambda_m)
from .modular import (FusionError, kac_peterson_s, kac_walton_fusion, modular_context,
                      tensor_coefficients, verlinde_fusion)
from .orbitfn import ExponentSum, compute_n, eval_c, eval_orbit, eval_s
from .rootsys import AlgebraData, AlgebraError, AlgebraId, build_algebra
from .weyl import (FoldResult, affine_fold_point, dominant_fold, dual_affine_fold_weight,
                   weyl_orbit)

__all__ = [
    "AlgebraData", "AlgebraError", "AlgebraId", "Decomposition", "DecompositionError",
    "ExponentSum", "FoldResult", "FusionError", "GaloisError", "GaloisMap", "GridPoint",
    "LabelWeight", "affine_fold_point", "build_algebra", "build_galois_map",
    "check_coefficient_symmetry", "check_galois_symmetry", "compute_n", "coset_representatives",
    "dominant_fold", "dual_affine_fold_weight", "enumerate_fm", "enumerate_lambda_m", "eval_c",
    "eval_orbit", "eval_s", "extract_by_orthogonality", "fold_decomposition", "kac_peterson_s",
    "kac_walton_fusion", "modular_context", "orbit_gram", "product", "product_continuous",
    "product_discretized", "tensor_coefficients", "verify_pointwise", "verlinde_fusion",
    "weyl_orbit",
]
__version__ = "0.1.0"
