from .cyclotomic import CycNum, cyc_arith, galois_apply, inverse, set_max_level, zeta
from .linalg import (
    ShapeError,
    char_poly,
    charpoly_coeffs,
    det,
    det_bareiss,
    det_gauss,
    det_laplace,
    identity,
    matmul,
    matpow,
    rank,
)
from .mpoly import MPoly
from .partition import Partition

__all__ = [
    "CycNum", "MPoly", "Partition", "ShapeError",
    "char_poly", "charpoly_coeffs", "cyc_arith", "det", "det_bareiss", "det_gauss",
    "det_laplace", "galois_apply", "identity", "inverse", "matmul", "matpow", "rank",
    "set_max_level", "zeta",
]
