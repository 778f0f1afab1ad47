"""Exact categorical algebra over matrix categories.

The package is organised in layers:

* :mod:`freydcat.rings` -- exact matrices and normal forms over Z, Q, Z/n,
* :mod:`freydcat.category` -- the additive-category interface with
  capability records, opposite and product categories,
* :mod:`freydcat.rows` -- the matrix category of free row modules,
* :mod:`freydcat.freyd` -- the cokernel completion with decidable equality,
  kernels, and capability propagation,
* :mod:`freydcat.functors` -- multilinear functors, their extension along the
  completion, and exactness checking,
* :mod:`freydcat.monoidal` -- promonoidal data and their lifts to monoidal
  structures (tensor, unitors, associator, braiding, internal hom),
* :mod:`freydcat.fpmod` -- the classical finitely-presented-module oracle,
* :mod:`freydcat.cli` -- the command line front end.
"""

from .rings import (
    Matrix,
    MatrixError,
    Ring,
    RingError,
    IntegersMod,
    QQ,
    ZZ,
    hnf,
    mat_mul,
    ring_from_tag,
    row_syzygies,
    snf,
    solve_left,
)

__all__ = [
    "Matrix",
    "MatrixError",
    "Ring",
    "RingError",
    "IntegersMod",
    "QQ",
    "ZZ",
    "hnf",
    "mat_mul",
    "ring_from_tag",
    "row_syzygies",
    "snf",
    "solve_left",
]
