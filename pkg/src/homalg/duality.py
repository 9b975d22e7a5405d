"""Transpose duality between Hom-coalgebras and finite-dimensional Hom-algebras.

On the dual basis the correspondence is a pure reindexing of structure
constants: an algebra's C_{ij}^k become the dual coalgebra's D_k^{ij} and
vice versa, while the twisting map transposes.  A unit vector and a counit
covector trade places.  The G-defect of a structure and of its dual vanish
together, for every subgroup of S3; :func:`duality_defect_correspondence`
checks that boolean agreement through the two checkers rather than through a
separate index formula, so there is a single code path for the condition.
"""

from __future__ import annotations

from .algebra import HomAlgebra, check_G_hom_associative
from .coalgebra import HomCoalgebra, check_G_hom_coalgebra
from .tensors import ComulTensor, MulTensor


def dual_algebra_of_coalgebra(coalgebra: HomCoalgebra) -> HomAlgebra:
    """C_{ij}^k := D_k^{ij}, alpha := beta transposed, unit := counit weights."""
    n = coalgebra.dim
    d = coalgebra.comul.d
    mul = MulTensor(
        [[[d[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    )
    return HomAlgebra(
        mul=mul,
        alpha=coalgebra.beta.transpose(),
        unit=coalgebra.counit,
    )


def dual_coalgebra_of_algebra(algebra: HomAlgebra) -> HomCoalgebra:
    """D_k^{ij} := C_{ij}^k, beta := alpha transposed, counit := unit coords."""
    n = algebra.dim
    c = algebra.mul.c
    comul = ComulTensor(
        [[[c[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    )
    return HomCoalgebra(
        comul=comul,
        beta=algebra.alpha.transpose(),
        counit=algebra.unit,
    )


def duality_defect_correspondence(coalgebra: HomCoalgebra, group: str) -> bool:
    """Whether the G-defect booleans of a coalgebra and its dual algebra agree.

    This is always True; it is exposed as a checked correspondence (rather
    than assumed) so the test suites exercise it on random structures.
    """
    coalg_ok = check_G_hom_coalgebra(coalgebra, group).ok
    alg_ok = check_G_hom_associative(dual_algebra_of_coalgebra(coalgebra), group).ok
    return coalg_ok == alg_ok
