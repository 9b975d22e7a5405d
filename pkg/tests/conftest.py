"""Shared builders for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from homalg import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    LinearMap,
    MulTensor,
    ComulTensor,
    Vector,
    registry,
)


@pytest.fixture(scope="session")
def reg():
    return registry()


def mu1_algebra(a1=1, a2=1) -> HomAlgebra:
    return registry()["algebra-mu1"].build({"a1": a1, "a2": a2})


def mu2_algebra(a1=1, a2=1) -> HomAlgebra:
    return registry()["algebra-mu2"].build({"a1": a1, "a2": a2})


def bialgebra_row(row: int, b1=1, b2=0, b3=1, a1=1, a2=1) -> HomBialgebra:
    return registry()[f"bialgebra-{row}"].build(
        {"b1": b1, "b2": b2, "b3": b3, "a1": a1, "a2": a2}
    )


def truncated_primitive_bialgebra() -> HomBialgebra:
    """dim-3 structure with unit e1, primitive e2, and e3 = e2.e2.

    Multiplication is the degree-2 truncation of the polynomial algebra on
    e2 (e2.e3 = e3.e3 = 0); the comultiplication extends Delta(e2) =
    e1(x)e2 + e2(x)e1 multiplicatively to e3, giving the divided-power
    pattern Delta(e3) = e1(x)e3 + 2 e2(x)e2 + e3(x)e1.  It is associative,
    coassociative (alpha = beta = id), unital, counital, and weakly
    compatible on every pair drawn from {e1, e2}; full weak compatibility on
    pairs involving e3 is impossible over the rationals for any structure
    with a nonzero primitive, so this is as much bialgebra as exists.
    """
    mul = MulTensor.from_entries(3, {
        (0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1,
        (1, 0, 1): 1, (2, 0, 2): 1,
        (1, 1, 2): 1,
    })
    comul = ComulTensor.from_entries(3, {
        (0, 0, 0): 1,
        (1, 0, 1): 1, (1, 1, 0): 1,
        (2, 0, 2): 1, (2, 1, 1): 2, (2, 2, 0): 1,
    })
    return HomBialgebra(
        algebra=HomAlgebra(mul=mul, alpha=LinearMap.identity(3),
                           unit=Vector.basis(3, 0)),
        coalgebra=HomCoalgebra(comul=comul, beta=LinearMap.identity(3),
                               counit=Vector([1, 0, 0])),
    )


def grouplike_coalgebra(dim: int) -> HomCoalgebra:
    """Delta(e_k) = e_k (x) e_k with counit identically 1 and beta = id."""
    comul = ComulTensor.from_entries(dim, {(k, k, k): 1 for k in range(dim)})
    return HomCoalgebra(comul=comul, beta=LinearMap.identity(dim),
                        counit=Vector([Fraction(1)] * dim))
