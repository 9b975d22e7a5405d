"""Exact vectors, matrices, order-2/3 tensors, and the S3 action on tensor cubes.

Index conventions (every other module leans on these):

* ``LinearMap`` stores a square grid ``entries[i][j]``; **column j is the
  image of basis vector e_j**, so ``apply`` is the usual matrix-vector
  product.  The row convention is wrong for this library: it breaks the
  2-dimensional classification examples (see the convention test).
* ``MulTensor`` holds multiplication constants ``c[i][j][k]`` with
  mu(e_i (x) e_j) = sum_k c[i][j][k] e_k.
* ``ComulTensor`` holds comultiplication constants ``d[k][i][j]`` with
  Delta(e_k) = sum_{i,j} d[k][i][j] e_i (x) e_j.
* A permutation sigma acts on V (x) V (x) V by moving tensor legs:
  Phi_sigma(x1 (x) x2 (x) x3) = x_{sigma^-1(1)} (x) x_{sigma^-1(2)} (x) x_{sigma^-1(3)},
  which on coefficient cubes reads
  ``phi(t)[b1][b2][b3] = t[b[sigma(1)]][b[sigma(2)]][b[sigma(3)]]``.

Permutations are named in cycle notation: ``(213)`` is the 3-cycle
2 -> 1 -> 3 -> 2 and ``(231)`` its inverse 2 -> 3 -> 1 -> 2; these are the two
cyclic permutations of order 3 and both have signature +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .rational import ONE, ZERO, rat


def _freeze_row(row: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in row)


# ---------------------------------------------------------------------------
# vectors and linear maps


@dataclass(frozen=True)
class Vector:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", _freeze_row(coords))
        if not self.coords:
            raise ValueError("vector must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls([ZERO] * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Vector":
        return cls([ONE if i == index else ZERO for i in range(dim)])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.coords)

    def __rmul__(self, scalar) -> "Vector":
        s = rat(scalar)
        return Vector(s * a for a in self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class LinearMap:
    """Square matrix; column j is the image of e_j."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(_freeze_row(r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("linear map must be a nonempty square grid")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "LinearMap":
        return cls([[ZERO] * dim for _ in range(dim)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "LinearMap":
        dim = len(columns)
        return cls([[columns[j][i] for j in range(dim)] for i in range(dim)])

    @classmethod
    def basis_matrix(cls, dim: int, row: int, col: int) -> "LinearMap":
        """Elementary matrix E_{row,col} (sends e_col to e_row)."""
        return cls([[ONE if (i, j) == (row, col) else ZERO for j in range(dim)]
                    for i in range(dim)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return Vector(self.entries[i][j] for i in range(self.dim))

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.dim:
            raise ValueError(f"dimension mismatch: map {self.dim}, vector {v.dim}")
        return Vector(
            sum((self.entries[i][j] * v[j] for j in range(self.dim)), ZERO)
            for i in range(self.dim)
        )

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self . other)."""
        if other.dim != self.dim:
            raise ValueError("dimension mismatch in composition")
        n = self.dim
        return LinearMap(
            [[sum((self.entries[i][k] * other.entries[k][j] for k in range(n)), ZERO)
              for j in range(n)] for i in range(n)]
        )

    def transpose(self) -> "LinearMap":
        n = self.dim
        return LinearMap([[self.entries[j][i] for j in range(n)] for i in range(n)])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(
            [a + b for a, b in zip(r1, r2, strict=True)]
            for r1, r2 in zip(self.entries, other.entries, strict=True)
        )

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(
            [a - b for a, b in zip(r1, r2, strict=True)]
            for r1, r2 in zip(self.entries, other.entries, strict=True)
        )

    def __rmul__(self, scalar) -> "LinearMap":
        s = rat(scalar)
        return LinearMap([s * a for a in row] for row in self.entries)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row) for row in self.entries) + "]"


# ---------------------------------------------------------------------------
# order-2 and order-3 coefficient tensors


@dataclass(frozen=True)
class Tensor2:
    """Coefficients of an element of V (x) V: coeffs[i][j] on e_i (x) e_j."""

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __init__(self, coeffs: Iterable[Iterable]):
        rows = tuple(_freeze_row(r) for r in coeffs)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("order-2 tensor must be a nonempty square grid")
        object.__setattr__(self, "coeffs", rows)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, dim: int) -> "Tensor2":
        return cls([[ZERO] * dim for _ in range(dim)])

    @classmethod
    def pure(cls, x: Vector, y: Vector) -> "Tensor2":
        return cls([[x[i] * y[j] for j in range(y.dim)] for i in range(x.dim)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.coeffs[i][j]

    def flip(self) -> "Tensor2":
        n = self.dim
        return Tensor2([[self.coeffs[j][i] for j in range(n)] for i in range(n)])

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(
            [a + b for a, b in zip(r1, r2, strict=True)]
            for r1, r2 in zip(self.coeffs, other.coeffs, strict=True)
        )

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(
            [a - b for a, b in zip(r1, r2, strict=True)]
            for r1, r2 in zip(self.coeffs, other.coeffs, strict=True)
        )

    def __rmul__(self, scalar) -> "Tensor2":
        s = rat(scalar)
        return Tensor2([s * a for a in row] for row in self.coeffs)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.coeffs for v in row)


@dataclass(frozen=True)
class Tensor3:
    """Coefficients of an element of V (x) V (x) V: coeffs[i][j][k]."""

    coeffs: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __init__(self, coeffs: Iterable[Iterable[Iterable]]):
        cube = tuple(tuple(_freeze_row(r) for r in plane) for plane in coeffs)
        n = len(cube)
        if n == 0 or any(len(p) != n or any(len(r) != n for r in p) for p in cube):
            raise ValueError("order-3 tensor must be a nonempty cube")
        object.__setattr__(self, "coeffs", cube)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        return cls([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    def entry(self, i: int, j: int, k: int) -> Fraction:
        return self.coeffs[i][j][k]

    def __add__(self, other: "Tensor3") -> "Tensor3":
        n = self.dim
        return Tensor3(
            [[[self.coeffs[i][j][k] + other.coeffs[i][j][k] for k in range(n)]
              for j in range(n)] for i in range(n)]
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        n = self.dim
        return Tensor3(
            [[[self.coeffs[i][j][k] - other.coeffs[i][j][k] for k in range(n)]
              for j in range(n)] for i in range(n)]
        )

    def __rmul__(self, scalar) -> "Tensor3":
        s = rat(scalar)
        return Tensor3([[[s * v for v in row] for row in plane] for plane in self.coeffs])

    def is_zero(self) -> bool:
        return all(v == 0 for plane in self.coeffs for row in plane for v in row)

    def nonzero_entries(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        n = self.dim
        return [((i, j, k), self.coeffs[i][j][k])
                for i, j, k in product(range(n), repeat=3)
                if self.coeffs[i][j][k] != 0]


def flip_tau(t: Tensor2) -> Tensor2:
    """The usual flip tau(x (x) y) = y (x) x on coefficient grids."""
    return t.flip()


# ---------------------------------------------------------------------------
# the symmetric group S3 and its action on tensor cubes


@dataclass(frozen=True)
class Perm3:
    """An element of S3, stored as (sigma(1), sigma(2), sigma(3)), 1-indexed."""

    name: str
    images: tuple[int, int, int]
    sign: int

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for i in range(3):
            inv[self.images[i] - 1] = i + 1
        return _BY_IMAGES[tuple(inv)]

    def compose(self, other: "Perm3") -> "Perm3":
        """self after other."""
        return _BY_IMAGES[tuple(self.images[other.images[i] - 1] for i in range(3))]


PERM_ID = Perm3("id", (1, 2, 3), 1)
PERM_12 = Perm3("(12)", (2, 1, 3), -1)
PERM_23 = Perm3("(23)", (1, 3, 2), -1)
PERM_13 = Perm3("(13)", (3, 2, 1), -1)
PERM_213 = Perm3("(213)", (3, 1, 2), 1)   # cycle 2 -> 1 -> 3 -> 2
PERM_231 = Perm3("(231)", (2, 3, 1), 1)   # cycle 2 -> 3 -> 1 -> 2

S3 = (PERM_ID, PERM_12, PERM_23, PERM_13, PERM_213, PERM_231)
_BY_IMAGES = {p.images: p for p in S3}
PERMS = {p.name: p for p in S3}

SUBGROUPS: dict[str, tuple[Perm3, ...]] = {
    "G1": (PERM_ID,),
    "G2": (PERM_ID, PERM_12),
    "G3": (PERM_ID, PERM_23),
    "G4": (PERM_ID, PERM_13),
    "G5": (PERM_ID, PERM_213, PERM_231),
    "G6": S3,
}


def subgroup(name: str) -> tuple[Perm3, ...]:
    try:
        return SUBGROUPS[name]
    except KeyError:
        raise ValueError(f"unknown subgroup {name!r}; expected G1..G6") from None


def phi_apply(sigma: Perm3, t: Tensor3) -> Tensor3:
    """Permute tensor legs: leg m of the output is leg sigma^-1(m) of the input."""
    n = t.dim
    s = sigma.images
    c = t.coeffs
    return Tensor3(
        [[[c[(b0, b1, b2)[s[0] - 1]][(b0, b1, b2)[s[1] - 1]][(b0, b1, b2)[s[2] - 1]]
           for b2 in range(n)] for b1 in range(n)] for b0 in range(n)]
    )


def permute_triple(sigma: Perm3, triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """Index triple of Phi_sigma(e_p (x) e_q (x) e_s) for triple = (p, q, s)."""
    inv = sigma.inverse().images
    return (triple[inv[0] - 1], triple[inv[1] - 1], triple[inv[2] - 1])


# ---------------------------------------------------------------------------
# structure-constant containers


@dataclass(frozen=True)
class MulTensor:
    """Multiplication constants c[i][j][k]: mu(e_i (x) e_j) = sum_k c[i][j][k] e_k."""

    c: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __init__(self, c: Iterable[Iterable[Iterable]]):
        cube = tuple(tuple(_freeze_row(r) for r in plane) for plane in c)
        n = len(cube)
        if n == 0 or any(len(p) != n or any(len(r) != n for r in p) for p in cube):
            raise ValueError("multiplication tensor must be a cube")
        object.__setattr__(self, "c", cube)

    @property
    def dim(self) -> int:
        return len(self.c)

    @classmethod
    def zero(cls, dim: int) -> "MulTensor":
        return cls([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int, int], object]) -> "MulTensor":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in entries.items():
            cube[i][j][k] = rat(v)
        return cls(cube)

    def entry(self, i: int, j: int, k: int) -> Fraction:
        return self.c[i][j][k]

    def product_basis(self, i: int, j: int) -> Vector:
        return Vector(self.c[i][j])

    def apply(self, x: Vector, y: Vector) -> Vector:
        if x.dim != self.dim or y.dim != self.dim:
            raise ValueError("dimension mismatch in multiplication")
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            xi = x[i]
            if xi == 0:
                continue
            for j in range(n):
                q = xi * y[j]
                if q == 0:
                    continue
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] += q * row[k]
        return Vector(out)


@dataclass(frozen=True)
class ComulTensor:
    """Comultiplication constants d[k][i][j]: Delta(e_k) = sum d[k][i][j] e_i (x) e_j."""

    d: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __init__(self, d: Iterable[Iterable[Iterable]]):
        cube = tuple(tuple(_freeze_row(r) for r in plane) for plane in d)
        n = len(cube)
        if n == 0 or any(len(p) != n or any(len(r) != n for r in p) for p in cube):
            raise ValueError("comultiplication tensor must be a cube")
        object.__setattr__(self, "d", cube)

    @property
    def dim(self) -> int:
        return len(self.d)

    @classmethod
    def zero(cls, dim: int) -> "ComulTensor":
        return cls([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int, int], object]) -> "ComulTensor":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (k, i, j), v in entries.items():
            cube[k][i][j] = rat(v)
        return cls(cube)

    def entry(self, k: int, i: int, j: int) -> Fraction:
        return self.d[k][i][j]

    def image(self, k: int) -> Tensor2:
        return Tensor2(self.d[k])

    def apply(self, x: Vector) -> Tensor2:
        if x.dim != self.dim:
            raise ValueError("dimension mismatch in comultiplication")
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        for k in range(n):
            xk = x[k]
            if xk == 0:
                continue
            plane = self.d[k]
            for i in range(n):
                for j in range(n):
                    if plane[i][j] != 0:
                        out[i][j] += xk * plane[i][j]
        return Tensor2(out)

    def op(self) -> "ComulTensor":
        """Opposite comultiplication: d[k][i][j] -> d[k][j][i]."""
        n = self.dim
        return ComulTensor(
            [[[self.d[k][j][i] for j in range(n)] for i in range(n)] for k in range(n)]
        )

    def __sub__(self, other: "ComulTensor") -> "ComulTensor":
        n = self.dim
        return ComulTensor(
            [[[self.d[k][i][j] - other.d[k][i][j] for j in range(n)]
              for i in range(n)] for k in range(n)]
        )
