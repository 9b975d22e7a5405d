"""Finite-dimensional Hom-algebras given by structure constants.

A Hom-associative algebra twists associativity by a linear map alpha:

    mu(alpha(x) (x) mu(y (x) z)) = mu(mu(x (x) y) (x) alpha(z)).

The defect of that identity is the alpha-associator
a(x, y, z) = mu(mu(x (x) y) (x) alpha(z)) - mu(alpha(x) (x) mu(y (x) z));
all checkers evaluate it (or a signed sum of its compositions with the S3
action) on basis triples, which suffices by trilinearity.

``alpha`` is an arbitrary linear map here, not necessarily multiplicative:
the 2-dimensional classification twists fail alpha(x.y) = alpha(x).alpha(y)
for generic parameters, so multiplicativity is offered as the separate
predicate :func:`check_twist_multiplicative`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .rational import ONE, ZERO, rat
from .reports import DefectReport, Witness
from .tensors import LinearMap, MulTensor, Vector, permute_triple, subgroup


@dataclass(frozen=True)
class HomAlgebra:
    """Multiplication constants, twisting map, and an optional unit vector."""

    mul: MulTensor
    alpha: LinearMap
    unit: Vector | None = None

    def __post_init__(self):
        if self.alpha.dim != self.mul.dim:
            raise ValueError("mul and alpha dimensions differ")
        if self.unit is not None and self.unit.dim != self.mul.dim:
            raise ValueError("unit dimension differs from mul")

    @property
    def dim(self) -> int:
        return self.mul.dim


@dataclass(frozen=True)
class HomBracket:
    """Bracket structure constants with a twisting map.

    Intended for skew-symmetric brackets; skew-symmetry is a checked
    property (:func:`check_skew`), not a construction constraint.
    """

    bracket: MulTensor
    alpha: LinearMap

    def __post_init__(self):
        if self.alpha.dim != self.bracket.dim:
            raise ValueError("bracket and alpha dimensions differ")

    @property
    def dim(self) -> int:
        return self.bracket.dim


def multiply(algebra: HomAlgebra, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    return algebra.mul.apply(x, y)


def alpha_associator(algebra: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """mu(mu(x (x) y) (x) alpha(z)) - mu(alpha(x) (x) mu(y (x) z))."""
    mul, alpha = algebra.mul, algebra.alpha
    left = mul.apply(mul.apply(x, y), alpha.apply(z))
    right = mul.apply(alpha.apply(x), mul.apply(y, z))
    return left - right


def _associator_table(algebra: HomAlgebra) -> dict[tuple[int, int, int], Vector]:
    n = algebra.dim
    alpha_cols = [algebra.alpha.column(i) for i in range(n)]
    mul = algebra.mul
    table = {}
    for p, q, s in product(range(n), repeat=3):
        left = mul.apply(mul.product_basis(p, q), alpha_cols[s])
        right = mul.apply(alpha_cols[p], mul.product_basis(q, s))
        table[(p, q, s)] = left - right
    return table


def _vector_witnesses(
    defects: dict[tuple[int, ...], Vector], label: str = ""
) -> tuple[Witness, ...]:
    out = []
    for idx in sorted(defects):
        vec = defects[idx]
        for comp, value in enumerate(vec.coords):
            if value != 0:
                out.append(Witness(indices=idx + (comp,), value=value, label=label))
    return tuple(out)


def check_hom_associative(algebra: HomAlgebra) -> DefectReport:
    """Report the basis triples where the alpha-associator is nonzero."""
    table = _associator_table(algebra)
    bad = {idx: v for idx, v in table.items() if not v.is_zero()}
    return DefectReport("hom-associative", _vector_witnesses(bad))


def check_unital(algebra: HomAlgebra) -> bool | None:
    """True iff the declared unit is two-sided; None if no unit is declared."""
    if algebra.unit is None:
        return None
    n = algebra.dim
    u = algebra.unit
    for j in range(n):
        ej = Vector.basis(n, j)
        if algebra.mul.apply(u, ej) != ej or algebra.mul.apply(ej, u) != ej:
            return False
    return True


def check_twist_multiplicative(algebra: HomAlgebra) -> bool:
    """Strict reading of "homomorphism": alpha(x.y) = alpha(x).alpha(y)."""
    n = algebra.dim
    alpha, mul = algebra.alpha, algebra.mul
    cols = [alpha.column(i) for i in range(n)]
    for i, j in product(range(n), repeat=2):
        if alpha.apply(mul.product_basis(i, j)) != mul.apply(cols[i], cols[j]):
            return False
    return True


def check_G_hom_associative(algebra: HomAlgebra, group: str) -> DefectReport:
    """Signed sum of associator compositions with Phi_sigma over the subgroup.

    sum_{sigma in G} (-1)^eps(sigma) a o Phi_sigma = 0, checked on basis
    triples.  G1 reduces to plain Hom-associativity.
    """
    perms = subgroup(group)
    table = _associator_table(algebra)
    n = algebra.dim
    bad: dict[tuple[int, ...], Vector] = {}
    for triple in product(range(n), repeat=3):
        acc = Vector.zero(n)
        for sigma in perms:
            term = table[permute_triple(sigma, triple)]
            acc = acc + term if sigma.sign > 0 else acc - term
        if not acc.is_zero():
            bad[triple] = acc
    return DefectReport(f"{group}-hom-associative", _vector_witnesses(bad))


def commutator_bracket(algebra: HomAlgebra) -> HomBracket:
    """[x, y] = mu(x (x) y) - mu(y (x) x), with the twist carried over."""
    n = algebra.dim
    c = algebra.mul.c
    bracket = MulTensor(
        [[[c[i][j][k] - c[j][i][k] for k in range(n)] for j in range(n)]
         for i in range(n)]
    )
    return HomBracket(bracket=bracket, alpha=algebra.alpha)


def check_skew(lie: HomBracket) -> bool:
    n = lie.dim
    b = lie.bracket.c
    return all(
        b[i][j][k] == -b[j][i][k]
        for i, j, k in product(range(n), repeat=3)
    )


def check_hom_jacobi(lie: HomBracket) -> DefectReport:
    """Cyclic sum [alpha(x), [y, z]] + [alpha(y), [z, x]] + [alpha(z), [x, y]] = 0."""
    n = lie.dim
    br, alpha = lie.bracket, lie.alpha
    cols = [alpha.column(i) for i in range(n)]
    bad: dict[tuple[int, ...], Vector] = {}
    for x, y, z in product(range(n), repeat=3):
        acc = Vector.zero(n)
        for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
            acc = acc + br.apply(cols[a], br.product_basis(b, c))
        if not acc.is_zero():
            bad[(x, y, z)] = acc
    return DefectReport("hom-jacobi", _vector_witnesses(bad))


def check_hom_leibniz(lie: HomBracket) -> DefectReport:
    """[[x, y], alpha(z)] = [[x, z], alpha(y)] + [alpha(x), [y, z]] on basis triples."""
    n = lie.dim
    br, alpha = lie.bracket, lie.alpha
    cols = [alpha.column(i) for i in range(n)]
    bad: dict[tuple[int, ...], Vector] = {}
    for x, y, z in product(range(n), repeat=3):
        lhs = br.apply(br.product_basis(x, y), cols[z])
        rhs = br.apply(br.product_basis(x, z), cols[y]) + br.apply(cols[x], br.product_basis(y, z))
        diff = lhs - rhs
        if not diff.is_zero():
            bad[(x, y, z)] = diff
    return DefectReport("hom-leibniz", _vector_witnesses(bad))


def tensor_product(a1: HomAlgebra, a2: HomAlgebra) -> HomAlgebra:
    """(V1 (x) V2, mu1 (x) mu2, alpha1 (x) alpha2, eta1 (x) eta2).

    Basis index (i1, i2) flattens to i1 * dim2 + i2.
    """
    if (a1.unit is None) != (a2.unit is None):
        raise ValueError("tensor product needs both algebras unital or both non-unital")
    n1, n2 = a1.dim, a2.dim
    n = n1 * n2
    c1, c2 = a1.mul.c, a2.mul.c
    cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i1, j1, k1 in product(range(n1), repeat=3):
        v1 = c1[i1][j1][k1]
        if v1 == 0:
            continue
        for i2, j2, k2 in product(range(n2), repeat=3):
            v2 = c2[i2][j2][k2]
            if v2 != 0:
                cube[i1 * n2 + i2][j1 * n2 + j2][k1 * n2 + k2] = v1 * v2
    alpha = LinearMap(
        [[a1.alpha.entry(i1, j1) * a2.alpha.entry(i2, j2)
          for j1 in range(n1) for j2 in range(n2)]
         for i1 in range(n1) for i2 in range(n2)]
    )
    unit = None
    if a1.unit is not None and a2.unit is not None:
        unit = Vector(
            a1.unit[i1] * a2.unit[i2] for i1 in range(n1) for i2 in range(n2)
        )
    return HomAlgebra(mul=MulTensor(cube), alpha=alpha, unit=unit)


def check_algebra_morphism(f: LinearMap, source: HomAlgebra, target: HomAlgebra) -> bool:
    """mu' o (f (x) f) = f o mu, f o alpha = alpha' o f, and f(eta) = eta'."""
    if f.dim != source.dim or source.dim != target.dim:
        raise ValueError("dimension mismatch in morphism check")
    n = source.dim
    cols = [f.column(i) for i in range(n)]
    for i, j in product(range(n), repeat=2):
        if target.mul.apply(cols[i], cols[j]) != f.apply(source.mul.product_basis(i, j)):
            return False
    if f.compose(source.alpha) != target.alpha.compose(f):
        return False
    if source.unit is not None and target.unit is not None:
        if f.apply(source.unit) != target.unit:
            return False
    elif (source.unit is None) != (target.unit is None):
        return False
    return True


def check_module(
    algebra: HomAlgebra,
    m_dim: int,
    f: LinearMap,
    gamma: Sequence[Sequence[Sequence]],
) -> bool:
    """Left module axiom gamma o (mu (x) f) = gamma o (alpha (x) gamma).

    ``gamma[i][m][p]`` is the coefficient of u_p in gamma(e_i (x) u_m), for
    the V-basis e_i and M-basis u_m.
    """
    n = algebra.dim
    act = [[[rat(v) for v in row] for row in plane] for plane in gamma]
    if len(act) != n or any(len(plane) != m_dim for plane in act) or \
            any(len(row) != m_dim for plane in act for row in plane):
        raise ValueError("action tensor must have shape dim x m_dim x m_dim")
    if f.dim != m_dim:
        raise ValueError("f must act on the module")

    def act_vec(v: Vector, m_coords: Sequence) -> list:
        out = [ZERO] * m_dim
        for i in range(n):
            if v[i] == 0:
                continue
            for m in range(m_dim):
                q = v[i] * m_coords[m]
                if q == 0:
                    continue
                for p in range(m_dim):
                    if act[i][m][p] != 0:
                        out[p] += q * act[i][m][p]
        return out

    for v1, v2 in product(range(n), repeat=2):
        for m in range(m_dim):
            um = [ONE if t == m else ZERO for t in range(m_dim)]
            lhs = act_vec(algebra.mul.product_basis(v1, v2), f.apply(Vector(um)).coords)
            inner = act_vec(Vector.basis(n, v2), um)
            rhs = act_vec(algebra.alpha.column(v1), inner)
            if lhs != rhs:
                return False
    return True
