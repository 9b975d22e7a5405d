"""Hom-bialgebras, the convolution algebra, antipodes, and primitive elements.

A Hom-bialgebra couples a unital Hom-associative algebra with a counital
Hom-coassociative coalgebra on the same space.  The compatibility (B3) —
Delta and eps are morphisms of the underlying algebra — is a *checked*
property, not a construction constraint, so defective hand-entered
structures can still be built and diagnosed.  Two readings are implemented:

* weak (the default, used by the acceptance suite):
  Delta(e1) = e1 (x) e1, Delta(x.y) = Delta(x) * Delta(y),
  eps(e1) = 1, eps(x.y) = eps(x) eps(y),
  where * is the factor-wise product on V (x) V.
* strict: additionally Delta o alpha = (alpha (x) alpha) o Delta and
  eps o alpha = eps.

Endomorphisms convolve by f * g = mu o (f (x) g) o Delta with unit
eta o eps and twist gamma(f) = alpha o f o beta; an antipode is a two-sided
convolution inverse of the identity, found here by exact linear solving
(the antipode equations are linear in the entries of S).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import HomAlgebra, check_hom_associative
from .coalgebra import HomCoalgebra, check_hom_coassociative
from .linsolve import linear_solve
from .rational import ONE, ZERO
from .reports import DefectReport, Witness
from .sampling import random_linear_map
from .tensors import LinearMap, PERM_13, Tensor2, Vector, phi_apply


@dataclass(frozen=True)
class HomBialgebra:
    """An algebra and a coalgebra sharing one space; unit and counit required."""

    algebra: HomAlgebra
    coalgebra: HomCoalgebra

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise ValueError("algebra and coalgebra dimensions differ")
        if self.algebra.unit is None:
            raise ValueError("bialgebra needs a unit")
        if self.coalgebra.counit is None:
            raise ValueError("bialgebra needs a counit")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def unit(self) -> Vector:
        assert self.algebra.unit is not None
        return self.algebra.unit

    @property
    def counit(self) -> Vector:
        assert self.coalgebra.counit is not None
        return self.coalgebra.counit


@dataclass(frozen=True)
class HomHopf:
    """A Hom-bialgebra with an antipode; the defining equations are verified
    at construction time and a violation raises immediately."""

    bialgebra: HomBialgebra
    antipode: LinearMap

    def __post_init__(self):
        if self.antipode.dim != self.bialgebra.dim:
            raise ValueError("antipode dimension differs from bialgebra")
        bad = antipode_defect(self.bialgebra, self.antipode)
        if bad:
            raise ValueError(f"antipode equations fail at basis indices {bad}")

    @property
    def dim(self) -> int:
        return self.bialgebra.dim


def bullet(bialgebra: HomBialgebra, s: Tensor2, t: Tensor2) -> Tensor2:
    """Factor-wise product on V (x) V: (a (x) b) * (c (x) d) = a.c (x) b.d."""
    n = bialgebra.dim
    mul = bialgebra.algebra.mul
    out = [[ZERO] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        sab = s.entry(a, b)
        if sab == 0:
            continue
        for c, d in product(range(n), repeat=2):
            w = sab * t.entry(c, d)
            if w == 0:
                continue
            left = mul.product_basis(a, c)
            right = mul.product_basis(b, d)
            for i in range(n):
                if left[i] == 0:
                    continue
                for j in range(n):
                    if right[j] != 0:
                        out[i][j] += w * left[i] * right[j]
    return Tensor2(out)


def check_bialgebra_weak(bialgebra: HomBialgebra) -> DefectReport:
    """The four weak compatibility conditions, on basis pairs."""
    n = bialgebra.dim
    u = bialgebra.unit
    eps = bialgebra.counit
    comul = bialgebra.coalgebra.comul
    mul = bialgebra.algebra.mul
    witnesses: list[Witness] = []

    grouplike_defect = comul.apply(u) - Tensor2.pure(u, u)
    for i, j in product(range(n), repeat=2):
        v = grouplike_defect.entry(i, j)
        if v != 0:
            witnesses.append(Witness((i, j), v, "unit-grouplike"))

    eps_unit = sum((u[k] * eps[k] for k in range(n)), ZERO) - ONE
    if eps_unit != 0:
        witnesses.append(Witness((), eps_unit, "counit-on-unit"))

    for p, q in product(range(n), repeat=2):
        lhs = comul.apply(mul.product_basis(p, q))
        rhs = bullet(bialgebra, comul.image(p), comul.image(q))
        diff = lhs - rhs
        for i, j in product(range(n), repeat=2):
            v = diff.entry(i, j)
            if v != 0:
                witnesses.append(Witness((p, q, i, j), v, "comul-mult"))
        prod = mul.product_basis(p, q)
        eps_diff = sum((prod[k] * eps[k] for k in range(n)), ZERO) - eps[p] * eps[q]
        if eps_diff != 0:
            witnesses.append(Witness((p, q), eps_diff, "counit-mult"))

    return DefectReport("bialgebra-weak", tuple(witnesses))


def check_bialgebra_strict(bialgebra: HomBialgebra) -> DefectReport:
    """Weak conditions plus the two alpha compatibilities."""
    base = check_bialgebra_weak(bialgebra)
    n = bialgebra.dim
    alpha = bialgebra.algebra.alpha
    comul = bialgebra.coalgebra.comul
    eps = bialgebra.counit
    witnesses = list(base.witnesses)

    for k in range(n):
        lhs = comul.apply(alpha.column(k))
        img = comul.image(k)
        rhs = Tensor2(
            [[sum((alpha.entries[i][a] * img.entry(a, b) * alpha.entries[j][b]
                   for a in range(n) for b in range(n)), ZERO)
              for j in range(n)] for i in range(n)]
        )
        diff = lhs - rhs
        for i, j in product(range(n), repeat=2):
            v = diff.entry(i, j)
            if v != 0:
                witnesses.append(Witness((k, i, j), v, "comul-alpha"))
        col = alpha.column(k)
        eps_diff = sum((col[i] * eps[i] for i in range(n)), ZERO) - eps[k]
        if eps_diff != 0:
            witnesses.append(Witness((k,), eps_diff, "counit-alpha"))

    return DefectReport("bialgebra-strict", tuple(witnesses))


# ---------------------------------------------------------------------------
# the convolution Hom-algebra on End(V)


def convolution(bialgebra: HomBialgebra, f: LinearMap, g: LinearMap) -> LinearMap:
    """f * g = mu o (f (x) g) o Delta."""
    n = bialgebra.dim
    if f.dim != n or g.dim != n:
        raise ValueError("dimension mismatch in convolution")
    d = bialgebra.coalgebra.comul.d
    mul = bialgebra.algebra.mul
    f_cols = [f.column(i) for i in range(n)]
    g_cols = [g.column(i) for i in range(n)]
    columns = []
    for k in range(n):
        acc = Vector.zero(n)
        for i, j in product(range(n), repeat=2):
            w = d[k][i][j]
            if w != 0:
                acc = acc + w * mul.apply(f_cols[i], g_cols[j])
        columns.append(acc)
    return LinearMap.from_columns(columns)


def convolution_unit(bialgebra: HomBialgebra) -> LinearMap:
    """eta o eps as a matrix: column k is eps(e_k) times the unit vector."""
    n = bialgebra.dim
    u, eps = bialgebra.unit, bialgebra.counit
    return LinearMap.from_columns([eps[k] * u for k in range(n)])


def convolution_twist(bialgebra: HomBialgebra, f: LinearMap) -> LinearMap:
    """gamma(f) = alpha o f o beta."""
    return bialgebra.algebra.alpha.compose(f).compose(bialgebra.coalgebra.beta)


def check_convolution_hom_associative(
    bialgebra: HomBialgebra, samples: int = 20, seed: int = 0
) -> bool | None:
    """gamma(f) * (g * h) = (f * g) * gamma(h), exactly.

    Verified on `samples` random endomorphism triples, plus every basis
    matrix triple when dim = 2.  Returns None ("premises not met") unless
    the algebra side is Hom-associative and the coalgebra side
    Hom-coassociative — those are the hypotheses that make the identity a
    theorem.
    """
    if not check_hom_associative(bialgebra.algebra).ok:
        return None
    if not check_hom_coassociative(bialgebra.coalgebra).ok:
        return None
    n = bialgebra.dim

    def holds(f: LinearMap, g: LinearMap, h: LinearMap) -> bool:
        lhs = convolution(bialgebra, convolution_twist(bialgebra, f),
                          convolution(bialgebra, g, h))
        rhs = convolution(bialgebra, convolution(bialgebra, f, g),
                          convolution_twist(bialgebra, h))
        return lhs == rhs

    if n == 2:
        basis_mats = [LinearMap.basis_matrix(n, i, j)
                      for i in range(n) for j in range(n)]
        for f, g, h in product(basis_mats, repeat=3):
            if not holds(f, g, h):
                return False

    rng = random.Random(seed)
    for _ in range(samples):
        f = random_linear_map(n, rng)
        g = random_linear_map(n, rng)
        h = random_linear_map(n, rng)
        if not holds(f, g, h):
            return False
    return True


# ---------------------------------------------------------------------------
# antipodes


def antipode_defect(bialgebra: HomBialgebra, s: LinearMap) -> tuple[int, ...]:
    """Basis indices where mu o (S (x) id) o Delta or the mirrored equation
    misses eta o eps."""
    n = bialgebra.dim
    d = bialgebra.coalgebra.comul.d
    mul = bialgebra.algebra.mul
    u, eps = bialgebra.unit, bialgebra.counit
    s_cols = [s.column(i) for i in range(n)]
    basis = [Vector.basis(n, i) for i in range(n)]
    bad = []
    for k in range(n):
        want = eps[k] * u
        left = Vector.zero(n)
        right = Vector.zero(n)
        for i, j in product(range(n), repeat=2):
            w = d[k][i][j]
            if w == 0:
                continue
            left = left + w * mul.apply(s_cols[i], basis[j])
            right = right + w * mul.apply(basis[i], s_cols[j])
        if left != want or right != want:
            bad.append(k)
    return tuple(bad)


@dataclass(frozen=True)
class AntipodeResult:
    """Outcome of the linear antipode solve.

    status is "unique" (with the verified Hopf structure attached), "none"
    (not Hom-Hopf), or "family" (an affine solution set; its kernel
    dimension and one particular solution are reported as data).
    """

    status: str
    antipode: LinearMap | None
    kernel_dim: int
    hopf: HomHopf | None
    unit_fixed: bool | None
    counit_compatible: bool | None


def solve_antipode(bialgebra: HomBialgebra, row_order_seed: int | None = None) -> AntipodeResult:
    """Solve the 2*dim^2 linear antipode equations in the dim^2 entries of S.

    ``row_order_seed`` shuffles the equation rows before elimination; any
    seed must produce the same unique solution (pinned by tests).
    """
    n = bialgebra.dim
    d = bialgebra.coalgebra.comul.d
    c = bialgebra.algebra.mul.c
    u, eps = bialgebra.unit, bialgebra.counit

    # variables s_{p,i} = entry (p, i) of S, flattened as p * n + i
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k, m in product(range(n), repeat=2):
        row = [ZERO] * (n * n)
        for i, j, p in product(range(n), repeat=3):
            w = d[k][i][j] * c[p][j][m]
            if w != 0:
                row[p * n + i] += w
        rows.append(row)
        rhs.append(eps[k] * u[m])
    for k, m in product(range(n), repeat=2):
        row = [ZERO] * (n * n)
        for i, j, q in product(range(n), repeat=3):
            w = d[k][i][j] * c[i][q][m]
            if w != 0:
                row[q * n + j] += w
        rows.append(row)
        rhs.append(eps[k] * u[m])

    if row_order_seed is not None:
        order = list(range(len(rows)))
        random.Random(row_order_seed).shuffle(order)
        rows = [rows[i] for i in order]
        rhs = [rhs[i] for i in order]

    solution = linear_solve(rows, rhs)
    if not solution.consistent:
        return AntipodeResult("none", None, 0, None, None, None)

    entries = solution.particular
    assert entries is not None
    s = LinearMap([[entries[p * n + i] for i in range(n)] for p in range(n)])
    if solution.kernel:
        return AntipodeResult("family", s, solution.kernel_dim, None, None, None)

    unit_fixed = s.apply(u) == u
    counit_compatible = all(
        sum((eps[i] * s.entries[i][k] for i in range(n)), ZERO) == eps[k]
        for k in range(n)
    )
    hopf = HomHopf(bialgebra=bialgebra, antipode=s)
    return AntipodeResult("unique", s, 0, hopf, unit_fixed, counit_compatible)


def dual_hopf(hopf: HomHopf) -> HomHopf:
    """Dualize both sides and transpose the antipode; construction re-verifies
    the antipode equations on the dual."""
    from .duality import dual_algebra_of_coalgebra, dual_coalgebra_of_algebra

    b = hopf.bialgebra
    dual_b = HomBialgebra(
        algebra=dual_algebra_of_coalgebra(b.coalgebra),
        coalgebra=dual_coalgebra_of_algebra(b.algebra),
    )
    return HomHopf(bialgebra=dual_b, antipode=hopf.antipode.transpose())


# ---------------------------------------------------------------------------
# primitive and generalized primitive elements


def primitive_subspace(bialgebra: HomBialgebra) -> tuple[Vector, ...]:
    """Kernel basis of Delta(x) = e1 (x) x + x (x) e1 (e1 the unit vector).

    Also verifies eps = 0 on the basis and that the commutator of any two
    members solves the primitive equation again; both follow from (C2) and
    weak (B3), and a violation (possible only on structures breaking those
    premises) raises ValueError.
    """
    n = bialgebra.dim
    u = bialgebra.unit
    d = bialgebra.coalgebra.comul.d
    rows = []
    for i, j in product(range(n), repeat=2):
        row = []
        for cidx in range(n):
            coeff = d[cidx][i][j]
            if cidx == j:
                coeff -= u[i]
            if cidx == i:
                coeff -= u[j]
            row.append(coeff)
        rows.append(row)
    sol = linear_solve(rows, [ZERO] * (n * n))
    basis = tuple(Vector(v) for v in sol.kernel)

    eps = bialgebra.counit
    for v in basis:
        if sum((v[k] * eps[k] for k in range(n)), ZERO) != 0:
            raise ValueError(f"counit does not vanish on primitive element {v}")

    def is_primitive(x: Vector) -> bool:
        expected = Tensor2.pure(u, x) + Tensor2.pure(x, u)
        return (bialgebra.coalgebra.comul.apply(x) - expected).is_zero()

    mul = bialgebra.algebra.mul
    for v in basis:
        for w in basis:
            commutator = mul.apply(v, w) - mul.apply(w, v)
            if not is_primitive(commutator):
                raise ValueError(
                    f"commutator [{v}, {w}] fails the primitive equation"
                )
    return basis


def _gprim_rows(bialgebra: HomBialgebra) -> list[list[Fraction]]:
    """Linear system whose kernel is the generalized primitive subspace."""
    from .coalgebra import expand_beta_outer, expand_outer_beta

    n = bialgebra.dim
    comul = bialgebra.coalgebra.comul
    beta = bialgebra.coalgebra.beta
    left = expand_beta_outer(comul, comul, beta)     # (beta (x) Delta) o Delta
    right = expand_outer_beta(comul, comul, beta)    # (Delta (x) beta) o Delta
    rows = []
    for i, j, l in product(range(n), repeat=3):
        rows.append([
            left[cidx].entry(i, j, l) - phi_apply(PERM_13, right[cidx]).entry(i, j, l)
            for cidx in range(n)
        ])
    d = comul.d
    for i, j in product(range(n), repeat=2):
        rows.append([d[cidx][i][j] - d[cidx][j][i] for cidx in range(n)])
    return rows


def generalized_primitive_subspace(bialgebra: HomBialgebra) -> tuple[Vector, ...]:
    """Kernel basis of the two generalized-primitive conditions:

        (beta (x) Delta) o Delta (x) = tau_13 o (Delta (x) beta) o Delta (x)
        Delta^op(x) = Delta(x).

    Verifies that every primitive element satisfies both conditions and
    that the commutator of any two members stays in the solution set.
    """
    n = bialgebra.dim
    rows = _gprim_rows(bialgebra)
    sol = linear_solve(rows, [ZERO] * len(rows))
    basis = tuple(Vector(v) for v in sol.kernel)

    def satisfies(x: Vector) -> bool:
        return all(
            sum((row[c] * x[c] for c in range(n)), ZERO) == 0 for row in rows
        )

    for p in primitive_subspace(bialgebra):
        if not satisfies(p):
            raise ValueError(f"primitive element {p} is not generalized primitive")

    mul = bialgebra.algebra.mul
    for v in basis:
        for w in basis:
            commutator = mul.apply(v, w) - mul.apply(w, v)
            if not satisfies(commutator):
                raise ValueError(
                    f"commutator [{v}, {w}] leaves the generalized primitive space"
                )
    return basis


def counit_expansion_check(bialgebra: HomBialgebra, samples: int = 5, seed: int = 0) -> bool:
    """x = sum x1 eps(x2) = sum eps(x1) x2 on the basis, and the same
    expansions through an endomorphism: f(x) = sum f(x1) eps(x2) = sum eps(x1) f(x2)."""
    n = bialgebra.dim
    d = bialgebra.coalgebra.comul.d
    eps = bialgebra.counit
    rng = random.Random(seed)
    maps = [LinearMap.identity(n)] + [random_linear_map(n, rng) for _ in range(samples)]
    for f in maps:
        cols = [f.column(i) for i in range(n)]
        for k in range(n):
            via_right = Vector.zero(n)
            via_left = Vector.zero(n)
            for i, j in product(range(n), repeat=2):
                w = d[k][i][j]
                if w == 0:
                    continue
                via_right = via_right + (w * eps[j]) * cols[i]
                via_left = via_left + (w * eps[i]) * cols[j]
            want = cols[k]
            if via_right != want or via_left != want:
                return False
    return True
