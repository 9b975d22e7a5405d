import random
from fractions import Fraction
from itertools import product

import pytest

from homalg import (
    PERMS,
    S3,
    SUBGROUPS,
    LinearMap,
    Tensor2,
    Tensor3,
    Vector,
    flip_tau,
    phi_apply,
)
from homalg.sampling import random_scalar
from homalg.tensors import permute_triple


def random_tensor3(dim, rng):
    return Tensor3([[[random_scalar(rng) for _ in range(dim)]
                     for _ in range(dim)] for _ in range(dim)])


def basis_tensor3(dim, i, j, k):
    cube = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    cube[i][j][k] = Fraction(1)
    return Tensor3(cube)


# --- the S3 table ----------------------------------------------------------

def test_signs():
    assert PERMS["id"].sign == 1
    for t in ("(12)", "(23)", "(13)"):
        assert PERMS[t].sign == -1
    assert PERMS["(213)"].sign == 1
    assert PERMS["(231)"].sign == 1


def test_cycles_have_order_three():
    c = PERMS["(213)"]
    assert c.compose(c) == PERMS["(231)"]
    assert c.compose(c).compose(c) == PERMS["id"]
    assert PERMS["(213)"].inverse() == PERMS["(231)"]


def test_group_axioms():
    for p in S3:
        assert p.compose(PERMS["id"]) == p == PERMS["id"].compose(p)
        assert p.compose(p.inverse()) == PERMS["id"]
    for p, q in product(S3, repeat=2):
        assert p.compose(q) in S3
        assert p.compose(q).sign == p.sign * q.sign


def test_subgroups_closed():
    for name, elems in SUBGROUPS.items():
        for p, q in product(elems, repeat=2):
            assert p.compose(q) in elems, name
    assert len(SUBGROUPS["G6"]) == 6 and len(SUBGROUPS["G5"]) == 3


# --- the action on tensor cubes -------------------------------------------

def test_phi_identity():
    rng = random.Random(1)
    t = random_tensor3(3, rng)
    assert phi_apply(PERMS["id"], t) == t


def test_phi_transposition_on_pure_tensor():
    # (12) swaps the first two factors: e1 (x) e2 (x) e3 -> e2 (x) e1 (x) e3
    t = basis_tensor3(3, 0, 1, 2)
    assert phi_apply(PERMS["(12)"], t) == basis_tensor3(3, 1, 0, 2)


def test_phi_cycles_on_pure_tensor():
    # Phi_(213): a (x) b (x) c -> b (x) c (x) a (legs move by sigma^-1)
    t = basis_tensor3(3, 0, 1, 2)
    assert phi_apply(PERMS["(213)"], t) == basis_tensor3(3, 1, 2, 0)
    assert phi_apply(PERMS["(231)"], t) == basis_tensor3(3, 2, 0, 1)


def test_phi_squared_cycle_matches_composition():
    rng = random.Random(7)
    for _ in range(10):
        t = random_tensor3(2, rng)
        twice = phi_apply(PERMS["(213)"], phi_apply(PERMS["(213)"], t))
        assert twice == phi_apply(PERMS["(231)"], t)


def oracle_phi(sigma, t):
    """Independent oracle: scatter each basis entry to its permuted slot."""
    n = t.dim
    inv = sigma.inverse().images
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in product(range(n), repeat=3):
        # e_{a1} (x) e_{a2} (x) e_{a3} -> e_{a_{inv(1)}} (x) ...
        target = (a[inv[0] - 1], a[inv[1] - 1], a[inv[2] - 1])
        out[target[0]][target[1]][target[2]] += t.entry(*a)
    return Tensor3(out)


def test_phi_matches_scatter_oracle():
    rng = random.Random(11)
    for dim in (2, 3):
        for _ in range(5):
            t = random_tensor3(dim, rng)
            for sigma in S3:
                assert phi_apply(sigma, t) == oracle_phi(sigma, t)


def test_phi_left_action_law():
    rng = random.Random(13)
    for _ in range(5):
        t = random_tensor3(2, rng)
        for s1, s2 in product(S3, repeat=2):
            lhs = phi_apply(s1, phi_apply(s2, t))
            assert lhs == phi_apply(s1.compose(s2), t)


def test_phi_linear():
    rng = random.Random(17)
    t1, t2 = random_tensor3(3, rng), random_tensor3(3, rng)
    a = Fraction(-5, 3)
    for sigma in S3:
        assert phi_apply(sigma, a * t1 + t2) == \
            a * phi_apply(sigma, t1) + phi_apply(sigma, t2)


def test_permute_triple_matches_phi():
    for sigma in S3:
        for trip in product(range(2), repeat=3):
            moved = permute_triple(sigma, trip)
            assert phi_apply(sigma, basis_tensor3(2, *trip)) == \
                basis_tensor3(2, *moved)


# --- flip ------------------------------------------------------------------

def test_flip_pure_tensor():
    t = Tensor2.pure(Vector.basis(2, 0), Vector.basis(2, 1))
    assert flip_tau(t) == Tensor2.pure(Vector.basis(2, 1), Vector.basis(2, 0))


def test_flip_involution():
    rng = random.Random(19)
    t = Tensor2([[random_scalar(rng) for _ in range(3)] for _ in range(3)])
    assert flip_tau(flip_tau(t)) == t


def test_flip_fixes_symmetric():
    t = Tensor2.pure(Vector.basis(2, 0), Vector.basis(2, 0))
    assert flip_tau(t) == t


# --- container validation ---------------------------------------------------

def test_linear_map_rejects_ragged():
    with pytest.raises(ValueError):
        LinearMap([[1, 2], [3]])


def test_apply_dim_mismatch():
    with pytest.raises(ValueError):
        LinearMap.identity(2).apply(Vector.basis(3, 0))
