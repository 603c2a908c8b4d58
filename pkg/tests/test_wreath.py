"""Superpermutation action and the wreath product F^(x)n x| S_n."""

import random

import pytest

from awpa import permutations as perms
from awpa.errors import SizeMismatch
from awpa.frobenius import clifford_algebra, cyclic_group_algebra, trivial_algebra
from awpa.wreath import TensorElem, WreathElem, superpermute


def test_superpermute_even_slot():
    # s_1 on 1 (x) f -> f (x) 1, no sign for even f
    F = cyclic_group_algebra(2)
    t = TensorElem.slot(F, 2, "g", 2)
    moved = superpermute(perms.simple(2, 1), t)
    assert moved == TensorElem.slot(F, 2, "g", 1)


def test_superpermute_odd_odd_sign():
    # s_1 on c (x) c -> -(c (x) c)
    F = clifford_algebra()
    cc = TensorElem.slot(F, 2, "c", 1) * TensorElem.slot(F, 2, "c", 2)
    assert superpermute(perms.simple(2, 1), cc) == -cc


def test_superpermute_three_slots():
    # (s1 s2) . (f (x) g (x) h) = h (x) f (x) g for even slots; the action of
    # the composite agrees with composing the two simple swaps (the oracle)
    F = cyclic_group_algebra(3)
    f = TensorElem(F, 3, {(1, 2, 0): F.scalar(1)})
    pi = perms.mul(perms.simple(3, 1), perms.simple(3, 2))
    direct = superpermute(pi, f)
    stepwise = superpermute(perms.simple(3, 1), superpermute(perms.simple(3, 2), f))
    assert direct == stepwise
    assert direct == TensorElem(F, 3, {(0, 1, 2): F.scalar(1)})


def test_superpermute_group_action():
    F = clifford_algebra()
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(15):
            p1 = rng.choice(perms.all_permutations(n))
            p2 = rng.choice(perms.all_permutations(n))
            w = tuple(rng.randrange(2) for _ in range(n))
            t = TensorElem(F, n, {w: F.scalar(1)})
            assert superpermute(p1, superpermute(p2, t)) == superpermute(
                perms.mul(p1, p2), t
            )


def test_superpermute_is_algebra_map():
    F = clifford_algebra()
    rng = random.Random(2)
    n = 3
    for _ in range(15):
        pi = rng.choice(perms.all_permutations(n))
        a = TensorElem(
            F, n, {tuple(rng.randrange(2) for _ in range(n)): F.scalar(rng.randint(-2, 2))}
        )
        b = TensorElem(
            F, n, {tuple(rng.randrange(2) for _ in range(n)): F.scalar(rng.randint(-2, 2))}
        )
        assert superpermute(pi, a * b) == superpermute(pi, a) * superpermute(pi, b)


def test_wreath_smash_relation():
    # (1, s1) * (f (x) 1, id) = (1 (x) f, s1) for even f
    F = cyclic_group_algebra(2)
    s1 = WreathElem.from_perm(F, 2, perms.simple(2, 1))
    f1 = WreathElem.from_tensor(TensorElem.slot(F, 2, "g", 1))
    prod = s1 * f1
    expected = WreathElem.from_tensor(
        TensorElem.slot(F, 2, "g", 2), perms.simple(2, 1)
    )
    assert prod == expected


def test_wreath_clifford_signs():
    F = clifford_algebra()
    c1 = WreathElem.from_tensor(TensorElem.slot(F, 2, "c", 1))
    c2 = WreathElem.from_tensor(TensorElem.slot(F, 2, "c", 2))
    cc = WreathElem.from_tensor(
        TensorElem(F, 2, {(1, 1): F.scalar(1)})
    )
    assert c1 * c2 == cc
    assert c2 * c1 == -cc


def test_wreath_associativity_and_unit():
    F = clifford_algebra()
    rng = random.Random(3)
    n = 2
    def rnd():
        terms = {}
        for _ in range(2):
            w = tuple(rng.randrange(2) for _ in range(n))
            p = rng.choice(perms.all_permutations(n))
            terms[(w, p)] = F.scalar(rng.randint(-3, 3))
        return WreathElem(F, n, terms)

    one = WreathElem.unit(F, n)
    for _ in range(20):
        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c)
        assert one * a == a and a * one == a


def test_size_mismatch():
    F = trivial_algebra()
    with pytest.raises(SizeMismatch):
        superpermute((1, 2, 3), TensorElem.unit(F, 2))
