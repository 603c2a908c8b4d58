"""Frobenius superalgebra construction, derived data, and morphism checks."""

import random
from fractions import Fraction

import pytest

from awpa import linalg
from awpa.errors import (
    BadParams,
    DegenerateTrace,
    GradingViolation,
    NoUnit,
    NotAssociative,
)
from awpa.frobenius import (
    FrobAlg,
    check_frobenius_morphism,
    clifford_algebra,
    cyclic_group_algebra,
    dual_numbers_algebra,
    group_algebra,
    opposite_algebra,
    parse_alg_elem,
    symmetric_group_algebra,
    taft_algebra,
    trivial_algebra,
)
from awpa.scalars import root_of_unity

ALL_BUILTINS = [
    trivial_algebra,
    clifford_algebra,
    dual_numbers_algebra,
    lambda: cyclic_group_algebra(2),
    lambda: cyclic_group_algebra(3),
    lambda: taft_algebra(2),
    lambda: taft_algebra(3),
    lambda: symmetric_group_algebra(3),
]


def test_trivial():
    F = trivial_algebra()
    assert (F.dim, F.theta, F.delta) == (1, 1, 0)
    assert F.dual_basis()[0] == F.unit_elem()


def test_clifford():
    F = clifford_algebra()
    c = F.from_label("c")
    assert F.mul(c, c) == F.unit_elem()
    assert F.psi(c) == -c
    assert F.theta == 2
    # dual basis: 1^vee = 1, c^vee = c
    duals = F.dual_basis()
    assert duals[0] == F.unit_elem()
    assert duals[1] == c


def test_dual_numbers():
    F = dual_numbers_algebra()
    z = F.from_label("z")
    assert F.mul(z, z).is_zero()
    assert F.delta == 2
    duals = F.dual_basis()
    assert duals[0] == z and duals[1] == F.unit_elem()
    assert F.theta == 1


def test_cyclic_group():
    F = cyclic_group_algebra(2)
    assert F.dim == 2 and F.theta == 1
    g = F.from_label("g")
    assert F.mul(g, g) == F.unit_elem()


def test_taft():
    q = 3
    F = taft_algebra(q)
    g, y = F.from_label("g"), F.from_label("y")
    omega = root_of_unity(q)
    assert F.mul(g, F.mul(g, g)) == F.unit_elem()
    assert F.mul(y, F.mul(y, y)).is_zero()
    # yg = omega g y
    assert F.mul(y, g) == omega * F.mul(g, y)
    # psi(g) = omega g, psi(y) = y
    assert F.psi(g) == omega * g
    assert F.psi(y) == y
    assert F.theta == q
    assert F.delta == (q - 1) * 2


def test_group_algebra_validation():
    with pytest.raises(BadParams):
        group_algebra([[0, 1], [1, 1]])  # not associative / no inverse
    with pytest.raises(BadParams):
        group_algebra([[1, 0], [1, 0]])  # no identity


@pytest.mark.parametrize("make", ALL_BUILTINS)
def test_expansion_identities(make):
    """sum_b b tr(b^vee f) = f and sum_b tr(f b) b^vee = f."""
    F = make()
    rng = random.Random(F.dim)
    duals = F.dual_basis()
    for _ in range(5):
        f = F.elem([Fraction(rng.randint(-3, 3)) for _ in range(F.dim)])
        lhs = F.zero_elem()
        for i in range(F.dim):
            lhs = lhs + F.mul(duals[i], f).trace() * F.basis_elem(i)
        assert lhs == f
        rhs = F.zero_elem()
        for i in range(F.dim):
            rhs = rhs + F.mul(f, F.basis_elem(i)).trace() * duals[i]
        assert rhs == f


@pytest.mark.parametrize("make", ALL_BUILTINS)
def test_double_dual_identity(make):
    """(b^vee)^vee = (-1)^{|b|} psi^{-1}(b)."""
    F = make()
    duals = F.dual_basis()
    double_duals = F.dual_of_basis([list(d.coords) for d in duals])
    for i in range(F.dim):
        expected = F.psi(F.basis_elem(i), power=F.theta - 1)
        if F.parities[i]:
            expected = -expected
        assert double_duals[i] == expected


@pytest.mark.parametrize("make", ALL_BUILTINS)
def test_nakayama_is_algebra_automorphism(make):
    F = make()
    for i in range(F.dim):
        for j in range(F.dim):
            prod = F.mul(F.basis_elem(i), F.basis_elem(j))
            assert F.psi(prod) == F.mul(F.psi(F.basis_elem(i)), F.psi(F.basis_elem(j)))
    # psi-eigenvalues are theta-th roots of unity and the eigenbasis spans
    assert len(F.psi_eigenbasis) == F.dim
    for ev in F.psi_eigenvalues:
        assert ev ** F.theta == 1


@pytest.mark.parametrize("make", ALL_BUILTINS)
def test_opposite_algebra_nakayama(make):
    """F^op is Frobenius with the same trace and Nakayama psi^{-1}."""
    F = make()
    op = opposite_algebra(F)
    assert op.theta == F.theta
    inv = linalg.inverse(F.nakayama)
    assert op.nakayama == [[v.lift(op.conductor) for v in row] for row in inv] or (
        op.nakayama == inv
    )


def test_graded_pieces_clifford():
    F = clifford_algebra()
    even = F.graded_piece(0, fixed_only=True)
    odd = F.graded_piece(1, fixed_only=True)
    assert len(even) == 1 and even[0] == F.unit_elem()
    assert odd == []
    assert len(F.graded_piece(2, fixed_only=True)) == 1


def test_graded_pieces_trivial():
    F = trivial_algebra()
    for k in (-2, -1, 0, 1, 2):
        piece = F.graded_piece(k, fixed_only=True)
        assert len(piece) == 1


def test_graded_pieces_taft():
    # y^{m-1} lies in F_psi^{(1-m)}
    q = 3
    F = taft_algebra(q)
    y = F.from_label("y")
    y2 = F.mul(y, y)
    for m in (2, 3):
        k = 1 - m
        piece = F.graded_piece(k, fixed_only=True)
        vecs = [list(b.coords) for b in piece]
        target = [y, y2][m - 2]
        assert linalg.in_span(vecs, list(target.coords))


def test_supercenter_taft():
    # the supercenter F^(0) of the Taft algebra is spanned by 1 and y-powers
    # times nothing: g-components break centrality; just check 1 is there
    F = taft_algebra(2)
    piece = F.graded_piece(0)
    vecs = [list(b.coords) for b in piece]
    assert linalg.in_span(vecs, list(F.unit_elem().coords))


def test_build_errors():
    # non-associative: a*a = b, a*b = 1, b*a = 0 has (aa)a = 0 != 1 = a(aa)
    with pytest.raises(NotAssociative):
        FrobAlg(
            ["1", "a", "b"],
            [0, 0, 0],
            [0, 0, 0],
            [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
                [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
            ],
            [1, 0, 0],
            [1, 0, 0],
        )
    # wrong unit
    with pytest.raises(NoUnit):
        FrobAlg(["1"], [0], [0], [[[2]]], [1], [1])
    # grading violation: z * z = 1 with |z| = 2
    with pytest.raises(GradingViolation):
        FrobAlg(
            ["1", "z"],
            [0, 2],
            [0, 0],
            [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            [1, 0],
            [0, 1],
        )
    # degenerate trace: ungraded k[z]/(z^2) with tr = coefficient of 1
    with pytest.raises(DegenerateTrace):
        FrobAlg(
            ["1", "z"],
            [0, 0],
            [0, 0],
            [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
            [1, 0],
            [1, 0],
        )
    # trace not supported in top degree
    with pytest.raises(GradingViolation):
        FrobAlg(
            ["1", "z"],
            [0, 2],
            [0, 0],
            [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
            [1, 0],
            [1, 1],
        )


def test_morphism_identity_on_clifford():
    F = clifford_algebra()
    assert check_frobenius_morphism(F, F, [[1, 0], [0, 1]], anti=False)


def test_morphism_rejects_scaled_dual_numbers():
    # z -> 2z is an algebra automorphism but not trace-preserving
    F = dual_numbers_algebra()
    verdict = check_frobenius_morphism(F, F, [[1, 0], [0, 2]], anti=False)
    assert not verdict
    assert any("trace" in r for r in verdict.failures)


def test_morphism_anti_clifford():
    """Under the super opposite-multiplication convention, c -> ic (not
    c -> -c) gives the trace-preserving anti-isomorphism of Cl; the check
    verifies tau psi = psi^{-1} tau and tau(b^vee)^vee = (-1)^{|b|} tau(b)."""
    F = clifford_algebra()
    i4 = root_of_unity(4)
    assert check_frobenius_morphism(
        F, F, [[F.scalar(1), F.scalar(0)], [F.scalar(0), i4]], anti=True
    )
    assert not check_frobenius_morphism(F, F, [[1, 0], [0, -1]], anti=True)


def test_morphism_anti_symmetric_group():
    """Inversion extends to an anti-automorphism of a group algebra."""
    F = symmetric_group_algebra(3)
    from awpa import permutations as perms

    elems = perms.all_permutations(3)
    mat = [[0] * 6 for _ in range(6)]
    for i, p in enumerate(elems):
        mat[i][elems.index(perms.inverse(p))] = 1
    assert check_frobenius_morphism(F, F, mat, anti=True)


@pytest.mark.parametrize("make", ALL_BUILTINS)
def test_serialization_roundtrip(make):
    F = make()
    data = F.to_json_dict()
    G = FrobAlg.from_json_dict(data)
    assert G.basis_labels == F.basis_labels
    assert G.degrees == F.degrees
    assert G.parities == F.parities
    assert G.theta == F.theta
    assert all(
        G.struct[i][j][k] == F.struct[i][j][k]
        for i in range(F.dim)
        for j in range(F.dim)
        for k in range(F.dim)
    )
    assert G.trace_vec == F.trace_vec


def test_file_roundtrip(tmp_path):
    F = taft_algebra(3)
    path = tmp_path / "taft3.json"
    F.dump(path)
    G = FrobAlg.load(path)
    assert G.to_json_dict() == F.to_json_dict()


def test_parse_alg_elem():
    F = taft_algebra(3)
    e = parse_alg_elem(F, "2*y + 1/3*g - y*g")
    expected = (
        F.scalar(2) * F.from_label("y")
        + F.scalar(Fraction(1, 3)) * F.from_label("g")
        - F.from_label("y*g")
    )
    assert e == expected
    Cl = clifford_algebra()
    assert parse_alg_elem(Cl, "1 + c") == Cl.unit_elem() + Cl.from_label("c")
