from math import comb

import pytest

from linres.exactbase import (
    mat_is_zero,
    mat_mul,
    poly_add,
    poly_const,
    poly_one,
    rank_over_fraction_field,
)
from linres.hookmods import (
    HookIndex,
    ambient_basis,
    coords_in_standard_basis,
    eta_matrix,
    eta_pairs,
    hook_basis,
    k_ambient,
    kappa_matrix,
    kappa_pairs,
    l_ambient,
    rank_formula,
    straighten_K,
    straighten_L,
)
from linres.multilinear import dual_contract_ext, ext_basis, sym_basis


def test_hook_basis_L_shape_and_order():
    b = hook_basis("L", 3, 1, 3)
    assert len(b) == rank_formula("L", 3, 1, 3) == 15
    assert [x.label() for x in b[:4]] == [
        "l(1,2;1,1)", "l(1,2;1,2)", "l(1,2;1,3)", "l(1,2;2,2)",
    ]


def test_hook_basis_K_shape_and_order():
    bk = hook_basis("K", 3, 1, 1)
    assert [x.label() for x in bk] == [
        "k(2;1,1)", "k(2;1,2)", "k(2;1,3)",
        "k(3;1,1)", "k(3;1,2)", "k(3;1,3)", "k(3;2,2)", "k(3;2,3)",
    ]
    bk0 = hook_basis("K", 3, 0, 1)
    assert [x.label() for x in bk0] == ["k(2,3;1,1)", "k(2,3;1,2)", "k(2,3;1,3)"]
    bk2 = hook_basis("K", 3, 2, 1)
    assert [x.label() for x in bk2] == [
        "k(;1,1)", "k(;1,2)", "k(;1,3)", "k(;2,2)", "k(;2,3)", "k(;3,3)",
    ]


def test_hook_basis_sizes_match_rank_formula():
    for head, shapes in [
        ("L", [(2, 0, 2), (3, 1, 2), (3, 2, 1), (4, 1, 3)]),
        ("K", [(2, 1, 1), (3, 0, 2), (3, 2, 1), (4, 2, 2)]),
    ]:
        for d, p, q in shapes:
            assert len(hook_basis(head, d, p, q)) == rank_formula(head, d, p, q)


def test_l_ambient_pinned():
    amb = dict(((t, m), c) for t, m, c in l_ambient(HookIndex("L", (1, 2), (1, 1), 2, 1, 3)))
    assert amb == {((2,), (3, 0)): -1, ((1,), (2, 1)): 1}


def kamb(a, b, p, q):
    return dict(((t, m), c) for t, m, c in k_ambient(HookIndex("K", a, b, 3, p, q)))


def test_k_ambient_pinned_q1():
    assert kamb((), (1, 1), 2, 1) == {((2, 3), (1, 0, 0)): 1}
    assert kamb((2,), (1, 1), 1, 1) == {((3,), (1, 0, 0)): 1}
    assert kamb((2,), (1, 2), 1, 1) == {((3,), (0, 1, 0)): 1}
    assert kamb((2,), (1, 3), 1, 1) == {((3,), (0, 0, 1)): 1, ((1,), (1, 0, 0)): -1}
    assert kamb((3,), (1, 1), 1, 1) == {((2,), (1, 0, 0)): -1}
    assert kamb((3,), (1, 2), 1, 1) == {((2,), (0, 1, 0)): -1, ((1,), (1, 0, 0)): 1}
    assert kamb((3,), (1, 3), 1, 1) == {((2,), (0, 0, 1)): -1}
    assert kamb((3,), (2, 2), 1, 1) == {((1,), (0, 1, 0)): 1}
    assert kamb((3,), (2, 3), 1, 1) == {((1,), (0, 0, 1)): 1}
    assert kamb((2, 3), (1, 1), 0, 1) == {((), (1, 0, 0)): -1}
    assert kamb((2, 3), (1, 2), 0, 1) == {((), (0, 1, 0)): -1}


def test_k_ambient_pinned_q0():
    assert kamb((), (1,), 2, 0) == {((2, 3), (0, 0, 0)): 1}
    assert kamb((), (2,), 2, 0) == {((1, 3), (0, 0, 0)): -1}
    assert kamb((), (3,), 2, 0) == {((1, 2), (0, 0, 0)): 1}
    assert kamb((2,), (1,), 1, 0) == {((3,), (0, 0, 0)): 1}
    assert kamb((3,), (1,), 1, 0) == {((2,), (0, 0, 0)): -1}
    assert kamb((3,), (2,), 1, 0) == {((1,), (0, 0, 0)): 1}
    assert kamb((2, 3), (1,), 0, 0) == {((), (0, 0, 0)): -1}


def test_straighten_pinned():
    got = straighten_L((2, 3), (1, 0, 0))
    want = {
        HookIndex("L", (1, 3), (2,), 3, 1, 2): poly_one(),
        HookIndex("L", (1, 2), (3,), 3, 1, 2): poly_const(-1),
    }
    assert got == want
    got = straighten_K((1,), (1, 1, 0))
    want = {HookIndex("K", (2,), (1, 1), 3, 1, 1): poly_const(-1)}
    assert got == want


@pytest.mark.parametrize("shape", [(3, 1, 3), (3, 0, 3), (3, 2, 3), (3, 1, 2), (4, 2, 2), (2, 1, 3)])
def test_straighten_L_matches_ambient_solve(shape):
    d, p, q = shape
    for t in ext_basis(d, p + 1):
        for m in sym_basis(d, q - 1):
            sv = straighten_L(t, m)
            amb = {}
            for sign, tt, mm in kappa_pairs(t, m):
                key = (tt, mm)
                s = poly_add(amb.get(key, {}), poly_const(sign))
                if s:
                    amb[key] = s
                else:
                    amb.pop(key, None)
            coords = coords_in_standard_basis("L", d, p, q, amb)
            basis = hook_basis("L", d, p, q)
            sv2 = {basis[i]: c for i, c in enumerate(coords) if c}
            assert sv == sv2, (t, m)


@pytest.mark.parametrize("shape", [(3, 1, 1), (3, 0, 1), (3, 2, 1), (3, 1, 2), (4, 1, 1), (3, 2, 0), (3, 1, 0)])
def test_straighten_K_matches_ambient_solve(shape):
    d, p, q = shape
    omega = tuple(range(1, d + 1))
    for a in ext_basis(d, d - p - 1):
        for w in sym_basis(d, q + 1):
            sgn, c = dual_contract_ext(a, omega)
            amb = {}
            for sign, tt, ww in eta_pairs(c, w):
                key = (tt, ww)
                s = poly_add(amb.get(key, {}), poly_const(sgn * sign))
                if s:
                    amb[key] = s
                else:
                    amb.pop(key, None)
            sv = straighten_K(a, w)
            coords = coords_in_standard_basis("K", d, p, q, amb)
            basis = hook_basis("K", d, p, q)
            sv2 = {basis[i]: c for i, c in enumerate(coords) if c}
            assert sv == sv2, (a, w)


def test_ambient_basis_spans_hook_images():
    # every hook basis vector expands in the declared ambient basis
    for head, d, p, q in [("L", 3, 1, 2), ("K", 3, 1, 1)]:
        amb = ambient_basis(d, p, q)
        emb = l_ambient if head == "L" else k_ambient
        for h in hook_basis(head, d, p, q):
            for t, m, _ in emb(h):
                assert (t, m) in amb


@pytest.mark.parametrize("shape", [(3, 2, 2), (3, 1, 3), (4, 2, 1)])
def test_kappa_squares_to_zero_with_full_image(shape):
    d, p, q = shape
    k1 = kappa_matrix(d, p, q)
    k2 = kappa_matrix(d, p - 1, q + 1)
    assert mat_is_zero(mat_mul(k2, k1))
    assert int(rank_over_fraction_field(k1)) == rank_formula("L", d, p - 1, q + 1)


@pytest.mark.parametrize("shape", [(3, 2, 2), (3, 1, 2), (4, 2, 2)])
def test_eta_squares_to_zero_with_full_image(shape):
    d, p, q = shape
    e1 = eta_matrix(d, p, q)
    e2 = eta_matrix(d, p - 1, q - 1)
    assert mat_is_zero(mat_mul(e2, e1))
    assert int(rank_over_fraction_field(e1)) == rank_formula("K", d, p - 1, q - 1)


def test_rank_formula_duality():
    for d, p, q in [(3, 1, 3), (3, 0, 3), (3, 2, 3), (2, 0, 3), (2, 1, 3), (4, 1, 2), (4, 2, 5)]:
        assert rank_formula("L", d, p, q) == rank_formula("K", d, d - p - 1, q - 1)


def test_rank_formula_fills_ambient():
    # consecutive hook summands tile Wedge^p (x) Sym_q
    for d, p, q in [(3, 1, 3), (3, 2, 2), (4, 2, 2), (2, 1, 2)]:
        amb = comb(d, p) * comb(d + q - 1, q)
        assert rank_formula("L", d, p, q) + rank_formula("L", d, p - 1, q + 1) == amb
    for d, p, q in [(3, 1, 2), (3, 2, 2), (4, 2, 3)]:
        amb = comb(d, p) * comb(d + q - 1, q)
        assert rank_formula("K", d, p, q) + rank_formula("K", d, p - 1, q - 1) == amb
