from fractions import Fraction

import pytest

from linres.exactbase import (SparseMatrix, avar, det_and_adjugate, grid_det,
                              grid_inverse, grid_kernel, grid_rank, grid_rref,
                              grid_solve, mat_block, mat_from_rows,
                              mat_identity, mat_is_zero, mat_mul, mat_scale,
                              mat_transpose, monomial_bidegree, monomial_from,
                              monomial_str, normalize_integer_vector,
                              poly_add, poly_bidegree, poly_const,
                              poly_const_value, poly_divexact, poly_equal,
                              poly_eval, poly_is_zero, poly_mul, poly_neg,
                              poly_parse, poly_str, poly_sub, poly_substitute,
                              poly_term, poly_var, poly_vars,
                              rank_over_fraction_field, tvar, xvar)


def test_monomial_canonical_order():
    m = monomial_from([(xvar(2), 1), (xvar(1), 2), (tvar((0, 1, 1)), 1)])
    assert monomial_str(m) == "x1^2*x2*t[0,1,1]"
    assert monomial_bidegree(m) == (3, 1)


def test_monomial_from_merges_repeats():
    m = monomial_from([(xvar(1), 1), (xvar(1), 2)])
    assert monomial_str(m) == "x1^3"
    assert monomial_from([(xvar(1), 0)]) == ()


def test_poly_arithmetic():
    x = poly_var(xvar(1))
    y = poly_var(xvar(2))
    p = poly_mul(poly_add(x, y), poly_sub(x, y))
    want = poly_sub(poly_mul(x, x), poly_mul(y, y))
    assert poly_equal(p, want)
    assert poly_is_zero(poly_sub(p, want))
    assert poly_equal(poly_neg(poly_neg(p)), p)


def test_poly_str_parse_round_trip():
    samples = [
        "0",
        "1",
        "-1",
        "x1^2*x2 - x3",
        "2/3*x1 + t[2,0,0]",
        "-5*x2^3 + x1*t[0,1,1]^2",
        "-1/2*x1*x2*x3",
    ]
    for s in samples:
        p = poly_parse(s)
        assert poly_str(p) == s
        assert poly_equal(poly_parse(poly_str(p)), p)


def test_poly_bidegree():
    assert poly_bidegree(poly_parse("x1^2*x2")) == (3, 0)
    assert poly_bidegree(poly_parse("t[2,0,0]")) == (0, 1)
    assert poly_bidegree({}) is None
    with pytest.raises(ValueError):
        poly_bidegree(poly_parse("x1 + x1^2"))


def test_poly_const_value():
    assert poly_const_value({}) == Fraction(0)
    assert poly_const_value(poly_const(Fraction(3, 2))) == Fraction(3, 2)
    assert poly_const_value(poly_var(xvar(1))) is None


def test_poly_divexact():
    a = poly_parse("x1^2*x2 + x1*x2^2")
    b = poly_parse("x1*x2")
    assert poly_str(poly_divexact(a, b)) == "x1 + x2"
    c = poly_parse("x1^2 - x2^2")
    d = poly_parse("x1 - x2")
    assert poly_str(poly_divexact(c, d)) == "x1 + x2"
    with pytest.raises(ValueError):
        poly_divexact(poly_parse("x1"), poly_parse("x2"))


def test_poly_substitute_and_eval():
    p = poly_parse("x1^2 + t[2,0,0]*x2")
    q = poly_substitute(p, {tvar((2, 0, 0)): poly_parse("x3")})
    assert poly_str(q) == "x1^2 + x2*x3"
    v = poly_eval(p, {xvar(1): Fraction(2), xvar(2): Fraction(3),
                      tvar((2, 0, 0)): Fraction(1, 3)})
    assert v == Fraction(5)
    assert sorted(poly_vars(p), key=repr) == sorted(
        [xvar(1), xvar(2), tvar((2, 0, 0))], key=repr)


def test_auxiliary_variables():
    p = poly_mul(poly_var(avar("alpha")), poly_var(avar("beta")))
    assert poly_str(p) == "alpha*beta"
    assert poly_bidegree(p) == (0, 0)


def test_sparse_matrix_ops():
    A = mat_from_rows([[poly_parse("x1"), 0], [1, poly_parse("x2")]])
    B = mat_from_rows([[poly_parse("x2"), 1], [0, -1]])
    P = mat_mul(A, B)
    assert poly_str(P.entry(0, 0)) == "x1*x2"
    assert poly_str(P.entry(1, 1)) == "-x2 + 1"
    assert mat_is_zero(mat_mul(A, SparseMatrix(2, 3, {})))
    T = mat_transpose(A)
    assert poly_str(T.entry(0, 1)) == "1"
    S = mat_scale(A, poly_parse("x3"))
    assert poly_str(S.entry(0, 0)) == "x1*x3"
    with pytest.raises(ValueError):
        mat_mul(A, SparseMatrix(3, 2, {}))


def test_mat_block():
    I = mat_identity(2)
    Z = SparseMatrix(2, 2, {})
    M = mat_block([[I, Z], [None, I]])
    assert M.rows == M.cols == 4
    assert poly_str(M.entry(3, 3)) == "1"
    assert poly_is_zero(M.entry(0, 2))


def test_grid_rref_and_kernel():
    g = [[Fraction(1), Fraction(2), Fraction(3)],
         [Fraction(2), Fraction(4), Fraction(6)]]
    red, pivots = grid_rref(g)
    assert pivots == [0]
    ker = grid_kernel(g)
    assert len(ker) == 2
    for v in ker:
        assert sum(g[0][j] * v[j] for j in range(3)) == 0


def test_grid_det_solve_inverse():
    g = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert grid_det(g) == 1
    inv = grid_inverse(g)
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    sol = grid_solve(g, [Fraction(3), Fraction(2)])
    assert sol == [Fraction(1), Fraction(1)]
    assert grid_rank(g) == 2
    singular = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert grid_det(singular) == 0
    assert grid_inverse(singular) is None


def test_normalize_integer_vector():
    v = [Fraction(1, 2), Fraction(-3, 4), Fraction(0)]
    assert normalize_integer_vector(v) == [2, -3, 0]
    assert normalize_integer_vector([Fraction(0)] * 3) == [0, 0, 0]


def test_det_and_adjugate_symbolic():
    M = mat_from_rows([[poly_parse("x1"), poly_parse("x2")],
                       [poly_parse("x3"), poly_parse("x1")]])
    det, adj = det_and_adjugate(M)
    assert poly_str(det) == "x1^2 - x2*x3"
    # M * adj = det * I
    P = mat_mul(M, adj)
    assert poly_equal(P.entry(0, 0), det)
    assert poly_is_zero(P.entry(0, 1))


def test_rank_over_fraction_field_modes():
    M = mat_from_rows([[poly_parse("x1"), poly_parse("x2")],
                       [poly_parse("x1*x2"), poly_parse("x2^2")]])
    r = rank_over_fraction_field(M)
    assert int(r) == 1 and r.mode == "exact"
    rp = rank_over_fraction_field(M, probabilistic=True, seed=5)
    assert int(rp) == 1
    N = mat_from_rows([[poly_parse("x1"), poly_parse("x2")],
                       [poly_parse("x2"), poly_parse("x1")]])
    assert int(rank_over_fraction_field(N)) == 2
