import random
from fractions import Fraction

from linres.exactbase import (SparseMatrix, grid_det, mat_to_grid, poly_const,
                              poly_equal, poly_is_zero, poly_mul, poly_neg,
                              poly_parse, poly_str)
from linres.pfafflab import (AltMatrix, be_generators, build_Hn, catalan_phi,
                             contract_on_system, ell_power_contraction,
                             mu_membership, pfaffian, pfaffian_minor, phi_mu,
                             s_poly, signed_maximal_pfaffians)
from linres.inversesys import delta, t_matrix
from linres.multilinear import sym_basis

# Pf of 2x2 and odd sizes
a = poly_parse("x1 + 2*x2")
M = SparseMatrix(2, 2)
M.set_entry(0, 1, a)
M.set_entry(1, 0, poly_neg(a))
assert poly_equal(pfaffian(AltMatrix(2, M)), a)
assert poly_is_zero(pfaffian(build_Hn(2)))  # odd size

# random alternating: Pf^2 = det, sizes 4, 6, 8
rng = random.Random(7)
for size in (4, 6, 8):
    M = SparseMatrix(size, size)
    for i in range(size):
        for j in range(i + 1, size):
            c = rng.randint(-4, 4)
            if c:
                M.set_entry(i, j, poly_const(c))
                M.set_entry(j, i, poly_const(-c))
    Z = AltMatrix(size, M)
    pf = pfaffian(Z)
    pf2 = poly_mul(pf, pf)
    det = grid_det(mat_to_grid(M))
    got = pf2.get((), Fraction(0))
    assert got == det, (size, got, det)
print("Pf^2 = det ok for sizes 4, 6, 8")

# H1, H2 printed forms
H1 = build_Hn(1)
G = [["0", "x1", "x3"], ["-x1", "0", "x2"], ["-x3", "-x2", "0"]]
for i in range(3):
    for j in range(3):
        assert poly_equal(H1.entries.entry(i, j), poly_parse(G[i][j]))
H2 = build_Hn(2)
G2 = [["0", "x1", "0", "0", "x3"],
      ["-x1", "0", "x2", "x3", "0"],
      ["0", "-x2", "0", "x1", "0"],
      ["0", "-x3", "-x1", "0", "x2"],
      ["-x3", "0", "0", "-x2", "0"]]
for i in range(5):
    for j in range(5):
        assert poly_equal(H2.entries.entry(i, j), poly_parse(G2[i][j])), (i, j)
print("H1, H2 match printed matrices")

# inner block of H3 is H2 with x and y swapped
H3 = build_Hn(3)
H2s = build_Hn(2, (poly_parse("x2"), poly_parse("x1"), poly_parse("x3")))
for i in range(5):
    for j in range(5):
        assert poly_equal(H3.entries.entry(i + 1, j + 1), H2s.entries.entry(i, j))
print("H3 inner block = H2(y,x,z)")

# s polynomials
assert poly_str(s_poly(0)) == "1"
assert poly_equal(s_poly(1), poly_parse("x3"))
assert poly_equal(s_poly(2), poly_parse("x3^2 + x1*x2"))
assert poly_equal(s_poly(3), poly_parse("x3^3 + 2*x1*x2*x3"))
for al in range(1, 11):
    lhs = poly_parse("0")
    from linres.exactbase import poly_add
    lhs = poly_add(poly_mul(poly_parse("x1*x2"), s_poly(al - 1)),
                   poly_mul(poly_parse("x3"), s_poly(al)))
    assert poly_equal(lhs, s_poly(al + 1)), al
print("s recurrence ok to 10")

# closed-form generators
B1 = be_generators(1)
assert [poly_str(b) for b in B1] == ["x2", "x3", "x1"]
B2 = be_generators(2)
assert poly_equal(B2[0], poly_parse("x2^2"))
assert poly_equal(B2[1], poly_parse("x1*x3"))
assert poly_equal(B2[2], poly_parse("x1*x2 + x3^2"))
assert poly_equal(B2[3], poly_parse("x2*x3"))
assert poly_equal(B2[4], poly_parse("x1^2"))
print("closed forms at n=1,2 ok")

# closed form equals direct Pfaffian minors
import time
for n in range(1, 6):
    t0 = time.time()
    H = build_Hn(n)
    B = be_generators(n)
    for i in range(1, 2 * n + 2):
        assert poly_equal(B[i - 1], pfaffian_minor(H, (i,))), (n, i)
    print("n=%d minors match closed form (%.2fs)" % (n, time.time() - t0))

# signed pfaffians annihilate the matrix rows (classic syzygy)
for n in (1, 2, 3):
    H = build_Hn(n)
    P = signed_maximal_pfaffians(H)
    for i in range(H.size):
        acc = poly_parse("0")
        from linres.exactbase import poly_add as padd
        for j in range(H.size):
            e = H.entries.entry(i, j)
            if not poly_is_zero(e):
                acc = padd(acc, poly_mul(e, P[j]))
        assert poly_is_zero(acc), (n, i)
print("signed Pfaffian vector is a syzygy of H_n rows")

# catalan systems
p2 = catalan_phi(2)
assert p2.coeffs == {(1, 1, 0): 1, (0, 0, 2): -1}
p3 = catalan_phi(3)
assert p3.coeffs == {(2, 2, 0): 1, (1, 1, 2): -1, (0, 0, 4): 2}
assert catalan_phi(1).coeffs == {(0, 0, 0): 1}

# phi_n annihilates BE_n generators, n <= 6
for n in range(1, 7):
    phi = catalan_phi(n)
    for g in be_generators(n):
        assert contract_on_system(g, phi) == {}, (n, poly_str(g))
print("phi_n kills BE_n for n <= 6")

# coefficient identity rows at n=3
t32 = ell_power_contraction(3, phi_mu(3, 2))
assert poly_equal(t32[(0, 0, 1)], poly_parse("2*gamma^3 - 6*alpha*beta*gamma"))
t31 = ell_power_contraction(3, phi_mu(3, 1))
print("x*-row for mu=1:", poly_str(t31[(1, 0, 0)]))
assert poly_equal(t31[(1, 0, 0)],
                  poly_parse("alpha^3 + 3*alpha*beta^2 - 3*beta*gamma^2"))

# membership
for n in range(1, 7):
    assert mu_membership(phi_mu(n, 2), poly_parse("x2"), n)
    assert mu_membership(phi_mu(n, 2), poly_parse("x1"), n)
assert not mu_membership(phi_mu(3, 1), poly_parse("x1"), 3)
assert mu_membership(phi_mu(3, 1), poly_parse("x2"), 3)
assert not mu_membership(phi_mu(4, 0), poly_parse("x3"), 4)
assert not mu_membership(phi_mu(4, 0), poly_parse("x2"), 4)
print("membership checks ok")

# M-block structure of T and nonzero delta
for n in range(2, 6):
    basis = sym_basis(3, n - 1)
    ix = basis.index((n - 1, 0, 0))
    iy = basis.index((0, n - 1, 0))
    blocks = {2: [[0, 1], [1, 0]], 1: [[1, 1], [1, 0]], 0: [[1, 1], [1, 2]]}
    for mu in (0, 1, 2):
        phi = phi_mu(n, mu)
        T = mat_to_grid(t_matrix(phi))
        got = [[T[ix][ix], T[ix][iy]], [T[iy][ix], T[iy][iy]]]
        assert got == blocks[mu], (n, mu, got)
        for k in range(len(basis)):
            if k in (ix, iy):
                continue
            assert T[ix][k] == 0 and T[iy][k] == 0, (n, mu, k)
        assert delta(phi) != 0, (n, mu)
print("T-block structure and delta != 0 for n <= 5")

print("ALL PFAFFLAB CHECKS PASSED")
