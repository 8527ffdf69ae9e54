import random
import time
from fractions import Fraction

from linres.exactbase import (mat_equal, mat_is_zero, mat_mul, mat_to_grid,
                              mat_transpose, poly_add, poly_equal, poly_mul,
                              poly_neg, poly_var, tvar, xvar, grid_rank)
from linres.minimalize import (betti_truncation, build_generic_Gprime,
                               kernel_basis_X, minimize_complex, snake_map,
                               _delta_adjugate)
from linres.rescomplex import (GenericPhi, build_generic_G,
                               complex_bidegree_violations, specialize,
                               vertical_matrix)
from linres.inversesys import InverseSystem, delta as idelta, betti_linear
import sys

sys.path.insert(0, "tests")
from fixture_g322 import minimized_presentation

t0 = time.time()

# 1. snake at (3,2,2) against the printed column
D, Q, _ = _delta_adjugate(3, 2)
x = [poly_var(xvar(i)) for i in (1, 2, 3)]
lam = [None] * 3
for j in range(3):
    acc = {}
    for i in range(3):
        acc = poly_add(acc, poly_mul(Q.entry(j, i), x[i]))
    lam[j] = acc
# basis order (12;1),(12;2),(12;3),(13;1),(13;2),(13;3),(23;2),(23;3)
expected = [
    poly_mul(x[2], lam[0]),
    poly_mul(x[2], lam[1]),
    poly_add(poly_neg(poly_mul(x[0], lam[0])), poly_mul(x[2], lam[2])),
    poly_neg(poly_mul(x[1], lam[0])),
    poly_add(poly_mul(x[0], lam[0]), poly_neg(poly_mul(x[1], lam[1]))),
    poly_neg(poly_mul(x[1], lam[2])),
    poly_mul(x[0], lam[1]),
    poly_mul(x[0], lam[2]),
]
S = snake_map(3, 2, 2)
assert (S.rows, S.cols) == (8, 1), (S.rows, S.cols)
for i in range(8):
    assert poly_equal(S.entry(i, 0), expected[i]), i
print("snake(3,2,2) matches printed column", time.time() - t0)

# vertical o snake identically zero over the generic coefficients
V1 = vertical_matrix(3, 2, 2, 1, GenericPhi(3, 2))
assert mat_is_zero(mat_mul(V1, S))
print("vertical o snake = 0 symbolically at (3,2,2)", time.time() - t0)

# 2. kernel bases at (3,2,2) reproduce the published columns
ty2 = poly_var(tvar((0, 2, 0)))
tyz = poly_var(tvar((0, 1, 1)))
tz2 = poly_var(tvar((0, 0, 2)))

B0 = kernel_basis_X(3, 2, 2, 0)
assert (B0.columns.rows, B0.columns.cols) == (6, 5)
# g1 col: slots (1;1),(1;2),(1;3) = -tz2*Q[j,1], slot (3;3)=delta
for j in range(3):
    assert poly_equal(B0.columns.entry(j, 0), poly_neg(poly_mul(tz2, Q.entry(j, 0))))
assert poly_equal(B0.columns.entry(5, 0), D)
assert poly_equal(B0.columns.entry(3, 1), D)   # g2 delta at (2;2)
assert poly_equal(B0.columns.entry(4, 2), D)   # g3 delta at (2;3)
for j in range(3):
    assert poly_equal(B0.columns.entry(j, 3), Q.entry(j, 1))  # g4 = Q col 2
    assert poly_equal(B0.columns.entry(j, 4), Q.entry(j, 2))  # g5 = Q col 3
print("kernel_basis_X(3,2,2,0) matches published B", time.time() - t0)

B1 = kernel_basis_X(3, 2, 2, 1)
assert (B1.columns.rows, B1.columns.cols) == (8, 5)
for j in range(3):
    assert poly_equal(B1.columns.entry(j, 0), Q.entry(j, 2))        # gamma1
    assert poly_equal(B1.columns.entry(3 + j, 1), poly_neg(Q.entry(j, 1)))
    assert poly_equal(B1.columns.entry(j, 2), Q.entry(j, 1))
    assert poly_equal(B1.columns.entry(3 + j, 2), poly_neg(Q.entry(j, 2)))
assert poly_equal(B1.columns.entry(6, 3), D)
assert poly_equal(B1.columns.entry(7, 4), D)
print("kernel_basis_X(3,2,2,1) matches published B'", time.time() - t0)

B2 = kernel_basis_X(3, 2, 2, 2)
assert B2.columns.cols == 0
print("kernel_basis_X(3,2,2,2) empty", time.time() - t0)

# 3. the short generic complex against the fixture
G = build_generic_Gprime(3, 2)
d1e, d2e, d3e, De = minimized_presentation()
assert poly_equal(D, De)
assert mat_equal(G.diffs[2], d1e), "d1 mismatch"
assert mat_equal(G.diffs[1], d2e), "d2 mismatch"
assert mat_equal(G.diffs[0], d3e), "d3 mismatch"
assert complex_bidegree_violations(G) == []
print("build_generic_Gprime(3,2) matches fixture, bidegrees clean",
      time.time() - t0)

# 4. kernel bases at (3,3,3): counts and symbolic kernel membership
for p, want in ((0, 7), (1, 7), (2, 0)):
    t1 = time.time()
    bas = kernel_basis_X(3, 3, 3, p)
    assert bas.columns.cols == want, (p, bas.columns.cols)
    print("kernel_basis_X(3,3,3,%d): %d columns ok (%.1fs)"
          % (p, want, time.time() - t1))

# 5. snake at r = n and r > n for (d, n) = (3, 3)
for r in (3, 4):
    t1 = time.time()
    S3 = snake_map(3, 3, r)
    V3 = vertical_matrix(3, 3, r, 1, GenericPhi(3, 3))
    assert mat_is_zero(mat_mul(V3, S3)), r
    print("snake(3,3,%d) symbolic kernel check ok (%.1fs)" % (r, time.time() - t1))

# 6. minimization of the specialized cone at phi2 and phi3
phi2 = InverseSystem(3, 2, {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(-1)})
phi3 = InverseSystem(3, 3, {(2, 2, 0): Fraction(1), (1, 1, 2): Fraction(-1),
                            (0, 0, 4): Fraction(2)})
t1 = time.time()
C2 = specialize(build_generic_G(3, 2, 2), phi2)
M2 = minimize_complex(C2)
ranks = [m.rank for m in M2.modules]
twists = [sorted(t[0] for t in m.twists) for m in M2.modules]
print("minimized ranks at phi2:", ranks, "twists:", twists,
      "(%.1fs)" % (time.time() - t1))
assert ranks == [1, 5, 5, 1]
assert twists == [[-5], [-3] * 5, [-2] * 5, [0]]

t1 = time.time()
C3 = specialize(build_generic_G(3, 3, 3), phi3)
M3 = minimize_complex(C3)
ranks3 = [m.rank for m in M3.modules]
print("minimized ranks at phi3:", ranks3, "(%.1fs)" % (time.time() - t1))
assert ranks3 == [1, 7, 7, 1]
assert betti_linear(3, 3, 1) == 7

# already-minimal complex passes through unchanged
M2b = minimize_complex(M2)
assert [m.rank for m in M2b.modules] == ranks
for A, B in zip(M2.diffs, M2b.diffs):
    assert mat_equal(A, B)
print("idempotent on a minimal complex", time.time() - t0)

# specialized Gprime at phi2 should already be minimal with the stated ranks
GS = specialize(G, phi2)
MGS = minimize_complex(GS)
assert [m.rank for m in MGS.modules] == [1, 5, 5, 1]
for A, B in zip(GS.diffs, MGS.diffs):
    assert mat_equal(A, B)
print("specialized Gprime already minimal", time.time() - t0)

# 7. betti_truncation values
assert betti_truncation(3, 2, 2, 1) == 5
assert betti_truncation(3, 2, 2, 2) == 5
assert betti_truncation(3, 2, 2, 3) == 0
assert [betti_truncation(3, 3, 4, i) for i in (1, 2, 3)] == [14, 21, 7]
for dd in (2, 3, 4):
    for nn in (2, 3, 4):
        for i in range(1, dd):
            assert betti_truncation(dd, nn, nn, i) == betti_linear(dd, nn, i), (dd, nn, i)
print("betti_truncation spot checks ok", time.time() - t0)

# cross-check (3,3,4) via an actual minimization
t1 = time.time()
rng = random.Random(5)
while True:
    coeffs = {}
    for E in __import__("linres.multilinear", fromlist=["sym_basis"]).sym_basis(3, 4):
        c = rng.randint(-3, 3)
        if c:
            coeffs[E] = Fraction(c)
    phi = InverseSystem(3, 3, coeffs)
    if idelta(phi) != 0:
        break
C4 = specialize(build_generic_G(3, 3, 4), phi)
M4 = minimize_complex(C4)
print("minimized ranks of the r=4 cone:", [m.rank for m in M4.modules],
      "(%.1fs)" % (time.time() - t1))
assert [m.rank for m in M4.modules] == [7 + 1, 21, 14, 1]

print("ALL OK", time.time() - t0)
