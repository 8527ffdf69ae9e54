from fractions import Fraction

from linres.exactbase import (mat_to_grid, mat_transpose, mat_equal, grid_rank,
                              poly_parse, poly_str, poly_equal, poly_mul, poly_add,
                              poly_scale, grid_kernel)
from linres.inversesys import (InverseSystem, p_map, t_matrix, delta, in_In,
                               sigma_adjugate, ann_slice, ann_generators_explicit,
                               inverse_system_from_ideal, generated_ideal_slices,
                               colon_ideal_slices, minimal_generators,
                               hilbert_compressed, betti_linear, structural_poly,
                               poly_to_vector, GradedIdealSlice)
from linres.multilinear import sym_basis

phi2 = InverseSystem(3, 2, {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(-1)})
T2 = mat_to_grid(t_matrix(phi2))
print("T(phi2) =", [[str(c) for c in row] for row in T2])
print("delta(phi2) =", delta(phi2))
assert T2 == [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
assert delta(phi2) == 1

# phi3 = catalan n=3: x*^2 y*^2 - x* y* z*^2 + 2 z*^4
phi3 = InverseSystem(3, 3, {(2, 2, 0): Fraction(1), (1, 1, 2): Fraction(-1),
                            (0, 0, 4): Fraction(2)})
print("delta(phi3) =", delta(phi3))
assert in_In(phi3)

# transpose identity p_{2n-2} = p_0^T
for phi in (phi2, phi3):
    top = 2 * phi.n - 2
    assert mat_equal(p_map(phi, top), mat_transpose(p_map(phi, 0)))

# T * adj = delta * I
adj = sigma_adjugate(phi2)
prod = mat_to_grid(adj)
import itertools
Tg = T2
for i in range(3):
    for j in range(3):
        s = sum(Tg[i][k] * prod[k][j] for k in range(3))
        assert s == (delta(phi2) if i == j else 0)

# ann slice of phi2 at degree 2: should span x^2, y^2, xz, yz, xy+z^2
sl = ann_slice(phi2, 2)
assert len(sl.basis) == 5
be2 = [poly_parse(s) for s in ("x1^2", "x2^2", "x1*x3", "x2*x3", "x1*x2 + x3^2")]
vecs = [poly_to_vector(p, 2, 3) for p in be2]
assert grid_rank([[Fraction(c) for c in v] for v in sl.basis + vecs]) == 5
print("ann_slice(phi2,2) matches the five quadrics")

gens = ann_generators_explicit(phi2)
gvecs = [poly_to_vector(g, 2, 3) for g in gens]
assert grid_rank([[Fraction(c) for c in v] for v in gvecs]) == 5
assert grid_rank([[Fraction(c) for c in v] for v in gvecs + vecs]) == 5
print("explicit generators of ann(phi2) span the same slice,", len(gens), "raw gens")

gens3 = ann_generators_explicit(phi3)
sl3 = ann_slice(phi3, 3)
g3vecs = [poly_to_vector(g, 3, 3) for g in gens3]
r_expl = grid_rank([[Fraction(c) for c in v] for v in g3vecs])
r_ann = len(sl3.basis)
r_join = grid_rank([[Fraction(c) for c in v] for v in
                    g3vecs + [[Fraction(c) for c in v] for v in sl3.basis]])
print("phi3: explicit span rank", r_expl, "ann rank", r_ann, "join", r_join)
assert r_expl == r_ann == r_join

# roundtrip: ideal slice at 2n-2 -> inverse system
back = inverse_system_from_ideal(ann_slice(phi2, 2), 3, 2)
scale = None
for k, v in back.coeffs.items():
    assert phi2.coefficient(k) != 0
    s = v / phi2.coefficient(k)
    scale = s if scale is None else scale
    assert s == scale
assert set(back.coeffs) == set(phi2.coeffs)
print("from-ideal roundtrip ok (scale %s)" % scale)

# hilbert + betti
print("hilbert_compressed(3,2) =", hilbert_compressed(3, 2))
print("hilbert_compressed(3,3) =", hilbert_compressed(3, 3))
assert hilbert_compressed(3, 2) == [1, 3, 1]
assert hilbert_compressed(3, 3) == [1, 3, 6, 3, 1]
print("betti_linear(3,2,i):", [betti_linear(3, 2, i) for i in (1, 2)])
assert [betti_linear(3, 2, i) for i in (1, 2)] == [5, 5]
for d in range(2, 7):
    for n in range(1, 7):
        for i in range(1, d):
            betti_linear(d, n, i)
print("betti formulas agree for d<=6, n<=6")

# truncation: [ann]_{n+rho} = P_rho * [ann]_n for 0 <= rho <= n-2
for phi in (phi3,):
    d, n = phi.d, phi.n
    slices_n = ann_slice(phi, n)
    gens_n = [structural_poly(v, n, d) for v in slices_n.basis]
    ideal = generated_ideal_slices(gens_n, d, 2 * n - 2)
    for rho in range(0, n - 1):
        e = n + rho
        want = ann_slice(phi, e)
        got = ideal[e]
        rw = len(want.basis)
        rg = len(got.basis)
        rj = grid_rank([[Fraction(c) for c in v] for v in want.basis + got.basis])
        assert rw == rg == rj, (e, rw, rg, rj)
print("truncation identity holds for phi3")

# colon: (x^2,y^2,z^2) : (x+y+z) minimal generators
F = [poly_parse("x1^2"), poly_parse("x2^2"), poly_parse("x3^2")]
g = poly_parse("x1 + x2 + x3")
J = colon_ideal_slices(F, g, 4)
mg = minimal_generators(J, 3)
print("colon mingens by degree:", [(e, len(v)) for e, v in mg])
expect = [poly_parse(s) for s in ("x1^2", "x2^2", "x3^2",
                                  "x3*x1 - x3*x2", "x2*x1 - x2*x3")]
evecs = [poly_to_vector(p, 2, 3) for p in expect]
deg2 = [v for e, vs in mg for v in vs if e == 2]
assert len(deg2) == 5
assert grid_rank([[Fraction(c) for c in v] for v in deg2 + evecs]) == 5
print("J(2,1) = (x^2,y^2,z^2,z(x-y),y(x-z)) confirmed")

# prop equivalences on seeded random systems: delta != 0 iff
# ann_slice(phi, n-1) = 0 and ann_slice(phi, 2n-1) full
import random
rng = random.Random(11)
cnt_in = 0
for trial in range(50):
    d = 3
    n = rng.choice((2, 3))
    basis = sym_basis(d, 2 * n - 2)
    coeffs = {}
    while not any(coeffs.values()):
        coeffs = {m: Fraction(rng.randint(-3, 3)) for m in basis}
        coeffs = {m: c for m, c in coeffs.items() if c}
    phi = InverseSystem(d, n, coeffs)
    nz = delta(phi) != 0
    low = len(ann_slice(phi, n - 1).basis) == 0
    assert nz == low or n == 1
    if nz:
        cnt_in += 1
        hc = hilbert_compressed(d, n)
        for e in range(2 * n - 1):
            dimS = len(sym_basis(d, e))
            assert hc[e] == dimS - len(ann_slice(phi, e).basis), (e, hc)
print("random equivalence check ok,", cnt_in, "of 50 compressed")

print("ALL INVERSESYS CHECKS PASSED")
