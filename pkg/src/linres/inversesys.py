"""Macaulay inverse systems over the rationals.

An inverse system here is a divided power form phi of degree 2n-2 in d dual
variables, stored as a finite map from exponent vectors to rationals. The
module computes the contraction maps p_i: Sym_i -> D_{2n-2-i}, the square
catalecticant T_phi with delta = det T_phi, annihilator slices and their
explicit degree-n generators, colon ideals degree by degree, and the Hilbert
function and Betti numbers of a compressed algebra with linear resolution.

All ideal computations are degreewise linear algebra over exact rationals;
the algebras involved are Artinian with socle degree 2n-2, so finite slices
carry everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .exactbase import (Poly, SparseMatrix, det_and_adjugate, grid_det,
                        grid_kernel, grid_rank, grid_rref, mat_to_grid,
                        monomial_from, normalize_integer_vector, poly_add,
                        poly_const, poly_is_zero, poly_mul, poly_scale,
                        poly_term, xvar)
from .multilinear import SymMonomial, sym_basis, sym_index, sym_mul

Vector = List[Fraction]


@dataclass(frozen=True)
class InverseSystem:
    d: int
    n: int
    coeffs: Dict[SymMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError("d and n must be positive")
        deg = 2 * self.n - 2
        for key in self.coeffs:
            if len(key) != self.d or sum(key) != deg or min(key, default=0) < 0:
                raise ValueError("coefficient key %r is not a degree-%d exponent "
                                 "vector in %d variables" % (key, deg, self.d))
        if all(c == 0 for c in self.coeffs.values()):
            raise ValueError("inverse system must have a nonzero coefficient")

    def coefficient(self, E: SymMonomial) -> Fraction:
        return self.coeffs.get(tuple(E), Fraction(0))


@dataclass
class GradedIdealSlice:
    degree: int
    basis: List[List[Fraction]]


def structural_poly(vec: Sequence[Fraction], e: int, d: int) -> Poly:
    """Vector over the degree-e monomial basis -> polynomial in x's."""
    out: Poly = {}
    for c, m in zip(vec, sym_basis(d, e)):
        if c:
            mono = monomial_from([(xvar(i + 1), a) for i, a in enumerate(m) if a])
            out[mono] = Fraction(c)
    return out


def poly_to_vector(p: Poly, e: int, d: int) -> Vector:
    vec = [Fraction(0)] * len(sym_basis(d, e))
    for mono, c in p.items():
        exps = [0] * d
        for v, a in mono:
            if v.kind != 0:
                raise ValueError("polynomial has non-structural variables")
            exps[v.key - 1] = a
        if sum(exps) != e:
            raise ValueError("polynomial is not homogeneous of degree %d" % e)
        vec[sym_index(d, e, tuple(exps))] = c
    return vec


def p_map(phi: InverseSystem, i: int) -> SparseMatrix:
    """Contraction Sym_i -> D_{2n-2-i}; entry (w, m) is phi(m + w)."""
    top = 2 * phi.n - 2
    if not 0 <= i <= top:
        raise ValueError("need 0 <= i <= 2n-2")
    rows = sym_basis(phi.d, top - i)
    cols = sym_basis(phi.d, i)
    M = SparseMatrix(len(rows), len(cols))
    for jj, m in enumerate(cols):
        for ii, w in enumerate(rows):
            c = phi.coefficient(sym_mul(m, w))
            if c:
                M.set_entry(ii, jj, poly_const(c))
    return M


def t_matrix(phi: InverseSystem) -> SparseMatrix:
    return p_map(phi, phi.n - 1)


def delta(phi: InverseSystem) -> Fraction:
    return grid_det(mat_to_grid(t_matrix(phi)))


def in_In(phi: InverseSystem) -> bool:
    return delta(phi) != 0


def sigma_adjugate(phi: InverseSystem) -> SparseMatrix:
    """Adjugate of T_phi; T * Adj = delta * I. Column w of the adjugate is
    delta * sigma_{n-1} applied to the dual monomial w."""
    _, adj = det_and_adjugate(t_matrix(phi))
    return adj


def ann_slice(phi: InverseSystem, e: int) -> GradedIdealSlice:
    if e < 0:
        raise ValueError("degree must be nonnegative")
    dim = comb(phi.d - 1 + e, phi.d - 1)
    if e >= 2 * phi.n - 1:
        ident = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        return GradedIdealSlice(e, ident)
    grid = mat_to_grid(p_map(phi, e))
    return GradedIdealSlice(e, [[Fraction(c) for c in v] for v in grid_kernel(grid)])


def ann_generators_explicit(phi: InverseSystem) -> List[Poly]:
    """Degree-n generators of ann(phi) read off the adjugate of T_phi:
    differences x_i.(delta sigma)(w + e_i) - x_j.(delta sigma)(w + e_j) over
    weight-(n-2) vectors w, and products x_i.(delta sigma)(w) over
    weight-(n-1) vectors w with w_i = 0."""
    if delta(phi) == 0:
        raise ValueError("not a compressed inverse system")
    d, n = phi.d, phi.n
    adj = sigma_adjugate(phi)
    cols = sym_basis(d, n - 1)
    cpos = {m: j for j, m in enumerate(cols)}

    def delta_sigma(w: SymMonomial) -> Poly:
        j = cpos[w]
        out: Poly = {}
        for i, m in enumerate(cols):
            c = adj.entry(i, j)
            if c:
                mono = monomial_from([(xvar(k + 1), a) for k, a in enumerate(m) if a])
                out = poly_add(out, poly_mul(poly_term(mono, Fraction(1)), c))
        return out

    xs = [poly_term(monomial_from([(xvar(i + 1), 1)]), Fraction(1)) for i in range(d)]
    gens: List[Poly] = []
    if n >= 2:
        for w in sym_basis(d, n - 2):
            for i in range(d):
                for j in range(i + 1, d):
                    wi = list(w); wi[i] += 1
                    wj = list(w); wj[j] += 1
                    g = poly_add(poly_mul(xs[i], delta_sigma(tuple(wi))),
                                 poly_scale(poly_mul(xs[j], delta_sigma(tuple(wj))), -1))
                    if g:
                        gens.append(g)
    for w in sym_basis(d, n - 1):
        for i in range(d):
            if w[i] == 0:
                g = poly_mul(xs[i], delta_sigma(w))
                if g:
                    gens.append(g)
    return gens


def inverse_system_from_ideal(slice_: GradedIdealSlice, d: int, n: int) -> InverseSystem:
    """Recover the socle form annihilating a degree-(2n-2) ideal slice."""
    if slice_.degree != 2 * n - 2:
        raise ValueError("slice degree must be 2n-2")
    basis = sym_basis(d, 2 * n - 2)
    if slice_.basis and any(len(v) != len(basis) for v in slice_.basis):
        raise ValueError("slice vectors have the wrong length")
    grid = [[Fraction(c) for c in v] for v in slice_.basis]
    if not grid:
        grid = [[Fraction(0)] * len(basis)]
    kern = grid_kernel(grid)
    if len(kern) != 1:
        raise ValueError("not Gorenstein at this socle degree")
    coeffs = {m: Fraction(c) for m, c in zip(basis, kern[0]) if c}
    return InverseSystem(d, n, coeffs)


def _span_grid(vectors: List[Vector]) -> List[List[Fraction]]:
    return [[Fraction(c) for c in v] for v in vectors]


def generated_ideal_slices(F: Sequence[Poly], d: int, up_to: int) -> List[GradedIdealSlice]:
    """Degreewise bases of the homogeneous ideal generated by F."""
    degs = []
    for f in F:
        if poly_is_zero(f):
            continue
        terms = {sum(a for _, a in mono) for mono in f}
        if len(terms) != 1:
            raise ValueError("generators must be homogeneous")
        degs.append((next(iter(terms)), f))
    out = []
    for e in range(up_to + 1):
        vectors: List[Vector] = []
        for df, f in degs:
            if df > e:
                continue
            for m in sym_basis(d, e - df):
                xm = poly_term(monomial_from(
                    [(xvar(i + 1), a) for i, a in enumerate(m) if a]), Fraction(1))
                vectors.append(poly_to_vector(poly_mul(xm, f), e, d))
        if vectors:
            rref, pivots = grid_rref(_span_grid(vectors))
            basis = [[Fraction(c) for c in normalize_integer_vector(rref[i])]
                     for i in range(len(pivots))]
        else:
            basis = []
        out.append(GradedIdealSlice(e, basis))
    return out


def colon_ideal_slices(F: Sequence[Poly], g: Poly, up_to: int) -> List[GradedIdealSlice]:
    """Degreewise bases of (F) : g, computed as the h with h*g inside the
    corresponding slice of (F)."""
    if poly_is_zero(g):
        raise ValueError("colon by the zero polynomial")
    gdegs = {sum(a for _, a in mono) for mono in g}
    if len(gdegs) != 1:
        raise ValueError("colon divisor must be homogeneous")
    dg = next(iter(gdegs))
    d = 0
    for f in list(F) + [g]:
        for mono in f:
            for v, _ in mono:
                d = max(d, v.key)
    if d == 0:
        raise ValueError("cannot infer the ambient variable count")
    ideal = generated_ideal_slices(F, d, up_to + dg)
    out = []
    for e in range(up_to + 1):
        target = ideal[e + dg].basis
        cols_e = sym_basis(d, e)
        # functionals vanishing on the ideal slice
        if target:
            left = grid_kernel(_span_grid(target))
        else:
            dim_tgt = comb(d - 1 + e + dg, d - 1)
            left = [[Fraction(int(i == j)) for j in range(dim_tgt)]
                    for i in range(dim_tgt)]
        if not left:
            dim = len(cols_e)
            out.append(GradedIdealSlice(
                e, [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]))
            continue
        # condition matrix: rows = left annihilators applied to g*monomial
        cond = []
        gm_cols = []
        for m in cols_e:
            xm = poly_term(monomial_from(
                [(xvar(i + 1), a) for i, a in enumerate(m) if a]), Fraction(1))
            gm_cols.append(poly_to_vector(poly_mul(xm, g), e + dg, d))
        for y in left:
            cond.append([sum(Fraction(yc) * col[k] for k, yc in enumerate(y))
                         for col in gm_cols])
        kern = grid_kernel(cond)
        out.append(GradedIdealSlice(e, [[Fraction(c) for c in v] for v in kern]))
    return out


def minimal_generators(slices: Sequence[GradedIdealSlice], d: int
                       ) -> List[Tuple[int, List[Vector]]]:
    """New generators per degree: a basis of [J]_e modulo P_1 * [J]_(e-1)."""
    out = []
    prev: List[Vector] = []
    prev_deg = None
    for sl in slices:
        e = sl.degree
        old_span: List[Vector] = []
        if prev_deg is not None and prev_deg == e - 1:
            for v in prev:
                p = structural_poly(v, e - 1, d)
                for i in range(d):
                    xi = poly_term(monomial_from([(xvar(i + 1), 1)]), Fraction(1))
                    old_span.append(poly_to_vector(poly_mul(xi, p), e, d))
        news = []
        pool = _span_grid(old_span)
        base_rank = grid_rank(pool) if pool else 0
        cur = base_rank
        for v in sl.basis:
            cand = pool + [[Fraction(c) for c in v]]
            r = grid_rank(cand)
            if r > cur:
                pool = cand
                cur = r
                news.append([Fraction(c) for c in v])
        if news:
            out.append((e, news))
        prev, prev_deg = sl.basis, e
    return out


def hilbert_compressed(d: int, n: int) -> List[int]:
    if n < 1:
        raise ValueError("n must be positive")
    top = 2 * n - 2
    return [min(comb(d - 1 + i, d - 1), comb(d - 1 + top - i, d - 1))
            for i in range(top + 1)]


def betti_linear(d: int, n: int, i: int) -> int:
    if not 1 <= i <= d - 1:
        raise ValueError("need 1 <= i <= d-1")
    a = Fraction(2 * n + d - 2, n + i - 1) * comb(n + d - 2, i - 1) * comb(n + d - i - 2, n - 1)
    b = (comb(d + n - 1, n + i - 1) * comb(i + n - 2, i - 1)
         - comb(d + n - 2, i - 1) * comb(d - i + n - 2, d - i))
    assert a == b, "the two Betti formulas disagree at (%d,%d,%d)" % (d, n, i)
    return int(a)
