"""Hook Schur modules L_{p,q} and their Weyl duals K_{p,q}.

L_{p,q} lives inside Wedge^p (x) Sym_q as the image of kappa, the map that
extracts the rightmost wedge factor and multiplies it into the symmetric
part. K_{p,q} lives inside Wedge^p (x) D_q as the image of eta, which does
the same with the divided power contraction. Standard basis vectors carry
two index lists, written l_{a;b} and k_{a;b}: for L the list a names the
wedge x_{a_1}^...^x_{a_{p+1}} and b the symmetric monomial of degree q-1,
subject to a_1 <= b_1; for K the list a names the complementary dual wedge
applied to the orientation form and b the divided monomial of degree q+1,
subject to b_1 < a_1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, List, NamedTuple, Optional, Tuple

from .exactbase import (Poly, SparseMatrix, grid_inverse, grid_rref,
                        poly_add, poly_const, poly_one, poly_scale)
from .multilinear import (DivMonomial, ExtMonomial, SymMonomial, dual_contract_ext,
                          ext_basis, sym_basis)


class HookIndex(NamedTuple):
    kind: str
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    d: int
    p: int
    q: int

    def label(self) -> str:
        head = "l" if self.kind == "L" else "k"
        return "%s(%s;%s)" % (head,
                              ",".join(str(i) for i in self.a),
                              ",".join(str(i) for i in self.b))


HookVector = Dict[HookIndex, Poly]


def b_to_exps(b: Tuple[int, ...], d: int) -> SymMonomial:
    out = [0] * d
    for i in b:
        out[i - 1] += 1
    return tuple(out)


def exps_to_b(m: SymMonomial) -> Tuple[int, ...]:
    out = []
    for i, e in enumerate(m, start=1):
        out.extend([i] * e)
    return tuple(out)


def rank_formula(kind: str, d: int, p: int, q: int) -> int:
    if kind == "L":
        return comb(d + q - 1, p + q) * comb(p + q - 1, p)
    if kind == "K":
        return comb(d + q, p) * comb(d + q - p - 1, q)
    raise ValueError("kind must be 'L' or 'K'")


@lru_cache(maxsize=None)
def hook_basis(kind: str, d: int, p: int, q: int) -> Tuple[HookIndex, ...]:
    """Standard basis indices, lexicographic on the concatenation (a;b)."""
    out = []
    if kind == "L":
        if q < 1:
            raise ValueError("L_{p,q} needs q >= 1")
        for a in combinations(range(1, d + 1), p + 1):
            for b in combinations_with_replacement(range(1, d + 1), q - 1):
                if b and a[0] > b[0]:
                    continue
                out.append(HookIndex("L", a, b, d, p, q))
    elif kind == "K":
        for a in combinations(range(1, d + 1), d - p - 1):
            for b in combinations_with_replacement(range(1, d + 1), q + 1):
                if a and b[0] >= a[0]:
                    continue
                out.append(HookIndex("K", a, b, d, p, q))
    else:
        raise ValueError("kind must be 'L' or 'K'")
    if len(out) != rank_formula(kind, d, p, q):
        raise AssertionError("basis count mismatch for %s(%d,%d,%d)" % (kind, d, p, q))
    return tuple(out)


def kappa_pairs(t: ExtMonomial, m: SymMonomial) -> List[Tuple[int, ExtMonomial, SymMonomial]]:
    """kappa(x_t (x) x^m): extract the rightmost factor with signs (-1)^(a-i)."""
    a = len(t)
    out = []
    for i, v in enumerate(t):
        sign = 1 if (a - 1 - i) % 2 == 0 else -1
        mm = list(m)
        mm[v - 1] += 1
        out.append((sign, t[:i] + t[i + 1:], tuple(mm)))
    return out


def eta_pairs(t: ExtMonomial, w: DivMonomial) -> List[Tuple[int, ExtMonomial, DivMonomial]]:
    """eta(x_t (x) x*^(w)), divided power contraction in place of multiplication."""
    a = len(t)
    out = []
    for i, v in enumerate(t):
        if w[v - 1] == 0:
            continue
        sign = 1 if (a - 1 - i) % 2 == 0 else -1
        ww = list(w)
        ww[v - 1] -= 1
        out.append((sign, t[:i] + t[i + 1:], tuple(ww)))
    return out


@lru_cache(maxsize=None)
def l_ambient(idx: HookIndex) -> Tuple[Tuple[ExtMonomial, SymMonomial, int], ...]:
    """Ambient vector of l_{a;b} in Wedge^p (x) Sym_q, integer coefficients."""
    m = b_to_exps(idx.b, idx.d)
    acc: Dict[Tuple[ExtMonomial, SymMonomial], int] = {}
    for sign, t, mm in kappa_pairs(idx.a, m):
        key = (t, mm)
        acc[key] = acc.get(key, 0) + sign
    return tuple((t, mm, c) for (t, mm), c in acc.items() if c)


@lru_cache(maxsize=None)
def k_ambient(idx: HookIndex) -> Tuple[Tuple[ExtMonomial, DivMonomial, int], ...]:
    """Ambient vector of k_{a;b} in Wedge^p (x) D_q, integer coefficients."""
    d = idx.d
    full = tuple(range(1, d + 1))
    got = dual_contract_ext(idx.a, full)
    if got is None:
        raise AssertionError("complement contraction vanished")
    sgn, c = got
    w = b_to_exps(idx.b, d)
    acc: Dict[Tuple[ExtMonomial, DivMonomial], int] = {}
    for sign, t, ww in eta_pairs(c, w):
        key = (t, ww)
        acc[key] = acc.get(key, 0) + sgn * sign
    return tuple((t, ww, cf) for (t, ww), cf in acc.items() if cf)


def ambient_basis(d: int, p: int, q: int) -> List[Tuple[ExtMonomial, SymMonomial]]:
    """Pairs (wedge, monomial) ordering the ambient space Wedge^p (x) Sym_q."""
    return [(t, m) for t in ext_basis(d, p) for m in sym_basis(d, q)]


def kappa_matrix(d: int, p: int, q: int) -> SparseMatrix:
    """Ambient matrix of kappa: Wedge^p (x) Sym_q -> Wedge^(p-1) (x) Sym_(q+1)."""
    src = ambient_basis(d, p, q)
    tgt = ambient_basis(d, p - 1, q + 1)
    tpos = {pair: i for i, pair in enumerate(tgt)}
    M = SparseMatrix(len(tgt), len(src))
    for j, (t, m) in enumerate(src):
        for sign, tt, mm in kappa_pairs(t, m):
            i = tpos[(tt, mm)]
            cur = M.entry(i, j)
            M.set_entry(i, j, poly_add(cur, poly_const(sign)))
    return M


def eta_matrix(d: int, p: int, q: int) -> SparseMatrix:
    """Ambient matrix of eta: Wedge^p (x) D_q -> Wedge^(p-1) (x) D_(q-1)."""
    src = ambient_basis(d, p, q)
    tgt = ambient_basis(d, p - 1, q - 1)
    tpos = {pair: i for i, pair in enumerate(tgt)}
    M = SparseMatrix(len(tgt), len(src))
    for j, (t, w) in enumerate(src):
        for sign, tt, ww in eta_pairs(t, w):
            i = tpos[(tt, ww)]
            cur = M.entry(i, j)
            M.set_entry(i, j, poly_add(cur, poly_const(sign)))
    return M


def straighten_L(t: ExtMonomial, m: SymMonomial, _depth: int = 0) -> HookVector:
    """Rewrite kappa(x_t (x) x^m) in the standard basis, coefficients +-1.

    Recursive rewrite driven by the kappa.kappa = 0 relation; the support
    minimum of m strictly increases into standard position in one step.
    """
    if _depth > len(t) + sum(m) + 2:
        raise AssertionError("straightening failed to terminate")
    d = len(m)
    p = len(t) - 1
    q = sum(m) + 1
    support = [i for i in range(1, d + 1) if m[i - 1] > 0]
    if not support or t[0] <= support[0]:
        idx = HookIndex("L", t, exps_to_b(m), d, p, q)
        return {idx: poly_one()}
    b1 = support[0]
    u = (b1,) + t
    mth = list(m)
    mth[b1 - 1] -= 1
    out: HookVector = {}
    for pos in range(1, len(u)):
        # term (-1)^i for extraction of u_{i}, i = pos+1 in 1-based counting
        sign = 1 if (pos + 1) % 2 == 0 else -1
        rest = u[:pos] + u[pos + 1:]
        mm = list(mth)
        mm[u[pos] - 1] += 1
        part = straighten_L(rest, tuple(mm), _depth + 1)
        for k, v in part.items():
            s = poly_add(out.get(k, {}), poly_scale(v, sign))
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def straighten_K(a: ExtMonomial, w: DivMonomial, _depth: int = 0) -> HookVector:
    """Rewrite eta((x*_a)(omega) (x) x*^(w)) in the standard basis.

    a is the complementary index list of the would-be k_{a;b}; one rewrite
    against the eta.eta = 0 relation reaches standard form.
    """
    if _depth > len(w) + sum(w) + 2:
        raise AssertionError("straightening failed to terminate")
    d = len(w)
    p = d - len(a) - 1
    q = sum(w) - 1
    support = [i for i in range(1, d + 1) if w[i - 1] > 0]
    if not support:
        raise ValueError("zero divided monomial")
    if not a or support[0] < a[0]:
        idx = HookIndex("K", a, exps_to_b(w), d, p, q)
        return {idx: poly_one()}
    a1 = a[0]
    ac = a[1:]
    wp = list(w)
    wp[a1 - 1] += 1
    full = tuple(range(1, d + 1))
    sgn0 = dual_contract_ext(a, full)[0]
    _, c = dual_contract_ext(ac, full)
    i0 = c.index(a1) + 1
    out: HookVector = {}
    for i, ci in enumerate(c, start=1):
        if ci == a1 or wp[ci - 1] == 0:
            continue
        a2 = tuple(sorted(ac + (ci,)))
        sgn_i = dual_contract_ext(a2, full)[0]
        ww = list(wp)
        ww[ci - 1] -= 1
        coef = -sgn0 * sgn_i * (1 if (i0 - i) % 2 == 0 else -1)
        part = straighten_K(a2, tuple(ww), _depth + 1)
        for k, v in part.items():
            s = poly_add(out.get(k, {}), poly_scale(v, coef))
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def _basis_solver(kind: str, d: int, p: int, q: int):
    """Pivot coordinates and inverse block used to express ambient vectors
    in the standard basis. Returns (pivot keys, inverse rows, basis)."""
    basis = hook_basis(kind, d, p, q)
    amb = l_ambient if kind == "L" else k_ambient
    coords: Dict[Tuple[ExtMonomial, Tuple[int, ...]], int] = {}
    cols = []
    for idx in basis:
        col = {}
        for t, m, cf in amb(idx):
            col[(t, m)] = cf
        cols.append(col)
    keys = sorted({k for col in cols for k in col})
    kpos = {k: i for i, k in enumerate(keys)}
    # transpose grid: rows are basis elements, columns ambient coordinates
    grid = [[Fraction(0)] * len(keys) for _ in basis]
    for j, col in enumerate(cols):
        for k, cf in col.items():
            grid[j][kpos[k]] = Fraction(cf)
    _, pivots = grid_rref(grid)
    if len(pivots) != len(basis):
        raise AssertionError("standard basis is not independent")
    pivot_keys = [keys[c] for c in pivots]
    block = [[grid[j][c] for c in pivots] for j in range(len(basis))]
    # block rows index basis vectors, columns pivot coordinates; invert
    inv = grid_inverse([[block[j][i] for j in range(len(basis))] for i in range(len(basis))])
    if inv is None:
        raise AssertionError("pivot block is singular")
    return tuple(pivot_keys), tuple(tuple(row) for row in inv), basis


def coords_in_standard_basis(kind: str, d: int, p: int, q: int,
                             ambient: Dict[Tuple[ExtMonomial, Tuple[int, ...]], Poly]
                             ) -> List[Poly]:
    """Coordinates of an ambient vector (Poly valued) in the standard basis.

    Raises ValueError if the vector is not in the span.
    """
    pivot_keys, inv, basis = _basis_solver(kind, d, p, q)
    n = len(basis)
    vp = [ambient.get(k, {}) for k in pivot_keys]
    coords: List[Poly] = []
    for j in range(n):
        acc: Poly = {}
        for i in range(n):
            cf = inv[j][i]
            if cf and vp[i]:
                acc = poly_add(acc, poly_scale(vp[i], cf))
        coords.append(acc)
    # verify: the standard combination must reproduce the ambient vector
    amb = l_ambient if kind == "L" else k_ambient
    check: Dict[Tuple[ExtMonomial, Tuple[int, ...]], Poly] = {}
    for j, idx in enumerate(basis):
        if not coords[j]:
            continue
        for t, m, cf in amb(idx):
            key = (t, m)
            add = poly_scale(coords[j], cf)
            prev = check.get(key)
            s = poly_add(prev, add) if prev else add
            if s:
                check[key] = s
            else:
                check.pop(key, None)
    keys = set(check) | set(k for k, v in ambient.items() if v)
    for k in keys:
        if check.get(k, {}) != ambient.get(k, {}):
            raise ValueError("vector is not in the module span")
    return coords
