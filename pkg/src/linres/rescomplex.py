"""Generic resolutions of Artinian Gorenstein algebras with linear resolutions.

Builds, over the bigraded polynomial ring with structural variables x_i in
degree (1,0) and coefficient variables t_E in degree (0,1):

  * the top strand, a Koszul-type complex on hook modules L_{p,r},
  * the bottom strand on Weyl modules K_{p,q} extended by Wedge^d,
  * the vertical comparison maps contracting a symmetric monomial into the
    generic divided-power form Phi = sum_E t_E (x) x*^(E), |E| = 2n-2,
  * the mapping cone G(r) with blocks [[h_p, 0], [v_p, -h_p']].

All matrices are expressed in the standard hook-module bases, so every
entry of a generic differential is a signed monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .exactbase import (Monomial, Poly, SparseMatrix, mat_block, mat_neg,
                        mat_substitute, monomial_from, poly_add, poly_bidegree,
                        poly_const, poly_is_zero, poly_scale, poly_term, poly_var,
                        tvar, xvar)
from .hookmods import (HookIndex, ambient_basis, b_to_exps, coords_in_standard_basis,
                       eta_pairs, hook_basis, l_ambient, k_ambient, rank_formula)
from .multilinear import SymMonomial, contract_sym_on_div, sym_basis

UNIT_LABEL = "1"
WEDGE_LABEL = "omega"

Label = Union[str, HookIndex]


@dataclass(frozen=True)
class GradedFreeModule:
    labels: Tuple[Label, ...]
    twists: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if len(self.labels) != len(self.twists):
            raise ValueError("labels and twists differ in length")

    @property
    def rank(self) -> int:
        return len(self.labels)


@dataclass
class FreeComplex:
    """modules run from the leftmost free module F_len down to F_0;
    diffs[i] is the matrix of F_(len-i) -> F_(len-i-1)."""
    modules: List[GradedFreeModule]
    diffs: List[SparseMatrix]
    meta: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.diffs) != len(self.modules) - 1:
            raise ValueError("need exactly one differential per adjacent pair")
        for i, m in enumerate(self.diffs):
            if m.cols != self.modules[i].rank or m.rows != self.modules[i + 1].rank:
                raise ValueError("differential %d has shape %dx%d, expected %dx%d"
                                 % (i, m.rows, m.cols,
                                    self.modules[i + 1].rank, self.modules[i].rank))

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def diff_into(self, position: int) -> SparseMatrix:
        """The differential landing in homological position `position`."""
        return self.diffs[self.length - 1 - position]

    def module_at(self, position: int) -> GradedFreeModule:
        return self.modules[self.length - position]


@dataclass(frozen=True)
class GenericPhi:
    """Phi = sum over degree-(2n-2) exponent vectors E of t_E (x) x*^(E)."""
    d: int
    n: int

    def support(self) -> List[SymMonomial]:
        return sym_basis(self.d, 2 * self.n - 2)

    def coefficient(self, E: SymMonomial) -> Poly:
        return poly_var(tvar(E))


def structural_monomial(e: SymMonomial) -> Poly:
    pairs = [(xvar(i + 1), a) for i, a in enumerate(e) if a]
    return poly_term(monomial_from(pairs), Fraction(1))


def _coefficient_poly(phi, E: SymMonomial) -> Poly:
    c = phi.coefficient(E)
    if isinstance(c, dict):
        return c
    return poly_const(c)


def l_module(d: int, p: int, r: int) -> GradedFreeModule:
    basis = hook_basis("L", d, p, r)
    return GradedFreeModule(tuple(basis), tuple((-r - p, 0) for _ in basis))


def k_module(d: int, p: int, n: int, r: int) -> GradedFreeModule:
    q = 2 * n - 2 - r
    basis = hook_basis("K", d, p, q)
    return GradedFreeModule(tuple(basis), tuple((-r - p, -1) for _ in basis))


def unit_module() -> GradedFreeModule:
    return GradedFreeModule((UNIT_LABEL,), ((0, 0),))


def wedge_module(d: int, n: int) -> GradedFreeModule:
    return GradedFreeModule((WEDGE_LABEL,), ((-2 * n - d + 2, -1),))


def _accumulate(amb: Dict, key, add: Poly) -> None:
    prev = amb.get(key)
    s = poly_add(prev, add) if prev else add
    if s:
        amb[key] = s
    else:
        amb.pop(key, None)


def _columns_to_matrix(columns: List[List[Poly]], rows: int) -> SparseMatrix:
    M = SparseMatrix(rows, len(columns))
    for j, col in enumerate(columns):
        for i, p in enumerate(col):
            if p:
                M.set_entry(i, j, p)
    return M


def l_differential(d: int, p: int, r: int) -> SparseMatrix:
    """Koszul differential L_{p,r} -> L_{p-1,r}: extract the left wedge factor,
    its variable becomes the ring coefficient."""
    src = hook_basis("L", d, p, r)
    cols = []
    for idx in src:
        amb: Dict[Tuple[tuple, tuple], Poly] = {}
        for t, m, c in l_ambient(idx):
            for i, v in enumerate(t):
                sign = c if i % 2 == 0 else -c
                add = poly_term(monomial_from([(xvar(v), 1)]), Fraction(sign))
                _accumulate(amb, (t[:i] + t[i + 1:], m), add)
        cols.append(coords_in_standard_basis("L", d, p - 1, r, amb))
    return _columns_to_matrix(cols, rank_formula("L", d, p - 1, r))


def psi_hat_matrix(d: int, r: int) -> SparseMatrix:
    """Rightmost map of the top strand: L_{0,r} -> R, basis monomial itself."""
    src = hook_basis("L", d, 0, r)
    M = SparseMatrix(1, len(src))
    for j, idx in enumerate(src):
        e = list(b_to_exps(idx.b, d))
        e[idx.a[0] - 1] += 1
        M.set_entry(0, j, structural_monomial(tuple(e)))
    return M


def k_differential(d: int, p: int, q: int) -> SparseMatrix:
    """Koszul differential K_{p,q} -> K_{p-1,q}."""
    src = hook_basis("K", d, p, q)
    cols = []
    for idx in src:
        amb: Dict[Tuple[tuple, tuple], Poly] = {}
        for t, w, c in k_ambient(idx):
            for i, v in enumerate(t):
                sign = c if i % 2 == 0 else -c
                add = poly_term(monomial_from([(xvar(v), 1)]), Fraction(sign))
                _accumulate(amb, (t[:i] + t[i + 1:], w), add)
        cols.append(coords_in_standard_basis("K", d, p - 1, q, amb))
    return _columns_to_matrix(cols, rank_formula("K", d, p - 1, q))


def leftmost_map(d: int, n: int, r: int) -> SparseMatrix:
    """Wedge^d -> K_{d-1,2n-2-r}: evaluate against every degree-(2n-1-r)
    monomial, the monomial itself becomes the ring coefficient."""
    q = 2 * n - 2 - r
    omega = tuple(range(1, d + 1))
    amb: Dict[Tuple[tuple, tuple], Poly] = {}
    for m in sym_basis(d, 2 * n - 1 - r):
        coeff = structural_monomial(m)
        for sign, t, w in eta_pairs(omega, m):
            _accumulate(amb, (t, w), poly_scale(coeff, sign))
    col = coords_in_standard_basis("K", d, d - 1, q, amb)
    return _columns_to_matrix([col], rank_formula("K", d, d - 1, q))


def vertical_matrix(d: int, n: int, r: int, p: int, phi) -> SparseMatrix:
    """1 (x) p_r: L_{p,r} -> K_{p,2n-2-r}, contracting the symmetric part
    into phi."""
    q = 2 * n - 2 - r
    src = hook_basis("L", d, p, r)
    support = sym_basis(d, 2 * n - 2)
    cols = []
    for idx in src:
        amb: Dict[Tuple[tuple, tuple], Poly] = {}
        for t, m, c in l_ambient(idx):
            for E in support:
                w = contract_sym_on_div(m, E)
                if w is None:
                    continue
                add = poly_scale(_coefficient_poly(phi, E), c)
                if add:
                    _accumulate(amb, (t, w), add)
        cols.append(coords_in_standard_basis("K", d, p, q, amb))
    return _columns_to_matrix(cols, rank_formula("K", d, p, q))


def build_L_complex(d: int, r: int) -> FreeComplex:
    if r < 1:
        raise ValueError("the top strand needs r >= 1")
    modules = [l_module(d, p, r) for p in range(d - 1, -1, -1)] + [unit_module()]
    diffs = [l_differential(d, p, r) for p in range(d - 1, 0, -1)]
    diffs.append(psi_hat_matrix(d, r))
    return FreeComplex(modules, diffs, {"d": d, "r": r, "kind": "L"})


def build_K_complex(d: int, n: int, r: int) -> FreeComplex:
    q = 2 * n - 2 - r
    if q < 0:
        raise ValueError("the bottom strand needs 2n-2-r >= 0")
    modules = [wedge_module(d, n)] + [k_module(d, p, n, r) for p in range(d - 1, -1, -1)]
    diffs = [leftmost_map(d, n, r)]
    diffs.extend(k_differential(d, p, q) for p in range(d - 1, 0, -1))
    return FreeComplex(modules, diffs, {"d": d, "n": n, "r": r, "kind": "K"})


def vertical_maps(d: int, n: int, r: int, phi) -> List[SparseMatrix]:
    """[v_1, ..., v_d] with v_i: L_{i-1,r} -> K_{i-1,2n-2-r}."""
    if not 1 <= r <= 2 * n - 2:
        raise ValueError("need 1 <= r <= 2n-2")
    return [vertical_matrix(d, n, r, p, phi) for p in range(0, d)]


def build_generic_G(d: int, n: int, r: int) -> FreeComplex:
    """Mapping cone of the vertical comparison, R + K_{0,2n-2-r} in position 0."""
    if not 1 <= r <= 2 * n - 2:
        raise ValueError("need 1 <= r <= 2n-2")
    q = 2 * n - 2 - r
    phi = GenericPhi(d, n)

    tops = [psi_hat_matrix(d, r)] + [l_differential(d, p, r) for p in range(1, d)]
    bots = [k_differential(d, p, q) for p in range(1, d)] + [leftmost_map(d, n, r)]
    verts = vertical_maps(d, n, r, phi)

    def G_module(p: int) -> GradedFreeModule:
        if p == 0:
            um, km = unit_module(), k_module(d, 0, n, r)
            return GradedFreeModule(um.labels + km.labels, um.twists + km.twists)
        if p == d:
            lm, wm = l_module(d, d - 1, r), wedge_module(d, n)
            return GradedFreeModule(lm.labels + wm.labels, lm.twists + wm.twists)
        lm, km = l_module(d, p - 1, r), k_module(d, p, n, r)
        return GradedFreeModule(lm.labels + km.labels, lm.twists + km.twists)

    modules = [G_module(p) for p in range(d, -1, -1)]
    diffs = []
    for p in range(d, 0, -1):
        h = tops[p - 1]
        v = verts[p - 1]
        hp = bots[p - 1]
        diffs.append(mat_block([[h, None], [v, mat_neg(hp)]]))
    return FreeComplex(modules, diffs, {"d": d, "n": n, "r": r, "generic": True})


def specialize(C: FreeComplex, phi) -> FreeComplex:
    """Substitute t_E -> phi(E) throughout; the result is singly graded."""
    d = C.meta.get("d")
    n = C.meta.get("n")
    if phi.d != d or (n is not None and phi.n != n):
        raise ValueError("inverse system has mismatched (d, n)")
    subs: Dict = {}
    for E in sym_basis(phi.d, 2 * phi.n - 2):
        subs[tvar(E)] = _coefficient_poly(phi, E)
    modules = [GradedFreeModule(m.labels, tuple((s, 0) for s, _ in m.twists))
               for m in C.modules]
    diffs = [mat_substitute(m, subs) for m in C.diffs]
    meta = dict(C.meta)
    meta["generic"] = False
    return FreeComplex(modules, diffs, meta)


def complex_bidegree_violations(C: FreeComplex) -> List[Tuple[int, int, int]]:
    """(diff index, row, col) triples where an entry's bidegree disagrees
    with the twist difference. Generic complexes check both components,
    specialized complexes only the structural one."""
    generic = bool(C.meta.get("generic", True))
    out = []
    for k, M in enumerate(C.diffs):
        src = C.modules[k]
        tgt = C.modules[k + 1]
        for (i, j), p in M.entries.items():
            if poly_is_zero(p):
                continue
            deg = poly_bidegree(p)
            # structural twists are homological (target minus source); the
            # coefficient twist counts the opposite way
            want = (tgt.twists[i][0] - src.twists[j][0],
                    src.twists[j][1] - tgt.twists[i][1])
            if deg is None:
                out.append((k, i, j))
            elif generic and deg != want:
                out.append((k, i, j))
            elif not generic and deg[0] != want[0]:
                out.append((k, i, j))
    return out
