"""Alternating matrices, Pfaffians, and the Buchsbaum-Eisenbud family.

H_n(x,y,z) is the (2n+1) x (2n+1) alternating matrix with x in the odd
slots of the superdiagonal, y in the even slots, and z on the antidiagonal
above the main diagonal. Its maximal order Pfaffians generate the ideal
BE_n, which has a linear resolution; the closed form for those Pfaffians
(x/y powers times the polynomials s_i), the Catalan inverse system phi_n
annihilated by BE_n, its modifications phi_{n,mu}, and the membership test
for n-th powers of linear forms are implemented here.

Everything is exact over the rationals; Pfaffians are expanded along the
first surviving row with memoization on the surviving index set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .exactbase import (Poly, SparseMatrix, STRUCTURAL, avar, monomial_from,
                        poly_add, poly_equal, poly_is_zero, poly_mul, poly_neg,
                        poly_one, poly_sub, poly_term, poly_var, poly_zero, xvar)
from .inversesys import InverseSystem

ALPHA = avar("alpha")
BETA = avar("beta")
GAMMA = avar("gamma")


@dataclass(frozen=True)
class AltMatrix:
    size: int
    entries: SparseMatrix

    def __post_init__(self):
        M = self.entries
        if M.rows != self.size or M.cols != self.size:
            raise ValueError("entry matrix does not match the declared size")
        for i in range(self.size):
            if not poly_is_zero(M.entry(i, i)):
                raise ValueError("alternating matrix has a nonzero diagonal entry")
            for j in range(i + 1, self.size):
                if not poly_equal(M.entry(j, i), poly_neg(M.entry(i, j))):
                    raise ValueError("matrix is not skew symmetric")


def _pf_recursive(M: SparseMatrix, live: Tuple[int, ...],
                  memo: Dict[Tuple[int, ...], Poly]) -> Poly:
    if not live:
        return poly_one()
    if len(live) % 2:
        return poly_zero()
    got = memo.get(live)
    if got is not None:
        return got
    i = live[0]
    rest = live[1:]
    total = poly_zero()
    for pos, j in enumerate(rest):
        e = M.entry(i, j)
        if poly_is_zero(e):
            continue
        sub = _pf_recursive(M, rest[:pos] + rest[pos + 1:], memo)
        if poly_is_zero(sub):
            continue
        term = poly_mul(e, sub)
        total = poly_add(total, term) if pos % 2 == 0 else poly_sub(total, term)
    memo[live] = total
    return total


def pfaffian(Z: AltMatrix) -> Poly:
    return _pf_recursive(Z.entries, tuple(range(Z.size)), {})


def sigma_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting the index list; 0 on a repeat."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def pfaffian_minor(Z: AltMatrix, deleted: Sequence[int]) -> Poly:
    """sigma(deleted) times the Pfaffian of Z with those rows and columns
    removed. Indices are 1-based."""
    sg = sigma_sign(deleted)
    if sg == 0:
        return poly_zero()
    gone = {k - 1 for k in deleted}
    if any(not 0 <= k < Z.size for k in gone):
        raise ValueError("deleted index out of range")
    live = tuple(i for i in range(Z.size) if i not in gone)
    pf = _pf_recursive(Z.entries, live, {})
    return pf if sg == 1 else poly_neg(pf)


def signed_maximal_pfaffians(Z: AltMatrix) -> List[Poly]:
    """The vector ((-1)^(j-1) Pf_j), annihilated by an odd alternating Z."""
    out = []
    for j in range(1, Z.size + 1):
        p = pfaffian_minor(Z, (j,))
        out.append(p if j % 2 == 1 else poly_neg(p))
    return out


def build_Hn(n: int, gens: Optional[Tuple[Poly, Poly, Poly]] = None) -> AltMatrix:
    if n < 1:
        raise ValueError("n must be at least 1")
    if gens is None:
        gens = (poly_var(xvar(1)), poly_var(xvar(2)), poly_var(xvar(3)))
    gx, gy, gz = gens
    size = 2 * n + 1
    M = SparseMatrix(size, size)

    def put(i: int, j: int, p: Poly):
        M.set_entry(i - 1, j - 1, p)
        M.set_entry(j - 1, i - 1, poly_neg(p))

    for i in range(1, 2 * n + 1):
        put(i, i + 1, gx if i % 2 == 1 else gy)
    for i in range(1, n + 1):
        put(i, 2 * n + 2 - i, gz)
    return AltMatrix(size, M)


def s_poly(i: int) -> Poly:
    """s_i = sum_j C(i-j, j) x^j y^j z^(i-2j)."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    out = poly_zero()
    for j in range(i // 2 + 1):
        mono = monomial_from([(xvar(1), j), (xvar(2), j), (xvar(3), i - 2 * j)])
        out = poly_add(out, poly_term(mono, Fraction(comb(i - j, j))))
    return out


def be_generators(n: int) -> List[Poly]:
    """B_1..B_(2n+1), the maximal order Pfaffians of H_n in closed form:
    B_i and B_(2n+2-i) are s_(i-1) times the (n+1-i)-th power of y or x,
    with the roles of x and y decided by the parity of i."""
    if n < 1:
        raise ValueError("n must be at least 1")
    B: Dict[int, Poly] = {}
    for i in range(1, n + 2):
        s = s_poly(i - 1)
        e = n + 1 - i
        xp = poly_term(monomial_from([(xvar(1), e)]), Fraction(1))
        yp = poly_term(monomial_from([(xvar(2), e)]), Fraction(1))
        if i % 2 == 0:
            B[i] = poly_mul(xp, s)
            B[2 * n + 2 - i] = poly_mul(yp, s)
        else:
            B[i] = poly_mul(yp, s)
            B[2 * n + 2 - i] = poly_mul(xp, s)
    return [B[i] for i in range(1, 2 * n + 2)]


def catalan_number(i: int) -> int:
    return comb(2 * i, i) // (i + 1)


def catalan_phi(n: int) -> InverseSystem:
    """phi_n = sum_i (-1)^i c_i x*^(n-1-i) y*^(n-1-i) z*^(2i), the socle
    form whose annihilator is BE_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    coeffs = {(n - 1 - i, n - 1 - i, 2 * i): Fraction((-1) ** i * catalan_number(i))
              for i in range(n)}
    return InverseSystem(3, n, coeffs)


def phi_mu(n: int, mu: int) -> InverseSystem:
    """phi_(n,2) = phi_n; phi_(n,1) adds x*^(2n-2); phi_(n,0) also adds
    2 y*^(2n-2). Exactly mu independent linear forms have their n-th power
    in the annihilator (for n >= 3 in characteristic zero)."""
    if mu not in (0, 1, 2):
        raise ValueError("mu must be 0, 1, or 2")
    coeffs = dict(catalan_phi(n).coeffs)
    top = 2 * n - 2
    if mu <= 1:
        key = (top, 0, 0)
        coeffs[key] = coeffs.get(key, Fraction(0)) + 1
    if mu == 0:
        key = (0, top, 0)
        coeffs[key] = coeffs.get(key, Fraction(0)) + 2
    coeffs = {k: v for k, v in coeffs.items() if v}
    return InverseSystem(3, n, coeffs)


def contract_on_system(g: Poly, phi: InverseSystem) -> Dict[Tuple[int, ...], Fraction]:
    """Coefficient table of g(phi) in the divided power basis."""
    out: Dict[Tuple[int, ...], Fraction] = {}
    for mono, c in g.items():
        a = [0] * phi.d
        for v, e in mono:
            if v.kind != STRUCTURAL:
                raise ValueError("contraction needs a polynomial in the x variables")
            a[v.key - 1] = e
        for E, cE in phi.coeffs.items():
            w = tuple(E[k] - a[k] for k in range(phi.d))
            if min(w) < 0:
                continue
            out[w] = out.get(w, Fraction(0)) + c * cE
    return {w: c for w, c in out.items() if c}


def ell_power_contraction(n: int, phi: InverseSystem) -> Dict[Tuple[int, ...], Poly]:
    """Table of ell^n(phi) for the generic form ell = alpha x + beta y +
    gamma z, keyed by divided power exponent; values are polynomials in the
    auxiliary symbols alpha, beta, gamma. The form has an n-th power in
    ann(phi) exactly at the common zeros of the table."""
    if phi.d != 3:
        raise ValueError("three variables only")
    out: Dict[Tuple[int, ...], Poly] = {}
    for a in range(n + 1):
        for b in range(n + 1 - a):
            c = n - a - b
            mult = comb(n, a) * comb(n - a, b)
            coef_mono = monomial_from([(ALPHA, a), (BETA, b), (GAMMA, c)])
            for E, cE in phi.coeffs.items():
                w = (E[0] - a, E[1] - b, E[2] - c)
                if min(w) < 0:
                    continue
                term = poly_term(coef_mono, cE * mult)
                out[w] = poly_add(out.get(w, poly_zero()), term)
    return {w: p for w, p in out.items() if not poly_is_zero(p)}


def mu_membership(phi: InverseSystem, ell: Poly, n: int) -> bool:
    """True exactly when ell^n annihilates phi."""
    power = poly_one()
    for _ in range(n):
        power = poly_mul(power, ell)
    return not contract_on_system(power, phi)
