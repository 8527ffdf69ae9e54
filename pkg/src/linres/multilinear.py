"""Symmetric, divided power and exterior monomial bookkeeping.

Monomials are plain tuples: a SymMonomial or DivMonomial is the length-d
exponent vector, an ExtMonomial is the strictly increasing tuple of 1-based
indices of the wedge factors. Canonical listing order for symmetric and
divided monomials of one degree is descending lexicographic, x1-major.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .exactbase import Poly, poly_add, poly_mul, poly_scale

SymMonomial = Tuple[int, ...]
DivMonomial = Tuple[int, ...]
ExtMonomial = Tuple[int, ...]


def sym_basis(d: int, e: int) -> List[SymMonomial]:
    """Degree-e exponent vectors in descending lex order, x1-major."""
    if d == 0:
        return [()] if e == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for c in range(left, -1, -1):
            rec(prefix + (c,), left - c, slots - 1)

    rec((), e, d)
    return out


def sym_index(d: int, e: int, m: SymMonomial) -> int:
    return sym_basis(d, e).index(m)


def ext_basis(d: int, a: int) -> List[ExtMonomial]:
    """Strictly increasing a-subsets of 1..d in ascending lex order."""
    if a < 0:
        return []
    return [tuple(c) for c in combinations(range(1, d + 1), a)]


def sym_mul(u: SymMonomial, v: SymMonomial) -> SymMonomial:
    return tuple(a + b for a, b in zip(u, v))


def sym_degree(u: SymMonomial) -> int:
    return sum(u)


def unit_vector(d: int, i: int) -> SymMonomial:
    """Exponent vector of x_i, 1-based i."""
    return tuple(1 if j == i else 0 for j in range(1, d + 1))


def contract_sym_on_div(u: SymMonomial, w: DivMonomial) -> Optional[DivMonomial]:
    """Action of x^u on the divided power basis element x*^(w).

    x^u(x*^(w)) = x*^(w-u) when the subtraction stays nonnegative, else zero
    (returned as None). No binomial factor in this direction.
    """
    out = tuple(b - a for a, b in zip(u, w))
    if any(c < 0 for c in out):
        return None
    return out


def contract_div_on_sym(w: DivMonomial, u: SymMonomial):
    """Action of x*^(w) on x^u: (prod_i C(u_i, w_i)) * x^(u-w), or None."""
    out = tuple(a - b for a, b in zip(u, w))
    if any(c < 0 for c in out):
        return None
    scalar = Fraction(1)
    for a, b in zip(u, w):
        scalar *= comb(a, b)
    return scalar, out


def ev_dual(d: int, j: int) -> List[Tuple[SymMonomial, DivMonomial]]:
    """Image of 1 under the dual evaluation Sym_j (x) D_j, as (m, m*) pairs."""
    return [(m, m) for m in sym_basis(d, j)]


def comultiply(t: ExtMonomial) -> List[Tuple[int, int, ExtMonomial]]:
    """Component Wedge^a -> Wedge^1 (x) Wedge^(a-1) of the comultiplication.

    Returns (sign, extracted index, remaining wedge) triples with the sign
    (-1)^(i+1) for extraction of the i-th factor, i starting at 1.
    """
    out = []
    for i, idx in enumerate(t):
        sign = 1 if i % 2 == 0 else -1
        out.append((sign, idx, t[:i] + t[i + 1:]))
    return out


def koszul_contract(psi_values: Sequence[Poly], t: ExtMonomial) -> Dict[ExtMonomial, Poly]:
    """Koszul differential against Psi, Psi(x_i) = psi_values[i-1]."""
    out: Dict[ExtMonomial, Poly] = {}
    for sign, idx, rest in comultiply(t):
        term = poly_scale(psi_values[idx - 1], sign)
        if not term:
            continue
        if rest in out:
            s = poly_add(out[rest], term)
            if s:
                out[rest] = s
            else:
                del out[rest]
        else:
            out[rest] = term
    return out


def ext_wedge(t1: ExtMonomial, t2: ExtMonomial) -> Optional[Tuple[int, ExtMonomial]]:
    """Wedge product of two index tuples: (sign, sorted union), None if they meet."""
    if set(t1) & set(t2):
        return None
    merged = list(t1) + list(t2)
    # count inversions of the concatenation
    inv = 0
    for i in range(len(merged)):
        for j in range(i + 1, len(merged)):
            if merged[i] > merged[j]:
                inv += 1
    return (1 if inv % 2 == 0 else -1, tuple(sorted(merged)))


def dual_contract_ext(dual_indices: ExtMonomial, t: ExtMonomial) -> Optional[Tuple[int, ExtMonomial]]:
    """Contract the dual wedge x*_{a_1}^...^x*_{a_k} against the wedge t.

    The rightmost dual factor acts first; a single x*_j sends t to
    sum_i (-1)^(i+1) [t_i = j] (t minus t_i). Returns (sign, remaining wedge)
    or None when the contraction vanishes.
    """
    sign = 1
    cur = t
    for j in reversed(dual_indices):
        hit = None
        for i, idx in enumerate(cur):
            if idx == j:
                hit = i
                break
        if hit is None:
            return None
        sign *= 1 if hit % 2 == 0 else -1
        cur = cur[:hit] + cur[hit + 1:]
    return sign, cur
