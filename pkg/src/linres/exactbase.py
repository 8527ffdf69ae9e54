"""Exact arithmetic layer.

Bigraded sparse polynomials with rational coefficients, sparse matrices over
them, and fraction-free exact linear algebra (kernels, ranks, determinants,
adjugates). Everything downstream builds on this module; no floats anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

Rational = Fraction

# variable kinds, ordered: structural < coefficient < auxiliary
STRUCTURAL = 0
COEFFICIENT = 1
AUXILIARY = 2


class VarId(NamedTuple):
    """A ring variable.

    kind STRUCTURAL: key is the 1-based index i of x_i, bidegree (1,0).
    kind COEFFICIENT: key is the exponent tuple E of t_{x^E}, bidegree (0,1).
    kind AUXILIARY: key is a name string, bidegree (0,0).
    """

    kind: int
    key: object


def xvar(i: int) -> VarId:
    if i < 1:
        raise ValueError("structural variables are 1-indexed")
    return VarId(STRUCTURAL, i)


def tvar(exps: Sequence[int]) -> VarId:
    return VarId(COEFFICIENT, tuple(int(e) for e in exps))


def avar(name: str) -> VarId:
    return VarId(AUXILIARY, name)


def var_sort_key(v: VarId):
    # coefficient variables follow the same descending-lex listing used for
    # monomial bases, so t_{x^E} with E lex-larger comes first
    if v.kind == COEFFICIENT:
        return (COEFFICIENT, tuple(-e for e in v.key))
    return (v.kind, v.key)


# a monomial is a tuple of (VarId, positive exponent) pairs sorted by
# var_sort_key; the empty tuple is 1
Monomial = Tuple[Tuple[VarId, int], ...]

_SENTINEL = ((9,), 0)


def monomial_from(pairs) -> Monomial:
    merged: Dict[VarId, int] = {}
    for v, e in pairs:
        if e:
            merged[v] = merged.get(v, 0) + e
    items = [(v, e) for v, e in merged.items() if e != 0]
    if any(e < 0 for _, e in items):
        raise ValueError("negative exponent")
    items.sort(key=lambda it: var_sort_key(it[0]))
    return tuple(items)


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return monomial_from(list(m1) + list(m2))


def monomial_key(m: Monomial):
    """Lex key, x1-major, larger exponents first. Smaller key = leading."""
    return tuple((var_sort_key(v), -e) for v, e in m) + (_SENTINEL,)


def monomial_bidegree(m: Monomial) -> Tuple[int, int]:
    s = sum(e for v, e in m if v.kind == STRUCTURAL)
    t = sum(e for v, e in m if v.kind == COEFFICIENT)
    return (s, t)


def monomial_str(m: Monomial) -> str:
    parts = []
    for v, e in m:
        if v.kind == STRUCTURAL:
            tok = "x%d" % v.key
        elif v.kind == COEFFICIENT:
            tok = "t[%s]" % ",".join(str(c) for c in v.key)
        else:
            tok = str(v.key)
        if e != 1:
            tok += "^%d" % e
        parts.append(tok)
    return "*".join(parts) if parts else "1"


# a polynomial is a dict Monomial -> Fraction with no zero values stored
Poly = Dict[Monomial, Fraction]


def poly_zero() -> Poly:
    return {}


def poly_const(c) -> Poly:
    c = Fraction(c)
    return {(): c} if c else {}


def poly_one() -> Poly:
    return {(): Fraction(1)}


def poly_var(v: VarId, exp: int = 1, coef=1) -> Poly:
    c = Fraction(coef)
    if not c:
        return {}
    return {monomial_from([(v, exp)]): c}


def poly_term(m: Monomial, c) -> Poly:
    c = Fraction(c)
    return {m: c} if c else {}


def poly_copy(p: Poly) -> Poly:
    return dict(p)


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, Fraction(0)) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_neg(a: Poly) -> Poly:
    return {m: -c for m, c in a.items()}


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, c) -> Poly:
    c = Fraction(c)
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = monomial_mul(m1, m2)
            s = out.get(m, Fraction(0)) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return poly_add(a, b)
    if op == "sub":
        return poly_sub(a, b)
    if op == "mul":
        return poly_mul(a, b)
    raise ValueError("unknown op %r" % op)


def poly_is_zero(p: Poly) -> bool:
    return not p


def poly_equal(a: Poly, b: Poly) -> bool:
    return a == b


def poly_const_value(p: Poly) -> Optional[Fraction]:
    """Value if p is constant, else None."""
    if not p:
        return Fraction(0)
    if len(p) == 1 and () in p:
        return p[()]
    return None


def is_bihomogeneous(p: Poly) -> bool:
    degs = {monomial_bidegree(m) for m in p}
    return len(degs) <= 1


def poly_bidegree(p: Poly) -> Optional[Tuple[int, int]]:
    """Common (structural, coefficient) bidegree. None for 0, error if mixed."""
    if not p:
        return None
    degs = {monomial_bidegree(m) for m in p}
    if len(degs) != 1:
        raise ValueError("polynomial is not bihomogeneous")
    return degs.pop()


def poly_vars(p: Poly) -> List[VarId]:
    seen = set()
    for m in p:
        for v, _ in m:
            seen.add(v)
    return sorted(seen, key=var_sort_key)


def poly_substitute(p: Poly, subs: Dict[VarId, Poly]) -> Poly:
    """Substitute polynomials for some variables, rest untouched."""
    out: Poly = {}
    for m, c in p.items():
        term: Poly = {(): c}
        rest = []
        for v, e in m:
            if v in subs:
                rep = subs[v]
                for _ in range(e):
                    term = poly_mul(term, rep)
                    if not term:
                        break
            else:
                rest.append((v, e))
            if not term:
                break
        if not term:
            continue
        if rest:
            term = poly_mul(term, {monomial_from(rest): Fraction(1)})
        out = poly_add(out, term)
    return out


def poly_eval(p: Poly, assign: Dict[VarId, Fraction]) -> Fraction:
    total = Fraction(0)
    for m, c in p.items():
        v = c
        for var, e in m:
            v *= assign[var] ** e
        total += v
    return total


def poly_sorted_terms(p: Poly) -> List[Tuple[Monomial, Fraction]]:
    def term_key(item):
        m = item[0]
        s, t = monomial_bidegree(m)
        a = sum(e for v, e in m if v.kind == AUXILIARY)
        return (-s, -t, -a, monomial_key(m))

    return sorted(p.items(), key=term_key)


def poly_str(p: Poly) -> str:
    if not p:
        return "0"
    chunks = []
    for i, (m, c) in enumerate(poly_sorted_terms(p)):
        neg = c < 0
        c = abs(c)
        if m == ():
            body = str(c)
        elif c == 1:
            body = monomial_str(m)
        else:
            body = "%s*%s" % (c, monomial_str(m))
        if i == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append((" - " if neg else " + ") + body)
    return "".join(chunks)


def _parse_token(tok: str) -> Poly:
    # token: coefficient, variable power, or product chain joined by '*'
    factors = tok.split("*")
    out = poly_one()
    for f in factors:
        f = f.strip()
        if not f:
            raise ValueError("empty factor in %r" % tok)
        exp = 1
        if "^" in f:
            f, es = f.split("^", 1)
            exp = int(es)
        if f.startswith("t["):
            if not f.endswith("]"):
                raise ValueError("bad coefficient variable %r" % f)
            exps = tuple(int(s) for s in f[2:-1].split(","))
            out = poly_mul(out, poly_var(tvar(exps), exp))
        elif f.startswith("x") and f[1:].isdigit():
            out = poly_mul(out, poly_var(xvar(int(f[1:])), exp))
        elif f and (f[0].isdigit() or f[0] == "-" or "/" in f):
            out = poly_scale(out, Fraction(f) ** exp)
        elif f.isidentifier():
            out = poly_mul(out, poly_var(avar(f), exp))
        else:
            raise ValueError("cannot parse factor %r" % f)
    return out


def poly_parse(s: str) -> Poly:
    """Inverse of poly_str."""
    s = s.strip()
    if s == "0":
        return {}
    s = s.replace(" - ", " + -")
    terms = s.split(" + ")
    out: Poly = {}
    for t in terms:
        t = t.strip()
        sign = 1
        while t.startswith("-"):
            t = t[1:].strip()
            sign = -sign
        p = _parse_token(t)
        if sign < 0:
            p = poly_neg(p)
        out = poly_add(out, p)
    return out


def poly_divexact(p: Poly, q: Poly) -> Poly:
    """Exact division p/q. Raises ValueError when q does not divide p."""
    if not q:
        raise ValueError("division by zero polynomial")
    if not p:
        return {}
    qlt = min(q, key=monomial_key)
    qc = q[qlt]
    qset = dict(q)
    rem = dict(p)
    quot: Poly = {}
    while rem:
        plt = min(rem, key=monomial_key)
        # divide leading monomials
        qd = dict(qlt)
        mm = []
        ok = True
        for v, e in plt:
            eq = qd.pop(v, 0)
            if e < eq:
                ok = False
                break
            if e > eq:
                mm.append((v, e - eq))
        if not ok or qd:
            raise ValueError("inexact polynomial division")
        m = monomial_from(mm)
        c = rem[plt] / qc
        quot[m] = c
        for qm, qcf in qset.items():
            key = monomial_mul(qm, m)
            s = rem.get(key, Fraction(0)) - qcf * c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return quot


@dataclass
class SparseMatrix:
    """Sparse matrix with Poly entries, zero entries omitted."""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Poly] = field(default_factory=dict)

    def entry(self, r: int, c: int) -> Poly:
        return self.entries.get((r, c), {})

    def set_entry(self, r: int, c: int, p: Poly):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("entry (%d,%d) out of range" % (r, c))
        if p:
            self.entries[(r, c)] = p
        else:
            self.entries.pop((r, c), None)

    def clean(self):
        dead = [k for k, v in self.entries.items() if not v]
        for k in dead:
            del self.entries[k]
        return self


def mat_from_rows(rows_data: Sequence[Sequence]) -> SparseMatrix:
    """Build from dense row data; entries may be Poly, Fraction or int."""
    r = len(rows_data)
    c = len(rows_data[0]) if r else 0
    M = SparseMatrix(r, c)
    for i, row in enumerate(rows_data):
        if len(row) != c:
            raise ValueError("ragged rows")
        for j, val in enumerate(row):
            p = val if isinstance(val, dict) else poly_const(val)
            if p:
                M.entries[(i, j)] = p
    return M


def mat_identity(n: int) -> SparseMatrix:
    M = SparseMatrix(n, n)
    for i in range(n):
        M.entries[(i, i)] = poly_one()
    return M


def mat_transpose(M: SparseMatrix) -> SparseMatrix:
    out = SparseMatrix(M.cols, M.rows)
    for (r, c), p in M.entries.items():
        out.entries[(c, r)] = dict(p)
    return out


def mat_mul(A: SparseMatrix, B: SparseMatrix) -> SparseMatrix:
    if A.cols != B.rows:
        raise ValueError("shape mismatch %dx%d * %dx%d" % (A.rows, A.cols, B.rows, B.cols))
    out = SparseMatrix(A.rows, B.cols)
    bycol: Dict[int, List[Tuple[int, Poly]]] = {}
    for (r, c), p in B.entries.items():
        bycol.setdefault(r, []).append((c, p))
    acc: Dict[Tuple[int, int], Poly] = {}
    for (r, k), p in A.entries.items():
        for c, q in bycol.get(k, ()):
            prod = poly_mul(p, q)
            if not prod:
                continue
            key = (r, c)
            if key in acc:
                acc[key] = poly_add(acc[key], prod)
            else:
                acc[key] = prod
    out.entries = {k: v for k, v in acc.items() if v}
    return out


def mat_add(A: SparseMatrix, B: SparseMatrix) -> SparseMatrix:
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ValueError("shape mismatch")
    out = SparseMatrix(A.rows, A.cols, {k: dict(v) for k, v in A.entries.items()})
    for k, p in B.entries.items():
        s = poly_add(out.entries.get(k, {}), p)
        if s:
            out.entries[k] = s
        else:
            out.entries.pop(k, None)
    return out


def mat_neg(A: SparseMatrix) -> SparseMatrix:
    return SparseMatrix(A.rows, A.cols, {k: poly_neg(v) for k, v in A.entries.items()})


def mat_scale(A: SparseMatrix, p: Poly) -> SparseMatrix:
    out = SparseMatrix(A.rows, A.cols)
    for k, v in A.entries.items():
        prod = poly_mul(v, p)
        if prod:
            out.entries[k] = prod
    return out


def mat_equal(A: SparseMatrix, B: SparseMatrix) -> bool:
    if (A.rows, A.cols) != (B.rows, B.cols):
        return False
    keys = set(A.entries) | set(B.entries)
    return all(A.entry(*k) == B.entry(*k) for k in keys)


def mat_is_zero(A: SparseMatrix) -> bool:
    return all(not v for v in A.entries.values())


def mat_block(blocks: Sequence[Sequence[Optional[SparseMatrix]]]) -> SparseMatrix:
    """Assemble a block matrix; None blocks are zero (shapes inferred)."""
    nbr = len(blocks)
    nbc = len(blocks[0])
    rh = [None] * nbr
    cw = [None] * nbc
    for i in range(nbr):
        for j in range(nbc):
            b = blocks[i][j]
            if b is None:
                continue
            if rh[i] is None:
                rh[i] = b.rows
            elif rh[i] != b.rows:
                raise ValueError("inconsistent block heights")
            if cw[j] is None:
                cw[j] = b.cols
            elif cw[j] != b.cols:
                raise ValueError("inconsistent block widths")
    if any(h is None for h in rh) or any(w is None for w in cw):
        raise ValueError("cannot infer zero block shape")
    roff = [0]
    for h in rh:
        roff.append(roff[-1] + h)
    coff = [0]
    for w in cw:
        coff.append(coff[-1] + w)
    out = SparseMatrix(roff[-1], coff[-1])
    for i in range(nbr):
        for j in range(nbc):
            b = blocks[i][j]
            if b is None:
                continue
            for (r, c), p in b.entries.items():
                out.entries[(roff[i] + r, coff[j] + c)] = dict(p)
    return out


def mat_substitute(M: SparseMatrix, subs: Dict[VarId, Poly]) -> SparseMatrix:
    out = SparseMatrix(M.rows, M.cols)
    for k, p in M.entries.items():
        q = poly_substitute(p, subs)
        if q:
            out.entries[k] = q
    return out


def mat_to_grid(M: SparseMatrix) -> List[List[Fraction]]:
    """Dense Fraction grid; raises if any entry is non-constant."""
    grid = [[Fraction(0)] * M.cols for _ in range(M.rows)]
    for (r, c), p in M.entries.items():
        v = poly_const_value(p)
        if v is None:
            raise ValueError("matrix entry (%d,%d) is not constant" % (r, c))
        grid[r][c] = v
    return grid


# dense rational elimination helpers


def grid_rref(grid: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form, returns (rref, pivot column list)."""
    m = [row[:] for row in grid]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def normalize_integer_vector(vec: Sequence[Fraction]) -> List[int]:
    """Clear denominators, divide by content, make first nonzero positive."""
    from math import gcd

    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def grid_kernel(grid: List[List[Fraction]], cols: Optional[int] = None) -> List[List[int]]:
    """Right kernel basis, one primitive integer vector per free column."""
    rows = len(grid)
    if cols is None:
        cols = len(grid[0]) if rows else 0
    if rows == 0:
        return [normalize_integer_vector([Fraction(i == j) for i in range(cols)]) for j in range(cols)]
    m, pivots = grid_rref(grid)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(normalize_integer_vector(vec))
    return basis


def grid_rank(grid: List[List[Fraction]]) -> int:
    _, pivots = grid_rref(grid)
    return len(pivots)


def grid_solve(grid: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """One solution of grid * x = rhs, or None if inconsistent."""
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    aug = [grid[i][:] + [rhs[i]] for i in range(rows)]
    m, pivots = grid_rref(aug)
    for ri, pc in enumerate(pivots):
        if pc == cols:
            return None
    x = [Fraction(0)] * cols
    for ri, pc in enumerate(pivots):
        x[pc] = m[ri][cols]
    return x


def grid_inverse(grid: List[List[Fraction]]) -> Optional[List[List[Fraction]]]:
    n = len(grid)
    aug = [grid[i][:] + [Fraction(i == j) for j in range(n)] for i in range(n)]
    m, pivots = grid_rref(aug)
    if pivots != list(range(n)):
        return None
    return [m[i][n:] for i in range(n)]


def grid_det(grid: List[List[Fraction]]) -> Fraction:
    """Bareiss determinant over the rationals."""
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in grid):
        raise ValueError("determinant of a non-square matrix")
    # scale rows to integers, track the factor
    from math import gcd

    m = []
    scale = Fraction(1)
    for row in grid:
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        scale /= den
        m.append([int(v * den) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return scale * sign * m[n - 1][n - 1]


def exact_kernel(M: SparseMatrix) -> List[List[int]]:
    """Right-kernel basis of a constant matrix.

    Vectors come back with integer entries of content 1, first nonzero entry
    positive, ordered by their free column.
    """
    grid = mat_to_grid(M)
    return grid_kernel(grid, cols=M.cols)


def _is_constant_matrix(M: SparseMatrix) -> bool:
    return all(poly_const_value(p) is not None for p in M.entries.values())


def _minor_det_memo(M: SparseMatrix):
    cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Poly] = {}

    def det(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Poly:
        if not rows:
            return poly_one()
        key = (rows, cols)
        got = cache.get(key)
        if got is not None:
            return got
        c0 = cols[0]
        rest = cols[1:]
        total: Poly = {}
        for idx, r in enumerate(rows):
            e = M.entry(r, c0)
            if not e:
                continue
            sub = det(rows[:idx] + rows[idx + 1:], rest)
            if not sub:
                continue
            term = poly_mul(e, sub)
            total = poly_add(total, term) if idx % 2 == 0 else poly_sub(total, term)
        cache[key] = total
        return total

    return det


def det_and_adjugate(M: SparseMatrix) -> Tuple[Poly, SparseMatrix]:
    """Determinant and classical adjugate, M * adj = det * I."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return poly_one(), SparseMatrix(0, 0)
    if _is_constant_matrix(M):
        grid = mat_to_grid(M)
        d = grid_det(grid)
        adj = SparseMatrix(n, n)
        if d:
            inv = grid_inverse(grid)
            for i in range(n):
                for j in range(n):
                    adj.set_entry(i, j, poly_const(inv[i][j] * d))
        else:
            for i in range(n):
                for j in range(n):
                    sub = [[grid[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
                    cof = grid_det(sub) if n > 1 else Fraction(1)
                    if (i + j) % 2:
                        cof = -cof
                    adj.set_entry(i, j, poly_const(cof))
        return poly_const(d), adj
    det = _minor_det_memo(M)
    allr = tuple(range(n))
    d = det(allr, allr)
    adj = SparseMatrix(n, n)
    for i in range(n):
        for j in range(n):
            rows = tuple(r for r in allr if r != j)
            cols = tuple(c for c in allr if c != i)
            cof = det(rows, cols)
            if (i + j) % 2:
                cof = poly_neg(cof)
            adj.set_entry(i, j, cof)
    return d, adj


class Rank(int):
    """Integer rank carrying the computation mode ("exact" or "probabilistic")."""

    mode: str

    def __new__(cls, value: int, mode: str = "exact"):
        obj = super().__new__(cls, value)
        obj.mode = mode
        return obj


def _rank_grid_sparse(rows: int, cols: int, cells: Dict[Tuple[int, int], Fraction]) -> int:
    """Sparse rational elimination with a Markowitz-style pivot choice."""
    rowmap: Dict[int, Dict[int, Fraction]] = {}
    colcount: Dict[int, set] = {}
    for (r, c), v in cells.items():
        if v:
            rowmap.setdefault(r, {})[c] = v
            colcount.setdefault(c, set()).add(r)
    rank = 0
    while rowmap:
        best = None
        for r, row in rowmap.items():
            rl = len(row)
            for c in row:
                score = (rl - 1) * (len(colcount[c]) - 1)
                if best is None or score < best[0]:
                    best = (score, r, c)
            if best and best[0] == 0:
                break
        _, pr, pc = best
        prow = rowmap.pop(pr)
        pv = prow[pc]
        for c in prow:
            colcount[c].discard(pr)
        rank += 1
        for r in list(colcount.get(pc, ())):
            row = rowmap.get(r)
            if row is None or pc not in row:
                continue
            f = row[pc] / pv
            for c, v in prow.items():
                nv = row.get(c, Fraction(0)) - f * v
                if nv:
                    if c not in row:
                        colcount.setdefault(c, set()).add(r)
                    row[c] = nv
                else:
                    if c in row:
                        del row[c]
                        colcount[c].discard(r)
            if not row:
                del rowmap[r]
    return rank


def _rank_poly_exact(M: SparseMatrix) -> int:
    """Fraction-free Bareiss elimination over the polynomial ring."""
    work: Dict[Tuple[int, int], Poly] = {k: dict(v) for k, v in M.entries.items() if v}
    rows = list(range(M.rows))
    cols = list(range(M.cols))
    rank = 0
    prev: Poly = poly_one()
    while rows and cols:
        piv = None
        for r in rows:
            for c in cols:
                if work.get((r, c)):
                    piv = (r, c)
                    break
            if piv:
                break
        if piv is None:
            break
        pr, pc = piv
        pval = work[(pr, pc)]
        rank += 1
        rows.remove(pr)
        cols.remove(pc)
        for r in rows:
            rv = work.get((r, pc))
            for c in cols:
                a = work.get((r, c), {})
                b = work.get((pr, c), {})
                num = poly_sub(poly_mul(a, pval), poly_mul(rv or {}, b))
                val = poly_divexact(num, prev) if num else {}
                if val:
                    work[(r, c)] = val
                else:
                    work.pop((r, c), None)
            work.pop((r, pc), None)
        prev = pval
    return rank


def rank_over_fraction_field(M: SparseMatrix, probabilistic: bool = False, seed: int = 0,
                             trials: int = 3) -> Rank:
    """Rank of M over the fraction field of its coefficient ring.

    Exact by default. The probabilistic mode evaluates all variables at
    random rationals with 16-bit numerators; disagreement between trials
    escalates to the exact path.
    """
    if not M.entries:
        return Rank(0)
    if _is_constant_matrix(M):
        cells = {k: poly_const_value(p) for k, p in M.entries.items()}
        return Rank(_rank_grid_sparse(M.rows, M.cols, cells))
    if probabilistic:
        vs = set()
        for p in M.entries.values():
            for m in p:
                for v, _ in m:
                    vs.add(v)
        vlist = sorted(vs, key=var_sort_key)
        rng = random.Random(seed)
        results = []
        for _ in range(trials):
            assign = {v: Fraction(rng.randint(-(1 << 15), (1 << 15) - 1), rng.randint(1, 64)) for v in vlist}
            cells = {}
            for k, p in M.entries.items():
                val = poly_eval(p, assign)
                if val:
                    cells[k] = val
            results.append(_rank_grid_sparse(M.rows, M.cols, cells))
        if len(set(results)) == 1:
            return Rank(results[0], mode="probabilistic")
        # disagreement, fall through to the exact computation
    return Rank(_rank_poly_exact(M))
