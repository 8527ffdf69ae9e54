"""Command line surface and file formats.

Complex files are JSON:

    {"meta": {"d": int, "n": int, "r": int, "generic": bool, ...},
     "modules": [{"labels": [str], "twists": [[int, int]]}, ...],
     "diffs": [{"rows": int, "cols": int,
                "entries": [[row, col, "poly"], ...]}, ...]}

with polynomials in the canonical text grammar of poly_str: terms joined
by " + " / " - ", monomials like "2*x1^2*t[0,1,1]", rational coefficients
as "num/den". Inverse system files are JSON:

    {"d": int, "n": int, "coefficients": {"e1,...,ed": coef, ...}}

where each key is an exponent vector of total degree 2n-2 and each
coefficient is an integer or a "num/den" string. Serialization is
deterministic: identical inputs produce byte-identical output files.

Exit codes: 0 on success, 1 on validation failure (a one-line JSON
diagnostic goes to stderr), 2 on verification failure. LINRES_THREADS
caps the worker threads used by degreewise verification; --seed fixes
the RNG behind probabilistic rank checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from .exactbase import (AUXILIARY, COEFFICIENT, STRUCTURAL, Poly,
                        SparseMatrix, monomial_from, poly_mul, poly_one,
                        poly_parse, poly_str, poly_term, poly_vars, xvar)
from .inversesys import (InverseSystem, colon_ideal_slices,
                         generated_ideal_slices, inverse_system_from_ideal,
                         minimal_generators, structural_poly)
from .minimalize import build_generic_Gprime, minimize_complex
from .pfafflab import (be_generators, build_Hn, catalan_phi,
                       ell_power_contraction, pfaffian_minor, phi_mu)
from .rescomplex import FreeComplex, GradedFreeModule, build_generic_G, specialize
from .verify import verify_report


class CLIError(Exception):
    """Validation failure surfaced as exit code 1."""


# ---------------------------------------------------------------------------
# serialization

def fraction_to_json(q: Fraction):
    return int(q) if q.denominator == 1 else "%d/%d" % (q.numerator,
                                                        q.denominator)


def fraction_from_json(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise CLIError("coefficients must be integers or num/den strings")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise CLIError("bad rational literal %r" % v)
    raise CLIError("bad coefficient %r" % (v,))


def _label_str(lb) -> str:
    return lb if isinstance(lb, str) else lb.label()


def complex_to_json(C: FreeComplex) -> Dict:
    modules = [{"labels": [_label_str(lb) for lb in m.labels],
                "twists": [list(t) for t in m.twists]} for m in C.modules]
    diffs = []
    for M in C.diffs:
        entries = [[r, c, poly_str(p)]
                   for (r, c), p in sorted(M.entries.items())]
        diffs.append({"rows": M.rows, "cols": M.cols, "entries": entries})
    return {"meta": dict(C.meta), "modules": modules, "diffs": diffs}


def complex_from_json(data) -> FreeComplex:
    try:
        meta = dict(data["meta"])
        modules = [GradedFreeModule(tuple(m["labels"]),
                                    tuple((int(a), int(b))
                                          for a, b in m["twists"]))
                   for m in data["modules"]]
        diffs = []
        for dd in data["diffs"]:
            M = SparseMatrix(int(dd["rows"]), int(dd["cols"]), {})
            for r, c, s in dd["entries"]:
                M.set_entry(int(r), int(c), poly_parse(s))
            diffs.append(M)
        return FreeComplex(modules, diffs, meta)
    except CLIError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError("bad complex file: %s" % exc)


def invsys_to_json(phi: InverseSystem) -> Dict:
    coeffs = {",".join(str(a) for a in E): fraction_to_json(c)
              for E, c in phi.coeffs.items()}
    return {"d": phi.d, "n": phi.n, "coefficients": coeffs}


def invsys_from_json(data) -> InverseSystem:
    try:
        d = int(data["d"])
        n = int(data["n"])
        coeffs = {}
        for key, val in data["coefficients"].items():
            E = tuple(int(a) for a in key.split(","))
            coeffs[E] = fraction_from_json(val)
        return InverseSystem(d, n, coeffs)
    except CLIError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError("bad inverse system file: %s" % exc)


def _dump(obj, path: str):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise CLIError("%s is not valid JSON: %s" % (path, exc))


def load_complex(path: str) -> FreeComplex:
    return complex_from_json(_load(path))


def load_invsys(path: str) -> InverseSystem:
    return invsys_from_json(_load(path))


# ---------------------------------------------------------------------------
# small formatting helpers for the three-variable subcommands

_XYZ = {1: "x", 2: "y", 3: "z"}


def xyz_str(p: Poly) -> str:
    """Render a polynomial in up to three structural variables as x, y, z."""
    s = poly_str(p)
    for i in (1, 2, 3):
        s = s.replace("x%d" % i, _XYZ[i])
    return s


def _wrap_library_errors(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise CLIError(str(exc))


# ---------------------------------------------------------------------------
# subcommands

def cmd_generic(args) -> int:
    C = _wrap_library_errors(build_generic_G, args.d, args.n, args.r)
    _dump(complex_to_json(C), args.out)
    print("wrote generic complex (d=%d, n=%d, r=%d) to %s"
          % (args.d, args.n, args.r, args.out))
    return 0


def cmd_gprime(args) -> int:
    C = _wrap_library_errors(build_generic_Gprime, args.d, args.n,
                             allow_experimental=args.allow_experimental)
    _dump(complex_to_json(C), args.out)
    print("wrote generic minimal complex (d=%d, n=%d) to %s"
          % (args.d, args.n, args.out))
    return 0


def cmd_specialize(args) -> int:
    C = load_complex(args.complex)
    phi = load_invsys(args.phi)
    if not C.meta.get("generic", False):
        raise CLIError("the input complex is already specialized")
    if C.meta.get("d") != phi.d or C.meta.get("n") != phi.n:
        raise CLIError("complex parameters (d=%s, n=%s) do not match the"
                       " inverse system (d=%d, n=%d)"
                       % (C.meta.get("d"), C.meta.get("n"), phi.d, phi.n))
    S = _wrap_library_errors(specialize, C, phi)
    _dump(complex_to_json(S), args.out)
    print("wrote specialized complex to %s" % args.out)
    return 0


def cmd_resolve(args) -> int:
    phi = load_invsys(args.phi)
    r = args.r if args.r is not None else phi.n
    G = _wrap_library_errors(build_generic_G, phi.d, phi.n, r)
    C = _wrap_library_errors(specialize, G, phi)
    if args.minimal:
        C = _wrap_library_errors(minimize_complex, C)
    _dump(complex_to_json(C), args.out)
    kind = "minimal resolution" if args.minimal else "specialized complex"
    print("wrote %s (r=%d) to %s" % (kind, r, args.out))
    return 0


def cmd_invsys_catalan(args) -> int:
    if args.mu is not None:
        phi = _wrap_library_errors(phi_mu, args.n, args.mu)
    else:
        phi = _wrap_library_errors(catalan_phi, args.n)
    _dump(invsys_to_json(phi), args.out)
    print("wrote inverse system to %s" % args.out)
    return 0


def cmd_invsys_from_ideal(args) -> int:
    data = _load(args.gens)
    try:
        d = int(data["d"])
        gens = [poly_parse(s) for s in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError("bad generators file: %s" % exc)
    n = args.n
    slices = _wrap_library_errors(generated_ideal_slices, gens, d,
                                  2 * n - 2)
    phi = _wrap_library_errors(inverse_system_from_ideal, slices[2 * n - 2],
                               d, n)
    _dump(invsys_to_json(phi), args.out)
    print("wrote inverse system to %s" % args.out)
    return 0


def cmd_pfaffian_hn(args) -> int:
    H = _wrap_library_errors(build_Hn, args.n)
    width = 0
    cells = []
    for i in range(H.size):
        row = [xyz_str(H.entries.entry(i, j)) for j in range(H.size)]
        width = max(width, max(len(s) for s in row))
        cells.append(row)
    for row in cells:
        print("[ " + "  ".join(s.rjust(width) for s in row) + " ]")
    return 0


def cmd_pfaffian_gens(args) -> int:
    gens = _wrap_library_errors(be_generators, args.n)
    print(", ".join(xyz_str(g) for g in gens))
    if args.check_direct:
        H = build_Hn(args.n)
        for i, g in enumerate(gens):
            if pfaffian_minor(H, (i + 1,)) != g:
                print("closed form disagrees with the direct Pfaffian at"
                      " position %d" % (i + 1))
                return 2
        print("closed form matches the direct signed Pfaffians")
    return 0


def cmd_colon(args) -> int:
    if args.a < 1 or args.b < 0:
        raise CLIError("need a >= 1 and b >= 0")
    powers = [poly_term(monomial_from([(xvar(i + 1), args.a)]), Fraction(1))
              for i in range(3)]
    ell = {monomial_from([(xvar(i + 1), 1)]): Fraction(1) for i in range(3)}
    g = poly_one()
    for _ in range(args.b):
        g = poly_mul(g, ell)
    slices = _wrap_library_errors(colon_ideal_slices, powers, g, args.upto)
    for e, vecs in minimal_generators(slices, 3):
        polys = [xyz_str(structural_poly(v, e, 3)) for v in vecs]
        print("degree %d: %s" % (e, ", ".join(polys)))
    return 0


def cmd_mu_table(args) -> int:
    phi = _wrap_library_errors(phi_mu, args.n, args.mu)
    table = _wrap_library_errors(ell_power_contraction, args.n, phi)
    for E in sorted(table):
        name = "*".join("%s*^(%d)" % (_XYZ[i + 1], a)
                        for i, a in enumerate(E) if a) or "1"
        print("coefficient of %s: %s" % (name, poly_str(table[E])))
    return 0


def cmd_verify(args) -> int:
    C = load_complex(args.complex)
    phi = load_invsys(args.phi)
    workers = _threads()
    reports = _wrap_library_errors(verify_report, C, phi,
                                   max_degree=args.max_degree,
                                   exact_rank=True if args.exact_rank
                                   else None,
                                   workers=workers, seed=args.seed)
    if args.json:
        print(json.dumps({"reports": [r.as_dict() for r in reports]},
                         indent=2, sort_keys=True))
    else:
        for r in reports:
            print("%s %s" % ("PASS" if r.ok else "FAIL", r.name))
            for line in r.details:
                print("    " + line)
    return 0 if all(r.ok for r in reports) else 2


def cmd_export_cas(args) -> int:
    C = load_complex(args.complex)
    lines = _cas_script(C)
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote cross-check script to %s" % args.out)
    return 0


def _cas_script(C: FreeComplex) -> List[str]:
    """A Macaulay2 script restating the differentials and their expected
    relations, for cross-checking in an independent system. The script is
    advisory output only; nothing in this package consumes it."""
    vs = set()
    for M in C.diffs:
        for p in M.entries.values():
            vs.update(poly_vars(p))
    structural = sorted((v for v in vs if v.kind == STRUCTURAL),
                        key=lambda v: v.key)
    coeff = sorted((v for v in vs if v.kind == COEFFICIENT),
                   key=lambda v: v.key)
    aux = sorted((v for v in vs if v.kind == AUXILIARY),
                 key=lambda v: str(v.key))
    names = {}
    decls = []
    for v in structural:
        names[v] = "x%d" % v.key
        decls.append(names[v])
    for k, v in enumerate(coeff):
        names[v] = "c%d" % k
        decls.append(names[v])
    for k, v in enumerate(aux):
        names[v] = "u%d" % k
        decls.append(names[v])
    if not decls:
        decls = ["x1"]

    def render(p: Poly) -> str:
        if not p:
            return "0"
        terms = []
        for mono, c in sorted(p.items(), key=lambda kv: poly_str({kv[0]: kv[1]})):
            parts = []
            if c.denominator != 1:
                parts.append("(%d/%d)" % (c.numerator, c.denominator))
            elif c != 1 or not mono:
                parts.append(str(c.numerator))
            for v, e in mono:
                parts.append(names[v] + ("^%d" % e if e > 1 else ""))
            terms.append("*".join(parts))
        return "+".join(terms).replace("+-", "-")

    lines = ["-- cross-check script (Macaulay2 syntax), generated output"]
    if coeff:
        lines.append("-- coefficient variable key:")
        for k, v in enumerate(coeff):
            lines.append("--   c%d = t[%s]" % (k, ",".join(str(a)
                                                           for a in v.key)))
    lines.append("R = QQ[%s];" % ", ".join(decls))
    L = C.length
    for i, M in enumerate(C.diffs):
        rows = []
        for r in range(M.rows):
            rows.append("{" + ", ".join(render(M.entry(r, c))
                                        for c in range(M.cols)) + "}")
        lines.append("d%d = map(R^%d, R^%d, {%s});"
                     % (L - i, M.rows, M.cols, ", ".join(rows)))
    for i in range(len(C.diffs) - 1):
        lines.append("assert(d%d * d%d == 0);" % (L - i - 1, L - i))
    lines.append('print "compositions vanish";')
    return lines


def _threads() -> int:
    raw = os.environ.get("LINRES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CLIError("LINRES_THREADS must be an integer, got %r" % raw)


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linres",
        description="Exact constructions of linear resolutions of Artinian"
                    " Gorenstein algebras, their specializations at inverse"
                    " systems, and property verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generic", help="build the generic mapping cone")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_generic)

    p = sub.add_parser("gprime", help="build the generic minimal complex")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--allow-experimental", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gprime)

    p = sub.add_parser("specialize",
                       help="evaluate a generic complex at an inverse system")
    p.add_argument("--complex", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_specialize)

    p = sub.add_parser("resolve",
                       help="build and specialize in one step")
    p.add_argument("--phi", required=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("invsys", help="inverse system constructions")
    isub = p.add_subparsers(dest="invsys_command", required=True)
    q = isub.add_parser("catalan",
                        help="the alternating Catalan inverse system")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mu", type=int, default=None, choices=(0, 1, 2))
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_invsys_catalan)
    q = isub.add_parser("from-ideal",
                        help="recover the dual socle generator of an ideal")
    q.add_argument("--gens", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_invsys_from_ideal)

    p = sub.add_parser("pfaffian", help="alternating matrix laboratory")
    psub = p.add_subparsers(dest="pfaffian_command", required=True)
    q = psub.add_parser("hn", help="print the three-variable alternating"
                                   " matrix of odd size 2n+1")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(fn=cmd_pfaffian_hn)
    q = psub.add_parser("gens", help="its signed maximal-order Pfaffians")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--check-direct", action="store_true")
    q.set_defaults(fn=cmd_pfaffian_gens)

    p = sub.add_parser("colon",
                       help="minimal generators of (x^a,y^a,z^a):(x+y+z)^b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(fn=cmd_colon)

    p = sub.add_parser("mu", help="linear-form power diagnostics")
    msub = p.add_subparsers(dest="mu_command", required=True)
    q = msub.add_parser("table", help="coefficient table of the symbolic"
                                      " n-th power contraction")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mu", type=int, required=True, choices=(0, 1, 2))
    q.set_defaults(fn=cmd_mu_table)

    p = sub.add_parser("verify", help="run the full property report")
    p.add_argument("--complex", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--exact-rank", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export-cas",
                       help="write a plain-text script re-stating the"
                            " matrices for an external cross-check")
    p.add_argument("--complex", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_export_cas)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CLIError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
