"""Expected matrices for the generic resolution at (d, n, r) = (3, 2, 2) in
the standard hook-module bases, plus the presentation data of its
minimization over the ring localized at delta = det T.

The published display of this example carries the opposite sign on the v1
row; that sign fails v1 h2 = h1' v2 against the other printed matrices, so
the row is recorded here with the sign the mapping cone forces.
"""

H1 = [["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]]

H2 = [
    ["-x2", "0", "0", "-x3", "0", "0", "0", "0"],
    ["x1", "-x2", "0", "0", "-x3", "0", "0", "0"],
    ["0", "0", "-x2", "x1", "0", "-x3", "0", "0"],
    ["0", "x1", "0", "0", "0", "0", "-x3", "0"],
    ["0", "0", "x1", "0", "x1", "0", "x2", "-x3"],
    ["0", "0", "0", "0", "0", "x1", "0", "x2"],
]

H3 = [
    ["x3", "0", "0"],
    ["0", "x3", "0"],
    ["-x1", "0", "x3"],
    ["-x2", "0", "0"],
    ["x1", "-x2", "0"],
    ["0", "0", "-x2"],
    ["0", "x1", "0"],
    ["0", "0", "x1"],
]

V1 = [["-t[2,0,0]", "-t[1,1,0]", "-t[1,0,1]", "-t[0,2,0]", "-t[0,1,1]", "-t[0,0,2]"]]

V2 = [
    ["0", "0", "0", "-t[2,0,0]", "-t[1,1,0]", "-t[1,0,1]", "-t[0,2,0]", "-t[0,1,1]"],
    ["t[2,0,0]", "t[1,1,0]", "t[1,0,1]", "0", "0", "0", "-t[0,1,1]", "-t[0,0,2]"],
    ["t[1,1,0]", "t[0,2,0]", "t[0,1,1]", "t[1,0,1]", "t[0,1,1]", "t[0,0,2]", "0", "0"],
]

V3 = [
    ["t[2,0,0]", "t[1,1,0]", "t[1,0,1]"],
    ["t[1,1,0]", "t[0,2,0]", "t[0,1,1]"],
    ["t[1,0,1]", "t[0,1,1]", "t[0,0,2]"],
]

H1P = [["-x3", "x2", "-x1"]]

H2P = [
    ["x2", "-x1", "0"],
    ["x3", "0", "-x1"],
    ["0", "x3", "-x2"],
]

H3P = [["x1"], ["x2"], ["x3"]]

L_LABELS = {
    2: ["l(1,2,3;1)", "l(1,2,3;2)", "l(1,2,3;3)"],
    1: ["l(1,2;1)", "l(1,2;2)", "l(1,2;3)", "l(1,3;1)",
        "l(1,3;2)", "l(1,3;3)", "l(2,3;2)", "l(2,3;3)"],
    0: ["l(1;1)", "l(1;2)", "l(1;3)", "l(2;2)", "l(2;3)", "l(3;3)"],
}

K_LABELS = {
    2: ["k(;1)", "k(;2)", "k(;3)"],
    1: ["k(2;1)", "k(3;1)", "k(3;2)"],
    0: ["k(2,3;1)"],
}

def minimized_presentation():
    """Expected (d1, d2, d3, delta) of the minimized localized complex.

    d1 row entries: [-t_z2*x*lam1 + D*z^2, -t_y2*x*lam1 + D*y^2,
    -t_yz*x*lam1 + D*y*z, x*lam2, x*lam3] with lam = Q.(x,y,z), Q = adj T,
    D = det T; d2 is the alternating matrix with the upper triangle below;
    d3 = d1^T.
    """
    from fractions import Fraction
    from linres.exactbase import (SparseMatrix, det_and_adjugate, mat_from_rows,
                                  mat_transpose, poly_add, poly_mul, poly_neg,
                                  poly_parse, poly_scale, poly_var, tvar, xvar)

    def t(a, b, c):
        return poly_var(tvar((a, b, c)))

    T = mat_from_rows([[t(2, 0, 0), t(1, 1, 0), t(1, 0, 1)],
                       [t(1, 1, 0), t(0, 2, 0), t(0, 1, 1)],
                       [t(1, 0, 1), t(0, 1, 1), t(0, 0, 2)]])
    D, Q = det_and_adjugate(T)
    x = [poly_var(xvar(i)) for i in (1, 2, 3)]
    lam = [poly_add(poly_add(poly_mul(Q.entry(j, 0), x[0]),
                             poly_mul(Q.entry(j, 1), x[1])),
                    poly_mul(Q.entry(j, 2), x[2])) for j in range(3)]
    ty2, tyz, tz2 = t(0, 2, 0), t(0, 1, 1), t(0, 0, 2)

    def m(*ps):
        acc = {}
        for p in ps:
            acc = poly_add(acc, p)
        return acc

    xlam1 = poly_mul(x[0], lam[0])
    d1 = mat_from_rows([[
        m(poly_neg(poly_mul(tz2, xlam1)), poly_mul(D, poly_parse("x3^2"))),
        m(poly_neg(poly_mul(ty2, xlam1)), poly_mul(D, poly_parse("x2^2"))),
        m(poly_neg(poly_mul(tyz, xlam1)), poly_mul(D, poly_parse("x2*x3"))),
        poly_mul(x[0], lam[1]),
        poly_mul(x[0], lam[2]),
    ]])

    def Qe(i, j):
        return Q.entry(i - 1, j - 1)

    upper = {
        (0, 1): poly_neg(poly_mul(x[0], Qe(2, 3))),
        (0, 2): poly_neg(poly_mul(x[0], Qe(3, 3))),
        (0, 3): poly_neg(poly_mul(x[0], poly_mul(ty2, Qe(1, 3)))),
        (0, 4): m(poly_neg(poly_mul(x[0], poly_mul(tyz, Qe(3, 1)))),
                  poly_mul(D, x[1])),
        (1, 2): poly_mul(x[0], Qe(2, 2)),
        (1, 3): m(poly_mul(x[0], poly_mul(tyz, Qe(2, 1))),
                  poly_neg(poly_mul(D, x[2]))),
        (1, 4): poly_mul(x[0], poly_mul(tz2, Qe(2, 1))),
        (2, 3): m(poly_mul(x[0], poly_mul(tyz, Qe(3, 1))),
                  poly_neg(poly_mul(x[0], poly_mul(ty2, Qe(2, 1)))),
                  poly_mul(D, x[1])),
        (2, 4): m(poly_mul(x[0], poly_mul(tz2, Qe(3, 1))),
                  poly_neg(poly_mul(x[0], poly_mul(tyz, Qe(2, 1)))),
                  poly_neg(poly_mul(D, x[2]))),
        (3, 4): poly_mul(x[0], poly_mul(Qe(1, 1), Qe(1, 1))),
    }
    d2 = SparseMatrix(5, 5)
    for (i, j), p in upper.items():
        d2.set_entry(i, j, p)
        d2.set_entry(j, i, poly_neg(p))
    d3 = mat_transpose(d1)
    return d1, d2, d3, D
