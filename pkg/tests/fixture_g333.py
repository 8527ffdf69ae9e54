"""Expected matrices for the generic resolution at (d, n, r) = (3, 3, 3),
written in the standard hook-module bases. Entries are poly_parse strings;
x1, x2, x3 are the structural variables and t[a,b,c] is the coefficient of
the dual monomial with exponent vector (a, b, c)."""

H1 = [["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2",
       "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"]]

H2 = [
    ["-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["x1", "-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "-x2", "0", "0", "0", "x1", "0", "-x3", "0", "0", "0", "0", "0", "0"],
    ["0", "x1", "0", "-x2", "0", "0", "0", "0", "0", "-x3", "0", "0", "0", "0", "0"],
    ["0", "0", "x1", "0", "-x2", "0", "0", "x1", "0", "0", "-x3", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "-x2", "0", "0", "x1", "0", "0", "-x3", "0", "0", "0"],
    ["0", "0", "0", "x1", "0", "0", "0", "0", "0", "0", "0", "0", "-x3", "0", "0"],
    ["0", "0", "0", "0", "x1", "0", "0", "0", "0", "x1", "0", "0", "x2", "-x3", "0"],
    ["0", "0", "0", "0", "0", "x1", "0", "0", "0", "0", "x1", "0", "0", "x2", "-x3"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x1", "0", "0", "x2"],
]

H3 = [
    ["x3", "0", "0", "0", "0", "0"],
    ["0", "x3", "0", "0", "0", "0"],
    ["-x1", "0", "x3", "0", "0", "0"],
    ["0", "0", "0", "x3", "0", "0"],
    ["0", "-x1", "0", "0", "x3", "0"],
    ["0", "0", "-x1", "0", "0", "x3"],
    ["-x2", "0", "0", "0", "0", "0"],
    ["x1", "-x2", "0", "0", "0", "0"],
    ["0", "0", "-x2", "0", "0", "0"],
    ["0", "x1", "0", "-x2", "0", "0"],
    ["0", "0", "x1", "0", "-x2", "0"],
    ["0", "0", "0", "0", "0", "-x2"],
    ["0", "0", "0", "x1", "0", "0"],
    ["0", "0", "0", "0", "x1", "0"],
    ["0", "0", "0", "0", "0", "x1"],
]

V1 = [
    ["-t[4,0,0]", "-t[3,1,0]", "-t[3,0,1]", "-t[2,2,0]", "-t[2,1,1]",
     "-t[2,0,2]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]"],
    ["-t[3,1,0]", "-t[2,2,0]", "-t[2,1,1]", "-t[1,3,0]", "-t[1,2,1]",
     "-t[1,1,2]", "-t[0,4,0]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"],
    ["-t[3,0,1]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,2,1]", "-t[1,1,2]",
     "-t[1,0,3]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]", "-t[0,0,4]"],
]

V2 = [
    ["0", "0", "0", "0", "0", "0",
     "-t[4,0,0]", "-t[3,1,0]", "-t[3,0,1]", "-t[2,2,0]", "-t[2,1,1]",
     "-t[2,0,2]", "-t[1,3,0]", "-t[1,2,1]", "-t[1,1,2]"],
    ["0", "0", "0", "0", "0", "0",
     "-t[3,1,0]", "-t[2,2,0]", "-t[2,1,1]", "-t[1,3,0]", "-t[1,2,1]",
     "-t[1,1,2]", "-t[0,4,0]", "-t[0,3,1]", "-t[0,2,2]"],
    ["0", "0", "0", "0", "0", "0",
     "-t[3,0,1]", "-t[2,1,1]", "-t[2,0,2]", "-t[1,2,1]", "-t[1,1,2]",
     "-t[1,0,3]", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"],
    ["t[4,0,0]", "t[3,1,0]", "t[3,0,1]", "t[2,2,0]", "t[2,1,1]", "t[2,0,2]",
     "0", "0", "0", "0", "0", "0", "-t[1,2,1]", "-t[1,1,2]", "-t[1,0,3]"],
    ["t[3,1,0]", "t[2,2,0]", "t[2,1,1]", "t[1,3,0]", "t[1,2,1]", "t[1,1,2]",
     "0", "0", "0", "0", "0", "0", "-t[0,3,1]", "-t[0,2,2]", "-t[0,1,3]"],
    ["t[3,0,1]", "t[2,1,1]", "t[2,0,2]", "t[1,2,1]", "t[1,1,2]", "t[1,0,3]",
     "0", "0", "0", "0", "0", "0", "-t[0,2,2]", "-t[0,1,3]", "-t[0,0,4]"],
    ["t[2,2,0]", "t[1,3,0]", "t[1,2,1]", "t[0,4,0]", "t[0,3,1]", "t[0,2,2]",
     "t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]",
     "0", "0", "0"],
    ["t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]",
     "t[2,0,2]", "t[1,1,2]", "t[1,0,3]", "t[0,2,2]", "t[0,1,3]", "t[0,0,4]",
     "0", "0", "0"],
]

V3 = [
    ["t[4,0,0]", "t[3,1,0]", "t[3,0,1]", "t[2,2,0]", "t[2,1,1]", "t[2,0,2]"],
    ["t[3,1,0]", "t[2,2,0]", "t[2,1,1]", "t[1,3,0]", "t[1,2,1]", "t[1,1,2]"],
    ["t[3,0,1]", "t[2,1,1]", "t[2,0,2]", "t[1,2,1]", "t[1,1,2]", "t[1,0,3]"],
    ["t[2,2,0]", "t[1,3,0]", "t[1,2,1]", "t[0,4,0]", "t[0,3,1]", "t[0,2,2]"],
    ["t[2,1,1]", "t[1,2,1]", "t[1,1,2]", "t[0,3,1]", "t[0,2,2]", "t[0,1,3]"],
    ["t[2,0,2]", "t[1,1,2]", "t[1,0,3]", "t[0,2,2]", "t[0,1,3]", "t[0,0,4]"],
]

H1P = [
    ["-x3", "0", "x1", "x2", "-x1", "0", "0", "0"],
    ["0", "-x3", "0", "0", "x2", "0", "-x1", "0"],
    ["0", "0", "-x3", "0", "0", "x2", "0", "-x1"],
]

H2P = [
    ["x2", "-x1", "0", "0", "0", "0"],
    ["0", "x2", "0", "-x1", "0", "0"],
    ["0", "0", "x2", "0", "-x1", "0"],
    ["x3", "0", "-x1", "0", "0", "0"],
    ["0", "x3", "0", "0", "-x1", "0"],
    ["0", "0", "x3", "0", "0", "-x1"],
    ["0", "0", "0", "x3", "-x2", "0"],
    ["0", "0", "0", "0", "x3", "-x2"],
]

H3P = [["x1^2"], ["x1*x2"], ["x1*x3"], ["x2^2"], ["x2*x3"], ["x3^2"]]

L_LABELS = {
    2: ["l(1,2,3;1,1)", "l(1,2,3;1,2)", "l(1,2,3;1,3)",
        "l(1,2,3;2,2)", "l(1,2,3;2,3)", "l(1,2,3;3,3)"],
    1: ["l(1,2;1,1)", "l(1,2;1,2)", "l(1,2;1,3)", "l(1,2;2,2)", "l(1,2;2,3)",
        "l(1,2;3,3)", "l(1,3;1,1)", "l(1,3;1,2)", "l(1,3;1,3)", "l(1,3;2,2)",
        "l(1,3;2,3)", "l(1,3;3,3)", "l(2,3;2,2)", "l(2,3;2,3)", "l(2,3;3,3)"],
    0: ["l(1;1,1)", "l(1;1,2)", "l(1;1,3)", "l(1;2,2)", "l(1;2,3)", "l(1;3,3)",
        "l(2;2,2)", "l(2;2,3)", "l(2;3,3)", "l(3;3,3)"],
}

K_LABELS = {
    2: ["k(;1,1)", "k(;1,2)", "k(;1,3)", "k(;2,2)", "k(;2,3)", "k(;3,3)"],
    1: ["k(2;1,1)", "k(2;1,2)", "k(2;1,3)", "k(3;1,1)",
        "k(3;1,2)", "k(3;1,3)", "k(3;2,2)", "k(3;2,3)"],
    0: ["k(2,3;1,1)", "k(2,3;1,2)", "k(2,3;1,3)"],
}

L_TWISTS = {2: (-5, 0), 1: (-4, 0), 0: (-3, 0)}
K_TWISTS = {2: (-5, -1), 1: (-4, -1), 0: (-3, -1)}
WEDGE_TWIST = (-7, -1)
