import time
from linres.exactbase import poly_parse, poly_str, mat_from_rows, mat_equal, mat_mul, mat_is_zero, mat_neg
from linres.rescomplex import (build_generic_G, build_L_complex, build_K_complex,
                               vertical_maps, GenericPhi, complex_bidegree_violations)

t0 = time.time()
G = build_generic_G(3, 2, 2)
print("built G(3,2,2) in %.2fs" % (time.time() - t0))
print("ranks:", [m.rank for m in G.modules])   # expect [4, 11, 9, 2] for G_3..G_0

# d o d = 0
for a, b in zip(G.diffs, G.diffs[1:]):
    assert mat_is_zero(mat_mul(b, a))
print("square zero ok")
print("bidegree violations:", complex_bidegree_violations(G))

def parse_rows(rows):
    return mat_from_rows([[poly_parse(e) if isinstance(e, str) else e for e in row] for row in rows])

# printed matrices of the (3,2,2) example (v1 negated per the known misprint)
h1 = parse_rows([["x1^2","x1*x2","x1*x3","x2^2","x2*x3","x3^2"]])
h2 = parse_rows([
 ["-x2","0","0","-x3","0","0","0","0"],
 ["x1","-x2","0","0","-x3","0","0","0"],
 ["0","0","-x2","x1","0","-x3","0","0"],
 ["0","x1","0","0","0","0","-x3","0"],
 ["0","0","x1","0","x1","0","x2","-x3"],
 ["0","0","0","0","0","x1","0","x2"]])
h3 = parse_rows([
 ["x3","0","0"],
 ["0","x3","0"],
 ["-x1","0","x3"],
 ["-x2","0","0"],
 ["x1","-x2","0"],
 ["0","0","-x2"],
 ["0","x1","0"],
 ["0","0","x1"]])
v1 = parse_rows([["-t[2,0,0]","-t[1,1,0]","-t[1,0,1]","-t[0,2,0]","-t[0,1,1]","-t[0,0,2]"]])
v2 = parse_rows([
 ["0","0","0","-t[2,0,0]","-t[1,1,0]","-t[1,0,1]","-t[0,2,0]","-t[0,1,1]"],
 ["t[2,0,0]","t[1,1,0]","t[1,0,1]","0","0","0","-t[0,1,1]","-t[0,0,2]"],
 ["t[1,1,0]","t[0,2,0]","t[0,1,1]","t[1,0,1]","t[0,1,1]","t[0,0,2]","0","0"]])
v3 = parse_rows([
 ["t[2,0,0]","t[1,1,0]","t[1,0,1]"],
 ["t[1,1,0]","t[0,2,0]","t[0,1,1]"],
 ["t[1,0,1]","t[0,1,1]","t[0,0,2]"]])
h1p = parse_rows([["-x3","x2","-x1"]])
h2p = parse_rows([
 ["x2","-x1","0"],
 ["x3","0","-x1"],
 ["0","x3","-x2"]])
h3p = parse_rows([["x1"],["x2"],["x3"]])

L = build_L_complex(3, 2)
K = build_K_complex(3, 2, 2)
vs = vertical_maps(3, 2, 2, GenericPhi(3, 2))
# L.diffs = [h3, h2, h1]; K.diffs = [h3', h2', h1']
for name, got, want in [("h1", L.diffs[2], h1), ("h2", L.diffs[1], h2), ("h3", L.diffs[0], h3),
                        ("h1'", K.diffs[2], h1p), ("h2'", K.diffs[1], h2p), ("h3'", K.diffs[0], h3p),
                        ("v1", vs[0], v1), ("v2", vs[1], v2), ("v3", vs[2], v3)]:
    if mat_equal(got, want):
        print(name, "matches printed matrix")
    else:
        print(name, "MISMATCH")
        for i in range(got.rows):
            for j in range(got.cols):
                a, b = got.entry(i, j), want.entry(i, j)
                if a != b:
                    print("  (%d,%d): got %s want %s" % (i, j, poly_str(a), poly_str(b)))
