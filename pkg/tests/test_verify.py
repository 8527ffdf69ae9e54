from fractions import Fraction
from math import comb

import pytest

from linres.exactbase import SparseMatrix, poly_neg
from linres.inversesys import InverseSystem, ann_slice, delta, hilbert_compressed
from linres.minimalize import (betti_truncation, build_generic_Gprime,
                               minimize_complex)
from linres.rescomplex import (FreeComplex, GradedFreeModule, build_generic_G,
                               specialize)
from linres.verify import (check_monomiality, check_square_zero,
                           euler_hilbert_identity, expected_h0_dims,
                           extract_h0_ideal, rank_conditions,
                           strand_exactness, verify_report, _span_equal)

PHI2 = InverseSystem(3, 2, {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(-1)})
PHI3 = InverseSystem(3, 3, {(2, 2, 0): Fraction(1), (1, 1, 2): Fraction(-1),
                            (0, 0, 4): Fraction(2)})


def ann_hilbert(phi, up_to):
    # Hilbert function of the quotient by the full annihilator
    return [comb(phi.d - 1 + e, phi.d - 1) - len(ann_slice(phi, e).basis)
            for e in range(up_to + 1)]


def test_square_zero_symbolic():
    assert check_square_zero(build_generic_G(3, 3, 3)).ok
    assert check_square_zero(build_generic_Gprime(3, 2)).ok


def test_square_zero_detects_corrupted_sign():
    G = build_generic_G(3, 2, 2)
    bad = SparseMatrix(G.diffs[1].rows, G.diffs[1].cols,
                       dict(G.diffs[1].entries))
    key = sorted(bad.entries)[0]
    bad.entries[key] = poly_neg(bad.entries[key])
    C = FreeComplex(G.modules, [G.diffs[0], bad, G.diffs[2]], dict(G.meta))
    rep = check_square_zero(C)
    assert not rep.ok
    assert rep.details


def test_monomiality_on_generic_cones():
    assert check_monomiality(build_generic_G(3, 2, 2)).ok
    assert check_monomiality(build_generic_G(3, 3, 4)).ok


def test_monomiality_fails_on_gprime():
    rep = check_monomiality(build_generic_Gprime(3, 2))
    assert not rep.ok


def test_monomiality_needs_generic():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    with pytest.raises(ValueError):
        check_monomiality(C)


def test_strand_exactness_needs_specialized():
    with pytest.raises(ValueError):
        strand_exactness(build_generic_G(3, 2, 2))


def test_strands_of_cone_at_phi2():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    rep = strand_exactness(C, 10, [1, 3, 1])
    assert rep.ok
    assert rep.data["h0"] == [1, 3, 1] + [0] * 8


def test_strands_of_cone_at_phi3():
    C = specialize(build_generic_G(3, 3, 3), PHI3)
    rep = strand_exactness(C, 12, [1, 3, 6, 3, 1])
    assert rep.ok
    assert rep.data["h0"] == [1, 3, 6, 3, 1] + [0] * 8


def test_strands_of_truncation_at_phi3():
    # r = n + 1: homology of the quotient by the degree-4 piece of the ideal
    C = specialize(build_generic_G(3, 3, 4), PHI3)
    expected = expected_h0_dims(PHI3, 4, 12)
    rep = strand_exactness(C, 12, expected)
    assert rep.ok
    assert rep.data["h0"][:5] == [1, 3, 6, 10, 1]


def test_strand_workers_merge_deterministically():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    a = strand_exactness(C, 8, [1, 3, 1])
    b = strand_exactness(C, 8, [1, 3, 1], workers=3)
    assert a.as_dict() == b.as_dict()


@pytest.mark.parametrize("n,coeffs", [
    (2, {(2, 0, 0): 1}),
    (3, {(4, 0, 0): 1}),
])
def test_delta_zero_is_a_negative_control(n, coeffs):
    phi = InverseSystem(3, n, {k: Fraction(v) for k, v in coeffs.items()})
    assert delta(phi) == 0
    C = specialize(build_generic_G(3, n, n), phi)
    rep = strand_exactness(C, 2 * n + 3, ann_hilbert(phi, 2 * n + 3))
    assert not rep.ok


def test_euler_identity_and_twist_sensitivity():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    assert euler_hilbert_identity(C, [1, 3, 1]).ok
    mods = list(C.modules)
    tw = list(mods[1].twists)
    tw[0] = (tw[0][0] - 1, tw[0][1])
    mods[1] = GradedFreeModule(mods[1].labels, tuple(tw))
    bad = FreeComplex(mods, C.diffs, dict(C.meta))
    assert not euler_hilbert_identity(bad, [1, 3, 1]).ok


def test_euler_identity_for_minimized():
    M = minimize_complex(specialize(build_generic_G(3, 2, 2), PHI2))
    assert euler_hilbert_identity(M, [1, 3, 1]).ok


def test_rank_conditions_exact_on_specialized():
    C = specialize(build_generic_G(3, 3, 3), PHI3)
    rep = rank_conditions(C)
    assert rep.ok
    assert rep.data["mode"] == "exact"
    assert rep.data["ranks"] == {"d3": 7, "d2": 14, "d1": 4}


def test_rank_conditions_probabilistic_on_generic():
    rep = rank_conditions(build_generic_G(3, 3, 3), seed=1)
    assert rep.ok
    assert rep.data["mode"].startswith("probabilistic")


def test_rank_conditions_fail_on_zero_differentials():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    zero = [SparseMatrix(M.rows, M.cols, {}) for M in C.diffs]
    rep = rank_conditions(FreeComplex(C.modules, zero, dict(C.meta)))
    assert not rep.ok


def test_extracted_ideal_at_phi2():
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    slices = extract_h0_ideal(C)
    assert [len(s.basis) for s in slices] == [0, 0, 5, 10]
    want = ann_slice(PHI2, 2)
    assert _span_equal(slices[2].basis, want.basis, 6)


def test_extracted_ideal_at_phi3():
    C = specialize(build_generic_G(3, 3, 3), PHI3)
    slices = extract_h0_ideal(C)
    want = ann_slice(PHI3, 3)
    assert len(slices[3].basis) == len(want.basis) == 7
    assert _span_equal(slices[3].basis, want.basis, 10)


def test_extracted_ideal_mismatch_outside_compressed_locus():
    phi = InverseSystem(3, 2, {(2, 0, 0): Fraction(1)})
    C = specialize(build_generic_G(3, 2, 2), phi)
    slices = extract_h0_ideal(C)
    # the annihilator already lives in degree 1; the presented ideal does not
    assert slices[1].basis == []
    assert len(ann_slice(phi, 1).basis) == 2


def test_expected_h0_dims():
    assert expected_h0_dims(PHI2, 2, 6) == [1, 3, 1, 0, 0, 0, 0]
    assert expected_h0_dims(PHI3, 3, 8) == [1, 3, 6, 3, 1, 0, 0, 0, 0]
    assert expected_h0_dims(PHI3, 4, 5) == [1, 3, 6, 10, 1, 0]
    with pytest.raises(ValueError):
        expected_h0_dims(PHI3, 6, 4)


def test_verify_report_generic_input():
    reps = verify_report(build_generic_G(3, 2, 2), PHI2)
    assert all(r.ok for r in reps)
    names = [r.name for r in reps]
    assert names == ["square_zero", "monomiality", "square_zero",
                     "graded_consistency", "rank_conditions",
                     "strand_exactness", "euler_hilbert", "h0_ideal"]


def test_verify_report_gates_on_graded_consistency():
    from linres.exactbase import poly_parse
    C = specialize(build_generic_G(3, 2, 2), PHI2)
    bad = SparseMatrix(C.diffs[1].rows, C.diffs[1].cols,
                       dict(C.diffs[1].entries))
    key = sorted(bad.entries)[0]
    bad.entries[key] = poly_parse("x1^2")
    B = FreeComplex(C.modules, [C.diffs[0], bad, C.diffs[2]], dict(C.meta))
    reps = verify_report(B, PHI2)
    assert reps[-1].name == "graded_consistency"
    assert not reps[-1].ok


def test_verify_report_skips_monomiality_for_derived_construction():
    reps = verify_report(build_generic_Gprime(3, 2), PHI2)
    assert all(r.ok for r in reps)
    assert "monomiality" not in [r.name for r in reps]


def test_verify_report_flags_delta_zero():
    phi = InverseSystem(3, 2, {(2, 0, 0): Fraction(1)})
    reps = verify_report(build_generic_G(3, 2, 2), phi)
    h0 = [r for r in reps if r.name == "h0_ideal"][0]
    assert h0.ok
    assert any("outside the compressed locus" in s for s in h0.details)


def test_verify_report_minimized_complex():
    M = minimize_complex(specialize(build_generic_G(3, 3, 3), PHI3))
    reps = verify_report(M, PHI3)
    assert all(r.ok for r in reps)


def test_minimize_preserves_strand_homology():
    C = specialize(build_generic_G(3, 3, 3), PHI3)
    M = minimize_complex(C)
    a = strand_exactness(C, 10)
    b = strand_exactness(M, 10)
    assert a.ok and b.ok
    assert a.data["h0"] == b.data["h0"]


def test_betti_triple_agreement():
    # minimized ranks, closed-form linear Betti numbers, truncation formula
    from linres.inversesys import betti_linear
    for phi, n in [(PHI2, 2), (PHI3, 3)]:
        M = minimize_complex(specialize(build_generic_G(3, n, n), phi))
        ranks = [m.rank for m in M.modules]
        assert ranks == list(reversed(ranks))
        for i in range(1, 3):
            assert M.modules[M.length - i].rank == betti_linear(3, n, i) \
                == betti_truncation(3, n, n, i)
