"""One test per acceptance criterion, each at its stated tolerance.

The terminal summary prints a PASS/FAIL line per criterion.
"""
from zblock import acceptance as acc


def test_c1_formula_matches_search(record_outcome):
    out = record_outcome(acc.criterion_1_formula_vs_search())
    assert len(out.data["grids"]) == 25
    assert out.passed, out.data["bad"]


def test_c2_branch_equivalence(record_outcome):
    out = record_outcome(acc.criterion_2_branch_equivalence())
    assert out.passed, out.detail


def test_c3_witness_attainment(record_outcome):
    out = record_outcome(acc.criterion_3_witnesses())
    assert out.passed, out.data["bad"]


def test_c4_gap_decompositions(record_outcome):
    out = record_outcome(acc.criterion_4_gap_decompositions())
    assert out.passed, out.detail


def test_c5a_certificates_on_minimum_sets(record_outcome):
    out = record_outcome(acc.criterion_5a_certificates())
    assert out.passed, out.data["failures"][:3]


def test_c5b_mutation_probes(record_outcome):
    out = record_outcome(acc.criterion_5b_mutations())
    summary = {f"{m}x{n}": round(rate, 3) for (m, n), (rate, _) in out.data["rates"].items()}
    assert out.passed, summary


def test_c6_closure_confluence(record_outcome):
    out = record_outcome(acc.criterion_6_confluence())
    assert out.passed, out.detail


def test_c7_known_small_values(record_outcome):
    out = record_outcome(acc.criterion_7_small_values())
    assert out.passed, out.detail
