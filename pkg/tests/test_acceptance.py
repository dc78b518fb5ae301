"""Acceptance suite: every criterion at its stated (exact) tolerance.

Each test prints one PASS/FAIL line per sub-check (run pytest with -s or
rely on the captured output on failure).  All comparisons are exact
integer/rational equalities; runtime budgets are enforced where stated.
"""

import time

from stringcone import verify as vf


def _report(results, budget=None, elapsed=None):
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        detail = f"  ({res.detail})" if res.detail else ""
        print(f"{status} {res.name}{detail}")
        ok = ok and res.passed
    if budget is not None:
        status = "PASS" if elapsed < budget else "FAIL"
        print(f"{status} runtime {elapsed:.1f}s < {budget}s")
        ok = ok and elapsed < budget
    assert ok


def test_criterion_1_two_formula_agreement():
    start = time.time()
    results = vf.criterion_two_formula()
    _report(results, budget=60, elapsed=time.time() - start)


def test_criterion_2_mirror_duality():
    _report(vf.criterion_mirror_duality())


def test_criterion_3_golden_hodge_numbers():
    start = time.time()
    results = vf.criterion_golden_hodge()
    _report(results, budget=600, elapsed=time.time() - start)


def test_criterion_4_poset_identities():
    _report(vf.criterion_poset_identities())


def test_criterion_5_tilde_s_suite():
    _report(vf.criterion_tilde_s())


def test_criterion_6_graded_quotient_dimensions():
    start = time.time()
    results = vf.criterion_graded_dimensions(seeds=(0, 1, 2))
    _report(results, budget=300, elapsed=time.time() - start)


def test_criterion_7_box_points():
    _report(vf.criterion_box_points())


def test_criterion_8_toric_stringy_e():
    _report(vf.criterion_toric())


def test_criterion_9_koszul_comparison():
    start = time.time()
    results = vf.criterion_koszul(seeds=(0, 1, 2))
    _report(results, budget=600, elapsed=time.time() - start)


def test_criterion_10_cohomology_table_consistency():
    _report(vf.criterion_cohomology_table())
