import json

import pytest

from moravacoh.arithmetic import make_context
from moravacoh.lemmas import (
    VERIFIERS,
    LemmaReport,
    degree_table,
    e2_Wn,
    e2ex_expected,
    ph_element,
    verify_d_squared,
    verify_degree_table,
    verify_diff_list,
    verify_duality,
    verify_e2ex,
    verify_ext_reduction,
    verify_gen_e,
    verify_hs_bound,
    verify_htpy,
    verify_int,
    verify_lan,
    verify_lanc,
    verify_lemma_zero,
    verify_ph_shift,
    zero_basis_listing,
    zero_differential_list,
    zero_named_generators,
)

CTX53 = make_context(5, 3)
CTX74 = make_context(7, 4)
CTX114 = make_context(11, 4)


def test_report_semantics():
    rep = LemmaReport("x", {})
    assert rep.check("a", 1, 2, 2) and rep.passed
    rep.note("info", value=3)
    assert rep.passed
    assert not rep.check("b", 1, 2, 3)
    assert rep.status == "fail"
    assert rep.counterexamples == [{"case": "b", "input": 1, "expected": 2, "got": 3}]


def test_report_json_deterministic():
    a = verify_lemma_zero(CTX74).to_json()
    b = verify_lemma_zero(CTX74).to_json()
    assert a == b
    assert json.loads(a)["status"] == "pass"


def test_degree_table_values():
    got = degree_table(CTX74).as_dict()
    want = {"h10": 1, "h11": 7, "h12": 49, "h13": -57, "h20": 8, "h21": 56, "h22": -8, "h23": -56,
            "h30": 57, "h31": -1, "h32": -7, "h33": -49, "h40": 0, "h41": 0, "h42": 0, "h43": 0}
    assert got == want
    assert degree_table(CTX53).as_dict() == {"h10": 1, "h11": 5, "h12": -6, "h20": 6, "h21": -1,
                                              "h22": -5, "h30": 0, "h31": 0, "h32": 0}
    assert verify_degree_table(CTX74).passed


def test_zero_data_shapes():
    assert len(zero_basis_listing()) == 21
    names = zero_named_generators()
    assert len([k for k in names if k.startswith("a")]) == 6
    assert len([k for k in names if k.startswith("c")]) == 7
    assert len(zero_differential_list()) == 16


@pytest.mark.parametrize("fn", [verify_lemma_zero, verify_gen_e, verify_diff_list])
def test_zero_reports_pass(fn):
    rep = fn(CTX74)
    assert rep.passed, rep.counterexamples


def test_zero_requires_7_4():
    with pytest.raises(ValueError):
        verify_lemma_zero(CTX53)


@pytest.mark.parametrize("ctx", [CTX53, CTX114], ids=["5,3", "11,4"])
def test_lan_holds_under_cond(ctx):
    rep = verify_lan(ctx)
    assert rep.passed, rep.counterexamples
    assert verify_lanc(ctx).passed


def test_lan_case_count():
    # (5,3) lacks (pn); (11,4) has it and doubles the sweep
    assert len(verify_lan(CTX53).details) == 2 * 2**3
    assert len(verify_lan(CTX114).details) == 4 * 2**4


def test_lan_outside_cond_has_counterexamples():
    # (7,4) breaks n^2 <= 2p-1; the sweep is still run and reports honestly
    rep = verify_lan(CTX74)
    assert not rep.passed
    assert any(c["got"] > 0 for c in rep.counterexamples)


def test_e2ex_expected_list():
    assert e2ex_expected(CTX53, 1, 0) == "g_n"
    assert {t for t in range(31) if e2ex_expected(CTX53, 0, t)} == {6, 26, 30}
    assert e2ex_expected(CTX53, 0, 0) is None


def test_e2ex_scan_at_5_3():
    rep = verify_e2ex(CTX53)
    nonzero = {(d["input"]["s"], d["input"]["t"]) for d in rep.details if d["case"].startswith("E2") and d["got"]}
    assert nonzero == {(1, 0), (0, 0), (0, 6), (0, 26), (0, 30)}
    # the extra class at (0, 0) is the only disagreement with the listed survivors
    assert [(c["input"]["s"], c["input"]["t"]) for c in rep.counterexamples] == [(0, 0)]


def test_e2_Wn():
    assert e2_Wn(CTX53, 0, 0) == 1
    assert e2_Wn(CTX53, 9, 8) == 0
    assert e2_Wn(CTX53, 1, 7) == 0
    assert e2_Wn(CTX53, 1, 8) == 1
    assert e2_Wn(CTX53, 1, 8 + 248) == 1


@pytest.mark.parametrize("ctx", [CTX53, CTX74], ids=["5,3", "7,4"])
def test_hs_bound(ctx):
    assert verify_hs_bound(ctx).passed


@pytest.mark.parametrize("pn", [(5, 3), (7, 4), (11, 4), (13, 5)])
def test_int_report(pn):
    assert verify_int(make_context(*pn)).passed


@pytest.mark.parametrize("pn", [(5, 3), (11, 4), (13, 5), (7, 4)])
def test_ext_reduction_report(pn):
    rep = verify_ext_reduction(make_context(*pn))
    assert rep.passed, rep.counterexamples


def test_htpy_report():
    rep = verify_htpy(CTX53)
    assert rep.passed
    total = next(d for d in rep.details if d["case"] == "total")
    assert total["summands"] == 8 and total["dim"] >= 1


def test_ph_shift():
    assert verify_ph_shift(CTX74).passed
    assert verify_ph_shift(CTX53, [3, 1, 2]).passed
    el = ph_element(CTX53, [2, 3, 1])
    assert el.description == "p v_1^2"
    assert el.degree == 2 * 8


def test_d_squared_report():
    rep = verify_d_squared(CTX74)
    assert rep.passed
    assert rep.details[0]["input"] == 16 + 1000


def test_duality_report_5_3():
    rep = verify_duality(CTX53)
    assert rep.passed, rep.counterexamples
    measured = next(d for d in rep.details if d["case"].startswith("cohomology Poincare"))
    assert measured["mismatches"] == 0


def test_verifier_names():
    assert set(VERIFIERS) == {"lemma-zero", "lan", "lanc", "e2ex", "hs-bound", "int", "ext-reduction",
                              "degree-table", "gen-e", "diff-list", "htpy", "ph-shift", "d-squared",
                              "duality"}
