from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minorforge.bounds import (
    BOUND_IDS,
    CSV_COLUMNS,
    FORMULAS,
    best_bound,
    check_graph,
    eval_bound,
    iter_table,
    reports_to_csv,
    verify_corpus,
)
from minorforge.graph import Graph, complete_graph, cycle_graph, petersen_graph, random_gnp, write_graph6

# the formulas transcribed independently of the module, as plain integer /
# rational arithmetic, with their hypotheses
REFERENCE = {
    "conj_alpha_h": (lambda a, h: True, lambda a, h, w: a * h),
    "duchet_meyniel": (lambda a, h: True, lambda a, h, w: (2 * a - 1) * h),
    "kpt_eq1": (lambda a, h: h >= 2, lambda a, h, w: (2 * a - 1) * (h - 1) + 1),
    "kpt_omega": (lambda a, h: a >= 2, lambda a, h, w: (2 * a - 1) * h - w),
    "kpt_32": (lambda a, h: a >= 3, lambda a, h, w: Fraction(4 * a - 3, 2) * h),
    "ks_eq2": (lambda a, h: a >= 3, lambda a, h, w: 2 * (a - 1) * h),
    "wood_eq3": (lambda a, h: h >= 5, lambda a, h, w: Fraction((2 * a - 1) * (2 * h - 5) + 5, 2)),
    "fox": (lambda a, h: True, lambda a, h, w: Fraction(1983 * a * h, 1000)),
    "balogh_kostochka": (lambda a, h: True, lambda a, h, w: Fraction(1948 * a * h, 1000)),
    "theorem1": (lambda a, h: a >= 3 and h >= 5, lambda a, h, w: (a - 1) * (2 * h - 5) + 5),
}


@pytest.mark.parametrize("id,value", [
    ("theorem1", 15), ("wood_eq3", 15), ("ks_eq2", 20), ("kpt_eq1", 21), ("duchet_meyniel", 25),
])
def test_values_at_3_5(id, value):
    assert eval_bound(id, 3, 5) == value


def test_values_at_3_6_ordering():
    t, w, k = (eval_bound(i, 3, 6) for i in ("theorem1", "wood_eq3", "ks_eq2"))
    assert (t, w, k) == (19, 20, 24) and t < w < k


def test_applicability_and_errors():
    assert eval_bound("theorem1", 2, 7) is None
    assert eval_bound("wood_eq3", 5, 4) is None
    assert eval_bound("kpt_omega", 1, 4, 4) is None
    assert eval_bound("kpt_32", 2, 4) is None
    with pytest.raises(KeyError):
        eval_bound("nope", 3, 5)
    with pytest.raises(ValueError):
        eval_bound("theorem1", 0, 5)
    with pytest.raises(ValueError):
        eval_bound("kpt_omega", 3, 5)


def test_literal_eq1_fails_on_edgeless_graphs():
    # why kpt_eq1 is restricted to h >= 2: K_2-free graphs have h = 1 and alpha = n
    rep = check_graph(Graph.empty(4))
    assert (rep.alpha, rep.h) == (4, 1)
    assert REFERENCE["kpt_eq1"][1](4, 1, None) == 1 < 4
    assert rep.checks["kpt_eq1"].status == "n/a" and not rep.violations


def test_ids_in_declared_order():
    assert BOUND_IDS == tuple(REFERENCE)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60))
def test_matches_reference_transcription(a, h, w):
    for id, (applies, value) in REFERENCE.items():
        got = eval_bound(id, a, h, w)
        if applies(a, h):
            assert got == value(a, h, w) and isinstance(got, Fraction)
        else:
            assert got is None


@given(st.integers(1, 40), st.integers(1, 40), st.one_of(st.none(), st.integers(1, 40)))
def test_best_bound_is_argmin_of_enumeration(a, h, w):
    cands = [
        (value(a, h, w), id) for id, (applies, value) in REFERENCE.items()
        if applies(a, h) and id != "conj_alpha_h" and not (id == "kpt_omega" and w is None)
    ]
    low = min(v for v, _ in cands)
    id, v = best_bound(a, h, w)
    assert v == low and (id, v) in [(i, x) for x, i in cands]
    tied = [i for x, i in cands if x == low]
    assert id == ("theorem1" if "theorem1" in tied else tied[0])


def test_best_bound_examples():
    assert best_bound(3, 5) == ("theorem1", 15)
    assert best_bound(3, 6) == ("theorem1", 19)
    assert best_bound(2, 6, 3)[0] != "theorem1"


def test_dominance_identities():
    for a in range(3, 51):
        for h in range(5, 51):
            t = eval_bound("theorem1", a, h)
            assert t - eval_bound("ks_eq2", a, h) == 5 * (2 - a) < 0
            d = t - eval_bound("wood_eq3", a, h)
            assert d == 5 - h and (d == 0) == (h == 5)
    for a in range(1, 51):
        for h in range(2, 51):
            assert eval_bound("kpt_eq1", a, h) - eval_bound("duchet_meyniel", a, h) == 2 - 2 * a


# ---------------------------------------------------------------- check_graph

def test_check_c5():
    rep = check_graph(cycle_graph(5))
    assert (rep.alpha, rep.omega, rep.chi, rep.h) == (2, 2, 3, 3)
    assert rep.checks["theorem1"].status == "n/a"
    dm = rep.checks["duchet_meyniel"]
    assert dm.bound == 9 and dm.satisfied and dm.slack == 4


def test_check_k6_conjecture_equality():
    rep = check_graph(complete_graph(6))
    c = rep.checks["conj_alpha_h"]
    assert (rep.alpha, rep.h, rep.omega) == (1, 6, 6)
    assert c.bound == 6 and c.satisfied and c.slack == 0


def test_check_petersen():
    rep = check_graph(petersen_graph())
    assert (rep.alpha, rep.h) == (4, 5)
    assert rep.checks["theorem1"].bound == 20 and rep.checks["theorem1"].satisfied
    assert rep.checks["conj_alpha_h"].bound == 20 and rep.checks["conj_alpha_h"].satisfied
    assert rep.chi_le_h is True and not rep.violations


def test_no_floats_anywhere():
    rep = check_graph(petersen_graph())
    for c in rep.checks.values():
        assert c.bound is None or isinstance(c.bound, Fraction)
        assert c.slack is None or isinstance(c.slack, Fraction)
    for f in FORMULAS.values():
        v = f.value(7, 9, 3)
        assert isinstance(v, Fraction)


def test_timeouts_are_undecided():
    g = random_gnp(30, 0.5, 1)
    rep = check_graph(g, budget_minor=1)
    assert rep.status["h"] == "timeout"
    assert all(c.status == "undecided" and c.satisfied is None for c in rep.checks.values())
    summary, _ = verify_corpus([(1, write_graph6(g), g)], budget_minor=1)
    assert (summary.undecided, summary.violations, summary.satisfied) == (1, 0, 0)


# ---------------------------------------------------------------- corpora

def _records(graphs):
    return [(i + 1, write_graph6(g), g) for i, g in enumerate(graphs)]


def test_empty_stream():
    summary, reports = verify_corpus([])
    assert summary.checked == 0 and reports == []


def test_random_stream_has_no_violations():
    gs = [random_gnp(20, 0.3, s) for s in range(100)]
    summary, reports = verify_corpus(_records(gs))
    assert summary.checked == 100 and summary.violations == 0 and summary.undecided == 0
    assert summary.hadwiger_violations == 0
    assert all(r.chi <= r.h for r in reports)


def test_parallel_keeps_order_and_csv_is_deterministic():
    gs = [random_gnp(9 + s % 5, 0.4, s) for s in range(24)]
    s1, r1 = verify_corpus(_records(gs))
    s2, r2 = verify_corpus(_records(gs), jobs=3)
    assert [r.graph6 for r in r2] == [write_graph6(g) for g in gs]
    assert reports_to_csv(r1) == reports_to_csv(r2)
    assert s1.to_json() == s2.to_json()


def test_bad_records_are_skipped():
    from minorforge.graph import read_graph6_lines

    summary, reports = verify_corpus(read_graph6_lines(["Bw", "A!", "A_"]))
    assert summary.skipped == 1 and summary.checked == 2


def test_csv_layout():
    text = reports_to_csv([check_graph(cycle_graph(5))])
    header, row = text.splitlines()
    assert header.split(",") == CSV_COLUMNS
    cells = dict(zip(CSV_COLUMNS, row.split(",")))
    assert cells["graph6"] == write_graph6(cycle_graph(5))
    assert cells["theorem1_applicable"] == "false" and cells["theorem1_bound"] == ""
    assert cells["duchet_meyniel_bound"] == "9" and cells["duchet_meyniel_satisfied"] == "true"


def test_table_rows():
    rows = list(iter_table([3], range(5, 9)))
    assert [r["h"] for r in rows] == [5, 6, 7, 8]
    r5 = rows[0]
    assert (r5["theorem1"], r5["wood_eq3"], r5["ks_eq2"]) == ("15", "15", "20")
    assert r5["best"] == "theorem1" and r5["kpt_omega"] is None
    assert list(iter_table([2], [4], omega=2))[0]["kpt_omega"] == "10"
