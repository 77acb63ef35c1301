from __future__ import annotations

import json

import pytest

from mostar import graph6
from mostar.canon import canonical_form
from mostar.enumeration import bicyclic_graphs, unicyclic_graphs
from mostar.families import cycle, make_b_family, make_s_m_r, path, star
from mostar.graph import GraphError, add_pendants, join_at
from mostar.indices import edge_mostar
from mostar import verification as ver


def test_bicyclic_nine_five_way_tie():
    rep = ver.verify_bicyclic_theorem(9)
    assert rep.max_value == 48 and rep.population == 236
    assert len(rep.argmax) == 5
    assert rep.value_match and rep.argmax_match and rep.closed_form_match
    assert sorted(lab for fams in rep.families for lab in fams) == \
        ["B1_9", "B2_9", "B3_9", "B4_9", "B_9"]


def test_bicyclic_ten_unique():
    rep = ver.verify_bicyclic_theorem(10)
    assert rep.max_value == 66
    assert rep.families == [["B_10"]]
    assert rep.argmax == [canonical_form(make_b_family("B", 10)).graph6]


def test_bicyclic_seven_reports_discrepancy():
    rep = ver.verify_bicyclic_theorem(7)
    assert rep.max_value == 22 and rep.value_match
    assert sorted(lab for f in rep.families for lab in f) == ["B2_7", "B3_7"]
    assert not rep.argmax_match
    assert rep.closed_form_match
    assert rep.expected_argmax == ["B1_7", "B3_7"]
    assert any("differ" in note for note in rep.notes)


def test_bicyclic_six_notes_undefined_family():
    rep = ver.verify_bicyclic_theorem(6)
    assert "B1 is undefined at m=6" in rep.notes
    assert rep.closed_form_match


def test_bicyclic_five():
    rep = ver.verify_bicyclic_theorem(5)
    assert rep.max_value == 4 and rep.argmax_match
    assert rep.families == [["B3_5", "B4_5"]]


def test_report_json_shape():
    d = ver.verify_bicyclic_theorem(8).to_json()
    for key in ("m", "population", "max", "argmax", "families", "expected",
                "value_match", "argmax_match"):
        assert key in d
    assert json.loads(json.dumps(d)) == d


def test_max_reproducible_from_graph6_stream():
    rep = ver.verify_bicyclic_theorem(8)
    stream = [graph6.encode(g) for g in bicyclic_graphs(8)]
    assert max(edge_mostar(graph6.decode(s)) for s in stream) == rep.max_value


def test_ranges_enforced():
    with pytest.raises(GraphError):
        ver.verify_bicyclic_theorem(14)
    with pytest.raises(GraphError):
        ver.verify_unicyclic_lemma(2)
    with pytest.raises(GraphError):
        ver.disprove_conjecture(5, 9)


@pytest.mark.parametrize("m, value, girths", [
    (4, 5, [3]),
    (9, 60, [3, 4]),
    (10, 78, [4]),
])
def test_unicyclic_examples(m, value, girths):
    rep = ver.verify_unicyclic_lemma(m)
    assert rep.max_value == value
    assert rep.argmax_match
    expected = sorted(canonical_form(make_s_m_r(m, r)).graph6 for r in girths)
    assert rep.argmax == expected


def test_jobs_do_not_change_reports():
    assert ver.verify_bicyclic_theorem(9, jobs=2) == ver.verify_bicyclic_theorem(9, jobs=1)


@pytest.mark.parametrize("m, row", [
    (20, (356, 352, 4)),
    (13, (132, 128, 4)),
    (9, (48, 44, 4)),
])
def test_disproof_rows(m, row):
    (r,) = ver.disprove_conjecture(m, m)
    assert (r.b, r.b5, r.difference) == row
    assert r.refuted


def test_disproof_csv():
    text = ver.disproof_csv(ver.disprove_conjecture(9, 10))
    assert text == "m,B,B5,diff\n9,48,44,4\n10,66,62,4\n"


def test_b5_ties_b4_at_thirteen():
    assert edge_mostar(make_b_family("B5", 13)) == edge_mostar(make_b_family("B4", 13)) == 128


def test_join_examples():
    h1 = cycle(3)
    for u in range(3):
        assert edge_mostar(join_at(h1, u, path(4), 0)) <= edge_mostar(join_at(h1, u, star(4), 0))
        assert edge_mostar(join_at(h1, u, path(4), 1)) <= edge_mostar(join_at(h1, u, star(4), 0))
    g1 = add_pendants(cycle(3), 0, 1)
    for u in range(g1.n):
        assert edge_mostar(join_at(g1, u, make_s_m_r(5, 3), 0)) == \
            edge_mostar(join_at(g1, u, make_s_m_r(5, 4), 0))


def test_join_lemmas_small_budget():
    rep = ver.verify_join_lemmas(7)
    assert rep.ok, rep.violations[:3]
    assert rep.star_checks > 0 and rep.unicyclic_checks > 0


def test_brace_case_names():
    assert ver.brace_case((1, 2, 2)) == "theta122"
    assert ver.brace_case((3, 3, 3)) == "a=b=c>=3"
    assert ver.brace_case((2, 2, 5)) == "a=b=2,c>=3"
    assert ver.brace_case((1, 3, 3)) == "uncovered"


def test_majorant_arithmetic_at_fourteen():
    rep = ver.verify_case_bounds(14)
    assert rep.mode == "arithmetic" and rep.ok
    first = rep.majorants[0]
    assert (first["majorant"], first["target"]) == (146, 154)


def test_case_buckets_nine():
    rep = ver.verify_case_bounds(9)
    rows = {r.bucket: r for r in rep.rows}
    assert rows["theta222"].max_value == 44
    assert rows["theta222"].families == ["B5_9"]
    assert rows["G2"].max_value == 48 and rows["G2"].bound_holds
    assert rows["theta122"].argmax_match
    assert rep.ok


def test_case_buckets_twelve():
    rep = ver.verify_case_bounds(12)
    rows = {r.bucket: r for r in rep.rows}
    assert rows["theta122"].max_value == 105
    assert rows["theta122"].families == ["B4_12"]
    assert rep.ok


def test_case_bounds_fail_at_six():
    # K_{2,3} alone already exceeds the stated theta(2,2,2) bound at m=6
    rep = ver.verify_case_bounds(6)
    rows = {r.bucket: r for r in rep.rows}
    assert rows["theta222"].max_value == 6 and rows["theta222"].bound == 2
    assert not rows["theta222"].bound_holds
    assert not rep.ok


def test_summary_csv():
    text = ver.summary_csv([ver.verify_unicyclic_lemma(3)])
    assert text.splitlines()[0] == "m,population,max,expected,value_match,argmax_match,closed_form_match,families"
    assert text.splitlines()[1].startswith("3,1,0,0,True,True,True,")


def test_claim_tables():
    assert ver.claim_bicyclic(11) == (86, ["B"])
    assert ver.claim_unicyclic(8) == (45, [3])
    assert [s.label for s in ver.closed_form_argmax(7, 22)] == ["B2_7", "B3_7"]
    assert len(unicyclic_graphs(9)) == ver.verify_unicyclic_lemma(9).population
