import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import delpezzo

FIXTURES = Path(
    os.environ.get(
        "DELPEZZO_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"
    )
)


def fixture(name):
    with open(FIXTURES / f"{name}.json") as fh:
        return json.load(fh)


def expanded_types(report):
    out = []
    for f in report["configuration"]["fibres"]:
        out.extend([f["type"]] * f["degree"])
    return sorted(out)


def test_analyze_cuspidal_cubic_pencil():
    report = delpezzo.analyze(fixture("ex1_1"))
    assert expanded_types(report) == ["II", "II*"]
    assert report["configuration"]["euler_total"] == 12
    assert report["configuration"]["mw_rank"] == 0
    assert report["configuration"]["extremal"] is True
    assert report["torsion_hint"] == 1


def test_analyze_i5_configuration_and_table_override():
    report = delpezzo.analyze(fixture("ex1_5"))
    assert expanded_types(report) == ["I1", "I1", "I5", "I5"]
    assert report["torsion_hint"] == 5
    # under a replacement table without this configuration the hint is gone
    other = {
        "version": 1,
        "records": [
            {
                "fibres": ["I9", "I1", "I1", "I1"],
                "mw_order": 3,
                "aut_f0_order": 2,
                "base_group_bound": 6,
            }
        ],
    }
    assert delpezzo.analyze(fixture("ex1_5"), extremal_table=other)["torsion_hint"] is None


def test_verify_action_accepts_and_rejects():
    model = fixture("ex1_1")
    action = fixture("ex1_1_action")
    report = delpezzo.verify_action(model, action, sections=fixture("ex1_1_sections"))
    assert report["ok"] is True
    assert report["invariance"]["invariant"] is True
    assert report["base"]["order"] == action["p"] == 7
    assert report["base"]["fixed_points"] == ["0", "inf"]
    assert [s["stable"] for s in report["sections"]] == [True]

    corrupted = dict(action, wx=action["wx"] + 1)
    bad = delpezzo.verify_action(model, corrupted)
    assert bad["ok"] is False
    assert bad["invariance"]["offending"]


def test_verify_action_section_list():
    report = delpezzo.verify_action(
        fixture("ex1_3"),
        fixture("ex1_3_action"),
        sections=fixture("ex1_3_sections")["sections"],
    )
    assert report["ok"] is True
    assert len(report["sections"]) == 3


def test_blowup_tangent_tower():
    report = delpezzo.blowup(fixture("ex1_6"))
    res = report["result"]
    assert res["n"] == 3
    assert res["k_squared"] == 6
    assert report["contraction"]["sing"] == "A2+A1"
    assert report["contraction"]["picard_after"] == 1
    dec = report["anticanonical"]["per_curve"]["E3"]
    assert dec["d"] == 6
    assert dec["nonnegative"] is True
    assert all(Fraction(q) >= 0 for q in dec["q"])


def test_classify_and_disambiguation():
    rec = delpezzo.classify("A7")
    assert rec["action_count_p_ge_5"] == "0"
    assert rec["aut_finite"] is True
    with pytest.raises(ValueError):
        delpezzo.classify("E8")
    one = delpezzo.classify("E8", disambiguator="exactly two")
    many = delpezzo.classify("E8", disambiguator="three or more")
    assert one["action_count_p_ge_5"] == "1"
    assert many["action_count_p_ge_5"] == "0"
    assert many["aut_finite"] is True


def test_chain_roundtrip_and_violation():
    chain = delpezzo.propagate_chain(2, 5, 11, 6)
    assert delpezzo.check_chain(chain)["ok"] is True
    chain["pairs"][3][0] += 1
    verdict = delpezzo.check_chain(chain)
    assert verdict["ok"] is False
    assert verdict["violation"] == {"kind": "link", "index": 2}


def test_tables_are_sound():
    table = delpezzo.classification_table()
    assert len(table["records"]) == 27
    assert delpezzo.validate_classification_table(table)["ok"] is True
    assert len(delpezzo.extremal_fibrations()["records"]) == 5


def test_degenerate_model_raises():
    with pytest.raises(ValueError):
        delpezzo.analyze({"A": [], "B": []})
