import json
import pathlib

import pytest

import swapdeon

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_version_and_registry():
    assert swapdeon.__version__ == "0.1.0"
    names = swapdeon.logics(2)
    assert len(names) == 10
    assert names[0] == "DmbC"
    assert "CnD-strict(2)" in names


def test_render_and_errors():
    assert swapdeon.render("O(p -> q) -> (O p -> O q)") == "O(p -> q) -> O p -> O q"
    assert swapdeon.render("p & q | r", full=True) == "(p & q) | r"
    with pytest.raises(swapdeon.SwapdeonError):
        swapdeon.render("p ->")
    with pytest.raises(swapdeon.SwapdeonError):
        swapdeon.render("p", logic="cnd")


def test_tables_and_axioms():
    table = swapdeon.truth_table("dbc", "neg")
    assert "F   | {T}" in table
    ids = [a for a, _ in swapdeon.axioms("cnd-strict", 2)]
    assert "SD_n" in ids and "D_n" in ids


def test_countermodel_rechecks_clean():
    v = swapdeon.find_countermodel("dmbc", ["O p", "O ~p"], "O q", max_worlds=1)
    assert v["verdict"] == "countermodel"
    assert swapdeon.check_model(v["model"]) == []
    doc = json.loads(v["model"])
    assert doc["logic"] == "dmbc"


def test_bounded_validity_and_disabled_restriction():
    goal = "O p -> snotn(O snotn(p))"
    on = swapdeon.find_countermodel("cnd", [], goal, n=2, max_worlds=2)
    assert on["verdict"] == "no_counterexample_within_bounds"
    off = swapdeon.find_countermodel("cnd", [], goal, n=2, max_worlds=2, disable=["CN-REST"])
    assert off["verdict"] == "countermodel"


def test_proof_fixture_and_cli():
    ok, step, _ = swapdeon.verify_proof((FIXTURES / "proofs" / "p_imp_p.json").read_text())
    assert ok and step == 0
    code, out, _ = swapdeon.run_cli(["--version"])
    assert code == 0 and out.startswith("swapdeon ")
