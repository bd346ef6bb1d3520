import json
import subprocess
import sys

import pytest

from functorhh.cli import run


@pytest.fixture(scope="module")
def ws(tmp_path_factory):
    d = tmp_path_factory.mktemp("ws")
    assert run(["fixtures", str(d)]) == 0
    return d


def call(capsys, *argv):
    capsys.readouterr()
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hh_table(ws, capsys):
    code, out, _ = call(capsys, "hh", "--monoid", ws / "dual.json", "--bimodule", "self", "--max-degree", 3,
                        "--at", "all")
    assert code == 0
    assert out.splitlines()[-1].split() == ["1", "2", "1", "1", "1"]


def test_hh_json_and_representatives(ws, capsys):
    code, out, _ = call(capsys, "--format", "json", "hh", "--monoid", ws / "graded_super.json", "--max-degree", 2,
                        "--representatives")
    doc = json.loads(out)
    assert code == 0
    assert doc["dims"]["0"] == {"e": 1, "g": 0}
    assert len(doc["representatives"]["0"]["e"]) == 1


def test_separability(ws, capsys):
    code, out, _ = call(capsys, "--format", "json", "separability", "--monoid", ws / "m2.json")
    doc = json.loads(out)
    assert code == 0 and doc["separable"] and len(doc["xi"]) == 16
    code, out, _ = call(capsys, "--format", "json", "separability", "--monoid", ws / "dual.json")
    assert code == 0 and not json.loads(out)["separable"]


def test_validate_broken_category(ws, capsys):
    code, _, err = call(capsys, "validate", ws / "broken_category.json")
    assert code == 1
    assert "symmetry involution failed at (g,g)" in err


def test_validate_everything_else(ws, capsys):
    for p in sorted(ws.glob("*.json")):
        if p.name == "broken_category.json":
            continue
        extra = ["--monoid", ws / "dual.json"] if p.name.startswith("dual_cocycle") else []
        code, _, err = call(capsys, "validate", p, *extra)
        assert code == 0, (p.name, err)


def test_parse_failures(ws, capsys, tmp_path):
    assert call(capsys, "validate", tmp_path / "nope.json")[0] == 2
    (tmp_path / "bad.json").write_text("[1,")
    assert call(capsys, "hh", "--monoid", tmp_path / "bad.json")[0] == 2
    assert call(capsys, "hh")[0] == 2
    assert call(capsys, "hh", "--monoid", ws / "dual.json", "--at", "zz")[0] == 2


def test_invalid_monoid_exits_one(ws, capsys, tmp_path):
    doc = json.loads((ws / "dual.json").read_text())
    doc["unit_element"] = [0, 1]
    doc["category"] = str(ws / doc["category"])
    (tmp_path / "m.json").write_text(json.dumps(doc))
    code, _, err = call(capsys, "validate", tmp_path / "m.json")
    assert code == 1 and "unit law" in err


def test_commutant_and_derivations(ws, capsys):
    code, out, _ = call(capsys, "--format", "json", "commutant", "--monoid", ws / "graded_super.json")
    assert json.loads(out)["commutant"]["g"]["dim"] == 0
    code, out, _ = call(capsys, "--format", "json", "derivations", "--monoid", ws / "dual.json")
    assert json.loads(out)["derivations"]["1"] == {"der": 1, "inn": 0, "hh1": 1}


def test_products_and_extensions(ws, capsys):
    m, c1, c2 = ws / "dual.json", ws / "dual_cocycle1.json", ws / "dual_cocycle2.json"
    code, out, _ = call(capsys, "--format", "json", "cup", "--monoid", m, "--cocycle", c1, "--cocycle", c1)
    assert code == 0 and json.loads(out)["cocycle"]
    code, out, _ = call(capsys, "--format", "json", "bracket", "--monoid", m, "--cocycle", c1, "--cocycle", c1)
    assert code == 0 and json.loads(out)["inner"]
    code, out, _ = call(capsys, "--format", "json", "extension", "--monoid", m, "--cocycle", c2)
    doc = json.loads(out)
    assert code == 0 and doc["split"] is False and doc["unit_element"] == [0, 0, 1, 0]
    code, out, _ = call(capsys, "--format", "json", "baer-sum", "--monoid", m, "--cocycle", c2, "--cocycle", c2)
    assert code == 0 and json.loads(out)["equivalent_to_sum_cocycle"]
    code, out, _ = call(capsys, "--format", "json", "semidirect", "--monoid", m)
    assert code == 0 and json.loads(out)["monoid"]["values"] == {"1": 4}
    code, _, _ = call(capsys, "extension", "--monoid", m, "--cocycle", c1)
    assert code == 2


def test_les(ws, capsys):
    code, out, _ = call(capsys, "--format", "json", "les", "--monoid", ws / "dual.json", "--max-degree", 3)
    doc = json.loads(out)
    assert code == 0 and doc["exact"]
    assert doc["les"]["1"]["dims_M"] == [4, 2, 2, 2]


def test_oracle_and_crosscheck(ws, capsys):
    code, out, _ = call(capsys, "--format", "json", "oracle", "--algebra", ws / "alg_dual.json")
    assert json.loads(out)["dims"] == [2, 1, 1, 1]
    code, out, _ = call(capsys, "crosscheck", "--named", "dual", "--field", "GF(2)")
    assert code == 0 and "match [2, 2, 2, 2]" in out
    code, _, _ = call(capsys, "crosscheck", "--random", 2)
    assert code == 0
    assert call(capsys, "crosscheck")[0] == 2


def test_reports_are_byte_identical(ws):
    argv = [sys.executable, "-m", "functorhh.cli", "--format", "json", "hh", "--monoid", str(ws / "xk_dual.json"),
            "--max-degree", "2", "--representatives"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
