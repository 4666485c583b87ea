from __future__ import annotations

import json

import pytest

from chromcat import builtin_names, bundled_library, load_builtin, load_group_file
from chromcat.cli import main
from chromcat.groups import GroupError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_builtin_library_loads():
    names = builtin_names()
    assert "a4" in names and "s6" in names
    a4 = load_builtin("a4")
    assert a4.order == 12 and a4.name == "A4"
    small = bundled_library(max_order=30)
    assert all(g.order <= 30 for _, g in small)
    with pytest.raises(GroupError):
        load_builtin("nope")


def test_load_group_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(GroupError):
        load_group_file(bad)
    missing_fields = tmp_path / "missing.json"
    missing_fields.write_text('{"degree": 2}')
    with pytest.raises(GroupError):
        load_group_file(missing_fields)


def test_category_dot_output(capsys):
    code, out, _ = run_cli(capsys, "category", "--group", "a4", "-p", "2", "-n", "2", "--format", "dot")
    assert code == 0
    assert 'V0 [label="rank=1 |Aut|=1"]' in out
    assert 'V1 [label="rank=2 |Aut|=3"]' in out
    assert '"3 morphisms, stab=1"' in out


def test_category_json_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "category", "--group", "a4", "-n", "1")
    code2, out2, _ = run_cli(capsys, "category", "--group", "a4", "-n", "1")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    auts = sorted(c["aut_order"] for c in payload["skeleton"]["classes"])
    assert auts == [1, 6]


def test_dot_json_agree_on_counts(capsys):
    _, dot, _ = run_cli(capsys, "category", "--group", "a4", "-n", "2", "--format", "dot")
    _, js, _ = run_cli(capsys, "category", "--group", "a4", "-n", "2")
    payload = json.loads(js)["skeleton"]
    assert dot.count("->") == len(
        [e for e in payload["edges"] if e["source"] != e["target"]]
    )
    assert dot.count("label=") - dot.count("->") == len(payload["classes"])


def test_colim_tower(capsys):
    code, out, _ = run_cli(capsys, "colim", "--group", "a4", "-p", "2", "-q", "4", "--tower")
    assert code == 0
    payload = json.loads(out)
    assert [lvl["size"] for lvl in payload["levels"]] == [6, 5]
    assert [lvl["n"] for lvl in payload["levels"]] == [2, 1]


def test_stab_and_elemab(capsys):
    code, out, _ = run_cli(capsys, "stab", "--group", "a4")
    assert code == 0
    assert json.loads(out)["stabilization_rank"] == 2
    code, out, _ = run_cli(capsys, "elemab", "--group", "a4", "-p", "2")
    payload = json.loads(out)
    assert payload["p_rank"] == 2
    assert len(payload["subgroups"]) == 5


def test_cr_command(capsys, tmp_path):
    gens = tmp_path / "chern.json"
    gens.write_text(json.dumps({"name": "chern", "generators": [
        "x^4 + x^2*y^2 + y^4", "x^4*y^2 + x^2*y^4",
    ]}))
    code, out, _ = run_cli(capsys, "cr", "--group", "a4", "--generators", str(gens))
    assert code == 0
    payload = json.loads(out)
    assert payload["equals"]["A^(1)"] is True
    assert payload["equals"]["quillen"] is False


def test_invariants_command(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--group", "a4", "-p", "2", "--max-degree", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariants"]["2"] == ["x^2 + x*y + y^2"]
    assert len(payload["invariants"]["3"]) == 2


def test_witness_command(capsys):
    code, out, _ = run_cli(capsys, "witness", "-p", "2", "-n", "1", "--max-order", "16")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] == ["A4"]


def test_a4_demo_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "a4-demo")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["b1_cube_degree3"] == "s^3 + s^2*t + t^3"


def test_input_errors_exit_two(capsys, tmp_path):
    code, _, err = run_cli(capsys, "group-info", "--group", "definitely-not-a-group")
    assert code == 2
    assert "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "X", "degree": 3, "generators": [[0, 0, 1]]}')
    code, _, err = run_cli(capsys, "group-info", "--group", str(bad))
    assert code == 2
    # unsupported subring precondition reports the module's message
    code, _, err = run_cli(capsys, "cr", "--group", "d8")
    assert code == 2
    assert "Sylow" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "stab", "--group", "a4", "-o", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["p_rank"] == 2


def test_colim_single_level(capsys):
    code, out, _ = run_cli(capsys, "colim", "--group", "a4", "-p", "2", "-q", "4", "-n", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 5
    assert payload["components"] == 1
    code, out, _ = run_cli(capsys, "colim", "--group", "d8", "-p", "2", "-q", "2", "-n", "inf")
    assert json.loads(out)["components"] == 2


def test_demo_failure_exits_one(capsys, monkeypatch):
    import chromcat.cli as cli_mod
    from chromcat.demo import DemoFailure

    def boom():
        raise DemoFailure("synthetic failure")

    monkeypatch.setattr(cli_mod, "a4_demo", boom)
    code, out, _ = run_cli(capsys, "a4-demo")
    assert code == 1
    assert json.loads(out)["ok"] is False
