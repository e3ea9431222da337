from __future__ import annotations

import json

import pytest

from alcovekit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kostant_a2_rows(capsys):
    code, out, _ = run(capsys, "kostant", "--group", "A2", "--depth", "2")
    data = json.loads(out)
    assert code == 0 and data["schema_version"] == cli.SCHEMA_VERSION
    rows = {tuple(r["gamma"]): r["K"] for r in data["rows"]}
    assert rows[(1, 1)] == "q^-1 + q^-2"
    assert len(rows) == 6


def test_kostant_depth_zero(capsys):
    code, out, _ = run(capsys, "kostant", "--depth", "0")
    assert code == 0
    assert json.loads(out)["rows"] == [{"gamma": [0], "K": "1"}]


def test_kostant_a1(capsys):
    _, out, _ = run(capsys, "kostant", "--group", "A1", "--depth", "3")
    assert [r["K"] for r in json.loads(out)["rows"]] == ["1", "q^-1", "q^-2", "q^-3"]


def test_expand_c_and_delta_in_c(capsys):
    _, out, _ = run(capsys, "expand", "c", "--mu", "0", "--depth", "2")
    assert len(json.loads(out)["element"]["terms"]) == 3
    _, out, _ = run(capsys, "expand", "delta-in-c", "--mu", "0")
    assert json.loads(out)["c_coefficients"] == [{"mu": [0], "coeff": "1"}, {"mu": [1], "coeff": "-q^-1"}]


def test_expand_phi_delta0(capsys):
    _, out, _ = run(capsys, "expand", "phi", "--mu", "0", "--word", "0", "--depth", "2")
    terms = {t["gamma"][0]: t["coeff"] for t in json.loads(out)["element"]["terms"]}
    assert terms == {-1: "-q^-1", 0: "1 - q^-2", 1: "q^-1 - q^-3", 2: "q^-2 - q^-4"}


def test_expand_specialized(capsys):
    _, out, _ = run(capsys, "expand", "c", "--mu", "0", "--depth", "2", "--v-mode", "2")
    assert [t["coeff"] for t in json.loads(out)["element"]["terms"]] == ["1", "1/4", "1/16"]


def test_verify_a2_passes(capsys):
    code, out, _ = run(capsys, "verify", "--group", "A2", "--depth", "4",
                       "--suites", "spherical,hecke,periodic,ktheory")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert all(c["anchor"] for checks in data["suites"].values() for c in checks)


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--group", "A1", "--depth", "4", "--suites", "periodic",
                       "--inject", "taction-sign")
    data = json.loads(out)
    assert code == 1
    failed = [c for c in data["suites"]["periodic"] if not c["passed"]]
    assert failed[0]["name"] == "module_relations"
    assert failed[0]["detail"]["alcove"] == {"kbeta": [0], "word": []}
    assert failed[0]["detail"]["relation"].startswith("quadratic")


def test_complex_and_ktheory(capsys):
    code, out, _ = run(capsys, "complex", "--group", "A2")
    assert code == 0 and json.loads(out)["exact"]
    code, out, _ = run(capsys, "ktheory", "--group", "A1")
    data = json.loads(out)
    assert code == 0 and "kappa" in data["classes"]
    assert all("/" not in v for v in data["push_to_point"].values())


@pytest.mark.parametrize("argv", [
    ["kostant", "--depth", "-1"],
    ["expand", "c", "--depth", "0"],
    ["verify", "--group", "A2", "--oracle-p", "3", "--oracle-M", "3"],
    ["verify", "--suites", "oracle"],
    ["verify", "--oracle-p", "4", "--oracle-M", "3"],
    ["kostant", "--group", "Z5"],
    ["kostant", "--v-mode", "abc"],
    ["expand", "c", "--mu", "1,2"],
    ["nope"],
])
def test_config_errors_exit_2(capsys, argv):
    assert cli.main(argv) == 2


def test_config_file_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\ngroup = A2\ndepth = 1\n")
    _, out, _ = run(capsys, "kostant", "--config", str(cfg))
    data = json.loads(out)
    assert data["group"] == "A2" and len(data["rows"]) == 3
    _, out, _ = run(capsys, "kostant", "--config", str(cfg), "--depth", "2")
    assert len(json.loads(out)["rows"]) == 6
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = red\n")
    assert cli.main(["kostant", "--config", str(bad)]) == 2


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.main(["verify", "--group", "A1", "--depth", "3", "--suites", "hecke,complex", "--output", str(a)])
    cli.main(["verify", "--group", "A1", "--depth", "3", "--suites", "hecke,complex", "--output", str(b),
              "--jobs", "2"])
    assert a.read_bytes() == b.read_bytes()
