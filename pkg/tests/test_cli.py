import json
import os
import subprocess
import sys

import jsonschema
import pytest

from walsh_forge.cli import main
from walsh_forge.report import report_schema


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "walsh_forge", *args], capture_output=True,
                          text=True, env=env)


def test_field_deterministic(tmp_path):
    a = run("field", "--p", "3", "--n", "4")
    b = run("field", "--p", "3", "--n", "4")
    assert a.returncode == 0 and a.stdout == b.stdout
    desc = json.loads(a.stdout)
    assert desc["p"] ** desc["n"] == 81
    out = tmp_path / "f.json"
    assert main(["field", "--p", "3", "--n", "4", "--out", str(out)]) == 0
    assert out.read_text() == a.stdout


def test_field_rejects_p2():
    r = run("field", "--p", "2", "--n", "4")
    assert r.returncode == 2
    assert "odd characteristic only" in r.stderr


def test_spectrum_verdicts(capsys):
    assert main(["spectrum", "--p", "3", "--n", "4", "--f", "Tr(x^34 + x^2)"]) == 0
    assert "weakly regular bent" in capsys.readouterr().out
    assert main(["spectrum", "--p", "3", "--n", "4", "--f", "Tr(x^1)"]) == 0
    assert "not bent" in capsys.readouterr().out
    assert main(["spectrum", "--p", "3", "--n", "4", "--f", "Tr(xi^10 x^22 + x^4)"]) == 0
    assert "bent, not weakly regular" in capsys.readouterr().out


def test_spectrum_parse_error(capsys):
    assert main(["spectrum", "--p", "3", "--n", "4", "--f", "Tr(x^^)"]) == 2
    assert "parse error at column" in capsys.readouterr().err


def test_spectrum_size_cap(capsys):
    assert main(["spectrum", "--p", "3", "--n", "10", "--f", "Tr(x^2)"]) == 2
    assert "cap" in capsys.readouterr().err


def test_spectrum_outputs(tmp_path):
    js, cs = tmp_path / "s.json", tmp_path / "s.csv"
    assert main(["spectrum", "--p", "3", "--n", "2", "--f", "Tr(x^2)", "--out", str(js)]) == 0
    obj = json.loads(js.read_text())
    assert len(obj["entries"]) == 9 and obj["verdict"] == "regular bent"
    assert main(["spectrum", "--p", "3", "--n", "2", "--f", "Tr(x^2)", "--out", str(cs),
                 "--format", "csv"]) == 0
    lines = cs.read_text().splitlines()
    assert lines[0] == "b_log,b_coords,coeff_vector,mag_sq"
    assert len(lines) == 10 and all(line.endswith(",9") for line in lines[1:])


def test_spectrum_field_file(tmp_path, capsys):
    fpath = tmp_path / "f.json"
    main(["field", "--p", "3", "--n", "4", "--out", str(fpath)])
    assert main(["spectrum", "--field", str(fpath), "--f", "Tr(x^34 + x^2)"]) == 0
    assert "weakly regular bent" in capsys.readouterr().out


def test_spectrum_cache(tmp_path):
    env = {**os.environ, "WALSH_FORGE_CACHE_DIR": str(tmp_path / "cache")}
    r1 = run("spectrum", "--p", "3", "--n", "4", "--f", "Tr(x^34+x^2)", env=env)
    files = list((tmp_path / "cache").iterdir())
    assert r1.returncode == 0 and len(files) == 1
    r2 = run("spectrum", "--p", "3", "--n", "4", "--f", "Tr(x^34 + x^2)", env=env)
    assert r2.stdout == r1.stdout
    assert list((tmp_path / "cache").iterdir()) == files


@pytest.mark.parametrize("claim", ["theorem1", "prop1", "prop2", "prop3", "cor1", "cor2",
                                   "crosscheck"])
def test_verify_claims(claim, tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", claim, "--p", "3", "--k", "1", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    jsonschema.validate(report, report_schema())
    assert report["pass"] and report["claim"] == claim


def test_verify_fact1(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "fact1", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    jsonschema.validate(report, report_schema())
    assert 10 in report["details"]["qualifying_logs"]


def test_verify_all_with_artifacts(tmp_path):
    out = tmp_path / "r.json"
    art = tmp_path / "art"
    assert main(["verify", "all", "--p", "3", "--k", "1", "--out", str(out),
                 "--artifacts", str(art), "--jobs", "2"]) == 0
    report = json.loads(out.read_text())
    jsonschema.validate(report, report_schema())
    assert set(report["details"]) == {"theorem1", "fact1", "prop1", "prop2", "prop3", "cor1",
                                      "cor2", "crosscheck"}
    assert all(os.path.exists(a) for a in report["artifacts"]) and report["artifacts"]


def test_verify_budget(capsys):
    assert main(["verify", "prop1", "--p", "3", "--k", "3"]) == 2
    assert "budget" in capsys.readouterr().err


def test_verify_usage_errors(capsys):
    assert main(["verify", "prop1", "--p", "3"]) == 2
    assert main(["verify", "prop1", "--p", "4", "--k", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_falsified_exit_code(monkeypatch, capsys):
    import walsh_forge.cli as cli
    from walsh_forge.report import Report

    def broken(params):
        rep = Report("prop1", params.as_dict())
        rep.fail("synthetic", a=[0, 0, 0, 0])
        return rep
    monkeypatch.setattr(cli, "verify_prop1", broken)
    assert main(["verify", "prop1", "--p", "3", "--k", "1"]) == 1
    assert "FAIL" in capsys.readouterr().out
