import json

import pytest

from qrdesigns.cli import main


@pytest.fixture(scope="module")
def code14(tmp_path_factory):
    path = tmp_path_factory.mktemp("codes") / "code14.json"
    assert main(["build", "--q", "3", "--p", "13", "--out", str(path)]) == 0
    return str(path)


def test_build_rejects_non_residue(capsys):
    assert main(["build", "--q", "3", "--p", "5"]) == 2
    assert "not a quadratic residue mod 5" in capsys.readouterr().err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["design"])
    assert e.value.code == 2
    assert main(["wdist", "/nonexistent.json"]) == 2


def test_wdist_json(code14, capsys):
    assert main(["wdist", code14, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["weight_distribution"]["10"] == 546


def test_design_row_lambda_180(code14, capsys):
    assert main(["design", code14, "--t", "3"]) == 0
    row = next(line for line in capsys.readouterr().out.splitlines() if "l= 10" in line)
    assert "lambda=180" in row


def test_jacobi_both_modes_agree(code14, capsys):
    main(["jacobi", code14, "--t", "3", "--json"])
    a = json.loads(capsys.readouterr().out)
    main(["jacobi", code14, "--t", "3", "--orbits", "--json"])
    b = json.loads(capsys.readouterr().out)
    assert a == b and len(a) == 2 and sum(x["subset_count"] for x in a) == 364


def test_harmonic_and_am(code14, capsys):
    assert main(["harmonic", code14, "--k", "3", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert len(rep["basis"]) == 1
    assert main(["am", code14]) == 0
    assert json.loads(capsys.readouterr().out)["max_t"] == 0


def test_report_is_deterministic(code14, capsys):
    main(["report", code14])
    first = capsys.readouterr().out
    main(["--threads", "3", "report", code14])
    assert capsys.readouterr().out == first
    assert json.loads(first)["delta_s"]["multiset_excluding_complete"] == {"delta": 2, "s": 3}


def test_manifest(code14, tmp_path, capsys):
    m = tmp_path / "m.json"
    assert main(["--threads", "2", "--manifest", str(m), "wdist", code14]) == 0
    data = json.loads(m.read_text())
    assert data["command"] == "wdist" and data["threads"] == 2
    assert data["code"]["n"] == 14 and len(data["code"]["weight_distribution_digest"]) == 16


@pytest.mark.parametrize("target", ["thm4.1", "rem5.2", "ex2.2", "thm3.2"])
def test_reproduce_targets(target, capsys):
    assert main(["reproduce", "--target", target]) == 0
    out = capsys.readouterr().out
    assert f"== {target}: PASS" in out and "[FAIL]" not in out


def test_thm41_mentions_816_subsets(capsys):
    main(["reproduce", "--target", "thm4.1"])
    assert "over 816 subsets" in capsys.readouterr().out


def test_guard_exit_code(tmp_path, capsys):
    path = tmp_path / "big.json"
    assert main(["build", "--q", "4", "--p", "43", "--out", str(path)]) == 0
    assert main(["wdist", str(path)]) == 3
    assert "guard" in capsys.readouterr().err


def test_threads_env(monkeypatch):
    from qrdesigns import parallel

    monkeypatch.setenv("QRD_THREADS", "5")
    assert parallel.default_threads() == 5
