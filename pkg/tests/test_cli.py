import io
import json

import pandas as pd
import pytest

from meixner_scheme.cli import main


def test_classify_hermite(capsys):
    assert main(["classify", "--lambda", "0", "--k2", "-1/2", "--kappa", "0"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["case"] == "I-Hermite"
    assert data["u_coeffs"][:3] == ["0", "1", "0"]


def test_classify_not_orthogonal(capsys):
    assert main(["classify", "--lambda", "0", "--k2", "-1", "--kappa", "2/3"]) == 2
    assert json.loads(capsys.readouterr().out)["case"] == "NotOrthogonal"


def test_classify_krawtchouk_boundary(capsys):
    assert main(["classify", "--lambda", "0", "--k2", "-1", "--kappa", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["case"] == "VI-Krawtchouk"
    assert data["params"]["N"] == "1"


def test_classify_degenerate():
    assert main(["classify", "--lambda", "1", "--k2", "0", "--kappa", "0"]) == 2


def test_malformed_rational_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--lambda", "x", "--k2", "-1", "--kappa", "0"])
    assert info.value.code == 1
    assert "'x'" in capsys.readouterr().err


def test_expand_charlier_csv(capsys):
    assert main(["expand", "--family", "charlier:a=1", "-n", "3"]) == 0
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out), dtype=str)
    assert list(frame["n"]) == ["0", "1", "2", "3"]
    assert frame.loc[2, "polynomial"] == "x^2 - 3*x + 1"


def test_expand_raises_low_order(capsys, caplog):
    assert main(["expand", "--lambda", "-1", "--k2", "-1", "--kappa", "0", "--l1", "-1",
                 "-n", "3", "--order", "2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[2]["polynomial"] == "x^2 - 3*x + 1"
    assert "raised" in caplog.text


def test_expand_unknown_family_is_usage_error():
    assert main(["expand", "--family", "legendre", "-n", "2"]) == 1


def test_table_hermite(capsys):
    assert main(["table", "--family", "hermite", "-n", "2", "--x", "1"]) == 0
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out), dtype=str)
    assert frame.loc[2, "c_n"] == "1/8"
    assert frame.loc[2, "p_n(1)"] == "2"


def test_verify_family(capsys):
    assert main(["verify", "--family", "krawtchouk:p=1/2,N=4"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]


def test_verify_all_is_deterministic(tmp_path, monkeypatch):
    monkeypatch.setenv("MEIXNER_OUT_DIR", str(tmp_path))
    assert main(["verify", "--all", "--no-limits", "--count", "5", "--out", "first.json"]) == 0
    assert main(["verify", "--all", "--no-limits", "--count", "5", "--out", "second.json"]) == 0
    first = (tmp_path / "first.json").read_bytes()
    assert first == (tmp_path / "second.json").read_bytes()
    assert json.loads(first)["passed"]


def test_limits_table(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MEIXNER_OUT_DIR", str(tmp_path))
    code = main(["limits", "--edge", "charlier-hermite", "-n", "2", "--eps-decades", "6",
                 "--out", "limits.csv"])
    assert code == 0
    frame = pd.read_csv(tmp_path / "limits.csv")
    assert len(frame) == 6
    assert frame["error"].is_monotonic_decreasing
    assert "passed=True" in capsys.readouterr().err


def test_identities(capsys):
    assert main(["identities", "--seed", "1", "--count", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]


def test_negative_fraction_values(capsys):
    assert main(["classify", "--lambda", "-1/3", "--k2", "-1/2", "--kappa", "0"]) == 0
    assert json.loads(capsys.readouterr().out)["case"] == "III-Charlier"
    assert main(["table", "--family", "hermite", "-n", "2", "--x", "-1/2"]) == 0
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out), dtype=str)
    assert frame.loc[2, "p_n(-1/2)"] == "-1"


def test_expand_latex_table(capsys):
    assert main(["expand", "--family", "charlier:a=1", "-n", "2", "--format", "latex-table"]) == 0
    out = capsys.readouterr().out
    assert "\\begin{tabular}" in out
    assert "polynomial" in out
