import json

import pytest

from hookbias.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_btable_csv(capsys):
    code, out, _ = run(capsys, "btable", "--t", "3", "--k", "2", "--n-max", "20", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,b" and len(lines) == 22
    assert lines[1] == "0,0"


def test_btable_json_and_pointwise(capsys):
    _, out3, _ = run(capsys, "btable", "--t", "3", "--k", "2", "--n-max", "20", "--format", "json")
    _, out4, _ = run(capsys, "btable", "--t", "4", "--k", "2", "--n-max", "20", "--format", "json")
    v3, v4 = json.loads(out3)["values"], json.loads(out4)["values"]
    assert json.loads(out3)["t"] == 3
    assert all(v4[n] >= v3[n] for n in v3)


def test_btable_to_file(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert run(capsys, "btable", "--t", "2", "--n-max", "5", "--out", str(out))[0] == 0
    assert out.read_text().startswith("n,b\n0,0\n")


def test_usage_errors(capsys):
    assert run(capsys, "btable", "--t", "1", "--n-max", "3")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["btable", "--t", "3", "--n-max", "-4"])
    assert e.value.code == 2


def test_verify_prior_biases(capsys):
    code, out, err = run(capsys, "verify", "prior-biases", "--n-max", "20")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(records) == 3
    assert all(r["status"] == "pass" and "runtime_ms" not in r for r in records)
    assert "PASS" in err


def test_verify_output_is_deterministic(capsys):
    a = run(capsys, "verify", "conjecture", "--t-min", "3", "--t-max", "4", "--n-max", "15")
    b = run(capsys, "verify", "conjecture", "--t-min", "3", "--t-max", "4", "--n-max", "15")
    assert a[1] == b[1] and a[0] == 0
    assert "numeric evidence, not proof" in a[1] and "numeric evidence, not proof" in a[2]


def test_verify_series_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "series", "--order", "60")
    records = {r["claim_id"]: r for r in map(json.loads, out.splitlines())}
    assert records["series.A1a-negative-support"]["details"]["negative_support"] == [5]
    assert records["series.B2b-negative-support"]["details"]["negative_support"] == [0]
    assert records["series.B2a-negative-support"]["status"] == "fail"
    assert code == 1


def test_table1_diff(capsys):
    code, out, err = run(capsys, "table1")
    assert "(16)" in out and "(15,3,3,1)" in out
    assert code == 1 and "(17,4,1)" in err.replace("[17, 4, 1]", "(17,4,1)")


def test_table1_json(capsys):
    _, out, _ = run(capsys, "table1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[0]["complement"] == [20] and rows[-1]["complement"] is None
