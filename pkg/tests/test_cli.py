import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from artifact.cli import UsageError, main, parse_half, parse_range
from artifact.qrat import QRat, parse_qrat


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sl2_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "sl2", "--class", "unramified", "--depth", "1",
                       "--center", "black", "--n", "0..3", "--numeric", "3")
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 4
    for r in recs:
        v = parse_qrat(r["value"])
        assert str(v(3)) == r["numeric"]["value"]


def test_csv_header(capsys):
    code, out, _ = run(capsys, "compute", "sl2", "--class", "split", "--depth", "2", "--n", "0,1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "subject" and rows[0][-2:] == ["value", "numeric"]
    assert len(rows) == 3


def test_latex(capsys):
    code, out, _ = run(capsys, "compute", "gsp4", "--type", "3", "--n", "1", "--method", "closed", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\begin{tabular}") and r"\end{tabular}" in out


def test_gsp4_both(capsys):
    code, out, _ = run(capsys, "compute", "gsp4", "--type", "3", "--n", "2", "--method", "both")
    assert code == 0
    vals = {r["params"].get("quantity", i): r["value"] for i, r in enumerate(json.loads(out))}
    assert len(vals) == 3
    assert any(parse_qrat(v) == 0 for v in vals.values())


def test_relative(capsys):
    code, out, _ = run(capsys, "compute", "relative", "--case", "auto", "--inv1", "split:2",
                       "--inv2", "ram:1/2", "--delta", "3/2")
    assert code == 0
    (rec,) = json.loads(out)
    parse_qrat(rec["value"])
    code, out, _ = run(capsys, "compute", "relative", "--inv1", "split:1", "--inv2", "split:2", "--core", "shared_ray")
    assert code == 0 and json.loads(out)[0]["value"] == "divergent"


def test_descent_and_treecount(capsys):
    code, out, _ = run(capsys, "compute", "descent", "--kind", "weyl-pair", "--t1", "2", "--t2", "3")
    assert code == 0 and parse_qrat(json.loads(out)[0]["value"]) == QRat(Fraction(25, 36))
    code, out, _ = run(capsys, "compute", "treecount", "--op", "ball", "--alpha", "1", "--numeric", "2")
    assert code == 0 and json.loads(out)[0]["numeric"]["value"] == "4"


def test_precondition_errors(capsys):
    code, _, err = run(capsys, "compute", "gsp4", "--type", "2", "--n", "1")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "compute", "relative", "--inv1", "split:1", "--inv2", "unram:1", "--delta", "1/2")
    assert code == 2
    code, _, _ = run(capsys, "compute", "sl2", "--n", "a..b")
    assert code == 2
    code, _, _ = run(capsys, "verify", "sl2", "--q", "1")
    assert code == 2
    with pytest.raises(SystemExit) as e:
        main(["compute", "nothing"])
    assert e.value.code == 2


def test_deterministic(capsys):
    argv = ("compute", "gl2gl2", "--case", "elliptic", "--inv1", "unram:1", "--inv2", "ram:1/2", "--n", "0..2", "--m", "1")
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b and a[0] == 0


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "gsp4-regions", "--max-n", "3")
    assert code == 0
    assert json.loads(out)["failed"] == 0


def test_half_parsing():
    assert parse_half(".5") == parse_half("1/2") == parse_half("0.5")
    assert parse_half("3").is_integer
    with pytest.raises(UsageError):
        parse_half("1/3")
    assert parse_range("0..3") == [0, 1, 2, 3]
    assert parse_range("1,4") == [1, 4]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "artifact", "compute", "descent", "--kind", "special", "--n", "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)
