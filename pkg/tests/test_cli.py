import csv
import io
import json
import math
from pathlib import Path

import pytest

from zetareg.cli import constants_table, main

GOLDEN = Path(__file__).parent / "golden"


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def parse_kv(text):
    return dict(line.split(" ", 1) for line in text.strip().splitlines())


def test_eval_examples():
    code, out = run(["eval", "hurwitz_zeta_deriv", "--k", "0", "--s", "0", "--x", "0.3"])
    assert code == 0
    assert abs(float(parse_kv(out)["value"]) - 0.2) <= 1e-15
    code, out = run(["eval", "abel_trig_limit", "--j", "0", "--kind", "cos", "--x", "0.3"])
    assert code == 0 and abs(float(parse_kv(out)["value"]) + 0.5) <= 1e-10
    code, out = run(["eval", "stieltjes", "--n", "1", "--x", "0.5"])
    kv = parse_kv(out)
    assert kv["method"] == "direct_series"
    assert len(kv["value"].lstrip("-").replace(".", "").lstrip("0")) >= 16


def test_exit_codes(tmp_path, capsys):
    assert run(["eval", "stieltjes", "--n", "1"])[0] == 2
    assert run(["eval", "stieltjes", "--n", "1", "--x", "-1"])[0] == 2
    assert run(["eval", "no_such_quantity"])[0] == 2
    assert run(["--abel-levels", "4", "--abel-eps0", "0.1", "eval", "abel_trig_limit",
                "--j", "2", "--kind", "sin", "--x", "0.01"])[0] == 3
    assert run(["verify", "--filter", "I-3.6", "--out", str(tmp_path / "no" / "r.json")])[0] == 4
    assert run(["--em-order", "3", "constants"])[0] == 2


def test_verify_writes_report_and_summary(tmp_path):
    path = tmp_path / "r.json"
    code, out = run(["verify", "--filter", "I-7", "--plan", "smoke", "--out", str(path)])
    assert code == 0
    doc = json.loads(path.read_text())
    assert set(doc) == {"tool_version", "context", "cases", "summary"}
    s = doc["summary"]
    assert s["total"] == len(doc["cases"]) == s["passed"] + s["failed"]
    assert s["failed"] == 0
    assert out.startswith(f"total {s['total']} passed")


def test_verify_empty_filter():
    code, out = run(["verify", "--filter", "I-none", "--format", "csv"])
    assert code == 0
    assert out == "id,param,lhs,rhs,residual,tol,pass\n"


def test_verify_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["verify", "--filter", "I-5", "--format", "csv", "--out", str(a)])
    run(["verify", "--filter", "I-5", "--format", "csv", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv, golden", [
    (["verify", "--filter", "I-3.6", "--format", "csv"], "verify_I-3.6_smoke.csv"),
    (["verify", "--filter", "I-7.6", "--format", "json"], "verify_I-7.6_smoke.json"),
    (["table", "stieltjes", "--n", "1", "--grid", "0.1:0.9:9"], "table_stieltjes_n1.csv"),
])
def test_golden_files(argv, golden):
    code, out = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_table_rows_and_midpoint():
    code, out = run(["table", "stieltjes", "--n", "1", "--grid", "0.1:0.9:9"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9
    mid = rows[4]
    assert float(mid["x"]) == 0.5
    g1 = -0.072815845483676724861
    closed = g1 - math.log(2) ** 2 - 2 * 0.57721566490153286 * math.log(2)
    assert abs(float(mid["value"]) - closed) <= 1e-12


def test_table_matches_eval():
    code, out = run(["table", "zeta2_fourier", "--grid", "0.1:0.9:9"])
    rows = list(csv.DictReader(io.StringIO(out)))
    for r in rows[::4]:
        _, single = run(["eval", "zeta2_fourier", "--x", r["x"]])
        assert parse_kv(single)["value"] == r["value"]


def test_bad_grid():
    assert run(["table", "stieltjes", "--n", "1", "--grid", "0.1:0.9"])[0] == 2


def test_constants():
    rows = {r[0]: r for r in constants_table(None)}
    assert len(rows) == 10
    assert rows["zeta''(0,1/2)"][4] <= 1e-9
    assert rows["logG(1/2)"][4] <= 1e-8
    assert rows["gamma1(1/4)"][4] <= 1e-8
    assert all(r[4] <= 1e-9 for r in rows.values())
    code, out = run(["constants"])
    assert code == 0 and "beta'(1)" in out
