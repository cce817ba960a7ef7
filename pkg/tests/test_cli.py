"""End to end runs of the command line front end.

Frozen byte-level outputs pin the wire formats; exit codes cover the four
documented outcomes.  The only mocked piece is a deliberately failing
verification used to exercise the nonzero exit path, since every real
check currently passes.
"""

import csv
import io
import json

import blockiso.cli as cli
from blockiso import isometry
from blockiso.reporting import Report


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_verify_val_example(capsys):
    rc, out = run(capsys, "verify", "val", "--p", "2", "--w", "2")
    assert rc == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0]["status"] == "meta"
    assert "guards" in lines[0]["witness"]
    assert "orderings" in lines[0]["witness"]
    body = lines[1:]
    assert body and all(r["status"] == "pass" for r in body)
    assert all(r["check"] == "val" for r in body)


def test_isometry_example_bytes(capsys):
    rc, out = run(capsys, "isometry", "--p", "2", "--w", "1", "--core", "")
    assert rc == 0
    assert out.splitlines() == [
        '{"lambda": "2", "psi": ["1", ""], "sign": 1}',
        '{"lambda": "1,1", "psi": ["", "1"], "sign": 1}',
    ]


def test_verify_centp_example(capsys):
    rc, out = run(capsys, "verify", "centp", "--p", "2", "--w", "3", "--e", "1")
    assert rc == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[0]["status"] == "meta"
    assert all(r["status"] == "pass" for r in records[1:])


def test_core_quotient_sign_frozen(capsys):
    rc, out = run(capsys, "core", "--partition", "4,3,1,1", "--p", "2")
    assert rc == 0
    assert out == '{"core": "2,1", "p": 2, "partition": "4,3,1,1", "weight": 3}\n'
    rc, out = run(capsys, "quotient", "--partition", "4,3,1,1", "--p", "2")
    assert rc == 0
    assert out == '{"p": 2, "partition": "4,3,1,1", "quotient": ["1", "1,1"]}\n'
    rc, out = run(capsys, "sign", "--partition", "2,1", "--p", "3")
    assert rc == 0
    assert out == '{"over": "", "p": 3, "partition": "2,1", "sign": -1}\n'


def test_gamma_frozen(capsys):
    rc, out = run(capsys, "gamma", "--core", "1,1", "--p", "3")
    assert rc == 0
    assert out == '{"circular_start": 1, "core": "1,1", "gamma": [2, 0, 1], "p": 3}\n'
    rc, out = run(capsys, "gamma", "--core", "1", "--p", "3")
    assert rc == 0
    assert json.loads(out)["circular_start"] is None


def test_char_frozen(capsys):
    rc, out = run(capsys, "char", "--n", "4", "--lambda", "3,1", "--class", "2,1,1")
    assert rc == 0
    assert json.loads(out)["value"] == 1
    rc, out = run(
        capsys, "char", "--n", "4", "--lambda", "3,1", "--mu", "1", "--class", "2,1"
    )
    assert rc == 0
    assert json.loads(out)["value"] == 1


def test_wchar_frozen(capsys):
    rc, out = run(
        capsys, "wchar", "--p", "2", "--w", "2", "--phi", "2:2", "--class", "1:2,1:1,1"
    )
    assert rc == 0
    assert json.loads(out)["value"] == 1
    rc, out = run(
        capsys, "wchar", "--p", "2", "--w", "2", "--phi", "1,1:1;2:1", "--class", "2:2"
    )
    assert rc == 0
    assert json.loads(out)["value"] == 0


def test_table_csv_frozen(capsys):
    rc, out = run(capsys, "table", "--n", "3", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == [
        'lambda,3,"2,1","1,1,1"',
        "3,1,1,1",
        '"2,1",-1,0,2',
        '"1,1,1",1,-1,1',
    ]


def test_table_block_filter(capsys):
    rc, out = run(
        capsys, "table", "--n", "5", "--p", "3", "--core", "1,1", "--format", "csv"
    )
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "lambda"
    assert [r[0] for r in rows[1:]] == ["4,1", "3,2", "1,1,1,1,1"]


def test_table_json(capsys):
    rc, out = run(capsys, "table", "--n", "3", "--format", "json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0] == {"classes": ["3", "2,1", "1,1,1"], "n": 3}
    assert lines[1] == {"lambda": "3", "values": [1, 1, 1]}
    assert lines[2] == {"lambda": "2,1", "values": [-1, 0, 2]}


def test_decomp_csv_frozen(capsys):
    rc, out = run(capsys, "decomp", "--p", "2", "--w", "2", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == [
        'phi,leg0:2,"leg0:1,1"',
        "2:2,1,0",
        '"2:1,1",0,1',
        '"2:1;1,1:1",1,1',
        '"1,1:2",1,0',
        '"1,1:1,1",0,1',
    ]


def test_mu_csv_frozen(capsys):
    rc, out = run(capsys, "mu", "--p", "2", "--w", "1", "--core", "", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == [
        'class,1:2,"1:1,1"',
        "2,2,0",
        '"1,1",0,2',
    ]


def test_composite_p_allowed_where_documented(capsys):
    for argv in (
        ("core", "--partition", "5,3", "--p", "4"),
        ("quotient", "--partition", "5,3", "--p", "4"),
        ("sign", "--partition", "5,3,1,1,1,1", "--p", "4"),
        ("gamma", "--core", "2,1", "--p", "4"),
        ("isometry", "--p", "4", "--w", "1", "--core", ""),
        ("verify", "main", "--p", "4", "--w", "1", "--core", ""),
    ):
        rc, _ = run(capsys, *argv)
        assert rc == 0, argv


def test_composite_p_rejected_elsewhere(capsys):
    for argv in (
        ("verify", "val", "--p", "4", "--w", "1"),
        ("verify", "heights", "--p", "4", "--w", "1", "--core", ""),
        ("table", "--n", "4", "--p", "4", "--core", ""),
        ("decomp", "--p", "4", "--w", "1"),
        ("char", "--n", "4", "--lambda", "3,1", "--class", "5"),
    ):
        rc, _ = run(capsys, *argv)
        assert rc == 2, argv


def test_invalid_arguments_exit_two(capsys):
    for argv in (
        ("core", "--partition", "3,1,2", "--p", "2"),
        ("core", "--p", "2"),
        ("nonsense",),
        ("wchar", "--p", "2", "--w", "1", "--phi", "2:1", "--class", "1:3"),
        ("sign", "--partition", "3,1", "--p", "2", "--over", "3"),
    ):
        rc, _ = run(capsys, *argv)
        assert rc == 2, argv


def test_guard_exit_three(capsys):
    rc, _ = run(capsys, "table", "--n", "13")
    assert rc == 3
    rc, _ = run(capsys, "verify", "centp", "--p", "3", "--w", "2", "--e", "3")
    assert rc == 3


def test_failing_verification_exits_one(capsys, monkeypatch):
    def fake(p, w):
        rep = Report("val")
        rep.add({"p": p, "w": w}, False, {"reason": "forced for the exit path"})
        return rep

    monkeypatch.setattr(isometry, "verify_val", fake)
    rc, out = run(capsys, "verify", "val", "--p", "2", "--w", "2")
    assert rc == 1
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0]["status"] == "meta"
    assert lines[1]["status"] == "fail"
    assert lines[1]["witness"]["reason"] == "forced for the exit path"


def test_byte_determinism(capsys):
    pairs = []
    for _ in range(2):
        rc, out = run(capsys, "verify", "main", "--p", "2", "--w", "2", "--core", "")
        assert rc == 0
        pairs.append(out)
    assert pairs[0] == pairs[1]
    pairs = []
    for _ in range(2):
        rc, out = run(capsys, "table", "--n", "4", "--format", "json")
        assert rc == 0
        pairs.append(out)
    assert pairs[0] == pairs[1]


def test_out_file_matches_stdout(capsys, tmp_path):
    rc, out = run(capsys, "decomp", "--p", "2", "--w", "2", "--format", "csv")
    assert rc == 0
    target = tmp_path / "decomp.csv"
    rc, silent = run(
        capsys,
        "decomp", "--p", "2", "--w", "2", "--format", "csv", "--out", str(target),
    )
    assert rc == 0
    assert silent == ""
    assert target.read_text() == out


def test_probe_reports_but_never_fails(capsys):
    rc, out = run(capsys, "verify", "probe", "--p", "2", "--w", "2", "--core", "")
    assert rc == 0
    records = [json.loads(line) for line in out.splitlines()]
    crits = {r["parameters"].get("criterion") for r in records[1:]}
    assert crits == {"regularity", "divisibility"}
    div = next(
        r for r in records if r["parameters"].get("criterion") == "divisibility"
    )
    assert div["parameters"]["expected_perfect"] is False
    assert div["parameters"]["violations"] > 0
