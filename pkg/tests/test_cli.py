import csv
import io
import json
import subprocess
import sys

import pytest

from hessian.cli import SCAN_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lfun_d6(capsys):
    code, out, _ = run(capsys, "lfun", "--p", "7", "--d", "6")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "hessian-lfunc/1"
    assert data["degree"] == 3 and len(data["coefficients"]) == 4
    assert data["coefficients"][0] == 1
    assert sum(f["len"] for f in data["factors"]) == 3
    assert sum(f["v_member"] for f in data["factors"]) == 1


def test_lfun_d7_needs_q_prime_to_d(capsys):
    code, _, err = run(capsys, "lfun", "--p", "7", "--d", "7")
    assert code == 2 and "gcd" in err
    code, out, _ = run(capsys, "lfun", "--p", "11", "--d", "7")
    assert code == 0 and json.loads(out)["degree"] == 6


def test_small_characteristic_exits_2(capsys):
    code, out, err = run(capsys, "lfun", "--p", "3", "--d", "4")
    assert code == 2 and out == "" and err.startswith("error:")


def test_lfun_csv(capsys):
    code, out, _ = run(capsys, "lfun", "--p", "7", "--d", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[1] == ["7", "2", "1", "-1", "1 -7"]


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--p", "7", "--d", "4", "--nmax", "3")
    assert code == 0 and json.loads(out)["result"] == "PASS"


def test_verify_d5_zero_sums(capsys):
    code, out, _ = run(capsys, "verify", "--p", "7", "--d", "5", "--nmax", "3")
    data = json.loads(out)
    assert code == 0 and data["result"] == "PASS"
    assert [r["lfun"] for r in data["rows"]] == [0, 0, 0]


def test_verify_budget_exits_3(capsys):
    code, out, _ = run(capsys, "verify", "--p", "7", "--d", "5", "--nmax", "9", "--budget", "1000000")
    assert code == 3 and out == ""


def test_verify_mismatch_exits_4(capsys, monkeypatch):
    import hessian.cli as cli

    monkeypatch.setattr(cli, "power_sums", lambda L, n: [1] * n)
    code, out, _ = run(capsys, "verify", "--p", "7", "--d", "4", "--nmax", "2")
    assert code == 4 and json.loads(out)["result"] == "FAIL"


def test_invariants_d6(capsys):
    code, out, _ = run(capsys, "invariants", "--p", "7", "--d", "6")
    data = json.loads(out)
    assert code == 0
    assert (data["degN"], data["H_exp"], data["tamagawa"], data["torsion"]) == (7, 2, 18, 3)


def test_scan_rows(capsys):
    code, out, _ = run(capsys, "scan", "--p", "7", "--dmax", "40")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == SCAN_COLUMNS
    assert [int(r["d"]) for r in rows] == [d for d in range(2, 41) if d % 7]


def test_identity_check(capsys):
    code, out, _ = run(capsys, "identity-check", "--p", "7")
    assert code == 0 and out == "12 identities checked, 0 failures\n"


def test_bsd_json(capsys):
    code, out, _ = run(capsys, "bsd", "--p", "7", "--d", "6")
    data = json.loads(out)
    assert code == 0
    assert (data["rank"], data["L*_num"], data["L*_den"], data["sha_reg_num"], data["sha_reg_den"]) == (1, 27, 7, 27, 2)


def test_missing_d_exits_2(capsys):
    assert run(capsys, "bsd", "--p", "7")[0] == 2
    assert run(capsys, "scan", "--p", "7")[0] == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "lfun", "--p", "7", "--d", "6", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["degree"] == 3


def test_reruns_are_byte_identical(tmp_path):
    outs = []
    for i in range(2):
        target = tmp_path / f"scan{i}.csv"
        assert main(["scan", "--p", "11", "--dmax", "15", "--out", str(target)]) == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_threads_match_serial(tmp_path):
    serial, parallel = tmp_path / "s.csv", tmp_path / "p.csv"
    assert main(["scan", "--p", "7", "--dmax", "20", "--out", str(serial)]) == 0
    assert main(["scan", "--p", "7", "--dmax", "20", "--threads", "3", "--out", str(parallel)]) == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_cache_dir_agrees(tmp_path, monkeypatch):
    monkeypatch.delenv("HESSIAN_CACHE", raising=False)
    plain, cached = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["lfun", "--p", "7", "--d", "8", "--out", str(plain)]) == 0
    for _ in range(2):
        assert main(["lfun", "--p", "7", "--d", "8", "--cache-dir", str(tmp_path / "c"), "--out", str(cached)]) == 0
        assert cached.read_bytes() == plain.read_bytes()
    assert any((tmp_path / "c").iterdir())


@pytest.mark.parametrize("argv", [["--p", "7", "--d", "14"], ["--p", "9", "--d", "4"], ["--p", "7", "--k", "2", "--d", "7"]])
def test_bad_input_exit_codes(capsys, argv):
    assert run(capsys, "lfun", *argv)[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hessian.cli", "invariants", "--p", "7", "--d", "6",
                           "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "7,6,24,7,2,18,3"
