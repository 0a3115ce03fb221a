import json
import subprocess
import sys

from ariki_koike.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_counts(capsys):
    code, out, _ = run_cli(["enumerate", "--n", "2", "--r", "2"], capsys)
    assert code == 0
    assert "multipartitions n=2 r=2: 5" in out
    assert out.count("std=1") == 4 and out.count("std=2") == 1


def test_enumerate_zero(capsys):
    code, out, _ = run_cli(["enumerate", "--n", "0", "--r", "2"], capsys)
    assert code == 0
    assert "multipartitions n=0 r=2: 1" in out


def test_enumerate_level_split(capsys):
    code, out, _ = run_cli(
        ["enumerate", "--n", "2", "--r", "2", "--s", "1", "--b", "1"], capsys
    )
    assert code == 0
    assert "level b=1: {[[1],[1]]}" in out


def test_verify_relations_passes(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "relations", "--n", "2", "--r", "2"], capsys
    )
    assert code == 0
    entries = json.loads(out)
    assert all(e["status"] == "pass" for e in entries)
    assert {"check", "paper_ref", "params", "status", "detail"} <= set(entries[0])


def test_verify_morita_small(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "morita", "--n", "2", "--r", "2", "--s", "1",
         "--q", "2", "--Q", "1,5"], capsys
    )
    assert code == 0
    entries = json.loads(out)
    assert all(e["status"] == "pass" for e in entries)


def test_verify_gate_exit_2(capsys):
    code, out, err = run_cli(
        ["verify", "--suite", "morita", "--n", "2", "--r", "2", "--s", "1",
         "--q", "2", "--Q", "1,2"], capsys
    )
    assert code == 2
    assert "f_s" in err
    assert out.strip() == ""  # no identity failures are reported


def test_verify_size_guard_exit_3(capsys):
    code, _, err = run_cli(
        ["verify", "--suite", "relations", "--n", "5", "--r", "2"], capsys
    )
    assert code == 3
    assert "guard" in err


def test_decomp_requires_prime_field(capsys):
    code, _, err = run_cli(["decomp", "--n", "2", "--r", "2"], capsys)
    assert code == 2


def test_decomp_fixture(capsys):
    code, out, _ = run_cli(
        ["decomp", "--n", "2", "--r", "2", "--field", "GF(5)", "--q", "4",
         "--Q", "1,4"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "shape\\simple\t[[1],[1]]\t[[],[1,1]]"
    assert lines[3] == "[[1],[1]]\t1\t1"


def test_gram_tsv(capsys):
    code, out, _ = run_cli(["gram", "--n", "2", "--r", "2", "--Q", "1,5"], capsys)
    assert code == 0
    assert "# det =" in out
    assert "[[1],[1]]" in out


def test_deterministic_output(capsys):
    args = ["verify", "--suite", "cellular", "--n", "2", "--r", "2", "--seed", "7"]
    _, out1, _ = run_cli(args, capsys)
    _, out2, _ = run_cli(args, capsys)
    assert out1 == out2


def test_params_file(tmp_path, capsys):
    pfile = tmp_path / "params.txt"
    pfile.write_text("field=Q\nq=2\nQ=1,5\nn=2\nr=2\ns=1\n")
    code, out, _ = run_cli(
        ["verify", "--suite", "relations", "--params", str(pfile)], capsys
    )
    assert code == 0
    entries = json.loads(out)
    assert entries and all(e["params"]["q"] == "2" for e in entries)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        ["verify", "--suite", "relations", "--n", "1", "--r", "1", "--Q", "1",
         "--out", str(target)], capsys
    )
    assert code == 0 and out == ""
    entries = json.loads(target.read_text())
    assert all(e["status"] == "pass" for e in entries)


def test_verify_single_level(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "morita", "--n", "2", "--r", "2", "--s", "1",
         "--Q", "1,5", "--b", "1", "--format", "text"], capsys
    )
    assert code == 0
    assert "morita.filtration" in out and "FAIL" not in out


def test_enumerate_json(capsys):
    code, out, _ = run_cli(
        ["enumerate", "--n", "2", "--r", "2", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["multipartitions"]) == 5


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ariki_koike", "enumerate", "--n", "1", "--r", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "multipartitions n=1 r=3: 3" in proc.stdout
