"""CLI behaviour: reports, exit codes, determinism."""

import json

import pytest

from smallq.cli import main, parse_window, UsageError


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_window():
    assert parse_window("0..7", 1) == [(0, 7)]
    assert parse_window("-2..2x0..4", 2) == [(-2, 2), (0, 4)]
    assert parse_window("7..0", 1) == [(7, 0)]      # empty range is legal
    with pytest.raises(UsageError):
        parse_window("0..7", 2)
    with pytest.raises(UsageError):
        parse_window("abc", 1)


def test_linkage_empty_window(capsys):
    code, out, _ = run_cli(["linkage", "--type", "A1", "--ell", "4",
                            "--window", "5..2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["artifacts"]["block_table"]["rows"] == []
    assert data["artifacts"]["block_table"]["blocks"] == []


def test_linkage_blocks(capsys):
    code, out, _ = run_cli(["linkage", "--type", "A1", "--ell", "4",
                            "--window", "0..7"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["passed"] is True
    blocks = data["artifacts"]["block_table"]["blocks"]
    assert blocks == [[[0], [6]], [[1], [5]], [[2], [4]], [[3]], [[7]]]


def test_linkage_prediction_only_rank2(capsys):
    code, out, _ = run_cli(["linkage", "--type", "A2", "--ell", "6",
                            "--window", "0..3x0..3", "--suite", "predict"],
                           capsys)
    assert code == 0
    data = json.loads(out)
    assert data["artifacts"]["block_table"]["cartan_type"] == "A2"
    assert len(data["artifacts"]["block_table"]["rows"]) == 16


def test_linkage_requires_window(capsys):
    code, _, err = run_cli(["linkage", "--type", "A1", "--ell", "4"], capsys)
    assert code == 2
    assert "window" in err


def test_bad_type_exit_2(capsys):
    code, _, err = run_cli(["linkage", "--type", "E8", "--ell", "4",
                            "--window", "0..7"], capsys)
    assert code == 2


def test_bad_ell_exit_2(capsys):
    code, _, err = run_cli(["linkage", "--type", "A1", "--ell", "3",
                            "--window", "0..7"], capsys)
    assert code == 2


def test_frobenius_check_passes(capsys):
    code, out, _ = run_cli(["frobenius-check", "--ell", "4",
                            "--max-weyl", "3", "--max-tensor", "1"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True


def test_frobenius_check_corrupt_negative_control(capsys):
    code, out, _ = run_cli(["frobenius-check", "--ell", "4", "--corrupt",
                            "--max-weyl", "2", "--max-tensor", "0"], capsys)
    assert code == 1
    data = json.loads(out)
    fails = [c for c in data["checks"] if c["status"] == "fail"]
    assert fails
    assert any("commutator" in c.get("counterexample", "") or
               "commutator" in c["name"] for c in fails)


def test_triple_verify_fixture(capsys):
    code, out, _ = run_cli(["triple-verify", "--fixture", "z4_z2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    names = {c["name"] for c in data["checks"]}
    assert "equivalence" in names
    assert "block-bijection" in names
    assert "twist-coherence" in names


def test_triple_verify_s3_fixture(capsys):
    code, out, _ = run_cli(["triple-verify", "--fixture", "s3_a3"], capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_triple_verify_non_normal_exit_2(capsys):
    code, _, err = run_cli(["triple-verify", "--fixture", "s3_bad"], capsys)
    assert code == 2
    assert "normal" in err


def test_triple_verify_missing_input_exit_2(capsys):
    code, _, err = run_cli(["triple-verify"], capsys)
    assert code == 2


def test_reports_byte_identical(capsys, tmp_path):
    argv = ["linkage", "--type", "A1", "--ell", "4", "--window", "0..10",
            "--seed", "7"]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    run_cli(argv + ["--out", str(out_a)], capsys)
    run_cli(argv + ["--out", str(out_b)], capsys)
    assert out_a.read_bytes() == out_b.read_bytes()


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("type=A1\nell=4\nwindow=0..7\nformat=json\n")
    code, out, _ = run_cli(["linkage", "--config", str(cfg)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["params"]["ell"] == 4
    # flags override the file
    code, out, _ = run_cli(["linkage", "--config", str(cfg),
                            "--window", "0..3"], capsys)
    rows = json.loads(out)["artifacts"]["block_table"]["rows"]
    assert len(rows) == 4


def test_text_format(capsys):
    code, out, _ = run_cli(["linkage", "--type", "A1", "--ell", "4",
                            "--window", "0..7", "--format", "text"], capsys)
    assert code == 0
    assert "result: pass" in out
