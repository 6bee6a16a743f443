import json

from brauersplit.cli import ReportRecord, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def records(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_hilbert_basic(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "-3", "7", "7")
    assert code == 0
    (rec,) = records(out)
    assert rec["command"] == "hilbert"
    assert rec["inputs"] == {"alpha": -3, "beta": 7, "place": "7"}
    assert rec["outputs"]["value"] == 1


def test_hilbert_infinite_place(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "1", "1", "inf")
    assert code == 0
    assert records(out)[0]["outputs"]["value"] == 1


def test_hilbert_oracle_agreement(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "-1", "3", "2", "--oracle")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"] == {"agree": True, "k_star": 5, "oracle": False, "value": -1}


def test_hilbert_rejects_bad_place(capsys):
    code, _, err = run_cli(capsys, "hilbert", "3", "5", "9")
    assert code == 2
    assert "error" in err


def test_quat_split_with_witness(capsys):
    code, out, _ = run_cli(capsys, "quat-split", "-3", "3", "--witness", "10")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["split"] is True
    assert rec["witness"] == {"x": 1, "y": 1, "z": 0}


def test_quat_split_division_algebra(capsys):
    code, out, _ = run_cli(capsys, "quat-split", "-1", "3")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["split"] is False
    assert rec["outputs"]["symbols"]["inf"] == 1
    assert set(rec["outputs"]["symbols"]) == {"inf", "2", "3"}


def test_quat_split_witness_inconclusive(capsys):
    # (-13, 61) splits but its smallest point is out of reach at H=2
    code, out, _ = run_cli(capsys, "quat-split", "-13", "61", "--witness", "2")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["split"] is True
    assert rec["witness"] is None
    assert "inconclusive" in rec["outputs"]["witness_note"]


def test_quat_split_rejects_zero(capsys):
    code, _, err = run_cli(capsys, "quat-split", "0", "3")
    assert code == 2


def test_represent(capsys):
    code, out, _ = run_cli(capsys, "represent", "3", "7")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["exists"] is True
    assert rec["witness"] == {"x": 2, "y": 1}

    code, out, _ = run_cli(capsys, "represent", "3", "5")
    rec = records(out)[0]
    assert rec["outputs"]["exists"] is False
    assert rec["witness"] is None


def test_verify_single_n(capsys):
    code, out, _ = run_cli(capsys, "verify", "3", "--bound", "500")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["mandated_ok"] is True
    assert rec["outputs"]["disagreements"] == []


def test_verify_vacuous_bound(capsys):
    code, out, _ = run_cli(capsys, "verify", "5", "--bound", "3")
    assert code == 0
    assert records(out)[0]["outputs"]["primes_checked"] == 1


def test_verify_all_surfaces_the_n14_defect(capsys):
    # the residue classes printed for n=14 describe a two-form genus, so the
    # representation<->congruence check genuinely fails there; exit 1 is the
    # contract for a failed mandated implication
    code, out, _ = run_cli(capsys, "verify", "all", "--bound", "100")
    assert code == 1
    recs = records(out)
    assert len(recs) == 11
    by_n = {r["inputs"]["n"]: r["outputs"] for r in recs}
    assert by_n[14]["mandated_ok"] is False
    assert all(by_n[n]["mandated_ok"] for n in by_n if n != 14)


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.jsonl"
    code, out, _ = run_cli(capsys, "verify", "13", "--bound", "200", "--out", str(target))
    assert code == 0
    assert target.read_text().strip() == out.strip()


def test_verify_rejects_bad_n(capsys):
    code, _, err = run_cli(capsys, "verify", "4", "--bound", "100")
    assert code == 2


def test_cyclo(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "2", "3")
    assert code == 0
    assert records(out)[0]["outputs"] == {"e": 1, "f": 2, "g": 1}


def test_cyclo_ramified_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "cyclo", "3", "3")
    assert code == 2


def test_power_char(capsys):
    code, out, _ = run_cli(capsys, "power-char", "2", "7", "3")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["value"] == 1
    assert rec["outputs"]["ideal_factor"] == [3, 1]

    code, out, _ = run_cli(capsys, "power-char", "7", "7", "3")
    assert records(out)[0]["outputs"]["value"] == "zero"


def test_kummer(capsys):
    code, out, _ = run_cli(capsys, "kummer", "2", "7", "3")
    assert code == 0
    assert records(out)[0]["outputs"]["splitting"] == "inert"


def test_norm(capsys):
    code, out, _ = run_cli(capsys, "norm", "2", "7", "3", "2")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"] == {
        "case": "split_base_char_nontrivial",
        "f_prime": 1,
        "f_rel": 3,
        "is_norm": True,
        "m": 6,
    }


def test_norm_ramified_input_is_reported(capsys):
    code, out, _ = run_cli(capsys, "norm", "7", "7", "3", "1")
    assert code == 0
    rec = records(out)[0]
    assert rec["outputs"]["case"] == "ramified"
    assert rec["outputs"]["is_norm"] is None


def test_pretty_mode_on_either_side(capsys):
    code, out, _ = run_cli(capsys, "--pretty", "cyclo", "2", "3")
    assert code == 0 and out.startswith("cyclo:")
    code, out, _ = run_cli(capsys, "cyclo", "2", "3", "--pretty")
    assert code == 0 and out.startswith("cyclo:")


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "7", "--bound", "300")
    _, second, _ = run_cli(capsys, "verify", "7", "--bound", "300")
    assert first == second


def test_record_roundtrip():
    rec = ReportRecord("kummer", {"alpha": 2}, {"splitting": "inert"}, None)
    assert ReportRecord.from_json(rec.to_json()) == rec
    rec = ReportRecord("quat-split", {"alpha": -3}, {"split": True}, {"x": 1, "y": 1, "z": 0})
    assert ReportRecord.from_json(rec.to_json()) == rec


def test_usage_error_exit_code(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
