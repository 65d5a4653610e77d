"""Command line behavior: outputs, exit codes, JSON stability, determinism."""

import json

from plovkit.cli import main
from plovkit.report import canonical_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_prints_value(capsys):
    code, out, _ = run(capsys, "rank", "--k", "4", "--d", "3", "--n", "6")
    assert code == 0
    assert out.strip() == "4"


def test_plov_jordan_output(capsys):
    code, out, _ = run(capsys, "plov", "--jordan", "0,2,1")
    assert code == 0
    assert out.strip() == "plov=4 gkdim=5 k=2"


def test_plov_json_uses_decimal_strings(capsys):
    code, out, _ = run(capsys, "plov", "--jordan", "1,4,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["plov"] == "17"
    assert payload["gkdim"] == "18"
    assert payload["k"] == "6"


def test_partition_list_text_and_json(capsys):
    code, out, _ = run(capsys, "partition", "list", "--k", "4", "--d", "3", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["4,2,0", "4,1,1", "3,3,0", "3,2,1", "2,2,2"]
    code, out, _ = run(
        capsys, "partition", "list", "--k", "2", "--d", "3", "--n", "3",
        "--format", "json",
    )
    assert json.loads(out) == [["2", "1", "0"], ["1", "1", "1"]]


def test_partition_count(capsys):
    code, out, _ = run(capsys, "partition", "count", "--k", "4", "--d", "3", "--n", "7")
    assert code == 0 and out.strip() == "4"


def test_matrix_formats(capsys):
    code, out, _ = run(
        capsys, "matrix", "--k", "4", "--d", "3", "--n", "7", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == ["1,1,0,0", "0,2,0,0", "2,0,1,0", "0,1,1,1", "0,0,0,3"]
    code, out, _ = run(
        capsys, "matrix", "--k", "4", "--d", "3", "--n", "6", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["entries"][2] == ["0", "1", "0", "2", "0"]
    assert payload["rows"][0] == ["4", "1", "0"]
    assert payload["cols"][0] == ["4", "2", "0"]


def test_matrix_rejects_bad_level(capsys):
    code, _, err = run(capsys, "matrix", "--k", "4", "--d", "3", "--n", "0")
    assert code == 2
    assert "error" in err


def test_plov_invalid_model_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"d": 2, "A": [[1, 1], [0, 1], [0, 0]]}')
    code, _, err = run(capsys, "plov", "--matrix", str(bad))
    assert code == 2
    assert "square" in err

    missing = tmp_path / "missing.json"
    code, _, _ = run(capsys, "plov", "--matrix", str(missing))
    assert code == 2


def test_plov_positive_entropy_exits_3(tmp_path, capsys):
    hyperbolic = tmp_path / "pe.json"
    hyperbolic.write_text('{"d": 2, "A": [[2, 1], [1, 1]]}')
    code, _, err = run(capsys, "plov", "--matrix", str(hyperbolic))
    assert code == 3
    assert "positive entropy" in err


def test_plov_model_file_round_trip(tmp_path, capsys):
    good = tmp_path / "model.json"
    good.write_text(json.dumps({"d": 2, "A": [[1, 1], [0, 1]]}))
    code, out, _ = run(capsys, "plov", "--matrix", str(good))
    assert code == 0
    assert out.strip() == "plov=4 gkdim=5 k=2"


def test_degrees_output(capsys):
    code, out, _ = run(capsys, "degrees", "--jordan", "0,2,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[1]["exponent"] == "2"


def test_lefschetz_verify_json_report(capsys):
    code, out, _ = run(
        capsys, "lefschetz", "verify", "--k", "4", "--d", "3",
        "--hard", "--brackets", "--symfun", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    names = [rec["name"] for rec in payload["records"]]
    assert "rank_level_6" in names
    assert "window_5" in names
    assert "sl2_brackets" in names
    assert all(rec["status"] == "pass" for rec in payload["records"])
    assert all(rec["claim"] for rec in payload["records"])


def test_lefschetz_ceiling(capsys):
    code, _, err = run(capsys, "lefschetz", "verify", "--k", "10", "--d", "10")
    assert code == 2
    assert "ceiling" in err


def test_report_json_round_trips_byte_identical(capsys):
    code, out, _ = run(
        capsys, "verify-all", "--dk-max", "6", "--dk-bracket", "4",
        "--dk-symfun", "4", "--d-max", "2", "--conjugates", "2",
        "--format", "json",
    )
    assert code == 0
    assert canonical_json(json.loads(out)) == out


def test_reports_deterministic_modulo_timing(tmp_path, capsys):
    args = [
        "verify-all", "--dk-max", "6", "--dk-bracket", "4", "--dk-symfun", "4",
        "--d-max", "2", "--conjugates", "3", "--seed", "42", "--format", "json",
    ]
    out_file = tmp_path / "report.json"
    payloads = []
    for _ in range(2):
        code = main(args + ["--out", str(out_file)])
        assert code == 0
        payload = json.loads(out_file.read_text())
        payload.pop("timing_seconds")
        payloads.append(payload)
    assert payloads[0] == payloads[1]


def test_verify_all_respects_ceiling(capsys):
    code, _, err = run(capsys, "verify-all", "--dk-max", "60")
    assert code == 2
    assert "ceiling" in err


def test_verify_all_parallel_matches_serial(tmp_path):
    args = [
        "verify-all", "--dk-max", "8", "--dk-bracket", "4", "--dk-symfun", "4",
        "--d-max", "2", "--conjugates", "2", "--seed", "3", "--format", "json",
    ]
    out_file = tmp_path / "report.json"
    payloads = []
    for jobs in ("1", "2"):
        assert main(args + ["--jobs", jobs, "--out", str(out_file)]) == 0
        payload = json.loads(out_file.read_text())
        payload.pop("timing_seconds")
        payload["config"].pop("jobs")
        payloads.append(payload)
    assert payloads[0] == payloads[1]


def test_out_file_writing(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code = main(["rank", "--k", "4", "--d", "3", "--n", "7", "--out", str(target)])
    assert code == 0
    assert target.read_text().strip() == "4"
