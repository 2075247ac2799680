import json

import pytest

from satgb.cli import main

VICEVERSA = "ring x,y,z over Q; order Lex; gens: x - z^3, x^2 - y^3;"


@pytest.fixture
def input_file(tmp_path):
    path = tmp_path / "system.txt"
    path.write_text(VICEVERSA)
    return str(path)


def test_compute_default_strategy(input_file, capsys):
    assert main(["compute", input_file]) == 0
    out = capsys.readouterr().out
    assert "reduced Groebner basis (2 elements):" in out
    assert "x - z^3" in out
    assert "y^3 - z^6" in out


def test_compute_all_strategies_agree(input_file, capsys):
    outputs = set()
    for strategy in ("sugar", "homog", "selfsat", "weaksat:ymultiply"):
        assert main(["compute", input_file, "--strategy", strategy]) == 0
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1


def test_compute_stats_flag(input_file, capsys):
    assert main(["compute", input_file, "--stats"]) == 0
    assert "pairs_ins=" in capsys.readouterr().out


def test_compute_json(input_file, capsys):
    assert main(["compute", input_file, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["strategy"] == "sugar"
    assert payload["basis"] == ["x - z^3", "y^3 - z^6"]
    assert set(payload["stats"]) == {"gbLen", "polyRed", "pairsIns", "wallTimeSec"}


def test_compute_transcript(input_file, tmp_path, capsys):
    out = tmp_path / "trace.log"
    assert main(["compute", input_file, "--strategy", "selfsat", "--transcript", str(out)]) == 0
    capsys.readouterr()
    lines = out.read_text().splitlines()
    assert lines and lines[0].startswith("GEN")
    assert any(l.startswith("ADD") and "SUGAR" in l for l in lines)


def test_transcripts_byte_identical(input_file, tmp_path, capsys):
    paths = [tmp_path / "a.log", tmp_path / "b.log"]
    for p in paths:
        assert main(["compute", input_file, "--strategy", "selfsat", "--transcript", str(p)]) == 0
        capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("ring x over Q order Lex;")
    assert main(["compute", str(bad)]) == 2
    assert "parse error" in capsys.readouterr().err


def test_missing_file_exit_code(capsys):
    assert main(["compute", "/nonexistent/system.txt"]) == 2


def test_nonpositive_grading_exit_code(tmp_path, capsys):
    path = tmp_path / "neg.txt"
    path.write_text("ring x,y over Q; order Lex; grading [1 -1]; gens: x - y;")
    assert main(["compute", str(path), "--strategy", "selfsat"]) == 3
    assert "refused" in capsys.readouterr().err


def test_timeout_exit_code(capsys):
    # cyclic:6 cannot finish in a microsecond
    assert main(["bench", "cyclic:6", "--strategies", "A", "--budget", "1e-6"]) == 0
    out = capsys.readouterr().out
    assert "timeout" in out


def test_compute_budget_timeout(tmp_path, capsys):
    src = tmp_path / "c6.txt"
    from satgb import emit_problem, generate_cyclic

    src.write_text(emit_problem(generate_cyclic(6)))
    assert main(["compute", str(src), "--budget", "1e-6"]) == 4
    assert "timeout" in capsys.readouterr().err


def test_bench_text(input_file, capsys):
    assert main(["bench", input_file, "--strategies", "A,H,S"]) == 0
    out = capsys.readouterr().out
    assert "GB Len" in out
    assert "reduced bases agree" in out


def test_bench_cyclic_json(capsys):
    assert main(["bench", "cyclic:4", "--strategies", "A,S", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["problem"] == "cyclic-4"
    assert [r["strategy"] for r in payload["rows"]] == ["A", "S"]
    assert payload["rows"][0]["gbLen"] == payload["rows"][1]["gbLen"]


def test_bench_prime_field(capsys):
    assert main(["bench", "cyclic:4", "--strategies", "A", "--prime", "32003", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["field"] == "Zp 32003"


def test_bench_unknown_strategy(capsys):
    assert main(["bench", "cyclic:3", "--strategies", "Q"]) == 2
    assert "error" in capsys.readouterr().err


def test_bench_bad_cyclic_size(capsys):
    assert main(["bench", "cyclic:x"]) == 2
