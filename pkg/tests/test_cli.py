"""CLI surface: subcommands, auto-detected input, exit codes, and
byte-identical deterministic output."""

from __future__ import annotations

import json

from sepcodes.cli import main

K3_G6 = "Bw"
BLUEPRINT_I3 = "sep=I\nk=3\ninner=empty\nouter=empty\n"


def run(capsys, argv: list[str]) -> tuple[int, str, str]:
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_solve_graph6_file(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text(K3_G6 + "\n")
    status, out, _ = run(capsys, ["solve", str(path), "--kind", "od"])
    assert status == 0
    assert "number = 2" in out
    assert "witness = [0 1]" in out
    assert "lower_bound = 2" in out


def test_solve_stdin(capsys, monkeypatch):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", type("S", (), {"buffer": io.BytesIO(b"Bw")})())
    status, out, _ = run(capsys, ["solve", "-", "--kind", "OD", "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["number"] == 2 and payload["witness"] == [0, 1]


def test_solve_edge_list_input(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    status, out, _ = run(capsys, ["solve", str(path), "--kind", "id"])
    assert status == 0
    assert "number = 2" in out


def test_solve_inadmissible_exit_code(tmp_path, capsys):
    path = tmp_path / "k2.g6"
    path.write_text("A_")
    status, out, _ = run(capsys, ["solve", str(path), "--kind", "id"])
    assert status == 3
    assert "status = inadmissible" in out


def test_solve_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("A")
    status, _, err = run(capsys, ["solve", str(path), "--kind", "ld"])
    assert status == 2
    assert "error" in err


def test_solve_budget_exit_code(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    status, _, err = run(capsys, ["solve", str(path), "--kind", "ld", "--budget", "1"])
    assert status == 4
    assert "budget" in err


def test_unknown_kind_exit_code(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text(K3_G6)
    status, _, err = run(capsys, ["solve", str(path), "--kind", "zz"])
    assert status == 2
    assert "unknown code kind" in err


def test_construct(tmp_path, capsys):
    path = tmp_path / "bp.txt"
    path.write_text(BLUEPRINT_I3)
    status, out, _ = run(capsys, ["construct", str(path)])
    assert status == 0
    assert "order = 7" in out
    assert "code = [0 1 2]" in out
    assert "graph6 =" in out


def test_construct_blueprint_error(tmp_path, capsys):
    path = tmp_path / "bp.txt"
    path.write_text("sep=F\nk=3\ninner=empty\n")
    status, _, err = run(capsys, ["construct", str(path)])
    assert status == 2
    assert "k >= 4" in err


def test_verify(tmp_path, capsys):
    path = tmp_path / "bp.txt"
    path.write_text(BLUEPRINT_I3)
    status, out, _ = run(capsys, ["verify", str(path), "--kind", "id"])
    assert status == 0
    assert "passed = True" in out
    assert "number = 3" in out


def test_audit(capsys):
    status, out, _ = run(capsys, ["audit", "--kind", "id", "--n", "3"])
    assert status == 0
    assert "passed = True" in out


def test_audit_guard_exit_code(capsys):
    status, _, err = run(capsys, ["audit", "--kind", "id", "--n", "9"])
    assert status == 4
    assert "guarded" in err


def test_census(capsys):
    status, out, _ = run(capsys, ["census", "--kind", "ld", "--n", "3", "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["histogram"] == {"2": 7, "3": 1}
    assert payload["inadmissible"] == 0


def test_census_guard(capsys):
    status, _, _ = run(capsys, ["census", "--kind", "ld", "--n", "8"])
    assert status == 4


def test_bounds(capsys):
    status, out, _ = run(capsys, ["bounds", "--kind", "ftd", "--n", "11"])
    assert status == 0
    assert "lower_bound = 4" in out

    status, out, _ = run(capsys, ["bounds", "--kind", "ld", "--k", "2"])
    assert status == 0
    assert "max_order = 5" in out


def test_bounds_requires_exactly_one(capsys):
    status, _, err = run(capsys, ["bounds", "--kind", "ld"])
    assert status == 2
    assert "exactly one" in err
    status, _, _ = run(capsys, ["bounds", "--kind", "ld", "--n", "4", "--k", "2"])
    assert status == 2


def test_bounds_guard(capsys):
    status, _, err = run(capsys, ["bounds", "--kind", "fd", "--k", "3"])
    assert status == 4
    assert "k >= 4" in err


def test_count(capsys):
    status, out, _ = run(capsys, ["count", "--k", "2", "--format", "json"])
    assert status == 0
    payload = json.loads(out)
    assert payload["eta"] == 2
    assert payload["admitting"] == {"L": 2, "O": 1, "I": 1, "F": 0}
    assert payload["construction_counts"]["L"] == 16


def test_output_is_byte_identical_across_runs(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text(K3_G6)
    outputs = []
    for _ in range(2):
        for fmt in ("text", "json"):
            _, out, _ = run(capsys, ["solve", str(path), "--kind", "od", "--format", fmt])
            outputs.append(out)
    assert outputs[0] == outputs[2]
    assert outputs[1] == outputs[3]


def test_timing_goes_to_stderr(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text(K3_G6)
    _, out, err = run(capsys, ["solve", str(path), "--kind", "od", "--timing"])
    assert "wall_time_ms" in err
    assert "wall_time_ms" not in out
