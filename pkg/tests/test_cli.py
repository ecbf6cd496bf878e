"""Command line surface: exit codes, determinism, formats, exports."""

import json

import pytest

from ringline import cli, golden

# every happy-path invocation in one table; all must exit 0
OK_COMMANDS = [
    ["ring", "show", "m2f2"],
    ["ring", "show", "gf4", "--format", "json"],
    ["ring", "show", "m2f2", "--format", "csv"],
    ["ring", "validate", "gf2xgf2"],
    ["line", "enumerate"],
    ["line", "enumerate", "--ring", "gf2dual", "--format", "json"],
    ["line", "relations", "--ring", "gf4"],
    ["line", "subconfig"],
    ["line", "subconfig", "--u", "1,1", "--v", "0,1"],
    ["gq", "build"],
    ["gq", "axioms"],
    ["gq", "ovoids"],
    ["gq", "spreads"],
    ["gq", "hyperplanes", "--format", "json"],
    ["gq", "petersen"],
    ["pauli", "table"],
    ["pauli", "mermin"],
    ["pauli", "mub"],
    ["verify", "table2"],
    ["verify", "factor96"],
    ["verify", "factor105"],
    ["verify", "trinity"],
    ["verify", "all"],
    ["verify", "all", "--no-header"],
    ["verify", "trinity", "--format", "json"],
]


@pytest.mark.parametrize("argv", OK_COMMANDS, ids=lambda a: " ".join(a))
def test_command_exits_zero(argv, capsys):
    assert cli.main(argv) == 0
    out = capsys.readouterr().out
    assert out.strip()


def test_verify_all_output_is_byte_identical(capsys):
    assert cli.main(["verify", "all"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["verify", "all"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "result: PASS" in first


def test_verify_text_mentions_every_check_state(capsys):
    cli.main(["verify", "trinity"])
    out = capsys.readouterr().out
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_verify_json_parses(capsys):
    assert cli.main(["verify", "trinity", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["passed"] is True
    assert len(doc["subreports"]) == 4


def test_ring_show_json_parses(capsys):
    assert cli.main(["ring", "show", "m2f2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert len(doc["mul_table"]) == 16


def test_line_enumerate_json_parses(capsys):
    assert cli.main(["line", "enumerate", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert len(doc["points"]) == 35


def test_gq_hyperplanes_json_parses(capsys):
    assert cli.main(["gq", "hyperplanes", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["ovoids"]) == 6
    assert len(doc["perp_sets"]) == 15
    assert len(doc["grids"]) == 10
    assert len(doc["spreads"]) == 6


def test_pauli_mermin_prints_signs(capsys):
    assert cli.main(["pauli", "mermin"]) == 0
    out = capsys.readouterr().out
    assert "row signs: (-1, 1, 1)" in out
    assert "column signs: (1, 1, 1)" in out
    assert "magic: yes" in out


# error paths: argument problems and unreadable input exit 2

BAD_USAGE = [
    ["ring", "show", "nosuchring"],
    ["line", "enumerate", "--ring", "nosuchring"],
    ["line", "subconfig", "--u", "1;0"],
    ["line", "subconfig", "--u", "99,0"],
    ["line", "subconfig", "--u", "0,0"],
    ["verify", "factor96", "--fixture", "somefile.txt"],
    ["verify", "table2", "--fixture", "/nonexistent/f.txt"],
    ["ring", "show", "m2f2", "--format", "dot"],
    ["verify", "all", "--format", "csv"],
]


@pytest.mark.parametrize("argv", BAD_USAGE, ids=lambda a: " ".join(a))
def test_bad_usage_exits_two(argv, capsys):
    assert cli.main(argv) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_unknown_ring_message_lists_choices(capsys):
    cli.main(["ring", "show", "qqq"])
    err = capsys.readouterr().err
    assert "unknown ring 'qqq'" in err
    assert "m2f2" in err and "gf2dual" in err


# verification failures exit 1 and name the offending cells

def write_fixture(path, rows):
    path.write_text("# commutation fixture\n\n" + "\n".join(rows) + "\n")


def test_verify_table2_against_good_fixture_file(tmp_path, capsys):
    f = tmp_path / "good.txt"
    write_fixture(f, golden.CANONICAL_SIGNS)
    assert cli.main(["verify", "table2", "--fixture", str(f)]) == 0
    assert "result: PASS" in capsys.readouterr().out


def test_verify_table2_detects_corrupted_fixture(tmp_path, capsys):
    flip = {"+": "-", "-": "+"}
    rows = list(golden.CANONICAL_SIGNS)
    row = list(rows[0])
    row[1] = flip[row[1]]
    rows[0] = "".join(row)
    row = list(rows[1])
    row[0] = flip[row[0]]
    rows[1] = "".join(row)
    f = tmp_path / "bad.txt"
    write_fixture(f, rows)
    assert cli.main(["verify", "table2", "--fixture", str(f)]) == 1
    out = capsys.readouterr().out
    assert "result: FAIL" in out
    assert "C1,C2" in out


def test_verify_table2_rejects_short_fixture(tmp_path, capsys):
    f = tmp_path / "short.txt"
    write_fixture(f, golden.CANONICAL_SIGNS[:3])
    assert cli.main(["verify", "table2", "--fixture", str(f)]) == 1


# exports: every supported (what, format) combination writes a file

EXPORT_COMBOS = [
    ("signs", "csv"),
    ("signs", "dot"),
    ("signs", "json"),
    ("line", "json"),
    ("line", "csv"),
    ("line", "dot"),
    ("gq", "json"),
    ("gq", "dot"),
    ("hyperplanes", "json"),
    ("petersen", "dot"),
    ("petersen", "json"),
]


@pytest.mark.parametrize("what,fmt", EXPORT_COMBOS, ids=lambda v: str(v))
def test_export_writes_file(tmp_path, what, fmt):
    out = tmp_path / f"{what}.{fmt}"
    argv = ["export", "--what", what, "--format", fmt, "--out", str(out)]
    assert cli.main(argv) == 0
    data = out.read_bytes()
    assert data
    if fmt == "json":
        json.loads(data)


def test_export_unsupported_combo_exits_two(tmp_path, capsys):
    out = tmp_path / "h.dot"
    argv = ["export", "--what", "hyperplanes", "--format", "dot", "--out", str(out)]
    assert cli.main(argv) == 2
    assert "error:" in capsys.readouterr().err
    assert not out.exists()


def test_export_is_deterministic(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for out in (a, b):
        argv = ["export", "--what", "signs", "--format", "csv", "--out", str(out)]
        assert cli.main(argv) == 0
    assert a.read_bytes() == b.read_bytes()


def test_export_line_respects_ring_flag(tmp_path):
    out = tmp_path / "gf4.json"
    argv = [
        "export", "--what", "line", "--format", "json",
        "--ring", "gf4", "--out", str(out),
    ]
    assert cli.main(argv) == 0
    doc = json.loads(out.read_text())
    assert len(doc["points"]) == 5


def test_export_signs_dot_edge_sign_flag(tmp_path):
    plus = tmp_path / "plus.dot"
    minus = tmp_path / "minus.dot"
    for path, sign in ((plus, "+"), (minus, "-")):
        argv = [
            "export", "--what", "signs", "--format", "dot",
            "--edge-sign", sign, "--out", str(path),
        ]
        assert cli.main(argv) == 0
    # distant graph is 8-regular, neighbor graph 6-regular: different edges
    assert plus.read_bytes() != minus.read_bytes()


def test_main_requires_a_command(capsys):
    assert cli.main([]) == 2
