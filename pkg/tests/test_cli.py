from __future__ import annotations

import io
import subprocess
import sys

import pytest

from strongedge import parse_coloring, parse_instance, run_command

C5 = "e 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_gen_color_verify_chain(tmp_path, capsys):
    inst = tmp_path / "inst.txt"
    assert run_command(["gen", "sparse-mad3", "20", "--seed", "3",
                        "-o", str(inst)]) == 0
    out = tmp_path / "coloring.txt"
    assert run_command(["color", str(inst), "-o", str(out)]) == 0
    err = capsys.readouterr().err
    assert "pipeline mad3" in err and "certified" in err
    assert run_command(["verify", str(inst), str(out)]) == 0
    assert "valid strong edge coloring" in capsys.readouterr().err


def test_color_writes_parseable_coloring(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    assert run_command(["color", inst]) == 0
    out = capsys.readouterr().out
    g = parse_instance(C5).graph
    coloring = parse_coloring(out, g)
    assert len(coloring) == 5


def test_verify_flags_conflict(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    bad = write(tmp_path, "bad.txt",
                "c 0 1 1\nc 1 2 2\nc 2 3 1\nc 3 4 3\nc 0 4 4\n")
    assert run_command(["verify", inst, bad]) == 1
    assert "violation" in capsys.readouterr().err


def test_verify_flags_list_breach(tmp_path, capsys):
    inst = write(tmp_path, "p2.txt", "e 0 1\ne 1 2\nl 0 1 : 5\n")
    bad = write(tmp_path, "bad.txt", "c 0 1 1\nc 1 2 2\n")
    assert run_command(["verify", inst, bad]) == 1
    assert "violation (list)" in capsys.readouterr().err


def test_girth7_pipeline_rejects_short_cycles(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    assert run_command(["color", inst, "--pipeline", "girth7"]) == 1
    assert "girth 5" in capsys.readouterr().err


def test_too_few_colors_rejected(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    assert run_command(["color", inst, "--colors", "2"]) == 1
    assert "rejected" in capsys.readouterr().err


def test_fallback_exit_code_on_nonplanar_girth7(tmp_path, capsys):
    lcf = [12, 7, -7]
    edges = [(i, (i + 1) % 24) for i in range(24)]
    edges += [(i, (i + lcf[i % 3]) % 24) for i in range(24)
              if i < (i + lcf[i % 3]) % 24]
    text = "".join(f"e {u} {v}\n" for u, v in sorted(set(edges)))
    inst = write(tmp_path, "mcgee.txt", text)
    code = run_command(["color", inst, "--pipeline", "girth7"])
    err = capsys.readouterr().err
    assert code == 2
    assert "NOT certified" in err


def test_exact_on_cycle(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    assert run_command(["exact", inst]) == 0
    assert "strong chromatic index = 5" in capsys.readouterr().err


def test_exact_refuses_oversized(tmp_path, capsys):
    inst = write(tmp_path, "big.txt", C5)
    assert run_command(["exact", inst, "--edge-cap", "3"]) == 1
    assert "refused" in capsys.readouterr().err


def test_mad_and_threshold(tmp_path, capsys):
    inst = write(tmp_path, "c5.txt", C5)
    assert run_command(["mad", inst]) == 0
    assert "maximum average degree = 2" in capsys.readouterr().err
    assert run_command(["mad", inst, "--threshold", "5/2"]) == 0
    assert "does not exceed 5/2" in capsys.readouterr().err
    assert run_command(["mad", inst, "--threshold", "1"]) == 0
    assert "> 1 on vertices" in capsys.readouterr().err


def test_girth_output(tmp_path, capsys):
    assert run_command(["girth", write(tmp_path, "c5.txt", C5)]) == 0
    assert "girth = 5" in capsys.readouterr().err
    tree = write(tmp_path, "t.txt", "e 0 1\ne 1 2\n")
    assert run_command(["girth", tree]) == 0
    assert "girth = infinite" in capsys.readouterr().err


def test_audit_mad_output(tmp_path, capsys):
    inst = tmp_path / "sp.txt"
    assert run_command(["gen", "sparse-mad3", "16", "--seed", "1",
                        "-o", str(inst)]) == 0
    assert run_command(["audit", str(inst)]) == 0
    err = capsys.readouterr().err
    assert "scheme mad" in err and "identity total" in err
    assert "detector" in err


def test_audit_girth7_needs_rotations(tmp_path, capsys):
    inst = write(tmp_path, "c7.txt",
                 "".join(f"e {i} {(i + 1) % 7}\n" for i in range(7)))
    assert run_command(["audit", inst, "--scheme", "girth7"]) == 1
    assert "needs rotation records" in capsys.readouterr().err


def test_audit_girth7_on_generated(tmp_path, capsys):
    inst = tmp_path / "pl.txt"
    assert run_command(["gen", "planar-girth7", "18", "--seed", "2",
                        "-o", str(inst)]) == 0
    assert run_command(["audit", str(inst), "--scheme", "girth7"]) == 0
    err = capsys.readouterr().err
    assert "identity total: -14" in err


def test_gen_is_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for target in (a, b):
        assert run_command(["gen", "tree", "23", "--seed", "9",
                            "-o", str(target)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_missing_file_and_bad_syntax(tmp_path, capsys):
    assert run_command(["color", str(tmp_path / "nope.txt")]) == 1
    assert "io error" in capsys.readouterr().err
    bad = write(tmp_path, "bad.txt", "e 0 0\n")
    assert run_command(["color", bad]) == 1
    assert "bad input: line 1" in capsys.readouterr().err


def test_gen_argument_error(capsys):
    assert run_command(["gen", "cycle", "2"]) == 1
    assert "error:" in capsys.readouterr().err


def test_stdin_dash(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(C5))
    assert run_command(["girth", "-"]) == 0
    assert "girth = 5" in capsys.readouterr().err


def test_installed_entry_point(tmp_path):
    proc = subprocess.run(["strongedge", "gen", "cycle", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "e 0 1" in proc.stdout
    proc = subprocess.run(["strongedge"], capture_output=True, text=True)
    assert proc.returncode == 2  # argparse usage error
