import subprocess
import sys

import pytest

from graphisol.cli import main
from graphisol.extremal import build_b
from graphisol.graphs import encode_graph6, parse_graph6
from graphisol.isomorphism import isomorphic
from graphisol.patterns import CYCLE4, G2, K4, NINE_VERTEX_EXCEPTIONS, path


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "--g6", "C~")
    assert code == 0 and out == "G4Member(K4)\n"
    code, out, _ = run_cli(capsys, "classify", "--g6", encode_graph6(path(4)))
    assert code == 0 and out == "None\n"


def test_classify_bad_input(capsys):
    code, out, err = run_cli(capsys, "classify", "--g6", "~~~")
    assert code == 1 and "error:" in err


def test_iota_g2(capsys):
    code, out, _ = run_cli(capsys, "iota", "--g6", encode_graph6(G2), "--family", "c4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size 2"
    assert lines[1].startswith("witness ") and len(lines[1].split()) == 3


def test_iota_families(capsys):
    code, out, _ = run_cli(capsys, "iota", "--g6", "C~", "--family", "clique:3")
    assert code == 0 and out.splitlines()[0] == "size 1"
    code, out, _ = run_cli(capsys, "iota", "--g6", encode_graph6(path(5)), "--family", "cycles")
    assert code == 0 and out.splitlines()[0] == "size 0"


def test_isolate_with_trace(capsys):
    g6 = encode_graph6(build_b(12, CYCLE4))
    code, out, _ = run_cli(capsys, "isolate", "--g6", g6, "--trace")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "size 2"
    assert lines[1] == "bound 2"
    assert lines[2].startswith("witness")
    assert lines[3] == "verified yes"
    assert any(line.startswith("step ") for line in lines[4:])


def test_isolate_exceptional_input(capsys):
    code, _, err = run_cli(capsys, "isolate", "--g6", encode_graph6(K4))
    assert code == 1 and "G4Member(K4)" in err


def test_isolate_output_stability(capsys):
    g6 = encode_graph6(build_b(17, CYCLE4))
    out1 = run_cli(capsys, "isolate", "--g6", g6, "--trace")
    out2 = run_cli(capsys, "isolate", "--g6", g6, "--trace")
    assert out1 == out2


def test_construct_b(capsys):
    code, out, _ = run_cli(capsys, "construct-b", "--n", "3", "--pattern", "c4")
    assert code == 0
    assert isomorphic(parse_graph6(out.strip()), path(3))
    code, out, _ = run_cli(capsys, "construct-b", "--n", "10", "--pattern", "c4")
    assert parse_graph6(out.strip()).n == 10
    code, out, _ = run_cli(capsys, "construct-b", "--n", "8", "--pattern", "k3")
    assert parse_graph6(out.strip()).n == 8


def test_construct_b_bad_pattern(capsys):
    code, _, err = run_cli(capsys, "construct-b", "--n", "5", "--pattern", "zzz")
    assert code == 1 and "unknown pattern" in err


def test_edge_list_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("4\n0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run_cli(capsys, "classify", "--edges", "-")
    assert code == 0 and out == "G4Member(C4)\n"


def test_sweep_with_expect(capsys, tmp_path):
    cat = tmp_path / "cat.g6"
    cat.write_text("".join(encode_graph6(g) + "\n" for g in NINE_VERTEX_EXCEPTIONS))
    expect = tmp_path / "expect.g6"
    expect.write_text("".join(sorted(encode_graph6(g) + "\n" for g in NINE_VERTEX_EXCEPTIONS)))
    code, out, _ = run_cli(capsys, "sweep", "--catalog", str(cat), "--family", "c4",
                           "--bound", "1", "--expect", str(expect))
    assert code == 0
    assert "violators 6" in out
    assert out.rstrip().endswith("expectation ok")

    wrong = tmp_path / "wrong.g6"
    wrong.write_text("C~\n")
    code, _, err = run_cli(capsys, "sweep", "--catalog", str(cat), "--family", "c4",
                           "--bound", "1", "--expect", str(wrong))
    assert code == 1 and "MISMATCH" in err


def test_sweep_missing_catalog(capsys):
    code, _, err = run_cli(capsys, "sweep", "--catalog", "/nonexistent.g6")
    assert code == 1 and "error:" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as ei:
        main(["bogus-subcommand"])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        main([])
    assert ei.value.code == 2


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "graphisol.cli", "classify", "--g6", "C^"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "G4Member(Diamond)\n"


def test_selftest(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "witness-pairs 54/54" in out
    assert out.rstrip().endswith("selftest PASS (95/95)")
