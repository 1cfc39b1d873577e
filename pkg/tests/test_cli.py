"""Command line behavior: formats, exit codes, determinism, wiring."""

import io
import subprocess
import sys

import pytest

import dimsolver.cli as cli
from dimsolver import BenchReport

P4_TEXT = "c four path\np dim 4 3\ne 1 2 5\ne 2 3 2\ne 3 4 7\n"
C4_TEXT = "p dim 4 4\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 1 4 1\n"


@pytest.fixture
def p4_file(tmp_path):
    f = tmp_path / "p4.dim"
    f.write_text(P4_TEXT)
    return f


def run(argv, stdin=""):
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        return cli.main(argv)
    finally:
        sys.stdin = old


def test_solve_prints_dim_and_edges(p4_file, capsys):
    code = run(["solve", "--input", str(p4_file)])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "DIM 2\ne 2 3\n"


def test_solve_reads_stdin_and_reports_selection(capsys):
    code = run(["solve"], stdin=P4_TEXT)
    out = capsys.readouterr()
    assert code == 0
    assert out.out.startswith("DIM 2\n")
    assert "auto: selected" in out.err


def test_explicit_algo_skips_selection_banner(p4_file, capsys):
    code = run(["solve", "--algo", "domset", "--input", str(p4_file)])
    out = capsys.readouterr()
    assert code == 0 and "auto:" not in out.err


def test_solve_nodim_exit_code(capsys):
    code = run(["solve"], stdin=C4_TEXT)
    out = capsys.readouterr()
    assert code == 1
    assert out.out == "NODIM\n"


def test_solve_writes_output_file(p4_file, tmp_path, capsys):
    target = tmp_path / "answer"
    code = run(["solve", "--input", str(p4_file), "--output", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == "DIM 2\ne 2 3\n"


def test_solve_output_is_byte_stable(p4_file, capsys):
    run(["solve", "--input", str(p4_file), "--threads", "2"])
    first = capsys.readouterr().out
    run(["solve", "--input", str(p4_file), "--threads", "2"])
    assert capsys.readouterr().out == first


def test_count_formats(capsys):
    assert run(["count"], stdin=P4_TEXT) == 0
    assert capsys.readouterr().out == "COUNT 1 MINWEIGHT 2 MINCOUNT 1\n"
    assert run(["count"], stdin=C4_TEXT) == 1
    assert capsys.readouterr().out == "COUNT 0\n"


def test_missing_input_is_an_input_error(capsys):
    code = run(["solve", "--input", "/nonexistent/x.dim"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_graph_is_an_input_error(capsys):
    code = run(["solve"], stdin="p dim 2 1\ne 1 7 4\n")
    out = capsys.readouterr()
    assert code == 2
    assert "out of range" in out.err


def test_trace_writes_dot(p4_file, tmp_path, capsys):
    dot = tmp_path / "tree.dot"
    code = run(["solve", "--input", str(p4_file), "--trace", f"dot:{dot}"])
    capsys.readouterr()
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph") and "root" in text


def test_trace_rejects_other_algorithms(p4_file, capsys):
    code = run(
        ["solve", "--input", str(p4_file), "--algo", "mis", "--trace", "dot:x"]
    )
    assert code == 2
    assert "domset" in capsys.readouterr().err


def test_trace_spec_must_be_dot(p4_file, capsys):
    code = run(["solve", "--input", str(p4_file), "--trace", "png:x"])
    assert code == 2
    assert "dot:FILE" in capsys.readouterr().err


def test_gen_then_solve_pipeline(tmp_path, capsys):
    inst = tmp_path / "c6.dim"
    code = run(
        ["gen", "--family", "cycle", "--n", "6", "--output", str(inst)]
    )
    assert code == 0
    code = run(["solve", "--input", str(inst), "--algo", "mis"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out.startswith("DIM 2\n")


def test_gen_is_deterministic_on_stdout(capsys):
    argv = ["gen", "--family", "random", "--n", "9", "--seed", "4",
            "--weights", "uniform:1:10", "--p", "0.4"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("p dim 9 ")


def test_gen_rejects_bad_family_via_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        run(["gen", "--family", "blob", "--n", "4"])
    assert info.value.code == 2


def test_bench_writes_report(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for n in (4, 5, 6):
        run(
            ["gen", "--family", "path", "--n", str(n), "--seed", str(n),
             "--weights", "uniform:1:9", "--output", str(corpus / f"p{n}.dim")]
        )
    capsys.readouterr()
    report = tmp_path / "report.tsv"
    code = run(["bench", "--corpus", str(corpus), "--report", str(report)])
    assert code == 0
    lines = report.read_text().splitlines()
    assert lines[0].startswith("name\tn\tm")
    assert len(lines) == 4


def test_bench_missing_corpus_is_input_error(tmp_path, capsys):
    code = run(["bench", "--corpus", str(tmp_path / "nope")])
    assert code == 2


def test_bench_violations_exit_three(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(
        cli, "run_bench", lambda c: BenchReport((), ("fake.dim: solvers disagree",))
    )
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    report = tmp_path / "r.tsv"
    code = run(["bench", "--corpus", str(corpus), "--report", str(report)])
    out = capsys.readouterr()
    assert code == 3
    assert "violation" in out.err
    assert report.exists()


def test_installed_entry_point_round_trip(tmp_path):
    inst = tmp_path / "star.dim"
    gen = subprocess.run(
        [sys.executable, "-m", "dimsolver", "gen", "--family", "star",
         "--n", "5", "--weights", "uniform:2:9", "--seed", "1",
         "--output", str(inst)],
        capture_output=True, text=True,
    )
    assert gen.returncode == 0
    solved = subprocess.run(
        [sys.executable, "-m", "dimsolver", "solve", "--input", str(inst)],
        capture_output=True, text=True,
    )
    assert solved.returncode == 0
    assert solved.stdout.startswith("DIM ")
