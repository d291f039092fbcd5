import subprocess
import sys

import pytest

from qbfproofs.cli import main
from qbfproofs.core import parse_qdimacs
from qbfproofs.families import THREE_GATE_CIRCUIT, serialize_circuit

SMALL = "p cnf 3 2\na 1 0\ne 2 3 0\n-1 2 0\n1 3 0\n"
GOLDEN = "p cnf 5 5\ne 1 0\na 2 0\ne 4 0\na 3 0\ne 5 0\n1 4 0\n-2 4 0\n-1 5 0\n-3 5 0\n-4 -5 0\n"


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return go


def test_negate_golden(run, tmp_path):
    src = tmp_path / "small.qdimacs"
    src.write_text(SMALL)
    code, out, _ = run("negate", src, "--map", tmp_path / "map.txt")
    assert code == 0 and out == GOLDEN
    assert (tmp_path / "map.txt").read_text() == "1 4\n2 5\n"


def test_iff_pipeline(run, tmp_path):
    f, neg, qpt, tpt = (tmp_path / n for n in ("f.q", "neg.q", "p.qpt", "t.tpt"))
    assert run("gen", "iff", "--n", 3, "-o", f)[0] == 0
    assert parse_qdimacs(f.read_text()).num_vars == 6
    assert run("negate", f, "-o", neg)[0] == 0
    assert run("emit", "fig1", "--n", 3, "-o", qpt)[0] == 0
    assert run("check", "--formula", neg, qpt)[1] == "accepted, size=21\n"
    assert run("eval", f)[1] == "true\n"
    assert run("eval", neg)[1] == "false\n"
    assert run("prove-term", f, "-o", tpt)[0] == 0
    assert run("check", "--formula", f, tpt)[1] == "accepted, size=21, leaves=8\n"
    assert run("analyze", "--min-universal", f)[1] == "min_universal=3\nleaf_lower_bound=8\n"
    out = tmp_path / "tr.qpt"
    code, _, err = run("translate", "--formula", f, "--proof", tpt, "-o", out, "--report", tmp_path / "rep.txt")
    assert code == 0
    report = dict(l.split("=") for l in (tmp_path / "rep.txt").read_text().splitlines())
    assert report["within_bound"] == "true" and report["output_size"] == "69"
    assert run("check", "--formula", neg, out)[1] == "accepted, size=69\n"


def test_check_rejects_with_diagnostics(run, tmp_path):
    circ = tmp_path / "c.txt"
    circ.write_text(serialize_circuit(THREE_GATE_CIRCUIT))
    f, neg, qpt = tmp_path / "d.q", tmp_path / "nd.q", tmp_path / "p.qpt"
    run("gen", "defs", "--circuit", circ, "-o", f)
    run("negate", f, "-o", neg)
    run("emit", "fig2", "--circuit", circ, "-o", qpt)
    assert run("check", "--formula", neg, "--mode", "qu", qpt)[1] == "accepted, size=36\n"
    code, out, err = run("check", "--formula", neg, qpt)
    assert code == 1 and out == "rejected\n"
    assert err.splitlines()[0] == "node 16: universal pivot 5 in q-resolution mode"


def test_bce_trace(run, tmp_path):
    f = tmp_path / "f.q"
    run("gen", "iff", "--n", 2, "-o", f)
    code, out, _ = run("bce", f, "--trace", tmp_path / "t.txt")
    assert code == 0 and parse_qdimacs(out).matrix == ()
    assert (tmp_path / "t.txt").read_text() == "1 2\n2 -2\n3 4\n4 -4\n"


def test_format_errors_exit_2(run, tmp_path):
    bad = tmp_path / "bad.q"
    bad.write_text("p cnf 2 3\n1 0\n")
    code, _, err = run("eval", bad)
    assert code == 2 and err.startswith("error:")
    assert run("eval", tmp_path / "missing.q")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_false_formula_has_no_term_proof(run, tmp_path):
    f = tmp_path / "f.q"
    f.write_text("p cnf 2 2\ne 2 0\na 1 0\n-1 2 0\n1 -2 0\n")
    assert run("prove-term", f)[0] == 1


def test_random_generator_is_seeded(run):
    a = run("gen", "random", "--seed", 4)[1]
    assert a == run("gen", "random", "--seed", 4)[1]
    assert a.startswith("c generated-by")


def test_module_entry_point_reads_stdin():
    r = subprocess.run([sys.executable, "-m", "qbfproofs", "negate"], input=SMALL, capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == GOLDEN
