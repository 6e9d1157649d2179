import io
import json
from pathlib import Path

import pytest

from scpoly import families as fam
from scpoly.cli import run
from scpoly.graphio import to_graph6
from scpoly.qpoly import q_poly

GOLDEN = Path(__file__).parent / "golden" / "families.tsv"


def cli(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err, io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_compute_q_on_p3():
    assert cli("compute", "--poly", "q", "Bg")[:2] == (0, "1 + 3*x*y + 2*x^2*y + x^2*y^2 + x^3*y\n")


def test_compute_methods_agree():
    outs = {cli("compute", "--method", m, "3; 0 1; 1 2")[1] for m in ("definition", "recurrence", "auto")}
    assert len(outs) == 1


def test_family_pipe_compute_matching():
    code, g6, _ = cli("family", "path", "3")
    assert (code, g6) == (0, "Bg\n")
    assert cli("compute", "--poly", "matching", stdin=g6)[1] == "x^3 - 2*x\n"


def test_compute_other_polys():
    assert cli("compute", "--poly", "charpoly", "Bg")[1] == "x^3 - 2*x\n"
    assert cli("compute", "--poly", "tutte", "Bw")[1] == "y + x + x^2\n"


def test_compare_fig4():
    g1, g2 = fam.fig4_pair()
    code, out, _ = cli("compare", to_graph6(g1), to_graph6(g2))
    assert code == 0
    assert out == "Q: equal\ncharpoly: different\nmatching: different\ntutte: different\n"


@pytest.mark.parametrize("line", GOLDEN.read_text().splitlines())
def test_golden_family_round_trip(line):
    name, params, g6, qtext = line.split("\t")
    code, out, _ = cli("family", name, *params.split())
    assert (code, out.strip()) == (0, g6)
    assert cli("compute", stdin=out)[1].strip() == qtext
    assert qtext == str(q_poly(fam.make(fam.FamilySpec(name, tuple(map(int, params.split()))))))


def test_json_output_stable():
    a = cli("compute", "--format", "json", "--method", "recurrence", "Dhc")[1]
    b = cli("compute", "--format", "json", "--method", "recurrence", "Dhc")[1]
    assert a == b
    obj = json.loads(a)
    assert list(obj) == sorted(obj)
    assert obj["polynomial"][0] == [0, 0, "1"]


def test_invariants_json():
    code, out, _ = cli("invariants", "--format", "json", to_graph6(fam.hypercube(3)))
    obj = json.loads(out)
    assert code == 0
    assert (obj["n"], obj["connectivity"], obj["induced_c4"]) == (8, 3, 6)


def test_census_command(tmp_path):
    path = tmp_path / "c4.tsv"
    code, out, _ = cli("census", "--order", "4", "--group-by", "q", "--out", str(path))
    assert code == 0
    assert "graphs: 11" in out and "classes: 11" in out
    assert len(path.read_text().splitlines()) == 11


def test_census_json_summary(tmp_path):
    code, out, _ = cli("census", "--order", "6", "--out", str(tmp_path / "c6.tsv"), "--format", "json")
    obj = json.loads(out)
    assert obj["graphs"] == 156
    assert any(len(c) >= 2 for c in obj["non_singleton_classes"])


def test_verify_unique_command():
    code, out, _ = cli("verify-unique", to_graph6(fam.path(6)))
    assert code == 0 and "Q-unique" in out and "not" not in out
    g1, _ = fam.fig4_pair()
    code, out, _ = cli("verify-unique", to_graph6(g1))
    assert "not Q-unique" in out and "shares Q with" in out


def test_graph_from_file(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n")
    assert cli("compute", str(f))[1] == cli("compute", "Bg")[1]


@pytest.mark.parametrize("argv, code, token", [
    (("compute", "B!"), 2, "'!'"),
    (("compute", "3; 0 7"), 2, "'7'"),
    (("compute", "3; 0 x"), 2, "'x'"),
    (("family", "cycle", "2"), 1, "n >= 3"),
    (("family", "cycle", "two"), 1, "'two'"),
    (("frobnicate",), 1, "frobnicate"),
    (("compute", "--bogus", "Bg"), 1, "--bogus"),
    (("census", "--order", "8"), 3, "opt-in"),
    (("census", "--order", "9", "--allow-order-8"), 3, "limit 8"),
    (("compute", "--subset-bound", "2", "--method", "definition", "Bg"), 3, "2^3"),
    (("compute", "--memo-capacity", "1", "--method", "recurrence", "Ehjg"), 3, "capacity 1"),
])
def test_error_exit_codes(argv, code, token):
    got, out, err = cli(*argv)
    assert got == code
    assert token in err
    assert len(err.strip().splitlines()) == 1
