import json

import pytest

from floodpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_cycle(capsys):
    code, out, _ = run(capsys, "compute", "cycle:4")
    assert code == 0
    assert out.splitlines()[0] == "F(x) = x^4 + 4x^3 + 2x^2"
    assert "triggers = 4" in out


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "path:3 + cycle:3", "--free", "--minimal", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "PASS"
    assert data["free_vertices"] == [2]
    assert len(data["minimal_sets"]) == 3
    assert data["polynomial"] == {"coeffs": ["0", "0", "0", "0", "3", "4", "1"]}


def test_compute_edge_list_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 4\n1 2\n2 3\n3 4\n4 1\n")
    code, out, _ = run(capsys, "compute", f"@{f}", "--threads", "1")
    assert code == 0 and "x^4 + 4x^3 + 2x^2" in out


def test_formula_and_unknown(capsys):
    code, out, _ = run(capsys, "formula", "grid:2x4")
    assert code == 0 and out.strip() == "F(x) = x^8 + 8x^7 + 26x^6 + 44x^5 + 38x^4 + 8x^3"
    code, _, err = run(capsys, "formula", "grid:3x3")
    assert code == 2 and "no closed formula" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "path:8")
    assert code == 0
    assert "formula == brute force: PASS" in out
    assert "trigger law: PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "tick:2,2", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "PASS"
    assert set(data["checks"].values()) == {"PASS"}


def test_cascade(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(
        "8 10\n1 3\n1 2\n2 4\n3 5\n3 4\n4 6\n5 6\n6 8\n7 8\n5 7\n"
    )
    code, out, _ = run(capsys, "cascade", f"@{f}", "--seed", "1,4,6")
    assert code == 0
    assert out.splitlines() == [
        "C_0 = {1, 4, 6}",
        "C_1 = {1, 2, 3, 4, 6}",
        "C_2 = {1, 2, 3, 4, 5, 6}",
        "STUCK unflooded {7, 8}",
    ]


def test_cascade_floods_and_bad_seed(capsys):
    code, out, _ = run(capsys, "cascade", "cycle:4", "--seed", "1,3")
    assert code == 0 and out.splitlines()[-1] == "FLOODS"
    code, _, err = run(capsys, "cascade", "cycle:4", "--seed", "9")
    assert code == 2


def test_facts(capsys):
    code, out, _ = run(capsys, "facts", "x^4 + 4x^3 + 2x^2", "--json")
    data = json.loads(out)
    assert code == 0 and data["facts"]["trigger_count"] == 4
    code, _, _ = run(capsys, "facts", "2x^2")
    assert code == 2
    code, _, _ = run(capsys, "facts", "x^^2")
    assert code == 2


def test_search_all_graphs(capsys):
    code, out, _ = run(capsys, "search", "--all-graphs", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["classes"] == [{"polynomial": {"coeffs": ["0", "0", "1"]}, "members": ["A?", "A_"]}]


def test_search_corpus(capsys, tmp_path):
    f = tmp_path / "c.g6"
    f.write_text(">>graph6<<A_\nA?\nBw\n")
    code, out, _ = run(capsys, "search", "--corpus", str(f))
    assert code == 0
    assert "3 graphs, 3 non-isomorphic, 0 skipped, 1 shared polynomials" in out


def test_families(capsys):
    code, out, _ = run(capsys, "families")
    assert code == 0 and "centipede" in out
    code, out, _ = run(capsys, "families", "path:2", "--graph6")
    assert out.strip() == "A_"
    code, out, _ = run(capsys, "families", "grid:2x2")
    assert "4 4" in out


def test_too_large_exit_code(capsys):
    code, _, err = run(capsys, "compute", "complete:30")
    assert code == 3 and "capped" in err


def test_missing_file(capsys):
    code, _, _ = run(capsys, "compute", "@/nonexistent/file.txt")
    assert code == 2


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["compute"])
    assert exc.value.code == 2


def test_json_polynomial_round_trips(capsys):
    from floodpoly.poly import IntPolynomial

    _, out, _ = run(capsys, "compute", "grid:2x3", "--json")
    p = IntPolynomial.from_json(json.loads(out)["polynomial"])
    assert IntPolynomial.parse(str(p)) == p
    assert p.degree == 6


def test_output_independent_of_thread_count(capsys):
    outs = {run(capsys, "compute", "cycle:18", "--threads", str(t), "--json")[1] for t in (1, 2, 8)}
    assert len(outs) == 1
