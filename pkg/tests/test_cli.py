import json

import pytest

from ringlab.cli import main
from ringlab.hunt import constructor_candidates, hunt, random_candidates


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--ring", "U(2, Zmod(2))", "--property", "left_n_reflexive")
    assert code == 1 and "witness a=[[0,1],[0,0]]" in out
    assert run(capsys, "check", "--ring", "M(2, Zmod(2))", "--property", "n_reflexive")[0] == 0
    assert run(capsys, "check", "--ring", "Zmod(1)", "--property", "reduced")[0] == 0


def test_check_json(capsys):
    code, out, _ = run(capsys, "--json", "check", "--ring", "Zmod(4)", "--property", "reduced")
    doc = json.loads(out)
    assert code == 1 and doc["schema"] == 1 and doc["holds"] is False
    assert doc["witness"][0] == {"role": "a", "value": 2, "display": "2"}
    code, out, _ = run(capsys, "check", "--ring", "D(2, Zmod(4))", "--property", "quasi_armendariz",
                       "--degree", "1", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["bounds"]["degree"] == 1


def test_errors_exit_2(capsys):
    code, _, err = run(capsys, "check", "--ring", "M(2, Zmod(2)", "--property", "reduced")
    assert code == 2 and "ringlab: error" in err
    assert run(capsys, "check", "--ring", "Zmod(0)", "--property", "reduced")[0] == 2
    assert run(capsys, "check", "--ring", "Zmod(2)", "--property", "frobnicate")[0] == 2
    assert run(capsys, "check", "--ring", "M(2, M(2, Zmod(2)))", "--property", "reduced",
               "--order-cap", "100")[0] == 2
    assert run(capsys)[0] == 2


def test_matrix_deterministic(tmp_path, capsys):
    cat = tmp_path / "c.txt"
    cat.write_text("# tiny\nA = Zmod(4)\nB = U(2, Zmod(2))\n")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "--json", "matrix", "--catalog", str(cat), "--out", str(a))[0] == 0
    assert run(capsys, "matrix", "--catalog", str(cat), "--out", str(b), "--json")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert [r["name"] for r in doc["rings"]] == ["A", "B"]
    assert doc["properties"] == sorted(doc["properties"])
    assert doc["replay"]["confirmed"] == doc["replay"]["false_verdicts"] > 0


def test_matrix_empty_and_malformed(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n\n")
    code, out, _ = run(capsys, "--json", "matrix", "--catalog", str(empty))
    doc = json.loads(out)
    assert code == 0 and doc["rings"] == [] and doc["errors"] == []
    bad = tmp_path / "bad.txt"
    bad.write_text("A = Zmod(2)\nthis line is junk\nB = Zmod(3)\n")
    code, out, _ = run(capsys, "--json", "matrix", "--catalog", str(bad))
    doc = json.loads(out)
    assert code == 0 and [r["name"] for r in doc["rings"]] == ["A", "B"]
    assert len(doc["errors"]) == 1 and doc["errors"][0]["line"] == 2


def test_implications(capsys):
    code, out, _ = run(capsys, "--json", "implications", "--experimental")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == []
    assert all(e["anchor"] for e in doc["edges"])
    found = {(c["edge"], c["ring"]) for c in doc["experimental"]["counterexamples"]}
    assert any(edge.startswith("left_n_right_idempotent_reflexive") for edge, _ in found)


def test_hunt_cli(capsys):
    code, out, _ = run(capsys, "hunt", "--holds", "two_primal", "--fails", "left_n_reflexive")
    assert code == 0 and "found U(2, Zmod(2))" in out
    code, out, _ = run(capsys, "hunt", "--holds", "reduced", "--fails", "reduced")
    assert code == 1 and "no separation possible" in out


def test_hunt_implied_and_timeout():
    res = hunt("reversible", "n_reflexive")
    assert res.reason and res.examined == 0
    assert hunt("reduced", "n_reflexive").reason
    assert hunt("left_n_reflexive", "n_reflexive").reason is None
    res = hunt("n_reflexive", "reduced", timeout_secs=0.0)
    assert res.timed_out and not res.found


def test_hunt_deterministic():
    a = [name for name, _ in random_candidates(7, 30)]
    b = [name for name, _ in random_candidates(7, 30)]
    assert a == b
    first = [name for _, (name, _) in zip(range(40), constructor_candidates(2, 64))]
    assert first[:8] == [f"Zmod({n})" for n in range(2, 10)]
    assert hunt("n_reflexive", "reduced").to_dict() == hunt("n_reflexive", "reduced").to_dict()


def test_random_candidates_are_rings():
    from ringlab.core import verify_axioms
    for name, R in random_candidates(3, 20):
        assert R.order <= 16
        verify_axioms(R.add, R.mul, R.zero, R.one)


def test_wordalg_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "wordalg", "--ideal", "free_yx", "--check", "y * ? * x", "--max-middle", "8")
    assert code == 0
    code, out, _ = run(capsys, "--json", "wordalg", "--ideal", "free_yx", "--check", "x * ? * y")
    doc = json.loads(out)
    assert code == 1 and doc["bounds"]["max_middle"] == 8
    f = tmp_path / "p.txt"
    f.write_text("letters x y\ngap x y\ncollapse x\n")
    assert run(capsys, "wordalg", "--ideal", str(f), "--normal-form", "xxy")[1] == "0\n"
    assert run(capsys, "wordalg", "--ideal", str(f), "--normal-form", "yxx")[1] == "yx\n"
    assert run(capsys, "wordalg", "--ideal", str(f), "--nilpotent", "x")[0] == 1
    assert run(capsys, "wordalg", "--ideal", str(f), "--nilpotent", "yx")[0] == 0
    code, out, _ = run(capsys, "--json", "wordalg", "--ideal", "free_ab", "--embed-s1")
    doc = json.loads(out)
    assert code == 0 and doc["asb_zero"] and not doc["ba_zero"] and doc["bounds"]["max_middle"] == 4
    assert run(capsys, "wordalg", "--ideal", "free_yx", "--check", "x * y")[0] == 2
    assert run(capsys, "wordalg", "--ideal", str(tmp_path / "missing"), "--normal-form", "x")[0] == 2


def test_axioms_cli(tmp_path, capsys):
    from ringlab import build
    from ringlab.core import format_ring_table
    R = build("Zmod(4)")
    good = tmp_path / "z4.txt"
    good.write_text(format_ring_table(R))
    assert run(capsys, "axioms", "--table", str(good))[0] == 0
    bad_mul = R.mul.copy()
    bad_mul[2, 3] = 1
    from ringlab.core import FiniteRing
    bad = tmp_path / "bad.txt"
    bad.write_text(format_ring_table(FiniteRing(R.add, bad_mul, R.zero, R.one, name="bad")))
    code, out, _ = run(capsys, "--json", "axioms", "--table", str(bad))
    doc = json.loads(out)
    assert code == 1 and doc["valid"] is False and doc["witness"]
    assert run(capsys, "axioms", "--ring", "H(1, 1, Zmod(2))")[0] == 0


def test_hunt_left_only_separation():
    # expected to find the skew trivial extension over a truncated polynomial
    # ring; truncation makes that ring fail on the left as well, and no other
    # candidate within the bounds separates the two sides
    res = hunt("left_n_reflexive", "right_n_reflexive", max_depth=2, order_cap=64)
    assert res.found, f"nothing found among {res.examined} rings"
