"""Command-line behavior: formats, exit codes, table diffs."""

import json

from hamfix.cli import run
from hamfix.toric import corpus_dir


def capture(capsys):
    out = capsys.readouterr()
    return out.out, out.err


def test_classify_dim4_matches_reference(capsys):
    assert run(["classify", "--dim", "4"]) == 0
    out, _ = capture(capsys)
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["label", "m", "crit", "components", "b2", "euler_min"]
    assert len(lines) == 9
    assert lines[1].startswith("I-1\tP1xP1")


def test_classify_dim6_reports_mismatch(capsys):
    assert run(["classify", "--dim", "6"]) == 1
    out, err = capture(capsys)
    lines = out.strip().splitlines()
    assert len(lines) == 20  # header + 19 rows
    assert "differs from the embedded reference" in err
    assert any(line.startswith("II-4.1b\t") for line in lines)


def test_classify_case_filter(capsys):
    assert run(["classify", "--dim", "6", "--case", "III"]) == 0
    out, _ = capture(capsys)
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 10
    assert all(r.startswith("III-") for r in rows)


def test_classify_json_round_trip(capsys):
    run(["classify", "--dim", "6", "--format", "json", "--case", "I"])
    out, _ = capture(capsys)
    rows = json.loads(out)
    assert [r["label"] for r in rows] == ["I-1", "I-2", "I-3"]
    assert json.loads(json.dumps(rows)) == rows


def test_chern_row(capsys):
    assert run(["chern", "--row", "III-3.2"]) == 0
    out, _ = capture(capsys)
    assert out.strip() == "46"


def test_chern_unknown_row(capsys):
    assert run(["chern", "--row", "IX-7"]) == 2
    _, err = capture(capsys)
    assert "unknown row" in err


def test_capacities_table(capsys):
    assert run(["capacities"]) == 0
    out, _ = capture(capsys)
    lines = out.strip().splitlines()
    assert len(lines) == 20
    assert "III-1\t4\t4" in out


def test_toric_verify_corpus(capsys):
    assert run(["toric", "verify"]) == 0
    out, _ = capture(capsys)
    assert "verified 14 polytopes" in out


def test_toric_verify_single(capsys):
    path = str(corpus_dir() / "p3.json")
    assert run(["toric", "verify", "--polytope", path, "--xi", "1,1,1"]) == 0
    out, _ = capture(capsys)
    assert "matches III-1" in out
    assert "degree 64" in out


def test_toric_verify_non_semifree(capsys):
    path = str(corpus_dir() / "p3.json")
    assert run(["toric", "verify", "--polytope", path, "--xi", "2,1,1"]) == 1
    _, err = capture(capsys)
    assert "not semifree" in err


def test_toric_verify_needs_direction(capsys):
    path = str(corpus_dir() / "p3.json")
    assert run(["toric", "verify", "--polytope", path]) == 2


def test_tables_diff_shows_known_discrepancies(capsys):
    assert run(["tables", "diff"]) == 1
    out, _ = capture(capsys)
    assert "+II-4.1b" in out
    added = [l for l in out.splitlines() if l.startswith("+") and "\t" in l]
    removed = [l for l in out.splitlines() if l.startswith("-") and "\t" in l]
    # one extra six-dimensional row plus the one capacity cell
    assert len(added) == 2 and len(removed) == 1


def test_tables_diff_deterministic(capsys):
    run(["tables", "diff"])
    first, _ = capture(capsys)
    run(["tables", "diff"])
    second, _ = capture(capsys)
    assert first == second


def test_case3_tuples_listing(capsys):
    assert run(["case3-tuples"]) == 0
    out, _ = capture(capsys)
    assert "(1, -1, 2)" in out and "(3, 1, 0)" in out


def test_emit_dh(tmp_path, capsys):
    run(["classify", "--dim", "6", "--case", "I", "--emit-dh", str(tmp_path)])
    capture(capsys)
    files = sorted(p.name for p in tmp_path.glob("*.tsv"))
    assert files == ["dh_I-1.tsv", "dh_I-2.tsv", "dh_I-3.tsv"]
    body = (tmp_path / "dh_I-1.tsv").read_text()
    assert body.startswith("t\tDH\n")
    assert "-3\t0" in body
    assert "0\t9" in body  # the reduced class 3u has square nine


def test_unknown_flag_exits_2(capsys):
    assert run(["classify", "--dim", "5"]) == 2
    capture(capsys)


def test_bound_flag(capsys):
    assert run(["classify", "--dim", "6", "--case", "II", "--bound", "5"]) == 1
    out, _ = capture(capsys)
    assert len(out.strip().splitlines()) == 7  # header + six case II rows


def test_verbose_bound_witness(capsys):
    run(["classify", "--dim", "6", "--case", "I", "-v"])
    _, err = capture(capsys)
    assert "bound sufficiency" in err
    assert "inside the search box 6" in err
