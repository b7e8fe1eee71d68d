import pytest

from heapcox import lattice as lat
from heapcox.catalog import catalog_heap, h3_heap
from heapcox.cli import run
from heapcox.heap import dump_motif, validate
from heapcox.realize import E6_PERMS, all_strings, emit_dot, hasse_graph, perm_table


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_pass(capsys):
    code, out, _ = _run(capsys, "validate", "--catalog", "B", "5", "--level", "full")
    assert code == 0 and out.startswith("PASS")
    assert out == validate(catalog_heap("B-spin", 5), "full").render() + "\n"


def test_validate_failure_exit_code(capsys, tmp_path):
    from heapcox.cartan import catalog_diagram
    from heapcox.heap import heap_from_word

    path = tmp_path / "thin.motif"
    path.write_text(dump_motif(heap_from_word(catalog_diagram("A", 2), [0, 1, 0, 2, 1, 2])))
    before = path.read_text()
    code, out, _ = _run(capsys, "validate", "--motif", str(path), "--level", "full")
    assert code == 1 and out.startswith("FAIL full")
    code, out, _ = _run(capsys, "validate", "--motif", str(path), "--level", "labelled")
    assert code == 0
    assert path.read_text() == before


def test_act_literal(capsys):
    code, out, _ = _run(capsys, "act", "--catalog", "B", "5", "--ideal", "2(1),5(1)", "--word", "4")
    assert code == 0
    h = catalog_heap("B-spin", 5)
    assert out.strip() == "2(1),4(1)"
    # the same ideal as the literal listing 5(1), which lies below 4(1)
    assert lat.parse_ideal(h, out.strip()) == lat.parse_ideal(h, "2(1),4(1),5(1)")


def test_e6_perms_lines(capsys):
    code, out, _ = _run(capsys, "e6", "perms")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert lines[0] == "s1\t" + E6_PERMS[1]
    assert lines[-1] == "s0\t" + E6_PERMS[0]


def test_e6_table_and_incidence(capsys):
    code, out, _ = _run(capsys, "e6", "table")
    h = catalog_heap("E6")
    a1 = lat.orbit_decompose(h, lat.parse_ideal(h, "1(0)")).rep
    assert code == 0 and out.splitlines()[0] == "a1\t" + lat.format_ideal(h, a1)
    code, out, _ = _run(capsys, "e6", "incidence")
    rows = out.splitlines()
    assert len(rows) == 28
    assert rows[1].split("\t")[1:].count("1") == 10


def test_perm_z_matches_library(capsys):
    code, out, _ = _run(capsys, "perm-z", "--catalog", "C", "3", "--generator", "2", "--range", "-5", "5")
    rows = [tuple(map(int, r.split("\t"))) for r in out.splitlines()]
    assert rows == perm_table(catalog_heap("C", 3), "C", 2, -5, 5)


def test_hasse_h3_and_out_file(capsys, tmp_path):
    target = tmp_path / "h3.dot"
    code, out, _ = _run(capsys, "hasse", "--h3", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text == emit_dot(hasse_graph(h3_heap()))
    assert text.count("[label=") - text.count("->") == 12
    run(["hasse", "--h3", "--out", str(tmp_path / "again.dot")])
    assert (tmp_path / "again.dot").read_text() == text


def test_ideals_and_strings(capsys):
    code, out, _ = _run(capsys, "ideals", "--catalog", "A", "2", "--window", "0", "0")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = _run(capsys, "strings", "--catalog", "B", "3")
    assert sorted(l.split("\t")[0] for l in out.splitlines()) == sorted(all_strings("B-spin", 3))


def test_verify_campaigns(capsys):
    code, out, _ = _run(capsys, "verify", "relations", "--catalog", "C", "2", "--window", "-1", "1")
    assert code == 0 and out.startswith("PASS relations")
    code, out, _ = _run(capsys, "verify", "faithfulness", "--catalog", "A", "2", "--max-len", "3")
    assert code == 0 and out.startswith("PASS faithfulness")
    code, out, _ = _run(capsys, "verify", "equivariance", "--catalog", "D", "4", "--window", "0", "0")
    assert code == 0


def test_search(capsys):
    code, out, _ = _run(capsys, "search", "--diagram", "A", "2")
    assert code == 0 and out.startswith("# 2 isomorphism classes")


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["act", "--catalog", "Q", "2", "--ideal", "0(0)", "--word", "1"],
    ["act", "--catalog", "A", "2"],
    ["act", "--catalog", "A", "2", "--ideal", "7(0)", "--word", "1"],
    ["validate"],
    ["perm-z", "--catalog", "B", "3", "--generator", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2 and err
