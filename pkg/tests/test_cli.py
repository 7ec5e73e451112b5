import json

import pytest

from conway_tower import fixtures
from conway_tower.cli import main
from conway_tower.engine import conway_polynomial
from conway_tower.textio import parse_diagram


@pytest.fixture
def fixture_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.diagram"
        path.write_text(fixtures.text(name))
        return str(path)

    return write


def test_compute(fixture_file, capsys):
    assert main(["compute", "--input", fixture_file("trefoil_right")]) == 0
    assert capsys.readouterr().out.strip() == "c0=1 c2=1"


def test_compute_json(fixture_file, capsys):
    assert main(["compute", "--input", fixture_file("hopf_neg"), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"0": 0, "1": -1, "2": 0}


def test_compute_max_degree(fixture_file, capsys):
    assert main(["compute", "--input", fixture_file("knot_5_1"), "--max-degree", "2"]) == 0
    assert capsys.readouterr().out.strip() == "c0=1 c2=3"


def test_missing_file(capsys):
    assert main(["compute", "--input", "/nonexistent/x.diagram"]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.diagram"
    bad.write_text("diagram b\ncrossing 1 A=1:2 B=5:6 orient=+ over=A\nend\n")
    assert main(["compute", "--input", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


@pytest.mark.parametrize("prop", ["skein", "ordering", "marking", "moves"])
def test_verify_file(fixture_file, capsys, prop):
    assert main(["verify", "--property", prop, "--input", fixture_file("figure_eight")]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_random_json(capsys):
    code = main(["verify", "--property", "skein", "--random", "--trials", "3", "--seed", "2", "--json"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0 and report["passed"] and report["instances"] > 0


def test_tables(capsys):
    assert main(["tables"]) == 0
    assert capsys.readouterr().out.startswith("tables: PASS")


def test_ingest(tmp_path, capsys):
    src = tmp_path / "trefoil.contours"
    src.write_text(fixtures.contour_text("trefoil"))
    out = tmp_path / "trefoil.diagram"
    assert main(["ingest", "--contours", str(src), "--out", str(out)]) == 0
    d = parse_diagram(out.read_text())
    assert conway_polynomial(d).nonzero() == {0: 1}
    assert len(d.crossings) == 3


def test_ingest_general_position_error(tmp_path):
    src = tmp_path / "bad.contours"
    src.write_text("contour a\npoint 0 0\npoint 1 1\npoint 2 2\npoint 3 0\nend\n")
    assert main(["ingest", "--contours", str(src)]) == 2


def test_switch_and_smooth(fixture_file, tmp_path, capsys):
    path = fixture_file("hopf_pos")
    out = tmp_path / "s.diagram"
    assert main(["switch", "--input", path, "--crossing", "1", "--out", str(out)]) == 0
    assert conway_polynomial(parse_diagram(out.read_text())).nonzero() == {}
    assert main(["smooth", "--input", path, "--crossing", "1"]) == 0
    assert conway_polynomial(parse_diagram(capsys.readouterr().out)).nonzero() == {0: 1}
    assert main(["smooth", "--input", path, "--crossing", "9"]) == 2


def test_fixture_command(capsys):
    assert main(["fixture", "kink"]) == 0
    assert capsys.readouterr().out == fixtures.text("kink")
    assert main(["fixture", "nope"]) == 2
