import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from mnfcomplex import canonical_key, cross_minus_facet, cross_polytope, pd_sphere, pentagon
from mnfcomplex.cli import main
from mnfcomplex.constructions import EMPTY
from mnfcomplex.errors import ParseError
from mnfcomplex.io import analysis_report, format_complex, parse_complex

from strategies import complexes

REPORT_KEYS = {
    "n", "d", "m", "alpha", "f_vector", "facets", "is_pure", "is_cone", "point_separating",
    "unsuspended", "join_factors", "homology", "nerve", "lcm",
}


def write(tmp_path, name, c):
    p = tmp_path / name
    p.write_text(format_complex(c))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(no_floats(v) for v in obj)
    return True


# -- file format ----------------------------------------------------------------


def test_parse_with_comments():
    c = parse_complex("# a pentagon\nn 5  # five vertices\n1 3\n1 4\n\n2 4\n2 5\n3 5 # last\n")
    assert c == pentagon()


def test_empty_complex_round_trip():
    assert format_complex(EMPTY) == "n 0\n"
    assert parse_complex("n 0\n") == EMPTY


@pytest.mark.parametrize(
    "text,line",
    [("n 3\n1 2 x\n", 2), ("1 2\n", 1), ("n 3\n1 4\n", 2), ("# c\nn three\n", 2), ("n 3\n\n0 1\n", 3)],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_complex(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_rejects_nested_sets():
    with pytest.raises(ParseError):
        parse_complex("n 3\n1 2\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_complex("")


@settings(max_examples=100, deadline=None)
@given(complexes(max_n=8))
def test_format_parse_round_trip(c):
    assert parse_complex(format_complex(c, comment="generated")) == c


# -- reports ----------------------------------------------------------------------


def test_pentagon_report():
    rep = analysis_report(pentagon())
    assert set(rep) == REPORT_KEYS
    assert rep["alpha"] == 2 and rep["homology"]["is_homology_sphere"]
    assert rep["lcm"] == {"size": 17, "total_betti": [1, 5, 5, 1], "duality_ok": True, "violations": []}
    assert rep["nerve"]["dim"] == 1 and rep["nerve"]["max_degree"] == 2
    assert rep["unsuspended"] and rep["point_separating"] and not rep["is_cone"]
    assert no_floats(rep)


def test_cross_minus_facet_report():
    rep = analysis_report(cross_minus_facet(3))
    assert rep["alpha"] == 1
    assert not rep["homology"]["is_homology_sphere"]
    assert not rep["lcm"]["duality_ok"] and rep["lcm"]["violations"]


def test_report_join_factors():
    rep = analysis_report(cross_polytope(2), skip_lcm=True)
    assert "lcm" not in rep
    assert rep["join_factors"] == [{"vertices": [1, 2], "mnf": [[1, 2]]},
                                   {"vertices": [3, 4], "mnf": [[3, 4]]}]


# -- command line -----------------------------------------------------------------


def test_cli_analyze(tmp_path, capsys):
    path = write(tmp_path, "p.txt", pentagon())
    code, out, _ = run(capsys, "analyze", path)
    rep = json.loads(out)
    assert code == 0 and rep["alpha"] == 2 and rep["lcm"]["duality_ok"]
    code, out, _ = run(capsys, "analyze", path, "--field", "rat", "--skip-lcm")
    rep = json.loads(out)
    assert rep["homology"]["field"] == "rat" and "lcm" not in rep


def test_cli_analyze_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("n 3\n1 2 x\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "line 2" in err


def test_cli_analyze_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 2


def test_cli_gen(capsys):
    code, out, _ = run(capsys, "gen", "pd", "2")
    assert code == 0 and canonical_key(parse_complex(out)) == canonical_key(pentagon())
    code2, out2, _ = run(capsys, "gen", "pd", "2")
    assert out2 == out
    code, out, _ = run(capsys, "gen", "cyclic", "4", "7")
    assert code == 0 and parse_complex(out).n == 7
    code, _, err = run(capsys, "gen", "codim3", "4")
    assert code == 2 and "odd" in err
    code, _, _ = run(capsys, "gen", "cyclic", "4")
    assert code == 2


def test_cli_iso(tmp_path, capsys):
    a = write(tmp_path, "a.txt", pd_sphere(2))
    b = tmp_path / "b.txt"
    _, text, _ = run(capsys, "gen", "cyclic", "2", "5")
    b.write_text(text)
    assert main(["iso", a, str(b)]) == 0
    c = write(tmp_path, "c.txt", cross_minus_facet(2))
    assert main(["iso", a, c]) == 1


def test_cli_unsuspend_octahedron(tmp_path, capsys):
    path = write(tmp_path, "oct.txt", cross_polytope(3))
    code, out, err = run(capsys, "unsuspend", path)
    assert code == 0 and out == "n 0\n"
    assert err.splitlines() == ["remove-isolated 1 2", "remove-isolated 3 4", "remove-isolated 5 6"]
    logfile = tmp_path / "log.txt"
    code, out, err = run(capsys, "unsuspend", path, "--log", str(logfile))
    assert err == "" and len(logfile.read_text().splitlines()) == 3


def test_cli_nerve_dot(tmp_path, capsys):
    path = write(tmp_path, "p.txt", pentagon())
    code, out, _ = run(capsys, "nerve", path, "--dot")
    assert code == 0
    assert out.count("[label=") == 10 and out.count(" -- ") == 5
    code, out, _ = run(capsys, "nerve", path)
    assert json.loads(out)["dim"] == 1


def test_cli_census(tmp_path, capsys):
    out_path = tmp_path / "r.jsonl"
    args = ["census", "--n-max", "5", "--m-max", "5", "--spheres", "--unsuspended"]
    code, out, err = run(capsys, *args)
    assert code == 0 and len(out.splitlines()) == 1
    rec = json.loads(out)
    assert rec["key"] == canonical_key(pentagon()).hex()
    summary = json.loads(err)
    assert summary["records"] == 1 and no_floats(summary)
    code, _, _ = run(capsys, *args, "--out", str(out_path))
    assert out_path.read_text() == out


def test_cli_census_checkpoint_resume(tmp_path, capsys):
    ck = str(tmp_path / "c.ckpt")
    args = ["census", "--n-max", "5", "--m-max", "5", "--spheres", "--checkpoint", ck]
    code, first, _ = run(capsys, *args)
    code, again, _ = run(capsys, *args, "--resume")
    assert code == 0 and again == first
    code, _, err = run(capsys, "census", "--n-max", "4", "--m-max", "5", "--spheres",
                       "--checkpoint", ck, "--resume")
    assert code == 2 and "configuration" in err


def test_cli_census_bounds(capsys):
    code, _, err = run(capsys, "census", "--n-max", "11", "--m-max", "5")
    assert code == 2


def test_cli_too_large_exits_1(tmp_path, capsys):
    masks = "\n".join(f"{i} {i + 25}" for i in range(1, 26))
    p = tmp_path / "big.txt"
    p.write_text(f"n 50\n{masks}\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "p.txt", pentagon())
    done = subprocess.run([sys.executable, "-m", "mnfcomplex", "analyze", path, "--skip-lcm"],
                          capture_output=True, text=True, check=False)
    assert done.returncode == 0 and json.loads(done.stdout)["m"] == 5
    bad = subprocess.run([sys.executable, "-m", "mnfcomplex", "frobnicate"],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 2
