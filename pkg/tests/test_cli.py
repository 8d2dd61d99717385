import shutil
import subprocess
import sys

import pytest

from conftest import DATA
from testsets.cli import main
from testsets.io import read_matrix, read_vectors


@pytest.fixture
def work(tmp_path):
    for name in ("coin", "coin.cost", "coins", "coins2", "fourcycle"):
        shutil.copy(DATA / name, tmp_path / name)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_groebner_writes_basis(work, capsys):
    code, out, _ = run(capsys, "groebner", work / "coin")
    assert code == 0 and "4 vectors" in out
    first = (work / "coin.gro").read_bytes()
    ncols, rows = read_vectors(work / "coin.gro")
    assert ncols == 4 and set(rows) == {(0, 3, -4, 1), (-5, 6, 0, -1), (-5, 3, 4, -2), (5, 0, -8, 3)}
    run(capsys, "groebner", work / "coin")
    assert (work / "coin.gro").read_bytes() == first


def test_hilbert_and_graver(work, capsys):
    assert run(capsys, "graver", work / "coin")[0] == 0
    assert len(read_vectors(work / "coin.gra")[1]) == 5
    assert run(capsys, "hilbert", work / "coin")[0] == 0
    assert read_vectors(work / "coin.hil")[1] == []


def test_gap(work, capsys):
    code, out, err = run(capsys, "-v", "gap", work / "coin")
    assert code == 0 and out.strip() == "76/15"
    assert "0 5 3 0 incr {1} -> 5" in err


def test_cone(work, capsys):
    code, out, _ = run(capsys, "cone", work / "coin")
    assert code == 0 and "5 c1 + 3 c4 > 8 c3" in out.splitlines()


def test_maxopt(work, capsys):
    assert run(capsys, "maxopt", work / "coin")[0] == 0
    ncols, rows = read_vectors(work / "coin.maxopt")
    assert ncols == 8
    assert (0, 5, 3, 0, 1, 0, 0, 0) in rows and (4, 2, 0, 0, 0, 0, 1, 1) in rows


def test_series(work, capsys):
    code, out, _ = run(capsys, "series", work / "coin", "--names", "p,n,d,q")
    assert code == 0 and out.startswith("p^5*n^3*q^3 - n^6*d^4*q")
    assert (work / "coin.series").read_text() == out


def test_minimize_start(work, capsys):
    code, out, _ = run(capsys, "minimize", work / "coin", "--start", 4, 2, 0, 4)
    assert out.splitlines() == ["4 2 0 4", "value 6"]


def test_minimize_latte_with_cost(work, capsys):
    code, out, _ = run(capsys, "minimize", work / "coins2")
    assert code == 0 and out.splitlines() == ["555 2 441 1", "value 3"]


def test_count_latte(work, capsys):
    code, out, _ = run(capsys, "count", work / "coins", "--rhs", 999, 5000)
    assert code == 0 and out.strip() == "9352"


def test_count_matrix(work, capsys):
    code, out, _ = run(capsys, "count", work / "coin", "--rhs", 10, 114)
    assert out.strip() == "1"


def test_optimal(work, capsys):
    code, out, _ = run(capsys, "optimal", work / "coin", "--rhs", 10, 114)
    assert out.strip() == "4 2 0 4"


def test_model(work, capsys):
    out = work / "m"
    code, _, _ = run(capsys, "model", "--dims", 2, 2, 2, 2, "--facets", "1,2", "2,3", "3,4", "1,4", "-o", out)
    assert code == 0 and read_matrix(out) == read_matrix(work / "fourcycle")


def test_bounds(work, capsys):
    (work / "t").write_text("4 1\n5 0 0 0\n")
    code, out, _ = run(capsys, "bounds", "--dims", 2, 2, "--facets", "1", "2", "--table", work / "t", "--lp",
                       "-o", work / "t.bounds")
    assert code == 0
    assert out.splitlines() == ["1 1 5 5 5 5", "1 2 0 0 0 0", "2 1 0 0 0 0", "2 2 0 0 0 0"]
    assert (work / "t.bounds").read_text() == out


def test_bounds_graver_single_cell(work, capsys):
    (work / "t").write_text("4 1\n1 2 3 4\n")
    code, out, _ = run(capsys, "bounds", "--dims", 2, 2, "--facets", "1", "2", "--table", work / "t",
                       "--cell", 1, 1, "--graver")
    assert out.strip() == "1 1 0 3"


class TestExitCodes:
    def test_no_command(self, capsys):
        assert run(capsys)[0] == 1

    def test_unknown_option(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["groebner"])
        assert exc.value.code == 1

    def test_missing_file(self, work, capsys):
        assert run(capsys, "groebner", work / "nothing")[0] == 2

    def test_bad_header(self, work, capsys):
        (work / "bad").write_text("2 2\n1 2\n3 4\n5 6\n")
        code, _, err = run(capsys, "hilbert", work / "bad")
        assert code == 2 and "promises 4 entries" in err

    def test_missing_cost(self, work, capsys):
        (work / "nocost").write_text("2 1\n1 1\n")
        assert run(capsys, "groebner", work / "nocost")[0] == 1

    def test_unbounded_order(self, work, capsys):
        (work / "u").write_text("2 1\n1 -1\n")
        (work / "u.cost").write_text("2 1\n-1 -1\n")
        assert run(capsys, "groebner", work / "u")[0] == 3

    def test_unbounded_fiber(self, work, capsys):
        (work / "u").write_text("2 1\n1 -1\n")
        assert run(capsys, "count", work / "u", "--rhs", 0)[0] == 3

    def test_invalid_facet(self, work, capsys):
        assert run(capsys, "model", "--dims", 2, 2, "--facets", "1,3", "-o", work / "m")[0] == 1

    def test_rhs_length(self, work, capsys):
        assert run(capsys, "count", work / "coin", "--rhs", 1)[0] == 1

    def test_infeasible_start(self, work, capsys):
        assert run(capsys, "minimize", work / "coin", "--rhs", 1, 3)[0] == 3

    def test_console_entry(self, work):
        res = subprocess.run([sys.executable, "-m", "testsets.cli", "gap", str(work / "coin")],
                             capture_output=True, text=True)
        assert res.returncode == 0 and res.stdout.strip() == "76/15"
