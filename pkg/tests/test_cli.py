"""Command-line interface: sum, table and isotropy commands."""
import json

import mpmath as mp
import pytest
from click.testing import CliRunner

from latsum.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_sum_text(runner):
    res = runner.invoke(main, ["sum", "--p", "0", "--q", "4", "--lattice", "square",
                               "--method", "fast", "--digits", "30"])
    assert res.exit_code == 0
    assert "3.15121200215389" in res.output


def test_sum_json_all_methods_agree(runner):
    res = runner.invoke(main, ["sum", "--p", "2", "--q", "4", "--lattice", "square",
                               "--method", "all", "--digits", "40", "--format", "json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    with mp.workdps(50):
        vals = {row["method"]: mp.mpf(row["value"].strip("()").split(" ")[0])
                for row in data["values"]}
        assert "oracle" in vals and "fast" in vals and "symbolic" in vals
        ref = mp.pi / 3
        assert abs(vals["oracle"] - ref) < mp.mpf("1e-6")
        assert abs(vals["fast"] - ref) < mp.mpf("1e-20")
        assert abs(vals["symbolic"] - ref) < mp.mpf("1e-20")


def test_sum_csv_rect(runner):
    res = runner.invoke(main, ["sum", "--p", "1", "--q", "3", "--lattice", "rect:1.5",
                               "--method", "fast", "--format", "csv"])
    assert res.exit_code == 0
    header, row = res.output.strip().splitlines()
    assert header.startswith("p,q")
    assert row.startswith("1,3")


def test_sum_rejects_symbolic_on_oblique(runner):
    res = runner.invoke(main, ["sum", "--p", "0", "--q", "4", "--lattice", "tau:0.3,1.2",
                               "--method", "symbolic"])
    assert res.exit_code != 0


def test_sum_deterministic(runner):
    args = ["sum", "--p", "3", "--q", "5", "--lattice", "rhombic:1.7",
            "--method", "fast", "--digits", "45"]
    out1 = runner.invoke(main, args).output
    out2 = runner.invoke(main, args).output
    assert out1 == out2


@pytest.mark.parametrize("name", ["3", "3b", "4", "4a", "6", "10a", "10b"])
def test_table_regressions(runner, name):
    res = runner.invoke(main, ["table", name])
    assert res.exit_code == 0, res.output


def test_table_csv_shape(runner):
    res = runner.invoke(main, ["table", "4", "--format", "csv"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "p,q,value,method,delta"
    assert len(lines) > 5


def test_table_unknown(runner):
    res = runner.invoke(main, ["table", "99"])
    assert res.exit_code != 0


def test_isotropy_command(runner, tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("# centered pair\n0.0 0.0\n0.5 0.5\n")
    res = runner.invoke(main, ["isotropy", str(pts)])
    assert res.exit_code == 0
    assert "isotropy" in res.output.lower()

    bad = tmp_path / "bad.txt"
    bad.write_text("0.3 0.0\n-0.1 0.0\n")
    res = runner.invoke(main, ["isotropy", str(bad)])
    assert "not" in res.output.lower() or res.exit_code != 0
