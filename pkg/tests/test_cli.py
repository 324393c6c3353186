"""Command-line interface behavior and output determinism."""

import pytest

from kcg.cli import main
from kcg.tabledata import (concordant_fixture, reference_table, serialize,
                           unknown_fixture)


@pytest.fixture()
def unknown_csv(tmp_path):
    path = tmp_path / "unknown.csv"
    path.write_text(serialize(unknown_fixture()), encoding="utf-8")
    return str(path)


@pytest.fixture()
def reference_csv(tmp_path):
    path = tmp_path / "small.csv"
    path.write_text(serialize(reference_table()), encoding="utf-8")
    return str(path)


@pytest.fixture()
def concordant_csv(tmp_path):
    path = tmp_path / "concordant.csv"
    path.write_text(serialize(concordant_fixture()), encoding="utf-8")
    return str(path)


class TestFactorCommand:
    def test_factored_output(self, capsys):
        assert main(["factor", "--poly", "1;-6;15;-21;15;-6;1"]) == 0
        out = capsys.readouterr().out
        assert out == "(1;-3;1)^1 * (1;-3;5;-3;1)^1\n"

    def test_trivial_polynomial(self, capsys):
        assert main(["factor", "--poly", "1"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_bad_polynomial_exits_1(self, capsys):
        assert main(["factor", "--poly", "0;0"]) == 1
        err = capsys.readouterr().err
        assert err.startswith("kcg: ")
        assert err.count("\n") == 1

    def test_byte_deterministic(self, capsys):
        main(["factor", "--poly", "4;-15;30;-37;30;-15;4"])
        first = capsys.readouterr().out
        main(["factor", "--poly", "4;-15;30;-37;30;-15;4"])
        assert capsys.readouterr().out == first


class TestInvariantsCommand:
    def test_trefoil(self, capsys):
        # values starting with "-" need the = form, as usual with argparse
        assert main(["invariants", "--seifert=-1,1;0,-1"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "alexander\t1;-1;1"
        assert lines[1] == "signature\t-2"
        assert lines[2] == "jump\t1.047197551\t-2\t-1"

    def test_bad_matrix_exits_1(self, capsys):
        assert main(["invariants", "--seifert", "1,0;0,1"]) == 1
        assert "not a knot Seifert matrix" in capsys.readouterr().err


class TestBoundCommand:
    def test_partial_interval_row(self, unknown_csv, capsys):
        assert main(["bound", "--name", "11a_6", "--table", unknown_csv]) == 0
        out = capsys.readouterr().out
        assert out.startswith("11a_6\t2\t3\tundetermined\t")

    def test_unknown_name(self, unknown_csv, capsys):
        assert main(["bound", "--name", "nope", "--table", unknown_csv]) == 1
        assert "unknown knot: nope" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["bound", "--name", "x", "--table", "/nope.csv"]) == 1
        assert "cannot read table" in capsys.readouterr().err


class TestCensusCommand:
    def test_counts_and_report(self, concordant_csv, tmp_path, capsys):
        report = tmp_path / "out.tsv"
        code = main(["census", "--table", concordant_csv,
                     "--report", str(report)])
        assert code == 0
        out = capsys.readouterr().out
        assert "concordant_lower_genus\t29" in out
        assert "total\t29" in out
        text = report.read_text(encoding="utf-8")
        assert text.startswith("name\tgc_lower\tgc_upper\tcategory")
        assert len(text.strip().split("\n")) == 30

    def test_jobs_flag(self, concordant_csv, capsys):
        assert main(["census", "--table", concordant_csv, "--jobs", "4"]) == 0
        assert "concordant_lower_genus\t29" in capsys.readouterr().out

    def test_census_byte_deterministic(self, unknown_csv, reference_csv,
                                       tmp_path, capsys):
        outputs = []
        reports = []
        for i in range(2):
            report = tmp_path / f"r{i}.tsv"
            assert main(["census", "--table", unknown_csv,
                         "--candidates", reference_csv,
                         "--report", str(report)]) == 0
            outputs.append(capsys.readouterr().out)
            reports.append(report.read_bytes())
        assert outputs[0] == outputs[1]
        assert reports[0] == reports[1]

    def test_census_with_candidates(self, unknown_csv, reference_csv,
                                    tmp_path, capsys):
        report = tmp_path / "r.tsv"
        code = main(["census", "--table", unknown_csv,
                     "--candidates", reference_csv, "--report", str(report)])
        assert code == 0
        text = report.read_text(encoding="utf-8")
        row = next(l for l in text.split("\n") if l.startswith("11a_297\t"))
        assert row.split("\t")[5].startswith("5_2")


class TestMatchCommand:
    def test_match_output(self, concordant_csv, reference_csv, capsys):
        code = main(["match", "--name", "11a_196", "--table", concordant_csv,
                     "--candidates", reference_csv])
        assert code == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0].split("\t") == ["3_1", "1", "3", "1;-1;1"]


class TestUsageErrors:
    def test_unknown_flag_is_fatal(self):
        with pytest.raises(SystemExit) as err:
            main(["factor", "--poly", "1;-1;1", "--bogus"])
        assert err.value.code == 2

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_module_entry_point(self):
        import os
        import pathlib
        import subprocess
        import sys

        import kcg
        src = str(pathlib.Path(kcg.__file__).resolve().parent.parent)
        env = dict(os.environ)
        env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
        proc = subprocess.run(
            [sys.executable, "-m", "kcg", "factor", "--poly", "1;-1;1"],
            capture_output=True, text=True, env=env)
        assert proc.returncode == 0
        assert proc.stdout == "(1;-1;1)^1\n"
