import json
import math

import jsonschema
import pytest

from alpha_extremal.cli import main, parse_alpha_grid
from alpha_extremal.graph6 import decode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAlphaGridParsing:
    def test_range_syntax(self):
        grid = parse_alpha_grid("0.1:0.9:0.1")
        assert grid == ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"]

    def test_comma_list(self):
        assert parse_alpha_grid("0.25, 0.5,0.75") == ["0.25", "0.5", "0.75"]

    def test_bad_grid(self):
        from alpha_extremal.cli import CliParseError

        with pytest.raises(CliParseError):
            parse_alpha_grid("0.1:0.9")
        with pytest.raises(CliParseError):
            parse_alpha_grid("0.1:0.9:-0.1")
        with pytest.raises(CliParseError):
            parse_alpha_grid("a,b")


class TestAlphaIndexCommand:
    def test_graph6_text(self, capsys):
        code, out, _ = run(capsys, "alpha-index", "--g6", "Bw", "--alpha", "0.5")
        assert code == 0
        assert "alpha index = 2.0" in out

    def test_family_json(self, capsys):
        code, out, _ = run(
            capsys, "alpha-index", "--family", "split", "--n", "4", "--m", "1",
            "--alpha", "0.5", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["rho"] == pytest.approx(2.0, abs=1e-9)
        assert data["residual"] <= 1e-10
        assert len(data["vector"]) == 4

    def test_bad_graph6_is_parse_error(self, capsys):
        code, _, err = run(capsys, "alpha-index", "--g6", "invalid~", "--alpha", "0.5")
        assert code == 2
        assert "offset" in err

    def test_both_sources_rejected(self, capsys):
        code, _, err = run(
            capsys, "alpha-index", "--g6", "Bw", "--family", "split", "--alpha", "0.5"
        )
        assert code == 2

    def test_infeasible_family_is_domain_error(self, capsys):
        code, _, err = run(
            capsys, "alpha-index", "--family", "cliques", "--n", "10", "--s", "2",
            "--t", "3", "--p", "2", "--alpha", "0.5",
        )
        assert code == 3
        assert "p*t" in err

    def test_missing_family_param(self, capsys):
        code, _, err = run(capsys, "alpha-index", "--family", "split", "--alpha", "0.5")
        assert code == 2

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["alpha-index", "--nope", "1"])
        assert info.value.code == 2


class TestEnumerateCommand:
    def test_stream_counts(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 11
        assert len({line for line in lines}) == 11
        for line in lines:
            assert decode_graph6(line).n == 4

    def test_cap_refusal(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "11")
        assert code == 3
        assert "cap" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g5.g6"
        code, _, _ = run(capsys, "enumerate", "--n", "5", "--out", str(target))
        assert code == 0
        assert len(target.read_text().splitlines()) == 34


class TestCheckCommand:
    def test_text_run(self, capsys):
        code, out, _ = run(
            capsys, "check", "--theorem", "T1", "--r", "3", "--n", "6",
            "--alpha", "0.5", "--workers", "1",
        )
        assert code == 0
        assert "verdict=MATCH" in out

    def test_report_files_and_summary(self, capsys, tmp_path):
        out_dir = tmp_path / "reports"
        code, _, _ = run(
            capsys, "check", "--theorem", "T3", "--degrees", "2,2", "--n-range", "6:7",
            "--alpha-grid", "0.25,0.5", "--workers", "1", "--out", str(out_dir),
            "--format", "csv",
        )
        assert code == 0
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == [
            "report_T3_d2-2_n6_a0.25.json",
            "report_T3_d2-2_n6_a0.5.json",
            "report_T3_d2-2_n7_a0.25.json",
            "report_T3_d2-2_n7_a0.5.json",
            "summary.csv",
        ]
        data = json.loads((out_dir / "report_T3_d2-2_n6_a0.5.json").read_text())
        assert data["class"] == "star_forest_free(2,2)"
        from test_harness import REPORT_SCHEMA

        jsonschema.validate(data, REPORT_SCHEMA)
        summary = (out_dir / "summary.csv").read_text().splitlines()
        assert len(summary) == 5  # header + 4 grid points

    def test_worker_counts_byte_identical(self, capsys, tmp_path):
        dirs = []
        for workers in ("1", "2"):
            out_dir = tmp_path / f"w{workers}"
            code, _, _ = run(
                capsys, "check", "--theorem", "T1", "--r", "3", "--n-range", "4:6",
                "--alpha", "0.5", "--workers", workers, "--out", str(out_dir),
            )
            assert code == 0
            dirs.append(out_dir)
        first = {p.name: p.read_bytes() for p in dirs[0].iterdir()}
        second = {p.name: p.read_bytes() for p in dirs[1].iterdir()}
        assert first == second

    def test_infeasible_claim_is_domain_error(self, capsys):
        code, _, err = run(
            capsys, "check", "--theorem", "T1", "--r", "2", "--n", "5", "--alpha", "0.5"
        )
        assert code == 3

    def test_missing_claim_params(self, capsys):
        code, _, err = run(capsys, "check", "--theorem", "T2", "--n", "6", "--alpha", "0.5")
        assert code == 2

    def test_stream_source(self, capsys, tmp_path):
        stream = tmp_path / "g5.g6"
        run(capsys, "enumerate", "--n", "5", "--out", str(stream))
        code, out, _ = run(
            capsys, "check", "--theorem", "T1", "--r", "3", "--n", "5", "--alpha", "0.5",
            "--graph6-stream", str(stream), "--workers", "1",
        )
        assert code == 0
        assert "verdict=MATCH" in out


class TestSweepCommand:
    def test_clean(self, capsys):
        code, out, _ = run(capsys, "sweep")
        assert code == 0
        assert "0 violations" in out

    def test_corrupt(self, capsys):
        code, out, _ = run(capsys, "sweep", "--corrupt", "0.2")
        assert code == 0
        assert "VIOLATION" in out


class TestBoundsCommand:
    def test_split_table_crossover(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--table", "split", "--n", "100", "--k", "3",
            "--alpha-grid", "0.1:0.9:0.1",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 10  # header + 9 rows
        gaps = [float(line.split(",")[6]) for line in lines[1:]]
        # sign change exactly between 0.7 and 0.8 for k=3 (crossover 0.75)
        assert all(g > 0 for g in gaps[:7])
        assert all(g < 0 for g in gaps[7:])

    def test_split_reason_column(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--table", "split", "--n", "1", "--k", "3", "--alpha", "0.5"
        )
        assert code == 0
        row = out.strip().splitlines()[1]
        assert "n >= k-1" in row

    def test_join_table(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--table", "join", "--n", "10", "--k", "2", "--d", "3",
            "--alpha", "0.5",
        )
        assert code == 0
        root = float(out.strip().splitlines()[1].split(",")[4])
        assert root == pytest.approx((7 + math.sqrt(13)) / 2, abs=1e-9)

    def test_q_table(self, capsys):
        code, out, _ = run(capsys, "bounds", "--table", "q", "--s", "2", "--t", "3", "--n", "10")
        assert code == 0
        row = out.strip().splitlines()[1].split(",")
        assert float(row[3]) == pytest.approx(7 + math.sqrt(13), abs=1e-9)
        assert float(row[3]) == pytest.approx(float(row[4]), abs=1e-9)

    def test_q_table_star_forest(self, capsys):
        code, out, _ = run(capsys, "bounds", "--table", "q", "--degrees", "3,3", "--n", "20")
        assert code == 0
        row = out.strip().splitlines()[1].split(",")
        assert row[1] == "star_forest"
        assert float(row[3]) == pytest.approx(20.2462, abs=5e-5)

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, _, _ = run(
            capsys, "bounds", "--table", "join", "--n", "12", "--k", "2", "--d", "3",
            "--alpha-grid", "0.3,0.5", "--out", str(target),
        )
        assert code == 0
        assert len(target.read_text().splitlines()) == 3
