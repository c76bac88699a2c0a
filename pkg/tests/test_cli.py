"""Command line front end: flags, formats, exit codes."""

import json

import pytest

from braidhooks.cli import EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main, parse_shape
from braidhooks.tableaux import Shape


class TestParsing:
    def test_shape_specs(self):
        assert parse_shape("right:4,3,2,1") == Shape.right((4, 3, 2, 1))
        assert parse_shape("half:5,3,1") == Shape.half_right((5, 3, 1))
        assert parse_shape("skew:4,3,2,1/1") == Shape.skew_right((4, 3, 2, 1), (1,))

    def test_bad_spec(self):
        with pytest.raises(ValueError):
            parse_shape("4,3,2,1")


class TestEnumerate:
    def test_shape_count(self, capsys):
        assert main(["enumerate", "--shape", "right:4,3,2,1"]) == EXIT_PASS
        out = capsys.readouterr().out
        assert out.strip().endswith("count: 12")

    def test_single_cell(self, capsys):
        assert main(["enumerate", "--shape", "right:1"]) == EXIT_PASS
        assert "count: 1" in capsys.readouterr().out

    def test_class_of_word(self, capsys):
        code = main(
            ["enumerate", "--class-of-word", "1,2,3,4,1,2,3,1,2,1", "--rank", "5",
             "--format", "json"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["count"] == 12

    def test_missing_rank_is_usage_error(self, capsys):
        assert main(["enumerate", "--class-of-word", "1,2,1"]) == EXIT_USAGE


class TestVerify:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "reiner", "--n", "4"],
            ["verify", "commutation-class", "--n", "5"],
            ["verify", "braid-hooks", "--shape", "right:5,2,1"],
            ["verify", "half-right", "--shape", "5,3,1"],
            ["verify", "skew-balance", "--shape", "skew:4,3,2,1/1"],
            ["verify", "homomesy", "--shape", "right:4,3,2,1"],
            ["verify", "poset-edges", "--count", "5", "--seed", "1"],
        ],
    )
    def test_passing(self, argv, capsys):
        assert main(argv) == EXIT_PASS
        assert json.loads(capsys.readouterr().out)["pass"] is True

    def test_failing_exit_code(self, capsys):
        assert main(["verify", "homomesy", "--shape", "right:2,2"]) == EXIT_FAIL
        assert json.loads(capsys.readouterr().out)["pass"] is False

    def test_unknown_theorem(self, capsys):
        assert main(["verify", "middle-out"]) == EXIT_USAGE

    def test_missing_shape_is_usage_error(self, capsys):
        assert main(["verify", "braid-hooks"]) == EXIT_USAGE

    def test_cap_exit_code(self, capsys):
        code = main(["--cap", "3", "verify", "commutation-class", "--n", "6"])
        assert code == EXIT_CAP

    def test_poset_file(self, tmp_path, capsys):
        path = tmp_path / "diamond.txt"
        path.write_text("bot < left\nbot < right\nleft < top\nright < top\n")
        code = main(
            ["verify", "poset-edges", "--poset", str(path), "--ideal", "bot"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["lhs"] == data["rhs"] == 2


class TestOrbits:
    def test_dihedral_braid_hooks(self, capsys):
        code = main(
            ["orbits", "--shape", "right:4,3,2,1", "--group", "dihedral",
             "--stat", "braid-hooks"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["homomesic"] is True
        assert [o["size"] for o in data["orbits"]] == [10, 2]

    def test_word_statistic(self, capsys):
        code = main(
            ["orbits", "--shape", "right:5,2,1", "--stat", "braid-moves"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert all(o["average"] == "1" for o in data["orbits"])

    def test_sampled_search_finds_28_cell_anomaly(self, capsys):
        code = main(
            ["orbits", "--shape", "right:7,6,5,4,3,2,1", "--group", "gyration",
             "--stat", "braid-hooks", "--sample", "20", "--seed", "0"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["found"] is True
        assert data["orbit"]["average"] != "1"

    def test_sampled_search_miss_is_fail(self, capsys):
        # the 21-cell staircase is gyration-homomesic, so nothing is found
        code = main(
            ["orbits", "--shape", "right:6,5,4,3,2,1", "--group", "gyration",
             "--stat", "braid-hooks", "--sample", "5", "--seed", "0"]
        )
        assert code == EXIT_FAIL

    def test_large_sample_needs_long_running(self, capsys):
        code = main(
            ["orbits", "--shape", "right:7,6,5,4,3,2,1", "--group", "gyration",
             "--sample", "5000"]
        )
        assert code == EXIT_USAGE

    def test_huge_full_enumeration_needs_long_running(self, capsys):
        code = main(
            ["orbits", "--shape", "right:7,6,5,4,3,2,1", "--group", "gyration"]
        )
        assert code == EXIT_USAGE

    def test_poset_descents(self, tmp_path, capsys):
        path = tmp_path / "diamond.txt"
        path.write_text("bot < left\nbot < right\nleft < top\nright < top\n")
        code = main(
            ["orbits", "--poset", str(path), "--ideal", "bot",
             "--group", "dihedral", "--stat", "descents"]
        )
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert all(o["average"] == "1" for o in data["orbits"])

    def test_csv_format(self, capsys):
        code = main(
            ["orbits", "--shape", "right:5,2,1", "--format", "csv"]
        )
        assert code == EXIT_PASS
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "orbit,size,average,representative"


class TestWindow:
    def test_golden_row(self, capsys):
        code = main(["window", "--word", "1,2,3,1,4,2,3,1,2,1", "--rank", "5",
                     "--format", "json"])
        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        row5 = next(r for r in data["rows"] if r["i"] == 5)
        assert (row5["word"], row5["a"], row5["c"]) == ("1231214321", 1, 1)

    def test_json_round_trip_schema(self, capsys):
        main(["orbits", "--shape", "right:4,3,2,1", "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        assert set(data) == {"mode", "statistic", "orbits", "homomesic"}
        assert set(data["orbits"][0]) == {"size", "average", "representative"}
