"""CLI contract: envelopes, exit codes, errata, round-tripping."""

import io
import json
import shutil
import subprocess

import pytest

import borelcensus.cli as cli
from borelcensus.errors import IndeterminateError


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, err = run(argv + ["--json"])
    assert code == 0, err
    lines = out.strip().splitlines()
    assert len(lines) == 1  # exactly one JSON object on stdout
    return json.loads(lines[0])


class TestEnvelope:
    def test_count_payload(self):
        env = run_json(["count", "10"])
        assert env["command"] == "count"
        assert env["inputs"] == {"n": 10}
        assert env["version"]
        assert env["result"] == {
            "n": 10,
            "p": "42",
            "q": "10",
            "r": "32",
            "p_ge2": "12",
            "q_ge2": "5",
            "r_ge2": "7",
        }
        assert env["errata"] == []

    def test_count_touches_errata(self):
        env = run_json(["count", "7"])
        assert {(e["column"], e["printed"], e["computed"]) for e in env["errata"]} == {
            ("Q1", 2, 3),
            ("R1", 2, 1),
        }
        env3 = run_json(["count", "3"])
        assert [(e["column"], e["printed"], e["computed"]) for e in env3["errata"]] == [
            ("P", 2, 3)
        ]

    def test_round_trip_is_byte_identical(self):
        for argv in (["count", "10"], ["table", "--max", "8"], ["pair", "4", "4", "--", "2", "2", "2", "2"]):
            code, out, _ = run(argv + ["--json"])
            assert code == 0
            raw = out.strip()
            assert json.dumps(json.loads(raw), sort_keys=True, separators=(",", ":")) == raw

    def test_output_file(self, tmp_path):
        target = tmp_path / "envelope.json"
        code, out, _ = run(["solutions", "8", "--output", str(target)])
        assert code == 0
        assert out.strip() == "2"
        env = json.loads(target.read_text())
        assert env["result"]["count"] == "2"


class TestCommands:
    def test_solutions_plain(self):
        code, out, _ = run(["solutions", "8"])
        assert code == 0 and out.strip() == "2"

    def test_list(self):
        env = run_json(["list", "4", "--min-part", "2"])
        assert env["result"]["partitions"] == [[2, 2], [4]]
        assert env["result"]["count"] == "2"

    def test_list_distinct(self):
        env = run_json(["list", "7", "--min-part", "2", "--distinct"])
        assert env["result"]["partitions"] == [[2, 5], [3, 4], [7]]

    def test_equiv(self):
        assert run_json(["equiv", "2", "3", "2", "--", "2", "2", "3"])["result"]["equivalent"]
        assert not run_json(["equiv", "2", "2", "4", "--", "2", "3", "3"])["result"][
            "equivalent"
        ]

    def test_weyl_canonicalizes_input(self):
        env = run_json(["weyl", "3", "2", "2"])
        assert env["inputs"]["partition"] == [2, 2, 3]
        assert env["result"]["order"] == "2"

    def test_orbit(self):
        assert run_json(["orbit", "2", "2", "3"])["result"]["orbit_length"] == "3"

    def test_census(self):
        env = run_json(["census", "6"])
        assert env["result"]["total"] == "11"
        assert env["result"]["nontrivial_weyl"] == "7"

    def test_special(self):
        env = run_json(["special", "12"])
        assert env["result"]["case"] == "mod0"
        assert sorted(map(tuple, env["result"]["members"])) == [
            (2, 2, 2, 2, 2, 2),
            (2, 2, 4, 4),
            (6, 6),
        ]

    def test_pair(self):
        env = run_json(["pair", "2", "2", "4", "--", "2", "6"])
        assert env["result"]["factors"] == [[2, "agreement"], [6, "window"]]
        assert env["result"]["lie_dimension"] == 16
        assert env["result"]["common_subpartition"] == 2
        assert env["result"]["transitive"] is False
        assert env["result"]["window_plan"] is None

    def test_verify_lie(self):
        env = run_json(["verify-lie", "4", "4", "--", "2", "2", "2", "2"])
        assert env["result"]["dimensions_match"] is True
        assert env["result"]["transitivity_match"] is True
        assert all(w["transitive"] for w in env["result"]["windows"])
        assert "basis" not in env["result"]

    def test_verify_lie_matrices(self):
        env = run_json(["verify-lie", "--matrices", "2", "2", "--", "4"])
        basis = env["result"]["basis"]
        assert len(basis) == env["result"]["closure_dimension"] == 6
        assert len(basis[0]) == 4 and len(basis[0][0]) == 4

    def test_verify_inv(self):
        env = run_json(["verify-inv", "4", "4", "--", "2", "2", "2", "2", "--degree", "6"])
        assert env["result"]["passed"] is True
        assert env["result"]["intersection"] == 0
        assert min(env["result"]["dims"]) >= 1

    def test_nodal(self):
        env = run_json(["nodal", "2", "2", "2", "--delta", "1"])
        pairs = [(s["block_a"], s["block_b"]) for s in env["result"]["subspaces"]]
        assert pairs == [(1, 2), (1, 3), (2, 3)]
        assert all(s["codimension"] == 2 for s in env["result"]["subspaces"])

    def test_classify(self):
        env = run_json(["classify", "7"])
        assert env["result"]["pairs"] == [["SO(7)", "SO(6)"], ["G2", "SU(3)"]]

    def test_table_rows_and_errata(self):
        env = run_json(["table", "--max", "10"])
        rows = env["result"]["rows"]
        assert rows[0] == {
            "n": 1, "p": "1", "q": "1", "r": "0", "p_ge2": "0", "q_ge2": "0", "r_ge2": "0",
        }
        assert rows[3]["p"] == "5" and rows[3]["q"] == "2" and rows[3]["r"] == "3"
        assert rows[3]["p_ge2"] == "2" and rows[3]["q_ge2"] == "1" and rows[3]["r_ge2"] == "1"
        assert {(e["n"], e["column"]) for e in env["errata"]} == {
            (7, "Q1"), (7, "R1"), (8, "Q1"), (8, "R1"),
        }

    def test_table_plain_markers(self):
        code, out, _ = run(["table", "--max", "10"])
        assert code == 0
        marked = [line for line in out.splitlines() if line.endswith("*") and "printed" not in line]
        assert len(marked) == 2  # rows 7 and 8

    def test_plist(self):
        env = run_json(["plist"])
        assert env["result"]["values"][-1] == [49, "173525"]
        assert [(e["n"], e["printed"], e["computed"]) for e in env["errata"]] == [(3, 2, 3)]


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["count", "0"],
            ["solutions", "5"],
            ["classify", "1"],
            ["table", "--max", "0"],
            ["plist", "--max", "50"],
            ["pair", "1", "3", "--", "2", "2"],
            ["verify-inv", "2", "2", "--", "2", "2"],
        ],
    )
    def test_domain_errors_exit_1(self, argv):
        code, _, err = run(argv)
        assert code == 1 and err.strip()

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate", "3"],
            ["count"],
            ["count", "x"],
            ["count", "3", "4"],
            ["pair", "2", "2"],
            ["nodal", "2", "2"],
            ["list", "4", "--min-part"],
            ["count", "4", "--bogus"],
        ],
    )
    def test_usage_errors_exit_2(self, argv):
        code, _, err = run(argv)
        assert code == 2 and "usage" in err

    def test_indeterminate_exit_3(self, monkeypatch):
        def boom(*_args, **_kwargs):
            raise IndeterminateError("ambiguous rank")

        monkeypatch.setattr(cli, "verify_pair", boom)
        code, _, err = run(["verify-inv", "4", "4", "--", "2", "2", "2", "2"])
        assert code == 3 and "ambiguous" in err

    def test_help_exits_0(self):
        code, out, _ = run(["help"])
        assert code == 0 and "commands:" in out


@pytest.mark.skipif(shutil.which("borelcensus") is None, reason="console script not installed")
def test_installed_entry_point():
    proc = subprocess.run(
        ["borelcensus", "count", "6", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    env = json.loads(proc.stdout)
    assert env["result"]["p"] == "11"
