import json

import pytest

from quivercert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestHnTypes:
    def test_default_setup(self, capsys):
        code, doc = run_cli(
            capsys, "hn-types", "--quiver", "kronecker:3", "--dim", "2,3",
            "--theta", "3,-2",
        )
        assert code == 0
        assert len(doc["types"]) == 8
        unstable = [t for t in doc["types"] if not t["semistable_stratum"]]
        assert len(unstable) == 7
        assert all(t["eta"] is not None for t in unstable)
        wall = next(t for t in doc["types"] if t["parts"] == [[1, 1], [1, 2]])
        assert wall["eta"] == 15

    def test_theta_mismatch_is_input_error(self, capsys):
        code, doc = run_cli(capsys, "hn-types", "--theta", "1,-1")
        assert code == 2
        assert "error" in doc


class TestChi:
    def test_golden(self, capsys):
        code, doc = run_cli(capsys, "chi", "--expr", "tensor(dual(U2),dual(U2))")
        assert code == 0
        assert doc["chi"] == 39

    def test_bad_expression(self, capsys):
        code, doc = run_cli(capsys, "chi", "--expr", "nope(U1)")
        assert code == 2
        assert "error" in doc


class TestCh:
    def test_coordinates(self, capsys):
        code, doc = run_cli(capsys, "ch", "--expr", "U2")
        assert code == 0
        assert doc["ch"]["[Y]"] == 3
        assert doc["ch"]["c1*d2"] == "-2/3"


class TestChowEval:
    def test_top_power(self, capsys):
        code, doc = run_cli(capsys, "chow-eval", "--expr", "c1^6")
        assert code == 0
        assert doc["integral"] == 57
        assert doc["coordinates"]["c3^2"] == 57

    def test_d1_alias(self, capsys):
        _, doc = run_cli(capsys, "chow-eval", "--expr", "d1^3")
        assert doc["coordinates"]["c1*d2"] == 4
        assert doc["coordinates"]["c3"] == -3


class TestTeleman:
    def test_pass_exit_zero(self, capsys):
        code, doc = run_cli(capsys, "teleman", "--expr", "sl(U1)")
        assert code == 0
        assert doc["pass"] is True

    def test_fail_exit_one(self, capsys):
        code, doc = run_cli(capsys, "teleman", "--expr", "O(-3)")
        assert code == 1
        assert doc["pass"] is False
        wall = next(s for s in doc["strata"] if s["hn_type"] == [[1, 1], [1, 2]])
        assert wall["margin"] == 0


class TestStability:
    def test_open_orbit(self, capsys):
        code, doc = run_cli(capsys, "stability", "--matrix", "x,y,0;0,y,z")
        assert code == 0
        assert doc["stable"] is True
        assert doc["minors"] == ["yz", "xz", "xy"]
        assert doc["abelian_plane"] is True

    def test_unstable(self, capsys):
        code, doc = run_cli(capsys, "stability", "--matrix", "x,0,0;0,y,0")
        assert code == 0
        assert doc["stable"] is False
        assert doc["abelian_plane"] is None

    def test_bad_matrix(self, capsys):
        code, doc = run_cli(capsys, "stability", "--matrix", "x,y;0,z")
        assert code == 2


class TestSyzygies:
    def test_open_orbit(self, capsys):
        code, doc = run_cli(capsys, "syzygies", "--matrix", "x,y,0;0,y,z")
        assert code == 0
        assert doc["kernel_ok"] is True
        assert doc["commute"] is True
        assert "warning" not in doc

    def test_unstable_warns(self, capsys):
        code, doc = run_cli(capsys, "syzygies", "--matrix", "x,0,0;0,y,0")
        assert code == 0
        assert "degenerate" in doc["warning"]


class TestVerifyCollection:
    def test_builtin_accepts(self, capsys):
        code, doc = run_cli(capsys, "verify-collection")
        assert code == 0
        assert doc["accepted"] is True

    def test_from_file(self, capsys, tmp_path):
        payload = {"objects": [{"label": "O", "expr": "O(0)"},
                               {"label": "O(1)", "expr": "O(1)"}]}
        path = tmp_path / "collection.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, doc = run_cli(capsys, "verify-collection", "--file", str(path))
        assert code == 0
        assert doc["summary"]["size"] == 2

    def test_failing_collection_exits_one(self, capsys, tmp_path):
        # O and O(3): the backward direction has chi(O(-3)) = 1 != 0
        payload = {"objects": [{"label": "O", "expr": "O(0)"},
                               {"label": "O(3)", "expr": "O(3)"}]}
        path = tmp_path / "collection.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, doc = run_cli(capsys, "verify-collection", "--file", str(path))
        assert code == 1
        assert doc["accepted"] is False


class TestLedgerCheck:
    def test_passes(self, capsys):
        code, doc = run_cli(capsys, "ledger-check")
        assert code == 0
        assert doc["pass"] is True


class TestModuleInvocation:
    def test_python_dash_m(self):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "quivercert", "chi", "--expr", "dual(U2)"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["chi"] == 6


class TestDeterminism:
    def test_byte_identical_output(self, capsys):
        main(["ch", "--expr", "tensor(U1,U2)"])
        first = capsys.readouterr().out
        main(["ch", "--expr", "tensor(U1,U2)"])
        second = capsys.readouterr().out
        assert first == second

    def test_pretty_flag(self, capsys):
        code, _ = run_cli(capsys, "chi", "--expr", "O(0)", "--pretty")
        assert code == 0
