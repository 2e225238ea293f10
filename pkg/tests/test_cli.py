"""Command-line interface: exit codes, formats, and configuration."""

import json
import subprocess
import sys

import pytest

from purehilden.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, dispatch
from purehilden.rewrite import shipped_scripts


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("HF_BUDGET", raising=False)
    monkeypatch.delenv("HF_WORKERS", raising=False)


def run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBasicCommands:
    def test_reduce(self, capsys):
        code, out, _ = run(capsys, "reduce", "4 | 1 2 1 -2 -1 -2")
        assert code == EXIT_OK and out.strip() == "4 |"

    def test_reduce_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "reduce", "4 | 1 -1 3")
        assert code == EXIT_OK
        assert json.loads(out) == {"strands": 4, "letters": [3]}

    def test_equal_commuting(self, capsys):
        code, out, _ = run(capsys, "equal", "4 | 1 3", "4 | 3 1")
        assert code == EXIT_OK and out.strip() == "true"

    def test_equal_distinct(self, capsys):
        code, out, _ = run(capsys, "equal", "4 | 1 2", "4 | 2 1")
        assert code == EXIT_FAIL and out.strip() == "false"

    def test_cap_test_emits_json(self, capsys):
        code, out, _ = run(capsys, "cap-test", "4 | 1 1")
        assert code == EXIT_OK
        assert json.loads(out) == {"result": "pass", "writhe": 2, "support_size": 1}

    def test_cap_test_failure_exit(self, capsys):
        code, out, _ = run(capsys, "cap-test", "4 | 2")
        assert code == EXIT_FAIL
        assert json.loads(out)["result"] == "fail"

    def test_malformed_word_is_usage_error(self, capsys):
        code, _, err = run(capsys, "reduce", "totally-not-a-word")
        assert code == EXIT_USAGE and err


class TestSuiteCommands:
    def test_verify_relations(self, capsys):
        code, out, _ = run(capsys, "verify-relations", "--n", "3")
        assert code == EXIT_OK and "54/54" in out

    def test_verify_relations_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verify-relations", "--n", "3")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["suite"] == "relations" and data["failures"] == []

    def test_table_c2(self, capsys):
        code, out, _ = run(capsys, "table-c2", "--n", "3")
        assert code == EXIT_OK
        assert "matches stored table: true" in out
        assert out.count("(p,p,p)") == 3

    def test_table_c2_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "table-c2", "--n", "3")
        data = json.loads(out)
        assert code == EXIT_OK and data["matches_table"] is True
        assert len(data["classes"]["i<j<k"]) == 8

    def test_purity_and_membership(self, capsys):
        assert run(capsys, "purity", "--n", "3")[0] == EXIT_OK
        assert run(capsys, "membership", "--n", "3")[0] == EXIT_OK

    @pytest.mark.parametrize("prop", ["A", "B", "inv", "sq", "C"])
    def test_phi_checks(self, capsys, prop):
        code, out, _ = run(capsys, "phi-check", "--prop", prop, "--n", "3")
        assert code == EXIT_OK and "ok" in out


class TestProve:
    def test_shipped_script(self, capsys, tmp_path):
        path = tmp_path / "eq8.json"
        path.write_text(json.dumps(shipped_scripts()["eq8"].to_json()))
        code, out, _ = run(capsys, "prove", str(path))
        assert code == EXIT_OK and out.strip() == "ok (13 steps)"

    def test_broken_script(self, capsys, tmp_path):
        data = shipped_scripts()["eq8"].to_json()
        data["steps"][0]["dir"] = "rl"
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "prove", str(path))
        assert code == EXIT_FAIL and "step 0" in out

    def test_broken_script_json_format(self, capsys, tmp_path):
        data = shipped_scripts()["eq8"].to_json()
        data["steps"][3]["dir"] = "rl"
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "--format", "json", "prove", str(path))
        assert code == EXIT_FAIL and json.loads(out)["ok"] is False

    def test_bundled_fixture_by_name(self, capsys):
        code, out, _ = run(capsys, "prove", "eq9")
        assert code == EXIT_OK and out.strip() == "ok (6 steps)"

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "prove", str(tmp_path / "absent.json"))
        assert code == EXIT_USAGE and err


class TestConfiguration:
    def test_budget_flag_triggers_resource_exit(self, capsys):
        code, _, err = run(capsys, "--budget", "1", "equal",
                           "4 | 1 2 1 -2 -1 -2 1 2 1 -2 -1 -2", "4 |")
        assert code == EXIT_BUDGET and "budget" in err

    def test_budget_env_honoured(self, capsys, monkeypatch):
        monkeypatch.setenv("HF_BUDGET", "1")
        code, _, err = run(capsys, "equal",
                           "4 | 1 2 1 -2 -1 -2 1 2 1 -2 -1 -2", "4 |")
        assert code == EXIT_BUDGET

    def test_flag_wins_over_env(self, capsys, monkeypatch):
        monkeypatch.setenv("HF_BUDGET", "1")
        code, out, _ = run(capsys, "--budget", "1000000", "equal",
                           "4 | 1 2 1 -2 -1 -2 1 2 1 -2 -1 -2", "4 |")
        assert code == EXIT_OK and out.strip() == "true"

    def test_workers_flag(self, capsys):
        code, out, _ = run(capsys, "--workers", "3", "verify-relations", "--n", "3")
        assert code == EXIT_OK and "54/54" in out

    def test_unknown_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            dispatch(["frobnicate"])
        assert exc.value.code == EXIT_USAGE


class TestConsoleScript:
    def test_entry_point_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "purehilden.cli", "table-c2", "--n", "3"],
            capture_output=True, text=True, timeout=300,
        )
        assert proc.returncode == EXIT_OK
        assert "matches stored table: true" in proc.stdout
