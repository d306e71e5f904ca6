"""Command-line surface: commands, formats, exit codes."""

import json

from jsbaf.cli import main

from conftest import TANDEM_PATH


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_deductive_preferred_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(TANDEM_PATH),
            "--semantics", "preferred", "--mode", "deductive",
        )
        assert code == 0
        report = json.loads(out)
        assert sorted(e["conclusions"] for e in report["conclusion_sets"]) == [
            ["ht", "hw", "st", "sw", "tw", "~tt"],
            ["ht", "hw", "sw", "tt", "tw", "~st"],
            ["hw", "st", "sw", "tt", "tw", "~ht"],
        ]

    def test_postulate_violation_sets_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(TANDEM_PATH),
            "--semantics", "preferred", "--mode", "aspic-minus",
        )
        assert code == 1
        assert json.loads(out)["postulate_summary"]["closure"] == "violated"

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(TANDEM_PATH), "--report", "text",
        )
        assert code == 0 and "extensions (preferred):" in out

    def test_limit_exceeded_exit_code_and_status(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(TANDEM_PATH), "--max-arguments", "4",
        )
        assert code == 3
        assert json.loads(out)["status"] == "limit-exceeded"

    def test_search_bound_exceeded(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(TANDEM_PATH), "--max-nodes", "5",
        )
        assert code == 3
        assert json.loads(out)["error"]["type"] == "SearchLimitExceededError"

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.rules"
        bad.write_text("strict oops\n")
        code, _, err = run_cli(capsys, "eval", "--file", str(bad))
        assert code == 2 and "1:" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--file", "no-such-file.rules")
        assert code == 2 and "cannot read" in err

    def test_inconsistent_system_is_an_input_error(self, capsys, tmp_path):
        bad = tmp_path / "inconsistent.rules"
        bad.write_text("strict s1: -> a\nstrict s2: -> ~a\n")
        code, _, err = run_cli(capsys, "eval", "--file", str(bad))
        assert code == 2 and "complementary pair" in err

    def test_allow_inconsistent_override(self, capsys, tmp_path):
        bad = tmp_path / "inconsistent.rules"
        bad.write_text("strict s1: -> a\nstrict s2: -> ~a\n")
        code, out, _ = run_cli(
            capsys, "eval", "--file", str(bad), "--allow-inconsistent",
        )
        report = json.loads(out)
        assert report["postulates_in_scope"] is False
        assert code == 1  # the out-of-scope verdicts still report the violation


class TestFlatten:
    def test_simplified_dot(self, capsys):
        code, out, _ = run_cli(capsys, "flatten", "--file", str(TANDEM_PATH))
        assert code == 0 and out.startswith("digraph framework {")
        assert '"e(A5,A7)"' in out

    def test_simplified_apx_prune_inert(self, capsys):
        code, out, _ = run_cli(
            capsys, "flatten", "--file", str(TANDEM_PATH),
            "--emit", "apx", "--flatten", "prune-inert",
        )
        assert code == 0
        assert sum(1 for l in out.splitlines() if l.startswith("arg(")) == 18

    def test_one_step_apx_is_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "flatten", "--file", str(TANDEM_PATH),
            "--stage", "one-step", "--emit", "apx",
        )
        assert code == 2 and "joint attacks" in err

    def test_two_step_keeps_double_bars(self, capsys):
        code, out, _ = run_cli(
            capsys, "flatten", "--file", str(TANDEM_PATH), "--stage", "two-step",
        )
        assert code == 0 and '"bar(bar(A7))"' in out


class TestArguments:
    def test_lists_the_store(self, capsys):
        code, out, _ = run_cli(capsys, "arguments", "--file", str(TANDEM_PATH))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 9
        assert lines[6] == (
            "A7 = r4(A5,A6)  |  A7: A5,A6 -> ~ht  |  "
            "(((-> sw) => st),((-> tw) => tt) -> ~ht)"
        )


class TestCheckPostulates:
    def test_tandem_reports_the_aspic_violations(self, capsys):
        code, out, _ = run_cli(capsys, "check-postulates", "--file", str(TANDEM_PATH))
        assert code == 1
        lines = out.splitlines()
        assert len(lines) == 24  # 4 semantics x 2 modes x 3 postulates
        assert any("aspic-minus" in l and "closure" in l and "VIOLATED" in l for l in lines)
        assert not any("deductive" in l and "VIOLATED" in l for l in lines)

    def test_axioms_only_system_passes_everywhere(self, capsys, tmp_path):
        rules = tmp_path / "axioms.rules"
        rules.write_text("strict s1: -> a\nstrict s2: a -> b\n")
        code, out, _ = run_cli(capsys, "check-postulates", "--file", str(rules))
        assert code == 0 and "VIOLATED" not in out


class TestRandom:
    def test_deterministic_and_parseable(self, capsys):
        code, first, _ = run_cli(capsys, "random", "--seed", "12")
        assert code == 0
        _, second, _ = run_cli(capsys, "random", "--seed", "12")
        assert first == second
        from jsbaf import parse_system, is_consistent

        assert is_consistent(parse_system(first))

    def test_generation_failure_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "random", "--seed", "0", "--atoms", "1",
            "--strict", "8", "--max-body", "0",
        )
        assert code == 2 and "no consistent system" in err


class TestOracle:
    def test_aspic_agreement(self, capsys):
        code, out, _ = run_cli(
            capsys, "oracle", "--file", str(TANDEM_PATH),
            "--mode", "aspic-minus", "--semantics", "preferred",
        )
        assert code == 0 and out.startswith("preferred: OK")

    def test_deductive_needs_a_bigger_cap(self, capsys):
        code, _, err = run_cli(
            capsys, "oracle", "--file", str(TANDEM_PATH), "--semantics", "stable",
        )
        assert code == 2 and "--oracle-cap" in err

    def test_deductive_agreement_with_raised_cap(self, capsys):
        # prune-inert keeps the flattened tandem at 18 nodes, inside the
        # oracle's hard 20-node cap
        code, out, _ = run_cli(
            capsys, "oracle", "--file", str(TANDEM_PATH),
            "--semantics", "stable", "--flatten", "prune-inert", "--oracle-cap", "18",
        )
        assert code == 0 and out.startswith("stable: OK")


class TestStdin:
    def test_dash_reads_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("strict r1: -> a\n"))
        code, out, _ = run_cli(capsys, "arguments", "--file", "-")
        assert code == 0 and out == "A1 = r1()  |  A1: -> a  |  (-> a)\n"
