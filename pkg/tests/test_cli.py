"""End-to-end command-line behavior: formats, exit codes, determinism."""

import contextlib
import io
import json
import sys

import pytest

from gofknots.cli import app, main
from gofknots.words import beta, format_braid


def run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


class TestDecisionCommands:
    def test_conjugate_true(self):
        code, out, err = run_cli("conjugate", "b a b", "a b a")
        assert (code, out, err) == (0, "true\n", "")

    def test_conjugate_false(self):
        code, out, _ = run_cli("conjugate", "a", "b b")
        assert (code, out) == (0, "false\n")

    def test_equal(self):
        assert run_cli("equal", "a b a", "b a b")[:2] == (0, "true\n")
        assert run_cli("equal", "a b", "b a")[:2] == (0, "false\n")

    def test_lens_eq(self):
        assert run_cli("lens-eq", "7", "2", "7", "-2")[:2] == (0, "false\n")
        assert run_cli("lens-eq", "7", "2", "7", "-2", "--unoriented")[:2] == (
            0,
            "true\n",
        )
        assert run_cli("lens-eq", "7", "2", "7", "4")[:2] == (0, "true\n")


class TestWordCommands:
    def test_nf(self):
        code, out, _ = run_cli("nf", "a b a")
        assert code == 0
        assert out == (
            "exponent_sum: 3\n"
            "matrix: [[0, 1], [-1, 0]]\n"
            "psl_cyclic_normal_form: X\n"
        )

    def test_nf_of_identity(self):
        code, out, _ = run_cli("nf", "")
        assert code == 0
        assert out == (
            "exponent_sum: 0\n"
            "matrix: [[1, 0], [0, 1]]\n"
            "psl_cyclic_normal_form: 1\n"
        )

    def test_beta(self):
        code, out, _ = run_cli("beta", "-3", "5")
        assert (code, out) == (0, "B A B B A B B A B a a a a a\n")

    def test_det(self):
        assert run_cli("det", "B a a b b a")[:2] == (0, "7\n")
        assert run_cli("det", "b a b a")[:2] == (0, "3\n")


class TestClosureCommand:
    def test_two_bridge_closure(self):
        code, out, _ = run_cli("closure", "B A B B A B B A B a a a a a")
        assert code == 0
        assert out == (
            "two_bridge: true\n"
            "alpha: 7\n"
            "beta: 2\n"
            "lens_p: 7\n"
            "lens_q: 2\n"
            "witness_p: -2\n"
            "witness_q: -3\n"
            "mirrored: false\n"
        )

    def test_non_two_bridge_closure(self):
        code, out, _ = run_cli("closure", format_braid(beta(5, 7)))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "two_bridge: false"
        assert all(line.endswith(": null") for line in lines[1:])
        assert len(lines) == 8


class TestClassifyCommand:
    def test_text_output(self):
        code, out, _ = run_cli("classify", "-3", "5")
        assert code == 0
        assert out == (
            "k: -3\n"
            "n: 5\n"
            "word: B A B B A B B A B a a a a a\n"
            "is_two_bridge: true\n"
            "alpha: 7\n"
            "beta: 2\n"
            "lens_p: 7\n"
            "lens_q: 2\n"
            "witness_p: -2\n"
            "witness_q: -3\n"
            "mirrored: false\n"
            "label: ExceptionL72(+1)\n"
            "description: (-1)-Dehn surgery on the plumbing of a 7-Hopf band "
            "and a (+1)-Hopf band; knot in L(7,2)\n"
        )

    def test_json_output_round_trips(self):
        code, out, _ = run_cli("classify", "-3", "5", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["label"] == "ExceptionL72(+1)"
        assert record["lens_p"] == 7
        assert record["lens_q"] == 2
        assert record["witness_p"] == -2
        assert record["mirrored"] is False

    def test_json_nulls_for_non_two_bridge(self):
        code, out, _ = run_cli("classify", "5", "7", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["is_two_bridge"] is False
        assert record["alpha"] is None
        assert record["label"] == "NotLensSpace"

    def test_even_k_exits_2(self):
        code, out, err = run_cli("classify", "4", "5")
        assert code == 2
        assert out == ""
        assert err.startswith("error:")


class TestTableCommand:
    EXPECTED_TSV = (
        "k\tn\ttwo_bridge\talpha\tbeta\tlens\tlabel\n"
        "-1\t0\ttrue\t2\t1\tL(2,1)\tHopfPlumbing(r=-2,band=-1)\n"
        "-1\t1\ttrue\t1\t0\tL(1,0)\tHopfPlumbing(r=-1,band=-1)\n"
        "-1\t2\tfalse\tnull\tnull\tnull\tHopfPlumbing(r=0,band=-1)\n"
        "-1\t3\ttrue\t1\t0\tL(1,0)\tHopfPlumbing(r=1,band=-1)\n"
        "1\t0\ttrue\t2\t1\tL(2,1)\tHopfPlumbing(r=2,band=+1)\n"
        "1\t1\ttrue\t3\t1\tL(3,1)\tHopfPlumbing(r=3,band=+1)\n"
        "1\t2\ttrue\t4\t1\tL(4,1)\tHopfPlumbing(r=4,band=+1)\n"
        "1\t3\ttrue\t5\t1\tL(5,1)\tHopfPlumbing(r=5,band=+1)\n"
    )

    def test_tsv_output(self):
        code, out, _ = run_cli("table", "--k=-1,1", "--n=0..3")
        assert code == 0
        assert out == self.EXPECTED_TSV

    def test_output_is_deterministic(self):
        first = run_cli("table", "--k=-3,-1,1,3", "--n=-8..8")
        second = run_cli("table", "--k=-3,-1,1,3", "--n=-8..8")
        assert first == second

    def test_json_output(self):
        code, out, _ = run_cli("table", "--k=1", "--n=0..3", "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert [r["n"] for r in records] == [0, 1, 2, 3]
        assert [r["alpha"] for r in records] == [2, 3, 4, 5]
        assert all(len(r) == 13 for r in records)

    def test_empty_range_gives_header_only(self):
        code, out, _ = run_cli("table", "--k=1", "--n=3..2")
        assert code == 0
        assert out == "k\tn\ttwo_bridge\talpha\tbeta\tlens\tlabel\n"

    def test_malformed_list_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("table", "--k=bogus", "--n=0..3")
        assert excinfo.value.code == 2

    def test_malformed_range_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("table", "--k=1", "--n=0-3")
        assert excinfo.value.code == 2


class TestConwayCommand:
    def test_leading_negative_entry(self):
        code, out, _ = run_cli("conway", "-2,2,-3")
        assert code == 0
        assert out == (
            "fraction: 7/-5\n"
            "alpha: 7\n"
            "beta: 2\n"
            "lens_p: 7\n"
            "lens_q: 2\n"
        )

    def test_single_entry(self):
        code, out, _ = run_cli("conway", "5")
        assert code == 0
        assert out.splitlines()[0] == "fraction: 5/1"

    def test_degenerate_tuple_exits_2(self):
        code, _, err = run_cli("conway", "2,0")
        assert code == 2
        assert "error:" in err

    def test_unlink_value_exits_2(self):
        code, _, err = run_cli("conway", "0")
        assert code == 2
        assert "error:" in err


class TestVerifyPaperCommand:
    def test_passes_and_reports_counts(self):
        code, out, _ = run_cli("verify-paper")
        assert code == 0
        lines = out.splitlines()
        assert "case rows: 8/8 passed" in lines
        assert "additional checks: 8/8 passed" in lines
        assert lines[-1] == "verify-paper: PASS"
        assert (
            lines[0]
            == "[ok] case A: beta(5,-13) vs standard form on {-2,3}: "
            "expected false, computed false"
        )
        assert sum(1 for line in lines if line.startswith("[ok]")) == 16

    def test_output_is_deterministic(self):
        assert run_cli("verify-paper") == run_cli("verify-paper")


class TestErrorHandling:
    def test_parse_error_exits_2(self):
        code, out, err = run_cli("nf", "xyz")
        assert code == 2
        assert out == ""
        assert err == "error: malformed token 'xyz'\n"

    def test_unlink_lens_parameters_exit_2(self):
        code, _, err = run_cli("lens-eq", "0", "3", "1", "0")
        assert code == 2
        assert "error:" in err

    def test_unknown_command_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("bogus")
        assert excinfo.value.code == 2

    def test_missing_arguments_are_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("conjugate", "a")
        assert excinfo.value.code == 2

    def test_no_command_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli()
        assert excinfo.value.code == 2


class TestEntryPoints:
    def test_main_reads_sys_argv(self, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["gofknots", "det", "b a b a"])
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            assert main() == 0
        assert out.getvalue() == "3\n"

    def test_app_raises_system_exit(self, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["gofknots", "det", "b a b a"])
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            with pytest.raises(SystemExit) as excinfo:
                app()
        assert excinfo.value.code == 0

    def test_version_flag(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("--version")
        assert excinfo.value.code == 0
