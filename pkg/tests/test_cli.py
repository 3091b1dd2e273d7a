import io
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction as F

import pytest

from linfweak.cli import main, run
from linfweak.problemfile import ProblemError, parse_problem_text
from linfweak.reporting import (embedded_problem, render_machine,
                                strip_volatile)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestProblemFiles:
    def test_parse_and_canonical_order(self):
        pf = parse_problem_text("budget-j = 6\ntask = weaknull\nfamily = tents\n")
        assert pf.task == "weaknull"
        assert pf.canonical_lines()[0] == "task = weaknull"

    def test_unknown_field_rejected_with_line(self):
        with pytest.raises(ProblemError) as exc:
            parse_problem_text("task = weaknull\nfamily = tents\nwings = 2\n")
        assert exc.value.line == 3

    def test_unknown_task(self):
        with pytest.raises(ProblemError):
            parse_problem_text("task = fly\n")

    def test_missing_required(self):
        with pytest.raises(ProblemError):
            parse_problem_text("task = weaknull\n")

    def test_comments_and_blanks_ok(self):
        pf = parse_problem_text("# a comment\n\ntask = corpus\n")
        assert pf.task == "corpus"


class TestExitCodes:
    def test_definite_verdict_is_zero(self, tmp_path):
        cfg = write(tmp_path, "p.cfg", "task = weaknull\nfamily = tents\n")
        code, out, _ = invoke(["weaknull", cfg])
        assert code == 0
        assert "nonnull-certified" in out

    def test_inconclusive_is_three(self, tmp_path):
        # an uncertified family reachable from config: none are built in, so
        # exercise the code path through run() directly
        from linfweak.engine import INCONCLUSIVE, Policy, test_weak_null
        from linfweak.families import IndicatorFamily
        from linfweak.reporting import Report, verdict_to_dict
        from linfweak.sets import Domain, IntervalSet, ico
        fam = IndicatorFamily(Domain.open_interval(-1, 1),
                              lambda k: IntervalSet.of(ico(0, F(1, 2))))
        verdict = test_weak_null(fam, Policy(j_max=3, k_max=6))
        report = Report("weaknull", ["task = weaknull"], verdict_to_dict(verdict))
        assert verdict.kind == INCONCLUSIVE
        assert report.exit_code() == 3

    def test_parse_error_is_two(self, tmp_path):
        cfg = write(tmp_path, "bad.cfg", "task = weaknull\nfamily = tents\nbogus = 1\n")
        code, _, err = invoke(["weaknull", cfg])
        assert code == 2 and "bogus" in err

    def test_malformed_interval_literal(self, tmp_path):
        cfg = write(tmp_path, "bad2.cfg",
                    "task = essrange\ndomain = [0,1\nfunction = [0,1) 0 1\n")
        code, _, err = invoke(["essrange", cfg])
        assert code == 2 and "column" in err

    def test_missing_file_is_two(self):
        code, _, err = invoke(["weaknull", "/nonexistent.cfg"])
        assert code == 2

    def test_task_subcommand_mismatch(self, tmp_path):
        cfg = write(tmp_path, "p.cfg", "task = corpus\n")
        code, _, err = invoke(["weaknull", cfg])
        assert code == 2

    def test_engine_error_is_four(self, tmp_path):
        # a valid base whose limit keeps positive length: hat is unsupported
        cfg = write(tmp_path, "p.cfg",
                    "task = restrict\ndomain = (0,1)\n"
                    "atoms = 1 * (0,1/2+1/4/l)\n")
        code, _, err = invoke(["restrict", cfg])
        assert code == 4 and "engine error" in err

    def test_base_outside_carrier_is_input_error(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = restrict\ndomain = (0,1)\n"
                    "atoms = 1 * (0,1/2+1/l)\n")
        code, _, err = invoke(["restrict", cfg])
        assert code == 2


class TestTasks:
    def test_weaknull_machine_format(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = weaknull\nfamily = dyadic-indicators\n")
        code, out, _ = invoke(["weaknull", cfg, "--format", "machine"])
        assert code == 0
        assert "result.kind = null-certified" in out
        assert "result.scheme = disjoint-supports" in out

    def test_weaknull_at(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = weaknull-at\nfamily = sided-translates\npoint = inf\n")
        code, out, _ = invoke(["weaknull-at", cfg, "--format", "machine"])
        assert code == 0 and "result.kind = nonnull-certified" in out

    def test_essrange(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = essrange\ndomain = [0,1)\n"
                    "function = [0,1/2) 0 1 ; [1/2,1) 0 0\n")
        code, out, _ = invoke(["essrange", cfg, "--format", "machine"])
        assert code == 0 and "result.range = {0} u {1}" in out

    def test_essrange_at(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = essrange-at\ndomain = (-1,1)\n"
                    "function = (-1,0) 0 0 ; [0,1/2) 0 1 ; [1/2,1) 0 0\n"
                    "point = 0\n")
        code, out, _ = invoke(["essrange-at", cfg, "--format", "machine"])
        assert code == 0 and "result.range = {0} u {1}" in out

    def test_finite_model(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = finite-model\nweights = 1, 0, 2\n"
                    "masses = 1, -2, 3\nvectors = 3,3,5 ; 0,0,1\n")
        code, out, _ = invoke(["finite-model", cfg, "--format", "machine"])
        assert code == 0
        assert "result.zero_one_measures.1 = 0" in out
        assert "result.zero_one_measures.2 = 2" in out
        assert "result.jordan.total_variation = 6" in out

    def test_restrict(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = restrict\ndomain = (0,1)\n"
                    "atoms = 1 * (1/2-1/4/l, 1/2+1/4/l)\n"
                    "set = (1/4,3/4)\nalpha = 1/2\n")
        code, out, _ = invoke(["restrict", cfg, "--format", "machine"])
        assert code == 0
        assert "result.hat.point_masses.1.1 = 1/2" in out
        assert "result.query.lower = 1" in out
        assert "result.singularity.found = true" in out

    def test_corpus_runs_clean(self):
        code, out, _ = invoke(["corpus", "--format", "machine"])
        assert code == 0
        assert "result.failures = 0" in out


class TestReplay:
    @pytest.mark.parametrize("text", [
        "task = weaknull\nfamily = tents\n",
        "task = weaknull\nfamily = summable-disjoint\nbudget-j = 8\n",
        "task = essrange\ndomain = [0,1)\nfunction = [0,1/2) 0 1 ; [1/2,1) 0 0\n",
        "task = restrict\ndomain = (0,1)\natoms = 1 * (0,1/l)\nset = (0,1/2)\n",
        "task = finite-model\nweights = 1, 1\n",
    ])
    def test_reports_replay_identically(self, text):
        first = render_machine(run(parse_problem_text(text)))
        again = render_machine(run(parse_problem_text(embedded_problem(first))))
        assert strip_volatile(first) == strip_volatile(again)

    def test_flag_overrides_reach_the_policy(self, tmp_path):
        cfg = write(tmp_path, "p.cfg",
                    "task = weaknull\nfamily = dyadic-indicators\n")
        code, out, _ = invoke(["weaknull", cfg, "--budget-J", "3",
                               "--format", "machine"])
        assert code == 0 and "problem.2 = budget-j = 3" in out
