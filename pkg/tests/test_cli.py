import json

import pytest
from click.testing import CliRunner

from cli_module.commands import cli, main
from evaluator_module.evaluators import evaluate
from identity_module.suites import SuiteBounds
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import (
    GeneralizedPartition,
    contains,
    generalized_partitions,
    partitions_up_to,
)


@pytest.fixture
def runner():
    return CliRunner()


def _terms(output):
    return set(output.strip().split(" + "))


def test_compute_text(runner):
    result = runner.invoke(cli, ["compute", "sp", "--lambda", "1", "--nvars", "1"])
    assert result.exit_code == 0
    assert _terms(result.output) == {"x1", "x1^-1"}


def test_compute_json(runner):
    result = runner.invoke(
        cli, ["compute", "skew-o", "--lambda", "1,1", "--mu", "0", "--nvars", "1", "--format", "json"]
    )
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["family"] == "skew-o"
    assert obj["lambda"] == [1, 1]
    assert obj["mu"] == [0]
    assert obj["method"] == "jt"
    assert LaurentPoly.from_json_obj(obj["value"]) == 2


def _parts(p):
    return ",".join(str(a) for a in p)


def _skew_grid(family, max_weight, max_len, max_vars):
    # the equivalence-suite grids: containment for type A, raw length pairs for sp/o
    for N in range(1, max_vars + 1):
        if family == "skew-s":
            for mu in partitions_up_to(max_len, max_weight):
                for la in partitions_up_to(len(mu) + N, max_weight):
                    if contains(mu, la):
                        yield la, mu, N
        else:
            for l in range(max_len + 1):
                for mu in generalized_partitions(l, max_weight):
                    for la in generalized_partitions(l + N, max_weight):
                        yield la, mu, N


def _assert_methods_agree(runner, family, la, mu, N):
    args = ["compute", family, "--lambda", _parts(la), "--mu", _parts(mu), "--nvars", str(N)]
    jt = runner.invoke(cli, args + ["--method", "jt"])
    gt = runner.invoke(cli, args + ["--method", "gt"])
    assert jt.exit_code == gt.exit_code == 0, (la, mu, N, jt.output, gt.output)
    assert jt.output == gt.output, (la, mu, N)


def test_straight_methods_agree(runner):
    for family in ("s", "sp", "o"):
        for N in (1, 2, 3):
            for la in partitions_up_to(N, 3):
                _assert_methods_agree(runner, family, la, (), N)


@pytest.mark.parametrize("family", ["skew-s", "skew-sp", "skew-o"])
def test_skew_methods_agree(runner, family):
    for la, mu, N in _skew_grid(family, max_weight=3, max_len=2, max_vars=2):
        _assert_methods_agree(runner, family, la, mu, N)


@pytest.mark.slow
@pytest.mark.parametrize("family", ["skew-s", "skew-sp", "skew-o"])
def test_skew_methods_agree_on_default_grid(runner, family):
    bounds = SuiteBounds.default("equivalence")
    max_vars = 3 if family == "skew-s" else 2
    for la, mu, N in _skew_grid(family, bounds.max_weight, bounds.max_len, max_vars):
        _assert_methods_agree(runner, family, la, mu, N)


def test_length_rule_is_a_usage_error(runner):
    result = runner.invoke(cli, ["compute", "skew-sp", "--lambda", "3,1", "--mu", "2", "--nvars", "2"])
    assert result.exit_code == 2
    assert "--nvars 2" in result.output


def test_bad_partition(runner):
    result = runner.invoke(cli, ["compute", "s", "--lambda", "1,2", "--nvars", "2"])
    assert result.exit_code == 2


def test_missing_method(runner):
    result = runner.invoke(cli, ["compute", "sstar", "--lambda", "1", "--nvars", "1", "--method", "gt"])
    assert result.exit_code == 2
    with pytest.raises(ValueError):
        evaluate("sstar", GeneralizedPartition.of(1), GeneralizedPartition(), 1, "gt")


def test_sstar(runner):
    result = runner.invoke(cli, ["compute", "sstar", "--lambda", "2,0", "--mu", "1", "--nvars", "1"])
    assert result.exit_code == 0
    assert _terms(result.output) == {"x1", "x1^3"}


def test_verify_json_lines(runner):
    result = runner.invoke(cli, ["verify", "specialization", "--max-weight", "2", "--max-len", "1"])
    assert result.exit_code == 0
    lines = [json.loads(line) for line in result.output.splitlines()]
    assert lines
    assert all(line["passed"] for line in lines)
    assert {line["identity"] for line in lines} == {"sp_single_var", "o_single_var", "schur_single_var"}


def test_verify_text(runner):
    result = runner.invoke(
        cli, ["verify", "symmetry", "--max-weight", "1", "--max-vars", "1", "--max-len", "0", "--format", "text"]
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert "passed in" in lines[-1]


def test_verify_failure_exits_one(runner, monkeypatch):
    # a wrong closed form makes every sp_single_var check fail
    monkeypatch.setattr("identity_module.suites.sp_single_var", lambda la, nu: 7 * LaurentPoly.one(1))
    result = runner.invoke(cli, ["verify", "specialization", "--max-weight", "1", "--max-len", "0"])
    assert result.exit_code == 1
    lines = [json.loads(line) for line in result.output.splitlines()]
    failed = [line for line in lines if line["passed"] is False]
    assert failed
    assert {line["identity"] for line in failed} == {"sp_single_var"}


def test_verify_text_failure_exits_one(runner, monkeypatch):
    monkeypatch.setattr("identity_module.suites.o_single_var", lambda la, nu: LaurentPoly.zero(1))
    result = runner.invoke(
        cli, ["verify", "specialization", "--max-weight", "1", "--max-len", "0", "--format", "text"]
    )
    assert result.exit_code == 1
    assert any(line.startswith("FAIL") for line in result.output.splitlines())


def test_verify_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "proofs"])
    assert result.exit_code == 2


def test_expand(runner):
    result = runner.invoke(cli, ["expand", "sp", "--nvars", "1", "--degree", "2"])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "equal:  True"


def test_expand_json(runner):
    result = runner.invoke(cli, ["expand", "o", "--nvars", "1", "--degree", "2", "--format", "json"])
    obj = json.loads(result.output)
    assert obj["equal"] is True
    assert LaurentPoly.from_json_obj(obj["kernel"]) == LaurentPoly.from_json_obj(obj["sum"])


def test_expand_rejects_skew(runner):
    result = runner.invoke(cli, ["expand", "skew-sp", "--nvars", "1", "--degree", "2"])
    assert result.exit_code == 2


def test_main_exit_codes(capsys):
    assert main(["compute", "o", "--lambda", "1", "--nvars", "1"]) == 0
    assert _terms(capsys.readouterr().out) == {"x1", "x1^-1"}
    assert main(["compute", "skew-o", "--lambda", "1", "--mu", "1", "--nvars", "1"]) == 2
