import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from wehrl_lab.cli import main
from wehrl_lab.reports import ConfigError, Report, SuiteConfig
from wehrl_lab.suite import emit_constants_table, run_suite


@pytest.fixture
def runner():
    return CliRunner()


def test_domains_list_json(runner):
    res = runner.invoke(main, ["domains", "list"])
    assert res.exit_code == 0
    rows = json.loads(res.output)
    assert any(r["family"] == "Sp(2,R)" and r["N"] == 3 for r in rows)


def test_degrees_json(runner):
    res = runner.invoke(main, ["degrees", "--domain", "Sp(2,R)",
                               "--lambda", "4", "--n", "2"])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["d_lambda"] == {"num": "15", "den": "1", "pi_power": -3,
                               "float": out["d_lambda"]["float"]}
    assert out["c_G"]["num"] == "3"


def test_selberg_json(runner):
    res = runner.invoke(main, ["selberg", "--r", "2", "--a", "1", "--b", "0",
                               "--gamma", "0", "--budget", "20000"])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["closed_form"]["num"] == "1"
    assert out["closed_form"]["den"] == "3"
    assert out["deviation"] < 0.05


def test_disc_subcommands(runner):
    res = runner.invoke(main, ["disc", "wehrl", "--nu", "2",
                               "--coeffs", "1,1", "--n", "2"])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["slack"] == pytest.approx(0.15)

    res = runner.invoke(main, ["disc", "project", "--mu", "2", "--nu", "2",
                               "--k", "1", "--f", "0,1", "--g", "0,1"])
    assert res.exit_code == 0

    res = runner.invoke(main, ["disc", "ode", "--nu", "2", "--c", "1/2",
                               "--degree", "4"])
    assert res.exit_code == 0
    assert json.loads(res.output)["kernel_parameter_conj"] == "1/4"


def test_compact_json(runner):
    res = runner.invoke(main, ["compact", "--m", "2", "--n", "2",
                               "--vector", "1,0,1"])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["exact"] == pytest.approx(2 / 15)
    assert out["bound"] == pytest.approx(1 / 5)
    assert out["slack"] > 0


def test_suite_exit_codes(runner):
    res = runner.invoke(main, ["suite", "degrees"])
    assert res.exit_code == 0
    res = runner.invoke(main, ["suite", "disc", "--convention", "paper"])
    assert res.exit_code == 1  # documented completeness failure
    assert '"verdict": "FAIL"' in res.output


def test_suite_determinism(runner):
    a = runner.invoke(main, ["suite", "degrees", "--seed", "7"]).output
    b = runner.invoke(main, ["suite", "degrees", "--seed", "7"]).output
    assert a == b


def test_table_csv(runner):
    res = runner.invoke(main, ["table", "--domains", "disc,Sp(2,R)",
                               "--lambdas", "2,4", "--n", "2"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0].startswith("domain,lambda,n,d_lambda_coeff")
    sp_row = next(l for l in lines if l.startswith('"Sp(2,R)",4'))
    assert ",15,-3," in sp_row


def test_table_empty_grid_header_only():
    assert emit_constants_table([], [], []).strip().startswith("domain,")
    # inadmissible points are skipped
    csv_text = emit_constants_table(["Sp(2,R)"], [Fraction(1)], [2])
    assert len(csv_text.strip().splitlines()) == 1


def test_report_roundtrip():
    r = Report(command="x", inputs={"a": "1"}, outputs={"v": 0.5},
               verdict="PASS", seed=3)
    assert Report.from_json(r.to_json()) == r
    with pytest.raises(ValueError):
        Report(command="x", inputs={}, outputs={}, verdict="MAYBE")


def test_suite_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig(quadrature_nodes=0)
    with pytest.raises(ConfigError):
        SuiteConfig(tolerance_abs=2.0)
    with pytest.raises(ConfigError):
        SuiteConfig(convention="other")
    with pytest.raises(ConfigError):
        run_suite("nope", SuiteConfig())


def test_every_fail_report_carries_compared_values():
    code, reports = run_suite("disc", SuiteConfig(convention="paper"))
    fails = [r for r in reports if r.verdict == "FAIL"]
    assert code == 1 and fails
    for r in fails:
        assert "total" in r.outputs and "expected" in r.outputs
