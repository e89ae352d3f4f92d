import json
import re
from pathlib import Path

import pytest

from hgschottky.cli import main
from hgschottky.loops import base_point
from hgschottky.schottky import certify
from hgschottky.serialize import (
    InputError, RunConfig, config_from_dict, config_to_dict, dumps, read_json, read_loop_report,
)

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "alpha_around_d0_t0.json"


@pytest.fixture(scope="module")
def loop_json(tmp_path_factory):
    out = tmp_path_factory.mktemp("loop") / "gamma2.json"
    code = main(["loop", "--kind", "multiplier-gamma2", "--n", "16", "--out", str(out)])
    assert code == 0
    return out


def test_monodromy(capsys):
    assert main(["monodromy", "--theta0", "0.2", "--theta1", "6", "--theta2", "5"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["type"] == "monodromy"


def test_monodromy_pole_is_input_error(capsys):
    # c - a - b = 0
    assert main(["monodromy", "--a", "0.5", "--b", "0.5", "--c", "1"]) == 2
    assert "c-a-b" in capsys.readouterr().err


def test_usage_errors(tmp_path, capsys):
    assert main(["monodromy", "--a", "1"]) == 2
    assert main(["nonsense"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["certify", str(bad)]) == 2
    bad.write_text(json.dumps({"type": "schottky-config"}))
    assert main(["certify", str(bad)]) == 2
    assert main(["loop", "--n", "4"]) == 2


def test_certify_fixture(tmp_path):
    out = tmp_path / "cert.json"
    assert main(["certify", str(FIXTURE), "--conjugations", "3", "--seed", "1", "--out", str(out)]) == 0
    d = read_json(out)
    assert d["pass"] and d["conjugation_verdicts"] == [True] * 3


def test_certify_failure_exit(tmp_path):
    d = read_json(FIXTURE)
    d["disks"]["D1"]["D"] = "-100"  # a disk far too large
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    assert main(["certify", str(bad)]) == 1


def test_audit_exit_codes(capsys):
    assert main(["audit", "--kind", "alpha-around-d1"]) == 0
    capsys.readouterr()
    assert main(["audit", "--kind", "alpha-around-d1", "--theta-prime", "0.3"]) == 1
    assert "(1) needs theta' < 0" in capsys.readouterr().err
    assert main(["loop", "--kind", "alpha-around-d1", "--theta-prime", "-0.1"]) == 1


def test_loop_report_round_trip(loop_json, tmp_path):
    d = read_loop_report(read_json(loop_json))
    assert d["verdict"] and d["kind"] == "multiplier-gamma2"
    again = tmp_path / "again.json"
    again.write_text(dumps(d))
    assert again.read_bytes() == loop_json.read_bytes()


def test_run_config(tmp_path, capsys):
    rc = RunConfig("audit", kind="alpha-around-d1", theta_prime=-0.5, n=32)
    path = tmp_path / "run.json"
    path.write_text(dumps(rc.to_dict()))
    assert dumps(RunConfig.from_dict(read_json(path)).to_dict()) == path.read_text()
    assert main(["audit", "--config", str(path)]) == 0
    with pytest.raises(InputError):
        RunConfig.from_dict({"type": "run-config", "command": "loop", "n": 3})
    assert main(["loop", "--config", str(path)]) == 2  # command mismatch


def test_config_round_trip():
    cfg = base_point(0.2, 6, 5)
    d = config_to_dict(cfg)
    back = config_from_dict(json.loads(dumps(d)))
    assert certify(back).verdict
    from hgschottky.disk import same_circle
    from hgschottky.sphere import same_map
    assert same_map(back.gamma1, cfg.gamma1) and same_map(back.gamma2, cfg.gamma2)
    for k in cfg.disks:
        assert same_circle(back.disks[k], cfg.disks[k])


def test_plot_config(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["plot", str(FIXTURE), "--svg", str(a)]) == 0
    assert main(["plot", str(FIXTURE), "--svg", str(b)]) == 0
    text = a.read_text()
    assert text == b.read_text()
    assert len(re.findall(r'class="disk"', text)) == 4
    assert len(re.findall(r'class="fixed-point"', text)) == 3  # the fourth is at infinity


def test_plot_loop(loop_json, tmp_path):
    out = tmp_path / "loop.svg"
    assert main(["plot", str(loop_json), "--svg", str(out)]) == 0
    text = out.read_text()
    assert 'class="trajectory"' in text and 'class="inset"' in text


def test_plot_empty_report(loop_json, tmp_path):
    d = read_json(loop_json)
    d["samples"] = []
    p = tmp_path / "empty.json"
    p.write_text(dumps(d))
    assert main(["plot", str(p)]) == 2


def test_apollonius_command(capsys):
    assert main(["apollonius", "--disk", "0", "0", "1", "--disk2", "5", "0", "2",
                 "--fp", "5.3", "--phase", "0.4"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["pairs"] and d["concentricity"] < 1e-8
    assert 0 < d["eta_p"] < 0.4 and 0.8 < d["eta"] < 1
    assert main(["apollonius", "--disk", "0", "0", "1", "--disk2", "1.5", "0", "1"]) == 2
