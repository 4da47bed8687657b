import json

import numpy as np
import pytest

from minppr import load_edge_list, random_ergodic_graph
from minppr.cli import main
from minppr.spam import attack_sink_farm, save_scenario


def run(*argv):
    return main(list(argv))


def test_gen_and_rank_round_trip(tmp_path):
    graph_path = str(tmp_path / "g.el")
    assert run("gen", "--family", "uprbad", "--k", "20",
               "--out", graph_path) == 0
    g = load_edge_list(graph_path)
    assert g.n == 40
    sidecar = json.loads((tmp_path / "g.el.json").read_text())
    assert sidecar == {"family": "uprbad", "params": {"k": 20}}

    rank_path = str(tmp_path / "r.json")
    assert run("rank", "--graph", graph_path, "--algo", "tminppr",
               "--trusted", "0,3,7", "--k", "3", "--eps", "0.1",
               "--out", rank_path) == 0
    payload = json.loads(open(rank_path).read())
    assert payload["n"] == 40
    assert payload["eps"] == 0.1
    rank = np.array(payload["rank"])
    assert abs(rank.sum() - 1.0) < 1e-9
    # 17 significant digits round-trip exactly through JSON
    assert len(payload["rank"]) == 40


def test_rank_outputs_are_byte_identical(tmp_path):
    graph_path = str(tmp_path / "g.el")
    run("gen", "--family", "randomergodic", "--n", "30", "--d", "3",
        "--seed", "5", "--out", graph_path)
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run("rank", "--graph", graph_path, "--algo", "upr",
               "--eps", "0.2", "--out", a) == 0
    assert run("rank", "--graph", graph_path, "--algo", "upr",
               "--eps", "0.2", "--out", b) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_rank_reference_has_null_eps(tmp_path):
    graph_path = str(tmp_path / "g.el")
    run("gen", "--family", "clique", "--n", "6", "--out", graph_path)
    out = str(tmp_path / "ref.json")
    assert run("rank", "--graph", graph_path, "--algo", "reference",
               "--out", out) == 0
    assert json.loads(open(out).read())["eps"] is None


def test_rank_hard_variant_writes_report(tmp_path):
    graph_path = str(tmp_path / "g.el")
    run("gen", "--family", "randomergodic", "--n", "40", "--d", "3",
        "--seed", "2", "--out", graph_path)
    out = str(tmp_path / "hard.json")
    assert run("rank", "--graph", graph_path, "--algo", "tminppr-hard",
               "--trusted", "0,1,2,3,4", "--k", "2", "--delta", "2",
               "--gamma", "0.05", "--eps", "0.1", "--out", out) == 0
    report = json.loads(open(out + ".report.json").read())
    assert report["gamma"] == 0.05
    assert len(report["discarded"]) == 1


def test_distortion_and_mixing_commands(tmp_path):
    graph_path = str(tmp_path / "g.el")
    run("gen", "--family", "uprbad", "--k", "10", "--out", graph_path)
    csv_path = str(tmp_path / "d.csv")
    assert run("distortion", "--graph", graph_path, "--algo", "upr",
               "--eps", "0.1", "--delta", "1", "--out", csv_path) == 0
    assert (tmp_path / "d.csv").exists()
    assert (tmp_path / "d.csv.summary.json").exists()

    mix_path = str(tmp_path / "m.json")
    assert run("mixing", "--graph", graph_path, "--rho", "0.25",
               "--out", mix_path) == 0
    assert json.loads(open(mix_path).read())["steps"] <= 4


def test_mixing_periodic_graph_exits_two(tmp_path):
    graph_path = str(tmp_path / "cyc.el")
    run("gen", "--family", "cycle", "--n", "3", "--out", graph_path)
    assert run("mixing", "--graph", graph_path, "--centers", "0") == 2


def test_spam_command(tmp_path):
    g = random_ergodic_graph(12, 3, seed=1)
    scenario = attack_sink_farm(g, {0}, 4, 6)
    scenario_path = tmp_path / "scenario.json"
    save_scenario(scenario, scenario_path)
    out = str(tmp_path / "spam.json")
    assert run("spam", "--scenario", str(scenario_path), "--algo", "tppr",
               "--eps", "0.1", "--out", out) == 0
    payload = json.loads(open(out).read())
    assert payload["gain"] > 0
    assert payload["ratio"] != "unbounded"


def test_verify_single_suite(tmp_path):
    out_dir = tmp_path / "suites"
    assert run("verify", "--suite", "median-failure", "--seed", "7",
               "--out", str(out_dir)) == 0
    payload = json.loads((out_dir / "median-failure.json").read_text())
    assert payload["verdict"] == "pass"
    assert payload["trials_passed"] == payload["trials_run"]


def test_verify_outputs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("verify", "--suite", "linearity", "--seed", "9",
               "--out", str(a)) == 0
    assert run("verify", "--suite", "linearity", "--seed", "9",
               "--out", str(b)) == 0
    assert (a / "linearity.json").read_bytes() == \
        (b / "linearity.json").read_bytes()


def test_verify_all_suites(tmp_path, capsys):
    out_dir = tmp_path / "all"
    assert run("verify", "--suite", "all", "--seed", "7",
               "--out", str(out_dir)) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l]
    assert len(lines) == 16
    assert all(line.startswith("PASS") for line in lines)
    assert len(list(out_dir.glob("*.json"))) == 16


def test_verify_unknown_suite_fails(tmp_path):
    assert run("verify", "--suite", "nosuch", "--seed", "1",
               "--out", str(tmp_path)) == 1


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as err:
        run("rank", "--algo", "upr")
    assert err.value.code == 1


def test_missing_eps_is_validation_error(tmp_path):
    graph_path = str(tmp_path / "g.el")
    run("gen", "--family", "clique", "--n", "5", "--out", graph_path)
    assert run("rank", "--graph", graph_path, "--algo", "upr",
               "--out", str(tmp_path / "r.json")) == 1
