import json
import subprocess
import sys

import pytest

from fibwalk.battery import CHECK_NAMES, BatteryConfig, build_registry, run_battery
from fibwalk.cli import main
from fibwalk.errors import ConfigError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fib(capsys):
    assert run(capsys, "fib", "10") == (0, "55\n", "")
    code, out, _ = run(capsys, "fib", "0")
    assert out == "0\n"


def test_fib_huge_index_string(capsys):
    code, out, _ = run(capsys, "fib", "20000")
    assert code == 0 and len(out.strip()) == 4180


def test_is_fib(capsys):
    assert run(capsys, "is-fib", "89")[1] == "89 = F_11\n"
    assert "not a Fibonacci" in run(capsys, "is-fib", "14")[1]
    long_value = str(10**5000 + 1)
    code, out, _ = run(capsys, "is-fib", long_value)
    assert code == 0 and "not a Fibonacci" in out


def test_pisano(capsys):
    assert run(capsys, "pisano", "10")[1] == "60\n"
    code, out, _ = run(capsys, "pisano", "2", "--residues")
    assert out == "3\n0 1 1\n"


def test_walks_text_and_json(capsys):
    code, out, _ = run(capsys, "walks", "--start", "8", "--mode", "exact", "--n", "1")
    assert code == 0 and out.startswith("8 -> 89")
    code, out, _ = run(capsys, "walks", "--start", "1", "--mode", "atmost", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert [w["values"] for w in doc["walks"]] == [[1, 13], [1, 144]]
    assert doc["walks"][1]["blocks"] == ["44"]


def test_walks_bad_start_is_usage_error(capsys):
    code, _, err = run(capsys, "walks", "--start", "4", "--mode", "exact", "--n", "1")
    assert code == 2 and "not a positive Fibonacci" in err


def test_bound(capsys):
    assert run(capsys, "bound", "--theorem2", "--n", "4", "--n0", "2")[1] == "4\n"
    assert run(capsys, "bound", "--theorem2", "--n", "1", "--n0", "1")[1] == "2\n"
    assert "degenerate" in run(capsys, "bound", "--theorem2", "--n", "1", "--n0", "5")[1]
    assert run(capsys, "bound", "--lemma7", "--n", "2")[1] == "113\n"
    assert run(capsys, "bound", "--theorem2", "--n", "2")[0] == 2


@pytest.mark.parametrize("argv", [[], ["fib"], ["fib", "-3"], ["fib", "abc"], ["verify", "nope"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_single_check(capsys, tmp_path):
    out_file = tmp_path / "t1.json"
    code, out, _ = run(capsys, "verify", "theorem1", "--format", "json", "--out", str(out_file))
    assert code == 0 and out == ""
    doc = json.loads(out_file.read_text())
    assert doc["checks"][0]["witnesses"]["walks"][0] == [1, 13]


def test_verify_grid_k_exceeds_m_is_usage_error(capsys):
    assert run(capsys, "verify", "all", "--lemma4-k-max", "301")[0] == 2


def test_verify_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"theorem1-cutoff": 40, "theorem2_ns": [1, 2]}))
    code, out, _ = run(capsys, "verify", "theorem2", "--config", str(cfg), "--format", "json")
    assert code == 0
    assert [c["params"]["N"] for c in json.loads(out)["checks"]] == [1, 2]
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "verify", "all", "--config", str(cfg))[0] == 2
    cfg.write_text(json.dumps({"theorem1_cutoff": 10}))
    assert run(capsys, "verify", "all", "--config", str(cfg))[0] == 2


def test_verify_self_test_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "lemma4", "--self-test")
    assert code == 1 and "FAIL" in out


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("FIBWALK_THREADS", "3")
    code, out, _ = run(capsys, "verify", "lemma7", "--format", "json")
    assert code == 0
    monkeypatch.setenv("FIBWALK_THREADS", "zero")
    assert run(capsys, "verify", "lemma7")[0] == 2


def test_parallel_order_matches_registry():
    cfg = BatteryConfig(lemma3_max=50, lemma4_k_max=50, lemma4_m_max=50, lemma4_algebraic_max=20, workers=4)
    report = run_battery(cfg)
    assert [(c.name, c.params) for c in report.checks] == [(c.name, c.params) for c in build_registry(cfg)]
    assert report.ok


def test_registry_covers_required_checks():
    required = {
        "lemma3", "lemma4", "lemma4_algebraic", "eq3", "binet", "eq5", "eq6", "pisano",
        "lemma6_residues", "lemma6_direct", "lemma7", "corollary8", "theorem1", "theorem2",
    }
    assert required <= set(CHECK_NAMES)
    names = [c.name for c in build_registry(BatteryConfig())]
    assert names.count("lemma7") == names.count("corollary8") == 3
    assert names.count("theorem2") == 4


def test_run_battery_rejects_unknown_check():
    with pytest.raises(ConfigError):
        run_battery(BatteryConfig(), only="lemma99")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibwalk", "verify", "pisano"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "PASS" in proc.stdout
