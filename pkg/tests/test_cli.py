import csv
import json
import re
import subprocess
import sys

import numpy as np
import pytest

from effortfit.cli import main
from effortfit.dataset import nasa_dataset, split_fixed, write_csv
from effortfit.harness import ExperimentConfig, run_experiment
from effortfit.models import ModelSpec
from effortfit.optimizers import PsoConfig


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fit_minimal_budget(tmp_path, capsys):
    code, out, _ = run(["fit", "--model", "basic", "--optimizer", "firefly", "--runs", "1",
                        "--iters", "1", "--out", str(tmp_path)], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["kind"] == "fit" and doc["config"]["model"] == "basic"
    assert len(doc["mean_trace"]) == 1
    assert set(doc["mean_train"]) == set(doc["mean_test"]) == {"vaf", "mse", "mae", "mmre", "rmse", "r2"}
    rows = list(csv.reader((tmp_path / "trace.csv").open()))
    assert rows[0] == ["iteration", "best"] and len(rows) == 2
    assert "Training" in out


def test_fit_report_round_trips(tmp_path, capsys):
    code, _, _ = run(["fit", "--model", "model1", "--optimizer", "pso", "--runs", "3", "--iters", "15",
                      "--population", "12", "--seed", "42", "--out", str(tmp_path), "--quiet"], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    rep = run_experiment(ExperimentConfig(ModelSpec.MODEL_I, PsoConfig(iterations=15, population=12),
                                          split_fixed(nasa_dataset(), 13), runs=3, master_seed=42))
    assert doc["mean_train"] == rep.mean_train.as_dict()
    assert doc["mean_test"] == rep.mean_test.as_dict()
    assert doc["mean_trace"] == list(rep.mean_trace)
    for d, r in zip(doc["runs"], rep.runs):
        assert tuple(d["parameters"].values()) == r.parameters
        assert d["train"] == r.train.as_dict() and d["test"] == r.test.as_dict()
        assert d["seed"] == r.seed and d["best_score"] == r.best_score


def test_fit_byte_identical(tmp_path, capsys):
    args = ["fit", "--model", "model2", "--optimizer", "ga", "--runs", "2", "--iters", "10",
            "--population", "10", "--seed", "3", "--quiet"]
    run(args + ["--out", str(tmp_path / "a")], capsys)
    run(args + ["--out", str(tmp_path / "b")], capsys)
    for name in ("report.json", "trace.csv", "table.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_table_numbers_match_report(tmp_path, capsys):
    run(["fit", "--model", "basic", "--optimizer", "pso", "--runs", "2", "--iters", "20",
         "--out", str(tmp_path), "--quiet"], capsys)
    doc = json.loads((tmp_path / "report.json").read_text())
    table = (tmp_path / "table.txt").read_text().splitlines()
    rows = {line.split()[0]: line.split()[1:] for line in table[3:]}
    labels = {"VAF": "vaf", "MSE": "mse", "MAE": "mae", "MMRE": "mmre", "RMSE": "rmse", "R^2": "r2"}
    for label, key in labels.items():
        train, test = (v.rstrip("%") for v in rows[label])
        assert train == f"{doc['mean_train'][key]:.2f}"
        assert test == f"{doc['mean_test'][key]:.2f}"


def test_fit_bounds_and_settings(tmp_path, capsys):
    code, _, _ = run(["fit", "--model", "basic", "--optimizer", "firefly", "--runs", "1", "--iters", "3",
                      "--population", "5", "--bound", "a=0.5:3", "--set", "gamma=1.5", "--set", "scan=full",
                      "--out", str(tmp_path), "--quiet"], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["config"]["space"]["lower"] == [0.5, 0.01]
    assert doc["config"]["optimizer"]["gamma"] == 1.5
    assert doc["config"]["optimizer"]["scan"] == "full"
    assert 0.5 <= doc["runs"][0]["parameters"]["a"] <= 3


@pytest.mark.parametrize("extra", [["--bound", "d=0:1"], ["--set", "nope=1"], ["--bound", "a=3:1"],
                                   ["--train-count", "18"]])
def test_fit_usage_errors(tmp_path, capsys, extra):
    with pytest.raises(SystemExit) as exc:
        rc = main(["fit", "--model", "basic", "--optimizer", "ga", "--runs", "1", "--iters", "1",
                   "--out", str(tmp_path), *extra])
        raise SystemExit(rc)
    assert exc.value.code != 0
    err = capsys.readouterr().err.strip()
    assert err.startswith("effortfit: error:") and "\n" not in err


def test_fit_bad_data(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("id,kloc,me,effort\n1,2,3,0\n")
    code, _, err = run(["fit", "--model", "basic", "--optimizer", "ga", "--data", str(bad),
                        "--out", str(tmp_path)], capsys)
    assert code == 1
    assert "row 2" in err and err.count("\n") == 1
    code, _, err = run(["fit", "--model", "basic", "--optimizer", "ga", "--data", str(tmp_path / "none.csv"),
                        "--out", str(tmp_path)], capsys)
    assert code == 1


def test_fit_custom_data(tmp_path, capsys):
    path = tmp_path / "nasa.csv"
    write_csv(nasa_dataset(), path)
    args = ["fit", "--model", "basic", "--optimizer", "pso", "--runs", "1", "--iters", "5", "--quiet"]
    run(args + ["--data", str(path), "--out", str(tmp_path / "a")], capsys)
    run(args + ["--out", str(tmp_path / "b")], capsys)
    a = json.loads((tmp_path / "a" / "report.json").read_text())
    b = json.loads((tmp_path / "b" / "report.json").read_text())
    assert a["mean_test"] == b["mean_test"]


def test_compare_toy_scale(tmp_path, capsys):
    code, out, _ = run(["compare", "--iters", "10", "--runs", "2", "--population", "8",
                        "--out", str(tmp_path)], capsys)
    assert code == 0
    for model in ("basic", "model1", "model2"):
        assert (tmp_path / f"table_{model}.txt").exists()
        rows = list(csv.reader((tmp_path / f"trace_{model}.csv").open()))
        assert rows[0] == ["iteration", "firefly", "ga", "pso"]
        assert len(rows) == 11
        values = np.array(rows[1:], dtype=float)
        assert np.all(np.diff(values[:, 1:], axis=0) <= 0)
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["kind"] == "compare" and len(doc["cells"]) == 9 and doc["errors"] == []
    table = (tmp_path / "table_model1.txt").read_text()
    assert re.search(r"Firefly\s+GA\s+PSO\s+Firefly\s+GA\s+PSO", table)
    assert "Model I" in out


def test_predict_identity(capsys):
    code, out, _ = run(["predict", "--model", "basic", "--coef", "1", "1"], capsys)
    assert code == 0
    first = out.splitlines()[1].split()
    assert first[0] == "1" and float(first[3]) == 115.8 and float(first[4]) == 90.2
    assert "MMRE" in out


def test_predict_model2_reduces_to_basic(capsys):
    _, basic, _ = run(["predict", "--model", "basic", "--coef", "1.5", "0.95"], capsys)
    _, model2, _ = run(["predict", "--model", "model2", "--coef", "1.5", "0.95", "0", "0"], capsys)
    assert basic.splitlines() == model2.splitlines()


def test_predict_wrong_count(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["predict", "--model", "model1", "--coef", "1", "1"])
    assert exc.value.code == 2
    assert "takes 3 coefficients" in capsys.readouterr().err


def test_predict_subset(capsys):
    code, out, _ = run(["predict", "--model", "basic", "--coef", "1", "1", "--subset", "test"], capsys)
    assert code == 0
    ids = [line.split()[0] for line in out.splitlines()[1:6]]
    assert ids == ["14", "15", "16", "17", "18"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "effortfit", "predict", "--model", "basic", "--coef", "1", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "90.2000" in proc.stdout
