import json

import pytest

from condiid.cli import main
from condiid.config import ExperimentConfig, validate
from condiid.errors import InvalidConfig

PAIR = {"kind": "boxes", "boxes_0": [[0.0, 0.25], [0.75, 1.0]], "boxes_1": [[0.3, 0.7]]}
BOX2 = {"kind": "boxes", "boxes_0": [[[0, 1], [0, 1]]], "boxes_1": [[[2, 3], [2, 3]]]}


def cfg(**kw):
    d = {"kind": "consistency", "seed": 1, "process": {"kind": "iid", "p": 0.5}, "pair": PAIR,
         "classifier": {"kind": "nn"}, "n_list": [20, 80], "eps_list": [0.1], "runs": 5}
    d.update(kw)
    return d


def test_validate_examples():
    assert validate(cfg()) == []
    assert "delta: delta must lie in (0, 1/2]" in validate(cfg(delta=0.7))
    d = cfg()
    del d["seed"]
    assert any(m.startswith("seed:") for m in validate(d))
    assert any("requires dimension 1" in m for m in validate(cfg(pair=BOX2, classifier={"kind": "erm_interval"})))
    assert validate(cfg(pair=BOX2)) == []


def test_round_trip():
    c = ExperimentConfig.from_dict(cfg(classifier={"kind": "erm_k_intervals", "k": 2}))
    again = ExperimentConfig.from_dict(json.loads(c.to_json()))
    assert again == c
    assert again.classifier_spec() == c.classifier_spec()


def test_invalid_raises():
    with pytest.raises(InvalidConfig) as exc:
        ExperimentConfig.from_dict(cfg(delta=0.9, bogus=1))
    assert len(exc.value.diagnostics) == 2


def write(tmp_path, d):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(d))
    return p


def test_cli_exit_codes(tmp_path):
    ok = write(tmp_path, cfg())
    assert main(["validate", "--config", str(ok)]) == 0
    bad = write(tmp_path, cfg(delta=0.9))
    assert main(["experiment", "--config", str(bad), "--out", str(tmp_path / "o")]) == 2
    assert main(["validate", "--config", str(bad)]) == 2


def test_cli_predicate_failure_exit(tmp_path):
    # an impossible threshold makes the predicate fail
    p = write(tmp_path, cfg(threshold=0.0))
    assert main(["evaluate", "--config", str(p), "--out", str(tmp_path / "o")]) == 1
    summary = json.loads((tmp_path / "o" / "summary.json").read_text())
    assert summary["passed"] is False


def test_cli_outputs_and_determinism(tmp_path):
    p = write(tmp_path, cfg())
    for t in (1, 2):
        assert main(["evaluate", "--config", str(p), "--out", str(tmp_path / f"t{t}"), "--threads", str(t)]) in (0, 1)
    a = (tmp_path / "t1" / "error_curve.csv").read_bytes()
    assert a == (tmp_path / "t2" / "error_curve.csv").read_bytes()
    man = json.loads((tmp_path / "t1" / "manifest.json").read_text())
    assert man["config"]["seed"] == 1 and "version" in man


def test_seed_override_and_json(tmp_path):
    p = write(tmp_path, cfg())
    main(["evaluate", "--config", str(p), "--out", str(tmp_path / "a"), "--seed", "7", "--format", "json"])
    man = json.loads((tmp_path / "a" / "manifest.json").read_text())
    assert man["config"]["seed"] == 7
    rows = json.loads((tmp_path / "a" / "error_curve.json").read_text())
    assert [r["n"] for r in rows] == [20, 80]


def test_generate_and_bounds(tmp_path):
    p = write(tmp_path, cfg(classifier={"kind": "erm_interval"}, n_list=[10, 100000], delta=0.3))
    assert main(["generate", "--config", str(p), "--out", str(tmp_path / "g")]) == 0
    lines = (tmp_path / "g" / "sample_n10.csv").read_text().splitlines()
    assert lines[0] == "x0,y" and len(lines) == 11
    assert main(["bounds", "--config", str(p), "--out", str(tmp_path / "b")]) == 0
    text = (tmp_path / "b" / "bounds.csv").read_text()
    assert "erm_realizable" in text and "vc_realizable" in text


def test_counterexample_kind(tmp_path):
    p = write(tmp_path, {"kind": "counterexample", "seed": 0, "counterexample": "intolerant", "n_list": [2, 3, 4]})
    assert main(["counterexample", "--config", str(p), "--out", str(tmp_path / "r")]) == 0
    rows = (tmp_path / "r" / "intolerant.csv").read_text().splitlines()[1:]
    assert all(r.split(",")[3] == "1.0" for r in rows)


def test_kappa_check_example(tmp_path):
    p = write(tmp_path, {"kind": "kappa-check", "seed": 3, "n_list": [100, 1000, 10000], "p_list": [0.3],
                         "runs": 20000})
    assert main(["experiment", "--config", str(p), "--out", str(tmp_path / "k")]) == 0
