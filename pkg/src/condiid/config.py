"""JSON-compatible experiment configuration and its validation."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any

from . import classifiers as clf
from . import data_model as dm
from .errors import InvalidConfig

KINDS = ("consistency", "bound-check", "tolerance", "counterexample", "kappa-check", "nabla-sweep")


# --------------------------------------------------------------------------
# component specs <-> plain dicts


def process_from_dict(d: dict) -> dm.LabelProcess:
    kind = d.get("kind")
    if kind == "iid":
        return dm.IidBernoulli(float(d["p"]))
    if kind == "markov":
        return dm.TwoStateMarkov(float(d["t01"]), float(d["t10"]), float(d.get("init1", 0.5)))
    if kind == "periodic":
        return dm.Periodic(tuple(d["pattern"]))
    if kind == "block":
        return dm.BlockSchedule(d.get("rule", "power"), int(d.get("param", 2)))
    if kind == "explicit":
        return dm.Explicit(tuple(d["sequence"]))
    raise ValueError(f"unknown label process kind {kind!r}")


def process_to_dict(p) -> dict:
    if isinstance(p, dm.IidBernoulli):
        return {"kind": "iid", "p": p.p}
    if isinstance(p, dm.TwoStateMarkov):
        return {"kind": "markov", "t01": p.t01, "t10": p.t10, "init1": p.init1}
    if isinstance(p, dm.Periodic):
        return {"kind": "periodic", "pattern": list(p.pattern)}
    if isinstance(p, dm.BlockSchedule):
        return {"kind": "block", "rule": p.rule, "param": p.param}
    if isinstance(p, dm.Explicit) and p.sequence is not None:
        return {"kind": "explicit", "sequence": list(p.sequence)}
    raise ValueError(f"process {p!r} has no configuration form")


def pair_from_dict(d: dict) -> dm.ClassConditionalPair:
    kind = d.get("kind")
    if kind == "boxes":
        return dm.DisjointBoxes(tuple(d["boxes_0"]), tuple(d["boxes_1"]))
    if kind == "discrete":
        return dm.DiscreteAlphabet(tuple(d["support_0"]), tuple(d["support_1"]),
                                   d.get("probs_0"), d.get("probs_1"))
    if kind == "atoms":
        return dm.AtomsVsContinuum(int(d["N"]))
    raise ValueError(f"unknown pair kind {kind!r}")


def _boxes_to_list(boxes) -> list:
    return [[list(c) for c in b] if len(b) > 1 else list(b[0]) for b in boxes]


def pair_to_dict(p) -> dict:
    if isinstance(p, dm.DisjointBoxes):
        return {"kind": "boxes", "boxes_0": _boxes_to_list(p.boxes_0), "boxes_1": _boxes_to_list(p.boxes_1)}
    if isinstance(p, dm.DiscreteAlphabet):
        out = {"kind": "discrete", "support_0": p._pts[0].tolist(), "support_1": p._pts[1].tolist(),
               "probs_0": p._probs[0].tolist(), "probs_1": p._probs[1].tolist()}
        return out
    if isinstance(p, dm.AtomsVsContinuum):
        return {"kind": "atoms", "N": p.N}
    raise ValueError(f"pair {p!r} has no configuration form")


def classifier_from_dict(d: dict) -> clf.ClassifierSpec:
    kind = d.get("kind")
    if kind == "nn":
        return clf.NearestNeighbour()
    if kind == "partition":
        return clf.Partition(d.get("h"), float(d.get("scale", 1.0)), d.get("exponent"))
    if kind == "erm_interval":
        return clf.ErmInterval()
    if kind == "erm_k_intervals":
        return clf.ErmKIntervals(int(d["k"]))
    if kind == "erm_finite":
        return clf.ErmFinite(tuple(clf.BoxUnion(tuple(h)) for h in d["hypotheses"]))
    if kind == "constant":
        return clf.Constant(int(d.get("label", 0)))
    raise ValueError(f"unknown classifier kind {kind!r}")


def classifier_to_dict(c) -> dict:
    if isinstance(c, clf.NearestNeighbour):
        return {"kind": "nn"}
    if isinstance(c, clf.Partition):
        return {"kind": "partition", "h": c.h, "scale": c.scale, "exponent": c.exponent}
    if isinstance(c, clf.ErmInterval):
        return {"kind": "erm_interval"}
    if isinstance(c, clf.ErmKIntervals):
        return {"kind": "erm_k_intervals", "k": c.k}
    if isinstance(c, clf.ErmFinite):
        return {"kind": "erm_finite", "hypotheses": [_boxes_to_list(h.boxes) for h in c.hypotheses]}
    if isinstance(c, clf.Constant):
        return {"kind": "constant", "label": c.label}
    raise ValueError(f"classifier {c!r} has no configuration form")


# --------------------------------------------------------------------------


@dataclass
class ExperimentConfig:
    kind: str
    seed: int
    process: dict | None = None
    pair: dict | None = None
    classifier: dict | None = None
    n_list: list[int] = field(default_factory=list)
    eps_list: list[float] = field(default_factory=list)
    delta: float = 0.5
    runs: int = 200
    draws: int = 10_000
    grid: int = 9
    budget: int = 200
    mode: str = "deletion"
    search: str = "stochastic"
    p_list: list[float] = field(default_factory=lambda: [0.5])
    realizable: bool | None = None
    indicator: bool | None = None
    counterexample: str | None = None
    N: int = 256
    schedule: dict = field(default_factory=lambda: {"kind": "block", "rule": "power", "param": 2})
    horizon: int = 10_000
    after: int = 1000
    threshold: float | None = None
    control_threshold: float = 0.05
    out: str | None = None
    name: str = "experiment"

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        diags = validate(d)
        if diags:
            raise InvalidConfig(diags)
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in known})

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    # parsed components
    def label_process(self):
        return process_from_dict(self.process)

    def class_pair(self):
        return pair_from_dict(self.pair)

    def classifier_spec(self):
        return classifier_from_dict(self.classifier)


def load(path) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return ExperimentConfig.from_dict(json.load(fh))


_NEEDS = {
    "consistency": ("process", "pair", "classifier", "n_list"),
    "bound-check": ("process", "pair", "classifier", "n_list", "eps_list"),
    "tolerance": ("pair", "classifier", "n_list", "eps_list"),
    "counterexample": ("counterexample",),
    "kappa-check": ("n_list",),
    "nabla-sweep": ("pair", "classifier", "n_list", "eps_list"),
}


def validate(d: Any) -> list[str]:
    """Field-level diagnostics; empty iff the config can be run."""
    if isinstance(d, ExperimentConfig):
        d = d.to_dict()
    if not isinstance(d, dict):
        return ["config must be a JSON object"]
    diags: list[str] = []
    known = {f.name for f in fields(ExperimentConfig)}
    for k in d:
        if k not in known:
            diags.append(f"{k}: unknown field")
    kind = d.get("kind")
    if kind not in KINDS:
        diags.append(f"kind: must be one of {', '.join(KINDS)}")
    seed = d.get("seed")
    if seed is None:
        diags.append("seed: master seed is required")
    elif not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64:
        diags.append("seed: must be an unsigned 64-bit integer")
    delta = d.get("delta", 0.5)
    if not isinstance(delta, (int, float)) or not 0 < delta <= 0.5:
        diags.append("delta: delta must lie in (0, 1/2]")
    for k in _NEEDS.get(kind, ()):
        if d.get(k) in (None, [], {}):
            diags.append(f"{k}: required for kind {kind!r}")
    for k in ("n_list",):
        v = d.get(k, [])
        if not isinstance(v, list) or any(not isinstance(x, int) or x < 1 for x in v):
            diags.append(f"{k}: must be a list of positive integers")
    for k in ("eps_list", "p_list"):
        v = d.get(k, [])
        if not isinstance(v, list) or any(not isinstance(x, (int, float)) or x <= 0 for x in v):
            diags.append(f"{k}: must be a list of positive numbers")
    if any(not 0 < x < 1 for x in d.get("p_list", []) if isinstance(x, (int, float))):
        diags.append("p_list: probabilities must lie in (0, 1)")
    if d.get("runs", 200) < 2:
        diags.append("runs: at least 2 runs are needed")
    for k in ("draws", "grid", "budget", "horizon", "N"):
        if k in d and (not isinstance(d[k], int) or d[k] < 1):
            diags.append(f"{k}: must be a positive integer")
    if d.get("mode", "deletion") not in ("deletion", "replacement"):
        diags.append("mode: must be 'deletion' or 'replacement'")
    if d.get("search", "stochastic") not in ("exact", "stochastic"):
        diags.append("search: must be 'exact' or 'stochastic'")
    if kind == "counterexample" and d.get("counterexample") not in (None, "intolerant", "sparse-ones"):
        diags.append("counterexample: must be 'intolerant' or 'sparse-ones'")

    pair = spec = None
    for key, parser in (("process", process_from_dict), ("pair", pair_from_dict),
                        ("classifier", classifier_from_dict), ("schedule", process_from_dict)):
        if d.get(key) is None:
            continue
        try:
            obj = parser(d[key])
        except (KeyError, TypeError, ValueError) as exc:
            diags.append(f"{key}: {exc}")
            continue
        if key == "pair":
            pair = obj
        elif key == "classifier":
            spec = obj
    if pair is not None and spec is not None and clf.requires_dim1(spec) and pair.dim != 1:
        diags.append(f"classifier: {d['classifier'].get('kind')} requires dimension 1")
    if kind == "bound-check" and spec is not None and not isinstance(
        spec, (clf.ErmInterval, clf.ErmKIntervals, clf.ErmFinite)
    ):
        diags.append("classifier: bound-check needs an ERM classifier")
    return diags
