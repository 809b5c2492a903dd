"""Class-conditional and next-step error of fitted predictors.

In d=1 errors are integrated exactly over the predictor's decision regions;
elsewhere they are Monte Carlo estimates that always carry a standard error.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .classifiers import ClassifierSpec, FittedClassifier, fit
from .data_model import (
    ClassConditionalPair,
    IidBernoulli,
    LabelProcess,
    class_measure,
    generate,
    next_label_prob,
)
from .errors import UnsupportedDimension
from .rng import derive_seed, make_rng

DEFAULT_DRAWS = 10_000
DEFAULT_RUNS = 200
DEFAULT_GRID = 9


@dataclass(frozen=True)
class ErrorEstimate:
    value: float
    method: Literal["exact", "monte-carlo"] = "exact"
    draws: int = 0
    stderr: float = 0.0
    conditioning: Literal[0, 1, "mixed"] = "mixed"
    q: float | None = None
    err0: float | None = None
    err1: float | None = None


def class_error_exact(fitted: FittedClassifier, pair: ClassConditionalPair, y: int) -> ErrorEstimate:
    """P_y{x : predict(x) != y}, integrated over the misclassified regions."""
    if pair.dim != 1:
        raise UnsupportedDimension("exact error needs d=1")
    b = fitted.boundaries
    wrong = b.regions(1 - y)
    value = class_measure(pair, y, wrong) if wrong else 0.0
    return ErrorEstimate(min(1.0, max(0.0, value)), "exact", conditioning=y)


def class_error_mc(
    fitted: FittedClassifier, pair: ClassConditionalPair, y: int, draws: int = DEFAULT_DRAWS, seed: int = 0
) -> ErrorEstimate:
    if draws < 1:
        raise ValueError("draws must be positive")
    x = pair.sample(y, draws, make_rng(seed))
    v = float(np.mean(fitted.predict_many(x) != y))
    return ErrorEstimate(v, "monte-carlo", draws, math.sqrt(v * (1.0 - v) / draws), conditioning=y)


def class_errors(fitted, pair, method: str = "auto", draws: int = DEFAULT_DRAWS, seed: int = 0):
    """(err^0, err^1); exact whenever d=1 unless ``method='mc'``."""
    if method == "exact" or (method == "auto" and pair.dim == 1):
        return class_error_exact(fitted, pair, 0), class_error_exact(fitted, pair, 1)
    return (class_error_mc(fitted, pair, 0, draws, seed),
            class_error_mc(fitted, pair, 1, draws, derive_seed(seed, 1)))


def mix(err0: ErrorEstimate, err1: ErrorEstimate, q: float) -> ErrorEstimate:
    value = q * err1.value + (1.0 - q) * err0.value
    exact = err0.method == "exact" and err1.method == "exact"
    stderr = math.hypot(q * err1.stderr, (1.0 - q) * err0.stderr)
    return ErrorEstimate(
        min(1.0, max(0.0, value)),
        "exact" if exact else "monte-carlo",
        max(err0.draws, err1.draws),
        stderr,
        "mixed",
        q,
        err0.value,
        err1.value,
    )


def step_error(
    fitted: FittedClassifier,
    pair: ClassConditionalPair,
    process: LabelProcess,
    history: Sequence[int],
    method: str = "auto",
    draws: int = DEFAULT_DRAWS,
    seed: int = 0,
) -> ErrorEstimate:
    """err_n = q err^1 + (1 - q) err^0 with q = P(Y_{n+1} = 1 | history)."""
    q = next_label_prob(process, history)
    e0, e1 = class_errors(fitted, pair, method, draws, seed)
    return mix(e0, e1, q)


# --------------------------------------------------------------------------
# repeated runs


@dataclass
class CurveRecord:
    n: int
    runs: int
    mean_err: float
    stderr: float
    p_exceed: dict[float, float]


@dataclass
class ErrorCurve:
    eps: list[float]
    records: list[CurveRecord] = field(default_factory=list)
    # per-n raw error values in run-index order
    raw: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "runs", "mean_err", "stderr", *(f"p_exceed_eps_{e!r}" for e in self.eps)])
        for r in self.records:
            w.writerow([r.n, r.runs, repr(r.mean_err), repr(r.stderr), *(repr(r.p_exceed[e]) for e in self.eps)])
        return buf.getvalue()

    def record(self, n: int) -> CurveRecord:
        return next(r for r in self.records if r.n == n)


def _one_run(args) -> float:
    spec, pair, process, n, seed, method, draws = args
    sample = generate(process, pair, n, seed)
    fitted = fit(spec, sample)
    return step_error(fitted, pair, process, sample.y, method, draws, derive_seed(seed, 7)).value


def run_map(fn, jobs: list, threads: int = 1) -> list:
    """Map ``fn`` over ``jobs`` keeping input order, optionally in worker processes."""
    if threads <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * threads))))


def summarize(n: int, values: np.ndarray, eps: Sequence[float]) -> CurveRecord:
    R = len(values)
    sd = float(np.std(values, ddof=1)) if R > 1 else 0.0
    return CurveRecord(
        n, R, float(np.mean(values)), sd / math.sqrt(R),
        {e: float(np.mean(values > e)) for e in eps},
    )


def error_prob_curve(
    spec: ClassifierSpec,
    pair: ClassConditionalPair,
    process: LabelProcess,
    n_list: Sequence[int],
    eps_list: Sequence[float],
    runs: int = DEFAULT_RUNS,
    seed: int = 0,
    method: str = "auto",
    draws: int = DEFAULT_DRAWS,
    threads: int = 1,
) -> ErrorCurve:
    """Mean err_n and empirical P(err_n > eps) over independent runs.

    Run ``i`` at sample size ``n`` uses seed ``derive_seed(derive_seed(seed, n), i)``.
    """
    if runs < 2:
        raise ValueError("need at least two runs")
    curve = ErrorCurve(list(eps_list))
    for n in n_list:
        base = derive_seed(seed, int(n))
        jobs = [(spec, pair, process, int(n), derive_seed(base, i), method, draws) for i in range(runs)]
        vals = np.array(run_map(_one_run, jobs, threads))
        curve.raw[int(n)] = vals
        curve.records.append(summarize(int(n), vals, eps_list))
    return curve


@dataclass(frozen=True)
class NablaEstimate:
    value: float
    p_grid: tuple[float, ...]
    probs: tuple[float, ...]
    stderrs: tuple[float, ...]

    @property
    def argmax(self) -> float:
        return self.p_grid[int(np.argmax(self.probs))]

    @property
    def stderr(self) -> float:
        return self.stderrs[int(np.argmax(self.probs))]


def p_grid(delta: float, G: int) -> np.ndarray:
    if not 0.0 < delta <= 0.5:
        raise ValueError("delta must lie in (0, 1/2]")
    if G < 1:
        raise ValueError("grid needs at least one point")
    return np.linspace(delta, 1.0 - delta, G)


def nabla_estimate(
    spec: ClassifierSpec,
    pair: ClassConditionalPair,
    delta: float,
    n: int,
    eps: float,
    G: int = DEFAULT_GRID,
    runs: int = DEFAULT_RUNS,
    seed: int = 0,
    method: str = "auto",
    draws: int = DEFAULT_DRAWS,
    threads: int = 1,
) -> NablaEstimate:
    """Grid maximum over p in [delta, 1-delta] of P_p(err_n > eps), i.i.d. labels.

    A grid maximum can only undershoot the supremum.
    """
    grid = p_grid(delta, G)
    probs, ses = [], []
    for g, p in enumerate(grid):
        curve = error_prob_curve(spec, pair, IidBernoulli(float(p)), [n], [eps], runs,
                                 derive_seed(seed, g), method, draws, threads)
        f = curve.records[0].p_exceed[eps]
        probs.append(f)
        ses.append(math.sqrt(f * (1.0 - f) / runs))
    return NablaEstimate(max(probs), tuple(map(float, grid)), tuple(probs), tuple(ses))
