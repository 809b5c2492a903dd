"""The two negative examples: an intolerant predictor and a vanishing label rate.

``intolerant_*``: objects {0, 1} with eta(x) = x, labels alternating 0101...,
and a predictor that flips its answer exactly when the label history looks
like the alternating one. It is wrong at every step under the alternating
process while almost never wrong under i.i.d. labels.

``sparse_ones_*``: atoms (class 0) against the continuum (class 1), with class-1
examples arriving only once per exponentially growing block of atoms. 1-NN
then keeps a large class-1 error forever, although it is consistent under any
i.i.d. mixture of the same pair.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .classifiers import FittedClassifier, NearestNeighbour, fit
from .data_model import (
    AtomsVsContinuum,
    BlockSchedule,
    DiscreteAlphabet,
    IidBernoulli,
    LabeledSample,
    TwoStateMarkov,
    generate,
    sample_labels,
    sample_objects,
)
from .error_eval import class_error_exact, class_errors, mix
from .rng import derive_seed

Variant = Literal["count-condition", "alternating-history"]
VARIANTS: tuple[Variant, ...] = ("count-condition", "alternating-history")

ALTERNATING = TwoStateMarkov(t01=1.0, t10=1.0, init1=0.5)
BINARY_PAIR = DiscreteAlphabet([0.0], [1.0])


def _flips(labels: np.ndarray, variant: Variant) -> bool:
    n = len(labels)
    if variant == "count-condition":
        zeros = int(np.count_nonzero(labels == 0))
        return abs(zeros - n / 2) <= 1
    if variant == "alternating-history":
        return bool(np.all(labels[1:] != labels[:-1]))
    raise ValueError(f"unknown variant {variant!r}")


class IntolerantPredictor(FittedClassifier):
    """Answers 1 - x when the training labels pass the condition, x otherwise."""

    def __init__(self, sample: LabeledSample, variant: Variant = "count-condition"):
        super().__init__(None, sample)
        self.variant = variant
        self.flip = _flips(sample.y, variant)

    def predict_many(self, X) -> np.ndarray:
        x = (np.asarray(X, dtype=float).reshape(len(X), -1)[:, 0] >= 0.5).astype(np.int8)
        return 1 - x if self.flip else x

    def _breakpoint_candidates(self):
        return np.array([0.5])


def intolerant_conditional(n: int, variant: Variant = "count-condition") -> float:
    """Expected err_n under the alternating process, exactly (both start states).

    On the binary pair the object equals its label, so err_n is the 0/1 loss of
    the prediction at the forced next label.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 0.0
    for start, weight in ((0, 1.0 - ALTERNATING.init1), (1, ALTERNATING.init1)):
        labels = (np.arange(n) + start) % 2
        nxt = 1 - int(labels[-1])  # the alternating chain's forced next label
        pred = IntolerantPredictor(LabeledSample(labels.astype(float), labels), variant)
        total += weight * float(pred.predict_many(np.array([[float(nxt)]]))[0] != nxt)
    return total


def _exact(p) -> Fraction:
    # decimal value for floats (0.3 -> 3/10) keeps denominators printable
    return Fraction(repr(p)) if isinstance(p, float) else Fraction(p)


def intolerant_iid(n: int, p, variant: Variant = "count-condition") -> Fraction:
    """P_p^n(err_n > 0) for i.i.d. Bernoulli(p) labels, as an exact fraction.

    The predictor errs (with probability one) exactly when it flips, so this is
    the probability of the flip condition.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    p = _exact(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    q = 1 - p
    if variant == "count-condition":
        lo, hi = max(0, math.ceil(n / 2 - 1)), min(n, math.floor(n / 2 + 1))
        total, c = Fraction(0), math.comb(n, lo)
        for z in range(lo, hi + 1):
            total += c * q**z * p ** (n - z)
            c = c * (n - z) // (z + 1)
        return total
    if variant == "alternating-history":
        a, b = (n + 1) // 2, n // 2
        return q**a * p**b + p**a * q**b
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class IntolerantOutcome:
    n: int
    variant: Variant
    conditional_error: float
    iid_error_prob: dict[float, Fraction]


def intolerant_outcomes(n_list: Sequence[int], p_list: Sequence[float] = (0.5,)) -> list[IntolerantOutcome]:
    return [
        IntolerantOutcome(n, v, intolerant_conditional(n, v), {p: intolerant_iid(n, p, v) for p in p_list})
        for n in n_list
        for v in VARIANTS
    ]


def intolerant_csv(outcomes: Sequence[IntolerantOutcome]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "variant", "p", "conditional_error", "iid_error_prob", "iid_error_prob_exact", "ceiling_2^(1-n)"])
    for o in outcomes:
        for p, v in o.iid_error_prob.items():
            w.writerow([o.n, o.variant, repr(float(p)), repr(o.conditional_error), repr(float(v)), str(v),
                        str(Fraction(2) ** (1 - o.n))])
    return buf.getvalue()


# --------------------------------------------------------------------------
# block schedule against atoms


@dataclass
class SparseOnesResult:
    steps: np.ndarray  # training-set sizes n at which the next label is 1
    err1: np.ndarray  # runs x steps, exact class-1 error of 1-NN
    N: int
    schedule: BlockSchedule

    @property
    def mean(self) -> np.ndarray:
        return self.err1.mean(axis=0)

    @property
    def minimum(self) -> np.ndarray:
        return self.err1.min(axis=0)

    def min_mean_after(self, n0: int) -> float:
        sel = self.steps > n0
        return float(self.mean[sel].min()) if sel.any() else math.nan

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "runs", "mean_err1", "min_err1"])
        for n, m, lo in zip(self.steps, self.mean, self.minimum):
            w.writerow([int(n), self.err1.shape[0], repr(float(m)), repr(float(lo))])
        return buf.getvalue()


def sparse_ones_simulate(
    N: int = 256,
    schedule: BlockSchedule = BlockSchedule("power", 2),
    horizon: int = 10_000,
    runs: int = 50,
    seed: int = 0,
) -> SparseOnesResult:
    """Online 1-NN on block-schedule labels; class-1 error at every 1-step.

    At a step with an empty sample the prediction is 0, so err^1 = 1.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    pair = AtomsVsContinuum(N)
    labels = sample_labels(schedule, horizon, 0)
    steps = np.flatnonzero(labels == 1)
    spec = NearestNeighbour()
    err = np.empty((runs, len(steps)))
    for r in range(runs):
        full = sample_objects(pair, labels, derive_seed(seed, r))
        for s, n in enumerate(steps):
            if n == 0:
                err[r, s] = 1.0
                continue
            fitted = fit(spec, full.take(np.arange(n)))
            err[r, s] = class_error_exact(fitted, pair, 1).value
    return SparseOnesResult(steps, err, N, schedule)


@dataclass
class ControlResult:
    n: int
    mean_err: float
    stderr: float
    values: np.ndarray = field(repr=False)


def sparse_ones_control(N: int = 256, n: int = 10_000, runs: int = 50, seed: int = 0) -> ControlResult:
    """1-NN on the same pair with i.i.d. Bernoulli(1/2) labels: err_n at n."""
    pair = AtomsVsContinuum(N)
    proc = IidBernoulli(0.5)
    vals = np.empty(runs)
    for r in range(runs):
        sample = generate(proc, pair, n, derive_seed(seed, r))
        e0, e1 = class_errors(fit(NearestNeighbour(), sample), pair)
        vals[r] = mix(e0, e1, 0.5).value
    return ControlResult(n, float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(runs)), vals)
