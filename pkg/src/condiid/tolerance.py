"""Tolerance to data: how far a small edit of the sample can move the error.

Deletion mode removes up to ``kappa`` examples; replacement mode swaps up to
``kappa`` examples for eta-consistent points from a finite candidate pool. The
pointwise value is the largest absolute change of the i.i.d. mixture error
``p err^1 + (1-p) err^0``. Exact search enumerates every edit; stochastic
search evaluates a budgeted, seeded stream of edits and so returns a lower
bound on the exact maximum.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Literal, Sequence

import numpy as np

from .bounds import kappa as kappa_n
from .classifiers import ClassifierSpec, fit, is_symmetric
from .data_model import ClassConditionalPair, IidBernoulli, LabeledSample, generate
from .error_eval import DEFAULT_DRAWS, class_errors, p_grid, run_map
from .errors import EnumerationTooLarge
from .rng import derive_seed, make_rng

EXACT_MAX_N = 16
EXACT_MAX_KAPPA = 4
EXACT_MAX_EVALS = 200_000
FRESH_PER_CLASS = 64
DEFAULT_BUDGET = 200

Mode = Literal["deletion", "replacement"]


@dataclass
class MixtureError:
    """err under P_p for a fitted predictor; MC draws reuse one seed (common random numbers)."""

    pair: ClassConditionalPair
    p: float
    method: str = "auto"
    draws: int = DEFAULT_DRAWS
    seed: int = 0

    def __call__(self, fitted) -> float:
        e0, e1 = class_errors(fitted, self.pair, self.method, self.draws, self.seed)
        return self.p * e1.value + (1.0 - self.p) * e0.value


@dataclass
class ToleranceReport:
    value: float
    mode: Mode
    search: Literal["exact", "stochastic"]
    kappa: int
    base_error: float
    evaluations: int
    budget: int | None = None
    witness_indices: tuple[int, ...] = ()
    replacement_points: tuple = ()
    witness_order: tuple[int, ...] | None = None
    exhaustive: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    CSV_FIELDS = ("value", "mode", "search", "kappa", "base_error", "evaluations", "budget", "n_witness")

    def csv_row(self) -> list:
        return [repr(self.value), self.mode, self.search, self.kappa, repr(self.base_error),
                self.evaluations, "" if self.budget is None else self.budget, len(self.witness_indices)]


def replacement_pool(pair: ClassConditionalPair, sample: LabeledSample, seed: int,
                     fresh_per_class: int = FRESH_PER_CLASS, duplicates: bool = True):
    """Candidate replacement points and their eta labels.

    Support extremes of both classes, copies of the sample points and
    ``fresh_per_class`` fresh draws per class; duplicates removed.
    """
    rng = make_rng(seed)
    parts = [pair.extreme_points(0), pair.extreme_points(1)]
    if duplicates:
        parts.append(sample.x)
    for y in (0, 1):
        if fresh_per_class:
            parts.append(pair.sample(y, fresh_per_class, rng))
    pts = np.unique(np.concatenate([np.asarray(p, dtype=float).reshape(-1, pair.dim) for p in parts]), axis=0)
    return pts, pair.eta_many(pts)


class _Problem:
    """Shared state for evaluating sample edits."""

    def __init__(self, spec, sample, evaluator, mode, kappa, pool):
        self.spec = spec
        self.sample = sample
        self.evaluator = evaluator
        self.mode = mode
        self.kappa = kappa
        self.pool = pool
        self.symmetric = is_symmetric(spec)
        self.base = evaluator(fit(spec, sample))
        self.max_j = min(kappa, sample.n - 1) if mode == "deletion" else min(kappa, sample.n)

    def edited(self, subset, repl=(), order=None) -> LabeledSample:
        s = self.sample
        if self.mode == "deletion":
            out = s.without(list(subset))
        else:
            x, y = s.x.copy(), s.y.copy()
            idx = list(subset)
            x[idx] = self.pool[0][list(repl)]
            y[idx] = self.pool[1][list(repl)]
            out = LabeledSample(x, y)
        return out if order is None else out.take(order)

    def deviation(self, subset, repl=(), order=None) -> float:
        return abs(self.base - self.evaluator(fit(self.spec, self.edited(subset, repl, order))))

    def space_size(self, permutations: bool) -> int:
        n = self.sample.n
        total = 0
        for j in range(1, self.max_j + 1):
            c = math.comb(n, j)
            if self.mode == "replacement":
                c *= math.comb(len(self.pool[0]) + j - 1, j)
            if permutations:
                c *= math.factorial(n - j if self.mode == "deletion" else n)
            total += c
        return total

    def candidates(self, permutations: bool):
        n = self.sample.n
        for j in range(1, self.max_j + 1):
            for subset in itertools.combinations(range(n), j):
                repls = (itertools.combinations_with_replacement(range(len(self.pool[0])), j)
                         if self.mode == "replacement" else [()])
                for repl in repls:
                    if not permutations:
                        yield subset, repl, None
                        continue
                    m = n - j if self.mode == "deletion" else n
                    for order in itertools.permutations(range(m)):
                        yield subset, repl, order


def _report(prob: _Problem, search, best, value, evals, budget=None, exhaustive=False) -> ToleranceReport:
    subset, repl, order = best if best is not None else ((), (), None)
    pts = ()
    if prob.mode == "replacement" and repl:
        pts = tuple((prob.pool[0][r].tolist(), int(prob.pool[1][r])) for r in repl)
    return ToleranceReport(
        float(value), prob.mode, search, prob.kappa, float(prob.base), evals, budget,
        tuple(int(i) for i in subset), pts, None if order is None else tuple(order), exhaustive,
    )


def _exact(prob: _Problem, permutations: bool) -> ToleranceReport:
    best, value, evals = None, 0.0, 0
    for cand in prob.candidates(permutations):
        dev = prob.deviation(*cand)
        evals += 1
        if dev > value:
            best, value = cand, dev
    return _report(prob, "exact", best, value, evals)


def _stochastic(prob: _Problem, budget: int, seed: int) -> ToleranceReport:
    """Seeded search: random edits, sorted-window edits and local moves around the best.

    Proposal ``t`` depends only on the outcomes of proposals ``< t``, so a
    larger budget evaluates a superset of edits and never reports less.
    """
    n = prob.sample.n
    permute = not prob.symmetric
    if prob.max_j < 1:
        return _report(prob, "stochastic", None, 0.0, 0, budget)
    size = prob.space_size(permute)
    if size <= min(budget, EXACT_MAX_EVALS):
        # the budget covers every edit: visit all of them in a seeded random order
        cands = list(prob.candidates(permute))
        order = make_rng(seed).permutation(len(cands))
        best, value = None, 0.0
        for k in order:
            dev = prob.deviation(*cands[k])
            if dev > value:
                best, value = cands[k], dev
        return _report(prob, "stochastic", best, value, len(cands), budget, exhaustive=True)

    rng = make_rng(seed)
    npool = len(prob.pool[0]) if prob.pool is not None else 0
    sorted_idx = np.argsort(prob.sample.x[:, 0], kind="stable") if prob.sample.d == 1 else None

    def rand_repl(j):
        return tuple(sorted(rng.integers(0, npool, size=j).tolist())) if prob.mode == "replacement" else ()

    def rand_order(j):
        if not permute:
            return None
        m = n - j if prob.mode == "deletion" else n
        return tuple(rng.permutation(m).tolist())

    def propose(t, best):
        kind = t % 3
        if kind == 1 and sorted_idx is not None:
            lab = int(rng.integers(0, 2))
            pool_idx = sorted_idx[prob.sample.y[sorted_idx] == lab]
            if len(pool_idx) == 0:
                pool_idx = sorted_idx
            j = int(rng.integers(1, min(prob.max_j, len(pool_idx)) + 1))
            side = int(rng.integers(0, 3))
            start = 0 if side == 0 else len(pool_idx) - j if side == 1 else int(rng.integers(0, len(pool_idx) - j + 1))
            subset = tuple(sorted(pool_idx[start : start + j].tolist()))
            return subset, rand_repl(j), rand_order(j)
        if kind == 2 and best is not None:
            subset, repl, _ = best
            s = list(subset)
            move = int(rng.integers(0, 3))
            outside = int(rng.integers(0, n))
            if move == 0 and len(s) < prob.max_j and outside not in s:
                s.append(outside)
                r = list(repl) + ([int(rng.integers(0, npool))] if prob.mode == "replacement" else [])
            elif move == 1 and len(s) > 1:
                drop = int(rng.integers(0, len(s)))
                s.pop(drop)
                r = [v for i, v in enumerate(repl) if i != drop]
            else:
                pos = int(rng.integers(0, len(s)))
                if outside not in s:
                    s[pos] = outside
                r = list(repl)
                if prob.mode == "replacement" and r:
                    r[int(rng.integers(0, len(r)))] = int(rng.integers(0, npool))
            key = sorted(zip(s, r)) if prob.mode == "replacement" else [(i, None) for i in sorted(s)]
            subset = tuple(i for i, _ in key)
            repl = tuple(sorted(v for _, v in key)) if prob.mode == "replacement" else ()
            return subset, repl, rand_order(len(subset))
        j = int(rng.integers(1, prob.max_j + 1))
        subset = tuple(sorted(rng.choice(n, size=j, replace=False).tolist()))
        return subset, rand_repl(j), rand_order(j)

    seen: set = set()
    best, value, evals, attempts = None, 0.0, 0, 0
    t = 0
    while evals < budget and attempts < 20 * budget:
        cand = propose(t, best)
        t += 1
        attempts += 1
        if cand in seen:
            continue
        seen.add(cand)
        dev = prob.deviation(*cand)
        evals += 1
        if dev > value:
            best, value = cand, dev
    return _report(prob, "stochastic", best, value, evals, budget)


def delta_pointwise(
    spec: ClassifierSpec,
    pair: ClassConditionalPair,
    sample: LabeledSample,
    kappa: int | None = None,
    mode: Mode = "deletion",
    search: Literal["exact", "stochastic"] = "stochastic",
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    p: float = 0.5,
    evaluator=None,
    fresh_per_class: int = FRESH_PER_CLASS,
    permutations: bool | None = None,
) -> ToleranceReport:
    """Largest error change over edits of at most ``kappa`` examples.

    ``kappa`` defaults to ``floor(sqrt(n ln n))``. For asymmetric predictors
    the orders of the edited sample are searched as well; ``permutations=True``
    forces that for symmetric ones too (exact search only).
    """
    n = sample.n
    k = kappa_n(n) if kappa is None else int(kappa)
    if not 0 <= k <= n:
        raise ValueError("kappa must lie in [0, n]")
    if mode not in ("deletion", "replacement"):
        raise ValueError(f"unknown mode {mode!r}")
    evaluator = evaluator or MixtureError(pair, p, seed=derive_seed(seed, 99))
    pool = replacement_pool(pair, sample, derive_seed(seed, 1), fresh_per_class) if mode == "replacement" else None
    if search == "exact":
        if n > EXACT_MAX_N or k > EXACT_MAX_KAPPA:
            raise EnumerationTooLarge(f"exact search needs n <= {EXACT_MAX_N} and kappa <= {EXACT_MAX_KAPPA}")
    prob = _Problem(spec, sample, evaluator, mode, k, pool)
    if k == 0:
        return _report(prob, search, None, 0.0, 0, budget if search == "stochastic" else None)
    if search == "exact":
        perms = (not prob.symmetric) if permutations is None else permutations
        if prob.space_size(perms) > EXACT_MAX_EVALS:
            raise EnumerationTooLarge(f"{prob.space_size(perms)} edits exceed {EXACT_MAX_EVALS}")
        return _exact(prob, perms)
    if search == "stochastic":
        return _stochastic(prob, budget, derive_seed(seed, 2))
    raise ValueError(f"unknown search {search!r}")


@dataclass
class ToleranceDist:
    """Empirical P(Delta > eps); a lower bound when the search is stochastic."""

    value: float
    stderr: float
    runs: int
    p: float
    n: int
    eps: float
    mode: Mode
    lower_bound: bool
    pointwise: np.ndarray = field(repr=False, default=None)


def _dist_run(args) -> float:
    spec, pair, p, n, mode, kappa, search, budget, seed, fresh = args
    sample = generate(IidBernoulli(p), pair, n, seed)
    return delta_pointwise(spec, pair, sample, kappa, mode, search, budget, derive_seed(seed, 3), p,
                           fresh_per_class=fresh).value


def delta_dist(
    spec: ClassifierSpec,
    pair: ClassConditionalPair,
    p: float,
    n: int,
    eps: float,
    mode: Mode = "deletion",
    runs: int = 100,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    kappa: int | None = None,
    search: str = "stochastic",
    fresh_per_class: int = FRESH_PER_CLASS,
    threads: int = 1,
) -> ToleranceDist:
    if runs < 2:
        raise ValueError("need at least two runs")
    jobs = [(spec, pair, p, n, mode, kappa, search, budget, derive_seed(seed, i), fresh_per_class)
            for i in range(runs)]
    vals = np.array(run_map(_dist_run, jobs, threads))
    f = float(np.mean(vals > eps))
    return ToleranceDist(f, math.sqrt(f * (1.0 - f) / runs), runs, p, n, eps, mode,
                         search == "stochastic", vals)


def delta_sup(
    spec: ClassifierSpec,
    pair: ClassConditionalPair,
    delta: float,
    n: int,
    eps: float,
    mode: Mode = "deletion",
    G: int = 9,
    runs: int = 100,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    **kw,
) -> tuple[float, list[ToleranceDist]]:
    """Grid maximum of :func:`delta_dist` over p in [delta, 1 - delta]."""
    dists = [delta_dist(spec, pair, float(p), n, eps, mode, runs, budget, derive_seed(seed, g), **kw)
             for g, p in enumerate(p_grid(delta, G))]
    return max(d.value for d in dists), dists


def reports_csv(reports: Sequence[ToleranceReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ToleranceReport.CSV_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()
