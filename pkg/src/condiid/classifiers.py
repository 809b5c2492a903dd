"""Nearest neighbour, partitioning and empirical-risk-minimising predictors.

Every fitted predictor is a total function into {0, 1}. In d=1 it also
exposes its decision regions exactly, as a :class:`Boundaries` object, which
is what makes closed-form error evaluation possible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence, Union

import numpy as np

from .data_model import Interval, LabeledSample, as_points
from .errors import EmptySample, UnsupportedDimension

# --------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class NearestNeighbour:
    pass


@dataclass(frozen=True)
class Partition:
    """Cubic grid anchored at the origin with cell width ``h_n``.

    ``h`` fixes the width outright; otherwise ``h_n = scale * n**(-exponent)``
    with ``exponent`` defaulting to ``1/(2d)``.
    """

    h: float | None = None
    scale: float = 1.0
    exponent: float | None = None

    def __post_init__(self):
        if self.h is not None and self.h <= 0:
            raise ValueError("cell width must be positive")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    def width(self, n: int, d: int) -> float:
        if self.h is not None:
            return float(self.h)
        e = 1.0 / (2 * d) if self.exponent is None else self.exponent
        return float(self.scale * max(n, 1) ** (-e))


@dataclass(frozen=True)
class ErmInterval:
    pass


@dataclass(frozen=True)
class ErmKIntervals:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass(frozen=True, eq=False)
class BoxUnion:
    """Decision function equal to 1 on a finite union of closed boxes.

    Boxes are given per coordinate as ``(lo, hi)`` pairs (in d=1 a bare
    ``[lo, hi]`` is accepted); bounds may be infinite. The empty union is the
    constant-0 rule.
    """

    boxes: tuple = ()

    def __post_init__(self):
        norm = []
        for b in self.boxes:
            arr = np.asarray(b, dtype=float)
            if arr.ndim == 1:
                arr = arr[None, :]
            if arr.ndim != 2 or arr.shape[1] != 2:
                raise ValueError(f"bad box {b!r}")
            norm.append(tuple((float(lo), float(hi)) for lo, hi in arr))
        if len({len(b) for b in norm}) > 1:
            raise ValueError("all boxes must share one dimension")
        object.__setattr__(self, "boxes", tuple(norm))

    @classmethod
    def always(cls, label: int, d: int = 1) -> "BoxUnion":
        return cls(((( -np.inf, np.inf),) * d,)) if label else cls(())

    def predict_many(self, X) -> np.ndarray:
        X = as_points(X, self.dim)
        out = np.zeros(len(X), dtype=bool)
        for b in self.boxes:
            arr = np.asarray(b)
            out |= np.all((X >= arr[:, 0]) & (X <= arr[:, 1]), axis=1)
        return out.astype(np.int8)

    def predict(self, x) -> int:
        return int(self.predict_many(as_points(x, self.dim).reshape(1, -1))[0])

    @property
    def dim(self) -> int | None:
        return len(self.boxes[0]) if self.boxes else None

    def endpoints(self) -> np.ndarray:
        if not self.boxes or self.dim != 1:
            return np.empty(0)
        return np.array([v for b in self.boxes for v in b[0]])

    def __repr__(self) -> str:
        return f"BoxUnion({[list(map(list, b)) for b in self.boxes]})"


@dataclass(frozen=True)
class ErmFinite:
    hypotheses: tuple[BoxUnion, ...]

    def __post_init__(self):
        hyps = tuple(h if isinstance(h, BoxUnion) else BoxUnion(h) for h in self.hypotheses)
        if not hyps:
            raise ValueError("hypothesis list must be nonempty")
        object.__setattr__(self, "hypotheses", hyps)


@dataclass(frozen=True)
class Constant:
    label: int = 0


@dataclass(frozen=True)
class Custom:
    """User-supplied predictor; ``fit_fn(sample)`` returns a FittedClassifier."""

    fit_fn: Callable[[LabeledSample], "FittedClassifier"] = field(compare=False)
    symmetric: bool = False
    name: str = "custom"


ClassifierSpec = Union[NearestNeighbour, Partition, ErmInterval, ErmKIntervals, ErmFinite, Constant, Custom]


# --------------------------------------------------------------------------
# decision regions in d=1


@dataclass(frozen=True, eq=False)
class Boundaries:
    """Piecewise-constant description of a 1-D predictor.

    ``points`` are sorted breakpoints ``b_1 < ... < b_m``; ``labels`` holds the
    m+1 labels of the open intervals between them (from -inf to +inf) and
    ``point_labels`` the labels at the breakpoints themselves.
    """

    points: np.ndarray
    labels: np.ndarray
    point_labels: np.ndarray

    def label_at(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        pos = np.searchsorted(self.points, x, side="left")
        on_point = (pos < len(self.points)) & (self.points[np.minimum(pos, len(self.points) - 1)] == x) \
            if len(self.points) else np.zeros(len(x), dtype=bool)
        out = self.labels[pos].copy()
        if on_point.any():
            out[on_point] = self.point_labels[pos[on_point]]
        return out

    def regions(self, label: int) -> list[Interval]:
        """Maximal pieces of the line where the prediction equals ``label``."""
        edges = np.concatenate([[-np.inf], self.points, [np.inf]])
        out: list[Interval] = []
        for k, lab in enumerate(self.labels):
            if lab == label:
                out.append(Interval(edges[k], edges[k + 1], False, False))
        for b, lab in zip(self.points, self.point_labels):
            if lab == label:
                out.append(Interval(b, b, True, True))
        return out


def _boundaries_from(predict_many, candidates: np.ndarray) -> Boundaries:
    """Tabulate a predictor that is constant between consecutive candidates."""
    c = np.unique(np.asarray(candidates, dtype=float))
    c = c[np.isfinite(c)]
    if len(c) == 0:
        lab = predict_many(np.zeros((1, 1)))
        return Boundaries(np.empty(0), lab.astype(np.int8), np.empty(0, dtype=np.int8))
    probes = np.concatenate([[c[0] - 1.0], (c[:-1] + c[1:]) / 2, [c[-1] + 1.0]])
    labels = predict_many(probes[:, None]).astype(np.int8)
    point_labels = predict_many(c[:, None]).astype(np.int8)
    keep = ~((labels[:-1] == point_labels) & (labels[1:] == point_labels))
    # dropping a breakpoint merges two equal neighbouring open intervals
    lab_keep = np.concatenate([[True], keep])
    return Boundaries(c[keep], labels[lab_keep], point_labels[keep])


# --------------------------------------------------------------------------
# fitted predictors


class FittedClassifier:
    symmetric = True

    def __init__(self, spec, sample: LabeledSample | None):
        self.spec = spec
        self.sample = sample

    @property
    def dim(self) -> int | None:
        return None if self.sample is None else self.sample.d

    def predict_many(self, X) -> np.ndarray:
        raise NotImplementedError

    def predict(self, x) -> int:
        return int(self.predict_many(as_points(x, self.dim).reshape(1, -1))[0])

    def _breakpoint_candidates(self) -> np.ndarray:
        raise NotImplementedError

    @cached_property
    def boundaries(self) -> Boundaries:
        if self.dim not in (None, 1):
            raise UnsupportedDimension("decision boundaries exist only for d=1")
        return _boundaries_from(self.predict_many, self._breakpoint_candidates())

    @property
    def decision_boundaries(self) -> np.ndarray:
        return self.boundaries.points


class FittedNearestNeighbour(FittedClassifier):
    """1-NN; equidistant neighbours resolve to the lowest training index."""

    def __init__(self, spec, sample):
        super().__init__(spec, sample)
        if sample.d == 1:
            x = sample.x[:, 0]
            order = np.lexsort((np.arange(sample.n), x))
            xs = x[order]
            first = np.concatenate([[True], xs[1:] != xs[:-1]])
            self._u = xs[first]
            self._lab = sample.y[order][first]
            self._idx = order[first]

    def predict_many(self, X) -> np.ndarray:
        X = as_points(X, self.dim)
        if self.sample.d == 1:
            return self._predict_1d(X[:, 0])
        out = np.empty(len(X), dtype=np.int8)
        tx = self.sample.x
        for start in range(0, len(X), 2048):
            chunk = X[start : start + 2048]
            d2 = ((chunk[:, None, :] - tx[None, :, :]) ** 2).sum(axis=2)
            out[start : start + 2048] = self.sample.y[np.argmin(d2, axis=1)]
        return out

    def _predict_1d(self, x: np.ndarray) -> np.ndarray:
        u, m = self._u, len(self._u)
        pos = np.searchsorted(u, x)
        left = np.clip(pos - 1, 0, m - 1)
        right = np.clip(pos, 0, m - 1)
        dl = np.where(pos > 0, np.abs(x - u[left]), np.inf)
        dr = np.where(pos < m, np.abs(u[right] - x), np.inf)
        take_left = (dl < dr) | ((dl == dr) & (self._idx[left] < self._idx[right]))
        return np.where(take_left, self._lab[left], self._lab[right]).astype(np.int8)

    def _breakpoint_candidates(self):
        return (self._u[:-1] + self._u[1:]) / 2


class FittedPartition(FittedClassifier):
    """Majority vote per grid cell; ties and empty cells vote 0."""

    def __init__(self, spec: Partition, sample):
        super().__init__(spec, sample)
        self.h = spec.width(sample.n, sample.d)
        cells = np.floor(sample.x / self.h).astype(np.int64)
        uniq, inv = np.unique(cells, axis=0, return_inverse=True)
        inv = inv.reshape(-1)
        ones = np.bincount(inv, weights=sample.y, minlength=len(uniq))
        total = np.bincount(inv, minlength=len(uniq))
        vote = (ones > total - ones).astype(np.int8)
        self._cells = uniq
        self._vote = vote
        self._table = {tuple(c): v for c, v in zip(uniq.tolist(), vote.tolist())} if sample.d > 1 else None

    def predict_many(self, X) -> np.ndarray:
        X = as_points(X, self.dim)
        cells = np.floor(X / self.h).astype(np.int64)
        if self._table is None:
            keys = self._cells[:, 0]
            pos = np.clip(np.searchsorted(keys, cells[:, 0]), 0, len(keys) - 1)
            return np.where(keys[pos] == cells[:, 0], self._vote[pos], 0).astype(np.int8)
        return np.fromiter((self._table.get(tuple(c), 0) for c in cells.tolist()),
                           dtype=np.int8, count=len(cells))

    def _breakpoint_candidates(self):
        k = self._cells[:, 0]
        return np.concatenate([k, k + 1]) * self.h


class FittedHypothesis(FittedClassifier):
    """An ERM output: a fixed decision function chosen from a class."""

    def __init__(self, spec, sample, hypothesis: BoxUnion, train_error: int):
        super().__init__(spec, sample)
        self.hypothesis = hypothesis
        self.train_error = train_error

    def predict_many(self, X) -> np.ndarray:
        return self.hypothesis.predict_many(as_points(X, self.dim))

    def _breakpoint_candidates(self):
        return self.hypothesis.endpoints()


# --------------------------------------------------------------------------
# ERM over intervals


def _unique_weights(sample: LabeledSample):
    if sample.d != 1:
        raise UnsupportedDimension("interval classes need d=1")
    u, inv = np.unique(sample.x[:, 0], return_inverse=True)
    w = np.bincount(inv.reshape(-1), weights=2.0 * sample.y - 1.0, minlength=len(u))
    return u, w


def erm_interval(sample: LabeledSample) -> tuple[BoxUnion, int]:
    """Best single closed interval by a maximum-subarray scan.

    Points are weighted +1 (label 1) / -1 (label 0); the optimal interval
    spans the maximum-weight run of sorted points. Ties go to the shortest
    interval, then the leftmost. Returns the hypothesis and its training error.
    """
    if sample.n == 0:
        return BoxUnion(()), 0
    u, w = _unique_weights(sample)
    ones = int(sample.y.sum())
    prefix = np.concatenate([[0.0], np.cumsum(w)])
    runmin = np.minimum.accumulate(prefix[:-1])
    idx = np.arange(len(u))
    # latest start attaining the running minimum gives the shortest segment
    last = np.maximum.accumulate(np.where(prefix[:-1] == runmin, idx, -1))
    gain = prefix[1:] - runmin
    best = gain.max()
    if best <= 0:
        return BoxUnion(()), ones
    ends = np.flatnonzero(gain == best)
    starts = last[ends]
    pick = np.lexsort((u[starts], u[ends] - u[starts]))[0]
    a, b = u[starts[pick]], u[ends[pick]]
    return BoxUnion(([a, b],)), ones - int(best)


def erm_k_intervals(sample: LabeledSample, k: int) -> tuple[BoxUnion, int]:
    """Best union of at most ``k`` closed intervals, exactly, by dynamic programming.

    State after each sorted point: (segments opened so far, inside a segment or
    not). Scores are compared as (weight covered, -total length), so among
    optimal unions the shortest is kept.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if sample.n == 0:
        return BoxUnion(()), 0
    u, w = _unique_weights(sample)
    m = len(u)
    ones = int(sample.y.sum())
    NEG = (-np.inf, 0.0)
    # out_[j], in_[j]: best (gain, -length) with j segments used
    out_ = [(0.0, 0.0)] + [NEG] * k
    in_ = [NEG] * (k + 1)
    bp_out = np.zeros((m, k + 1), dtype=np.int8)  # 0: stay out, 1: close segment
    bp_in = np.zeros((m, k + 1), dtype=np.int8)  # 0: extend, 1: open here
    for t in range(m):
        gap = u[t] - u[t - 1] if t else 0.0
        new_out, new_in = [NEG] * (k + 1), [NEG] * (k + 1)
        for j in range(k + 1):
            stay, close = out_[j], in_[j]
            if close > stay:
                new_out[j], bp_out[t, j] = close, 1
            else:
                new_out[j] = stay
            if j == 0:
                continue
            ext = (in_[j][0] + w[t], in_[j][1] - gap) if in_[j][0] > -np.inf else NEG
            opn = (out_[j - 1][0] + w[t], out_[j - 1][1]) if out_[j - 1][0] > -np.inf else NEG
            if opn > ext:
                new_in[j], bp_in[t, j] = opn, 1
            else:
                new_in[j] = ext
        out_, in_ = new_out, new_in
    best, state, j = NEG, 0, 0
    for jj in range(k + 1):
        for st, val in ((0, out_[jj]), (1, in_[jj])):
            if val > best:
                best, state, j = val, st, jj
    segments = []
    end = None
    for t in range(m - 1, -1, -1):
        if state == 1:
            if end is None:
                end = t
            if bp_in[t, j] == 1:
                segments.append((u[t], u[end]))
                end, state, j = None, 0, j - 1
        else:
            if bp_out[t, j] == 1:
                state = 1
    segments.reverse()
    # after reversing the scan, segments is ordered left to right
    hyp = BoxUnion(tuple([a, b] for a, b in segments))
    return hyp, ones - int(round(best[0]))


# --------------------------------------------------------------------------
# public interface


def empirical_error(h, sample: LabeledSample) -> int:
    """Number of training examples misclassified by ``h``."""
    if sample.n == 0:
        return 0
    return int(np.count_nonzero(h.predict_many(sample.x) != sample.y))


def fit(spec: ClassifierSpec, sample: LabeledSample) -> FittedClassifier:
    if sample.n == 0:
        raise EmptySample("cannot fit on an empty sample")
    if isinstance(spec, NearestNeighbour):
        return FittedNearestNeighbour(spec, sample)
    if isinstance(spec, Partition):
        return FittedPartition(spec, sample)
    if isinstance(spec, ErmInterval):
        hyp, err = erm_interval(sample)
        return FittedHypothesis(spec, sample, hyp, err)
    if isinstance(spec, ErmKIntervals):
        hyp, err = erm_k_intervals(sample, spec.k)
        return FittedHypothesis(spec, sample, hyp, err)
    if isinstance(spec, ErmFinite):
        errs = [empirical_error(h, sample) for h in spec.hypotheses]
        best = int(np.argmin(errs))
        return FittedHypothesis(spec, sample, spec.hypotheses[best], errs[best])
    if isinstance(spec, Constant):
        return ConstantClassifier(spec.label, sample, spec)
    if isinstance(spec, Custom):
        fitted = spec.fit_fn(sample)
        fitted.symmetric = spec.symmetric
        return fitted
    raise TypeError(f"unknown classifier spec {spec!r}")


def predict(fitted: FittedClassifier, x) -> int:
    return fitted.predict(x)


class ConstantClassifier(FittedClassifier):
    """Predicts one label everywhere, ignoring the sample."""

    def __init__(self, label: int, sample: LabeledSample | None = None, spec=None):
        super().__init__(spec, sample)
        self.label = int(label)

    @property
    def dim(self):
        return None if self.sample is None else self.sample.d

    def predict_many(self, X) -> np.ndarray:
        return np.full(len(as_points(X, self.dim)), self.label, dtype=np.int8)

    def _breakpoint_candidates(self):
        return np.empty(0)


def requires_dim1(spec: ClassifierSpec) -> bool:
    return isinstance(spec, (ErmInterval, ErmKIntervals))


def is_symmetric(spec: ClassifierSpec) -> bool:
    return spec.symmetric if isinstance(spec, Custom) else True

