"""Conditionally i.i.d. data: label processes, class-conditional pairs, samples.

A sample is produced in two stages. A :class:`LabelProcess` emits the label
sequence ``Y_1..Y_n`` (any dependence allowed), then every object ``X_i`` is
drawn independently from the class conditional ``P_{Y_i}``. The class
conditionals of a :class:`ClassConditionalPair` have disjoint supports, so the
labelling rule ``eta`` is deterministic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence, Union

import numpy as np
from scipy import stats

from .errors import ImpossibleHistory, OutsideSupport, UnsupportedDimension
from .rng import make_rng

# Markov occupancy switches from the O(n^2) recursion to Monte Carlo above this.
# count-distribution entries below this are dropped (their total is reported)
DP_PRUNE = 1e-300
DEFAULT_OCCUPANCY_RUNS = 20_000


# --------------------------------------------------------------------------
# label processes


@dataclass(frozen=True)
class IidBernoulli:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class TwoStateMarkov:
    """Two-state chain; ``t01`` = P(0 -> 1), ``t10`` = P(1 -> 0)."""

    t01: float
    t10: float
    init1: float = 0.5

    def __post_init__(self):
        for name in ("t01", "t10", "init1"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class Periodic:
    pattern: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pattern", tuple(int(v) for v in self.pattern))
        if not self.pattern:
            raise ValueError("pattern must be nonempty")
        if any(v not in (0, 1) for v in self.pattern):
            raise ValueError("pattern entries must be 0 or 1")


@dataclass(frozen=True)
class BlockSchedule:
    """Emit 1, then k_1 zeros, then 1, then k_2 zeros, ...

    ``rule`` picks the block lengths: ``"power"`` gives ``k_i = param**i``,
    ``"linear"`` gives ``k_i = param*i`` and ``"constant"`` gives ``k_i = param``.
    """

    rule: Literal["power", "linear", "constant"] = "power"
    param: int = 2

    def __post_init__(self):
        if self.rule not in ("power", "linear", "constant"):
            raise ValueError(f"unknown block rule {self.rule!r}")
        if self.param < 0:
            raise ValueError("block schedule parameter must be nonnegative")

    def k(self, i: int) -> int:
        if self.rule == "power":
            return int(self.param) ** i
        if self.rule == "linear":
            return int(self.param) * i
        return int(self.param)


@dataclass(frozen=True)
class Explicit:
    """A fixed label sequence, given as a finite list or as a rule ``i -> label``.

    ``i`` is the 0-based time index. A finite sequence cannot be sampled past
    its end.
    """

    sequence: tuple[int, ...] | None = None
    rule: Callable[[int], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.sequence is None) == (self.rule is None):
            raise ValueError("Explicit needs exactly one of sequence or rule")
        if self.sequence is not None:
            object.__setattr__(self, "sequence", tuple(int(v) for v in self.sequence))
            if any(v not in (0, 1) for v in self.sequence):
                raise ValueError("sequence entries must be 0 or 1")


LabelProcess = Union[IidBernoulli, TwoStateMarkov, Periodic, BlockSchedule, Explicit]
DETERMINISTIC = (Periodic, BlockSchedule, Explicit)


def _deterministic_labels(process, n: int) -> np.ndarray:
    if isinstance(process, Periodic):
        pat = np.asarray(process.pattern, dtype=np.int8)
        return np.resize(pat, n)
    if isinstance(process, BlockSchedule):
        out = np.zeros(n, dtype=np.int8)
        pos, i = 0, 1
        while pos < n:
            out[pos] = 1
            pos += 1 + process.k(i)
            i += 1
        return out
    if isinstance(process, Explicit):
        if process.rule is not None:
            return np.fromiter((process.rule(i) for i in range(n)), dtype=np.int8, count=n)
        if n > len(process.sequence):
            raise ValueError(
                f"explicit sequence has {len(process.sequence)} labels, {n} requested"
            )
        return np.asarray(process.sequence[:n], dtype=np.int8)
    raise TypeError(f"not a deterministic process: {process!r}")


def _markov_path(proc: TwoStateMarkov, n: int, rng: np.random.Generator) -> np.ndarray:
    # Sojourn times are geometric, so the path is built run by run.
    state = int(rng.random() < proc.init1)
    leave = (proc.t01, proc.t10)
    out = np.empty(n, dtype=np.int8)
    pos = 0
    while pos < n:
        p_leave = leave[state]
        length = n - pos if p_leave == 0.0 else int(rng.geometric(p_leave))
        out[pos : pos + length] = state
        pos += length
        state = 1 - state
    return out


def sample_labels(process: LabelProcess, n: int, seed: int) -> np.ndarray:
    """Draw ``Y_1..Y_n``. Deterministic variants ignore ``seed``."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(process, DETERMINISTIC):
        return _deterministic_labels(process, n)
    rng = make_rng(seed)
    if isinstance(process, IidBernoulli):
        return (rng.random(n) < process.p).astype(np.int8)
    if isinstance(process, TwoStateMarkov):
        return _markov_path(process, n, rng)
    raise TypeError(f"unknown label process {process!r}")


def next_label_prob(process: LabelProcess, history: Sequence[int]) -> float:
    """P(Y_{n+1} = 1 | Y_1..Y_n = history)."""
    h = np.asarray(history, dtype=np.int8).reshape(-1)
    if isinstance(process, IidBernoulli):
        if (process.p == 0.0 and h.any()) or (process.p == 1.0 and not h.all()):
            raise ImpossibleHistory(f"history impossible under {process}")
        return float(process.p)
    if isinstance(process, TwoStateMarkov):
        if not len(h):
            return float(process.init1)
        if (h[0] == 1 and process.init1 == 0.0) or (h[0] == 0 and process.init1 == 1.0):
            raise ImpossibleHistory("initial label has probability zero")
        trans = np.array([[1.0 - process.t01, process.t01], [process.t10, 1.0 - process.t10]])
        if np.any(trans[h[:-1], h[1:]] == 0.0):
            raise ImpossibleHistory("history uses a transition of probability zero")
        return float(trans[h[-1], 1])
    seq = _deterministic_labels(process, len(h) + 1)
    if not np.array_equal(seq[:-1], h):
        raise ImpossibleHistory("history differs from the deterministic sequence")
    return float(seq[-1])


@dataclass(frozen=True)
class Occupancy:
    value: float
    method: Literal["exact", "monte-carlo"]
    stderr: float = 0.0
    runs: int = 0
    dropped: float = 0.0  # probability mass pruned by the exact recursion
    # 1 - value, computed from the out-of-band mass directly (an upper bound
    # when mass was pruned), so tiny complements are not lost to rounding
    complement: float | None = None

    def __post_init__(self):
        if self.complement is None:
            object.__setattr__(self, "complement", max(0.0, 1.0 - self.value))


def _in_band(ones: np.ndarray, n: int, delta: float) -> np.ndarray:
    freq = ones / n
    return (freq >= delta) & (freq <= 1.0 - delta)


def _markov_ones_mc(proc: TwoStateMarkov, n: int, runs: int, rng) -> np.ndarray:
    state = (rng.random(runs) < proc.init1).astype(np.int8)
    ones = state.astype(np.int64)
    for _ in range(n - 1):
        u = rng.random(runs)
        state = np.where(state == 0, u < proc.t01, u >= proc.t10).astype(np.int8)
        ones += state
    return ones


def _markov_occupancy(proc: TwoStateMarkov, band: np.ndarray, n: int) -> Occupancy:
    # f_s[k] = P(k ones so far, current state s); only the live window [lo, hi] is updated
    f0 = np.zeros(n + 2)
    f1 = np.zeros(n + 2)
    f0[0] = 1.0 - proc.init1
    f1[1] = proc.init1
    lo, hi, dropped = 0, 1, 0.0
    a, b = proc.t01, proc.t10
    for _ in range(n - 1):
        x0, x1 = f0[lo:hi + 1].copy(), f1[lo:hi + 1].copy()
        f0[lo:hi + 1] = x0 * (1.0 - a) + x1 * b
        f1[lo:hi + 2] = 0.0
        f1[lo + 1:hi + 2] = x0 * a + x1 * (1.0 - b)
        hi += 1
        while lo < hi and f0[lo] + f1[lo] < DP_PRUNE:
            dropped += f0[lo] + f1[lo]
            f0[lo] = f1[lo] = 0.0
            lo += 1
        while hi > lo and f0[hi] + f1[hi] < DP_PRUNE:
            dropped += f0[hi] + f1[hi]
            f0[hi] = f1[hi] = 0.0
            hi -= 1
    mass = f0[: n + 1] + f1[: n + 1]
    v = float(mass[band].sum())
    tail = float(mass[~band].sum()) + dropped
    return Occupancy(min(1.0, v), "exact", dropped=float(dropped), complement=float(min(1.0, tail)))


def occupancy_prob(
    process: LabelProcess,
    delta: float,
    n: int,
    mc_budget: int | None = None,
    seed: int = 0,
    method: Literal["auto", "exact", "mc"] = "auto",
) -> Occupancy:
    """C_n = P(delta <= p(n) <= 1 - delta), p(n) the frequency of label 1."""
    if not 0.0 < delta <= 0.5:
        raise ValueError("delta must lie in (0, 1/2]")
    if isinstance(process, DETERMINISTIC):
        ones = int(_deterministic_labels(process, n).sum())
        return Occupancy(float(_in_band(np.array(ones), n, delta)), "exact")

    k = np.arange(n + 1)
    band = _in_band(k, n, delta)
    if method != "mc" and isinstance(process, IidBernoulli):
        inside = k[band]
        if len(inside) == 0:
            return Occupancy(0.0, "exact", complement=1.0)
        tail = stats.binom.cdf(inside[0] - 1, n, process.p) + stats.binom.sf(inside[-1], n, process.p)
        return Occupancy(float(min(1.0, stats.binom.pmf(inside, n, process.p).sum())), "exact",
                         complement=float(min(1.0, tail)))
    if isinstance(process, TwoStateMarkov) and method != "mc":
        return _markov_occupancy(process, band, n)

    runs = int(mc_budget or DEFAULT_OCCUPANCY_RUNS)
    rng = make_rng(seed)
    if isinstance(process, IidBernoulli):
        ones = rng.binomial(n, process.p, size=runs)
    elif isinstance(process, TwoStateMarkov):
        ones = _markov_ones_mc(process, n, runs, rng)
    else:
        raise TypeError(f"unknown label process {process!r}")
    hits = _in_band(ones, n, delta)
    v = float(hits.mean())
    return Occupancy(v, "monte-carlo", math.sqrt(v * (1.0 - v) / runs), runs)


# --------------------------------------------------------------------------
# class-conditional pairs


@dataclass(frozen=True)
class Interval:
    """A 1-D interval with explicit endpoint closure; bounds may be infinite."""

    lo: float
    hi: float
    closed_lo: bool = True
    closed_hi: bool = True


def _as_box(box, d: int | None = None) -> tuple[tuple[float, float], ...]:
    arr = np.asarray(box, dtype=float)
    if arr.ndim == 1 and arr.shape[0] == 2:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"a box is a list of (lo, hi) pairs per dimension, got {box!r}")
    if d is not None and arr.shape[0] != d:
        raise ValueError("all boxes must share one dimension")
    if np.any(arr[:, 1] <= arr[:, 0]):
        raise ValueError(f"box {box!r} has nonpositive volume")
    return tuple((float(lo), float(hi)) for lo, hi in arr)


@dataclass(frozen=True, eq=False)
class DisjointBoxes:
    """Each class uniform over a finite union of axis-aligned boxes.

    In d=1 a box may be written ``[lo, hi]``; in general it is a list of
    ``(lo, hi)`` pairs, one per coordinate.
    """

    boxes_0: tuple
    boxes_1: tuple

    def __post_init__(self):
        if not self.boxes_0 or not self.boxes_1:
            raise ValueError("each class needs at least one box")
        first = _as_box(self.boxes_0[0])
        d = len(first)
        b0 = tuple(_as_box(b, d) for b in self.boxes_0)
        b1 = tuple(_as_box(b, d) for b in self.boxes_1)
        object.__setattr__(self, "boxes_0", b0)
        object.__setattr__(self, "boxes_1", b1)
        object.__setattr__(self, "_lo", (np.array([[c[0] for c in b] for b in b0]),
                                         np.array([[c[0] for c in b] for b in b1])))
        object.__setattr__(self, "_hi", (np.array([[c[1] for c in b] for b in b0]),
                                         np.array([[c[1] for c in b] for b in b1])))
        lo0, lo1 = self._lo
        hi0, hi1 = self._hi
        # closed boxes intersect iff their projections overlap on every axis
        overlap = np.all(
            (lo0[:, None, :] <= hi1[None, :, :]) & (lo1[None, :, :] <= hi0[:, None, :]), axis=2
        )
        if overlap.any():
            raise ValueError("class supports must have pairwise-disjoint closures")
        # boxes of one class may overlap each other; the sampler and measure
        # below assume they do not
        for lo, hi in zip(self._lo, self._hi):
            same = np.all((lo[:, None, :] < hi[None, :, :]) & (lo[None, :, :] < hi[:, None, :]), axis=2)
            if np.any(same & ~np.eye(len(lo), dtype=bool)):
                raise ValueError("boxes within one class must not overlap")
        vols = tuple(np.prod(h - l, axis=1) for l, h in zip(self._lo, self._hi))
        object.__setattr__(self, "_vol", vols)

    @property
    def dim(self) -> int:
        return self._lo[0].shape[1]

    def sample(self, y: int, m: int, rng: np.random.Generator) -> np.ndarray:
        lo, hi, vol = self._lo[y], self._hi[y], self._vol[y]
        which = rng.choice(len(vol), size=m, p=vol / vol.sum())
        u = rng.random((m, self.dim))
        return lo[which] + u * (hi[which] - lo[which])

    def _inside(self, y: int, X: np.ndarray) -> np.ndarray:
        lo, hi = self._lo[y], self._hi[y]
        return np.any(np.all((X[:, None, :] >= lo) & (X[:, None, :] <= hi), axis=2), axis=1)

    def eta_many(self, X: np.ndarray) -> np.ndarray:
        in0, in1 = self._inside(0, X), self._inside(1, X)
        if np.any(~in0 & ~in1):
            bad = X[~in0 & ~in1][0]
            raise OutsideSupport(f"point {bad.tolist()} lies outside both supports")
        return in1.astype(np.int8)

    def cdf(self, y: int, t, inclusive: bool = True) -> np.ndarray:
        if self.dim != 1:
            raise UnsupportedDimension("closed-form measures need d=1")
        lo, hi = self._lo[y][:, 0], self._hi[y][:, 0]
        t = np.asarray(t, dtype=float)
        covered = np.clip(t[..., None] - lo, 0.0, hi - lo).sum(axis=-1)
        return covered / self._vol[y].sum()

    def extreme_points(self, y: int) -> np.ndarray:
        """Box corners of class ``y`` (all vertices in d <= 3, diagonal ends above)."""
        lo, hi = self._lo[y], self._hi[y]
        if self.dim <= 3:
            corners = []
            for mask in range(1 << self.dim):
                sel = np.array([(mask >> k) & 1 for k in range(self.dim)], dtype=bool)
                corners.append(np.where(sel, hi, lo))
            return np.concatenate(corners)
        return np.concatenate([lo, hi])


@dataclass(frozen=True, eq=False)
class DiscreteAlphabet:
    """Finitely supported class conditionals on disjoint point sets."""

    support_0: tuple
    support_1: tuple
    probs_0: tuple | None = None
    probs_1: tuple | None = None

    def __post_init__(self):
        pts, probs = [], []
        for sup, pr in ((self.support_0, self.probs_0), (self.support_1, self.probs_1)):
            a = np.asarray(sup, dtype=float)
            a = a[:, None] if a.ndim == 1 else a
            if a.ndim != 2 or len(a) == 0:
                raise ValueError("supports must be nonempty lists of points")
            w = np.full(len(a), 1.0 / len(a)) if pr is None else np.asarray(pr, dtype=float)
            if w.shape != (len(a),) or np.any(w < 0) or not math.isclose(w.sum(), 1.0, abs_tol=1e-12):
                raise ValueError("probability vectors must be nonnegative and sum to 1")
            pts.append(a)
            probs.append(w)
        if pts[0].shape[1] != pts[1].shape[1]:
            raise ValueError("supports must share one dimension")
        keys0 = {tuple(p) for p in pts[0]}
        keys1 = {tuple(p) for p in pts[1]}
        if keys0 & keys1:
            raise ValueError("class supports must be disjoint")
        object.__setattr__(self, "_pts", tuple(pts))
        object.__setattr__(self, "_probs", tuple(probs))
        object.__setattr__(self, "_lookup", {**{k: 0 for k in keys0}, **{k: 1 for k in keys1}})

    @property
    def dim(self) -> int:
        return self._pts[0].shape[1]

    def sample(self, y: int, m: int, rng: np.random.Generator) -> np.ndarray:
        idx = rng.choice(len(self._probs[y]), size=m, p=self._probs[y])
        return self._pts[y][idx]

    def eta_many(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(len(X), dtype=np.int8)
        for i, x in enumerate(X):
            lab = self._lookup.get(tuple(float(v) for v in x))
            if lab is None:
                raise OutsideSupport(f"point {x.tolist()} lies outside both supports")
            out[i] = lab
        return out

    def cdf(self, y: int, t, inclusive: bool = True) -> np.ndarray:
        if self.dim != 1:
            raise UnsupportedDimension("closed-form measures need d=1")
        t = np.asarray(t, dtype=float)
        pts = self._pts[y][:, 0]
        below = pts <= t[..., None] if inclusive else pts < t[..., None]
        return (below * self._probs[y]).sum(axis=-1)

    def extreme_points(self, y: int) -> np.ndarray:
        return self._pts[y]


@dataclass(frozen=True)
class AtomsVsContinuum:
    """Class 0 uniform on the grid {j/N}, class 1 uniform on [0, 1].

    A finite stand-in for rationals versus irrationals: the atoms carry all of
    the class-0 mass and none of the class-1 mass.
    """

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")

    @property
    def dim(self) -> int:
        return 1

    def _atom_index(self, x: np.ndarray) -> np.ndarray:
        """Grid index of each atom in ``x``, -1 for non-atoms."""
        j = np.rint(x * self.N)
        hit = (j >= 0) & (j < self.N) & (j / self.N == x)
        return np.where(hit, j, -1).astype(np.int64)

    def sample(self, y: int, m: int, rng: np.random.Generator) -> np.ndarray:
        if y == 0:
            return (rng.integers(0, self.N, size=m) / self.N)[:, None]
        x = rng.random(m)
        # a uniform double can land exactly on an atom; redraw those
        while np.any(bad := self._atom_index(x) >= 0):
            x[bad] = rng.random(int(bad.sum()))
        return x[:, None]

    def eta_many(self, X: np.ndarray) -> np.ndarray:
        x = np.asarray(X, dtype=float).reshape(len(X), -1)[:, 0]
        atom = self._atom_index(x) >= 0
        outside = ~atom & ((x < 0.0) | (x > 1.0) | np.isnan(x))
        if outside.any():
            raise OutsideSupport(f"point {x[outside][0]} lies outside [0, 1]")
        return (~atom).astype(np.int8)

    def cdf(self, y: int, t, inclusive: bool = True) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if y == 1:
            return np.clip(t, 0.0, 1.0)
        # count atoms j/N <= t (or < t), exactly in floating point
        j = np.floor(np.clip(t, -1.0, 2.0) * self.N)
        j = j + ((j + 1) / self.N <= t)
        j = j - (j / self.N > t)
        count = np.clip(j + 1, 0, self.N)
        if not inclusive:
            count = count - (self._atom_index(np.atleast_1d(t)).reshape(t.shape) >= 0)
        return count / self.N

    def extreme_points(self, y: int) -> np.ndarray:
        if y == 0:
            return np.array([[0.0], [(self.N - 1) / self.N]])
        # 0.0 is an atom; the smallest positive double is the left end of class 1
        return np.array([[np.nextafter(0.0, 1.0)], [1.0]])


ClassConditionalPair = Union[DisjointBoxes, DiscreteAlphabet, AtomsVsContinuum]


# --------------------------------------------------------------------------
# samples


@dataclass(frozen=True, eq=False)
class LabeledSample:
    """Ordered examples; ``x`` has shape (n, d), ``y`` shape (n,)."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        if x.ndim == 1:
            x = x[:, None]
        y = np.asarray(self.y, dtype=np.int8).reshape(-1)
        if len(x) != len(y):
            raise ValueError("x and y lengths differ")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return len(self.y)

    @property
    def d(self) -> int:
        return self.x.shape[1]

    def __len__(self) -> int:
        return self.n

    def take(self, idx) -> "LabeledSample":
        idx = np.asarray(idx, dtype=np.int64)
        return LabeledSample(self.x[idx], self.y[idx])

    def without(self, idx) -> "LabeledSample":
        keep = np.ones(self.n, dtype=bool)
        keep[np.asarray(idx, dtype=np.int64)] = False
        return LabeledSample(self.x[keep], self.y[keep])

    def examples(self) -> list[tuple]:
        pts = self.x[:, 0] if self.d == 1 else self.x
        return [(float(p) if self.d == 1 else tuple(p), int(l)) for p, l in zip(pts, self.y)]


def as_points(x, d: int | None = None) -> np.ndarray:
    """Normalise a point or batch of points to shape (m, d)."""
    a = np.asarray(x, dtype=float)
    if a.ndim == 0:
        return a.reshape(1, 1)
    if a.ndim == 1:
        return a[:, None] if d in (None, 1) else a[None, :]
    return a


def sample_objects(pair: ClassConditionalPair, labels, seed: int) -> LabeledSample:
    labels = np.asarray(labels, dtype=np.int8).reshape(-1)
    if labels.size == 0:
        raise ValueError("labels must be nonempty")
    rng = make_rng(seed)
    x = np.empty((len(labels), pair.dim))
    for y in (0, 1):
        mask = labels == y
        if mask.any():
            x[mask] = pair.sample(y, int(mask.sum()), rng)
    if not np.array_equal(pair.eta_many(x), labels):
        raise AssertionError("generated objects disagree with eta")
    return LabeledSample(x, labels)


def generate(process: LabelProcess, pair: ClassConditionalPair, n: int, seed: int) -> LabeledSample:
    """Labels from stream (seed, 0), objects from stream (seed, 1)."""
    labels = sample_labels(process, n, int(make_rng(seed, 0).integers(0, 1 << 63)))
    return sample_objects(pair, labels, int(make_rng(seed, 1).integers(0, 1 << 63)))


def eta(pair: ClassConditionalPair, x) -> int:
    return int(pair.eta_many(as_points(x, pair.dim).reshape(1, -1))[0])


def class_measure(pair: ClassConditionalPair, y: int, region) -> float:
    """P_y(region) for a finite union of disjoint 1-D intervals.

    ``region`` items are :class:`Interval` objects or closed ``(lo, hi)`` pairs.
    """
    if pair.dim != 1:
        raise UnsupportedDimension("exact measures are available for d=1 only; use Monte Carlo")
    if isinstance(region, (Interval, tuple)) and not (
        isinstance(region, tuple) and region and isinstance(region[0], (Interval, tuple, list))
    ):
        region = [region]
    total = 0.0
    for iv in region:
        if not isinstance(iv, Interval):
            iv = Interval(float(iv[0]), float(iv[1]))
        if iv.hi < iv.lo:
            continue
        upper = pair.cdf(y, iv.hi, inclusive=iv.closed_hi)
        lower = pair.cdf(y, iv.lo, inclusive=not iv.closed_lo)
        total += max(0.0, float(upper - lower))
    return min(1.0, total)
