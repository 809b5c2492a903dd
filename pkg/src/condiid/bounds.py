"""Closed-form rates, shatter coefficients and bound right-hand sides.

All exponential bounds are assembled in log space, so huge shatter
coefficients and tiny exponentials neither overflow nor underflow; each
report carries both ``log_rhs`` and the (possibly infinite) ``rhs``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Literal

from .errors import ArgumentMismatch, PoleAtOne, PreconditionViolated

FormulaId = Literal[
    "tolerance_deletion", "tolerance_replacement",
    "erm_agnostic", "erm_agnostic_occupancy", "erm_tolerance", "erm_realizable",
    "vc_agnostic", "vc_agnostic_shifted", "vc_realizable", "uniform_dev_24",
]


def kappa(n: int) -> int:
    """floor(sqrt(n ln n)); 0 for n <= 1."""
    if n <= 1:
        return 0
    k = math.isqrt(int(n * math.log(n)))
    # isqrt of the truncated product can be one short; fix against the real value
    while (k + 1) ** 2 <= n * math.log(n):
        k += 1
    while k * k > n * math.log(n):
        k -= 1
    return k


def alpha(n: int) -> float:
    if n == 1:
        raise PoleAtOne("alpha_n = 1/(1 - 1/sqrt(n)) has a pole at n = 1")
    if n < 1:
        raise ValueError("n must be positive")
    return 1.0 / (1.0 - 1.0 / math.sqrt(n))


def shatter_intervals(n: int) -> int:
    """Subsets of n collinear points cut out by one closed interval: n(n+1)/2 + 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n * (n + 1) // 2 + 1


def shatter_k_intervals(k: int, n: int) -> int:
    """Subsets of n collinear points cut out by a union of at most k intervals.

    A union of j disjoint runs is fixed by 2j of the n+1 gaps between points.
    """
    return sum(math.comb(n + 1, 2 * j) for j in range(k + 1))


def sauer_bound(V: int, n: int) -> int:
    """sum_{i<=V} C(n, i), the growth bound for VC dimension V."""
    if V < 0 or n < 0:
        raise ValueError("V and n must be nonnegative")
    return sum(math.comb(n, i) for i in range(min(V, n) + 1))


def _log(x) -> float:
    if x <= 0:
        return -math.inf
    return math.log(x)  # exact for Python ints of any size


def _exp(logv: float) -> float:
    try:
        return math.exp(logv)
    except OverflowError:
        return math.inf


@dataclass
class BoundReport:
    formula: FormulaId
    params: dict
    log_rhs: float
    analytic: bool = True
    form: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def rhs(self) -> float:
        return _exp(self.log_rhs)

    @property
    def clamped(self) -> float:
        return min(1.0, self.rhs)

    @property
    def vacuous(self) -> bool:
        return self.rhs >= 1.0

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "params": {k: (str(v) if isinstance(v, int) and abs(v) > 2**53 else v) for k, v in self.params.items()},
            "rhs": self.rhs,
            "log_rhs": self.log_rhs,
            "clamped": self.clamped,
            "vacuous": self.vacuous,
            "analytic": self.analytic,
            "form": self.form,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


CSV_FIELDS = ("formula", "params", "rhs", "log_rhs", "clamped", "vacuous")


def reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        d = r.to_dict()
        w.writerow([d["formula"], json.dumps(d["params"], sort_keys=True), repr(d["rhs"]),
                    repr(d["log_rhs"]), repr(d["clamped"]), d["vacuous"]])
    return buf.getvalue()


def _log_plus(log_a: float, b: float) -> float:
    """log(exp(log_a) + b) for b >= 0."""
    if b <= 0:
        return log_a
    return _log_sum(log_a, math.log(b))


def _log_sum(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = max(a, b), min(a, b)
    return hi + math.log1p(math.exp(lo - hi))


def vc_bounds(S_n, n: int, eps: float) -> dict[str, BoundReport]:
    """The four VC-type tail bounds for a class with n-th shatter coefficient ``S_n``.

    agnostic:          8 S e^{-n eps^2/128}
    agnostic_shifted:  8 S e^{-n eps^2/512}
    realizable:        2 S e^{-n eps/2}
    uniform_dev_24:    8 S e^{-n eps^2/32}
    """
    if S_n < 1 or eps <= 0:
        raise ValueError("need S_n >= 1 and eps > 0")
    ls = _log(S_n)
    params = {"S_n": S_n, "n": n, "eps": eps}
    return {
        "vc_agnostic": BoundReport("vc_agnostic", params, math.log(8) + ls - n * eps**2 / 128),
        "vc_agnostic_shifted": BoundReport("vc_agnostic_shifted", params, math.log(8) + ls - n * eps**2 / 512),
        "vc_realizable": BoundReport("vc_realizable", params, math.log(2) + ls - n * eps / 2),
        "uniform_dev_24": BoundReport("uniform_dev_24", params, math.log(8) + ls - n * eps**2 / 32),
    }


def _tail(C_n: float, C_tail: float | None) -> float:
    if C_tail is None:
        return 1.0 - C_n
    if not 0.0 <= C_tail <= 1.0:
        raise PreconditionViolated("1 - C_n must lie in [0, 1]")
    return C_tail


def _check_common(n, delta, eps, C_n):
    if n < 2:
        raise PreconditionViolated("need n >= 2 (alpha_n has a pole at 1)")
    if not 0.0 < delta <= 0.5:
        raise PreconditionViolated("delta must lie in (0, 1/2]")
    if eps <= 0:
        raise PreconditionViolated("eps must be positive")
    if not 0.0 < C_n <= 1.0:
        raise PreconditionViolated("C_n must lie in (0, 1]")


def erm_bounds(
    S: Callable[[int], int],
    n: int,
    delta: float,
    eps: float,
    C_n: float,
    realizable: bool,
    indicator: bool = False,
    C_tail: float | None = None,
) -> dict[str, BoundReport]:
    """Distribution-free tail bounds for ERM over a class with shatter function ``S``.

    With eta in the class (``realizable``):
      erm_tolerance   4 S(2n) 2^{-n eps/8}
      erm_realizable  4 alpha_n / C_n  S(n) e^{-n delta eps/16} + (1 - C_n)
    otherwise (needs n > 4/eps^2):
      erm_agnostic            16 S(n) e^{-n eps^2/512}
      erm_agnostic_occupancy  16 alpha_n / C_n  S(n) e^{-n delta^2 eps^2/2048} + (1 - C_n) + indicator

    ``indicator`` is whether 2 err(phi_{P_1/2}, P_1/2) > eps/2, false whenever
    the class contains eta. ``C_tail`` is 1 - C_n when known more accurately
    than the subtraction.
    """
    _check_common(n, delta, eps, C_n)
    tail = _tail(C_n, C_tail)
    params = {"n": n, "delta": delta, "eps": eps, "C_n": C_n, "C_tail": tail}
    la = math.log(alpha(n)) - math.log(C_n)
    if realizable:
        tol = math.log(4) + _log(S(2 * n)) - (n * eps / 8) * math.log(2)
        real = _log_plus(math.log(4) + la + _log(S(n)) - n * delta * eps / 16, tail)
        return {
            "erm_tolerance": BoundReport("erm_tolerance", {**params, "S_2n": S(2 * n)}, tol),
            "erm_realizable": BoundReport("erm_realizable", {**params, "S_n": S(n)}, real),
        }
    if n <= 4 / eps**2:
        raise PreconditionViolated(f"agnostic ERM bounds assume n > 4/eps^2 = {4 / eps**2:g}")
    agn = math.log(16) + _log(S(n)) - n * eps**2 / 512
    body = math.log(16) + la + _log(S(n)) - n * delta**2 * eps**2 / 2048
    occ = _log_plus(body, tail + (1.0 if indicator else 0.0))
    return {
        "erm_agnostic": BoundReport("erm_agnostic", {**params, "S_n": S(n)}, agn),
        "erm_agnostic_occupancy": BoundReport(
            "erm_agnostic_occupancy", {**params, "S_n": S(n), "indicator": bool(indicator)}, occ
        ),
    }


def proof_form_size(n: int) -> int:
    """Smallest m with m - kappa(m) >= n."""
    m = n
    while m - kappa(m) < n:
        m += 1
    return m


def tolerance_bound(
    C_n: float,
    n: int,
    delta: float,
    eps: float,
    nabla_value: float,
    delta_value: float,
    mode: Literal["deletion", "replacement"] = "deletion",
    evaluated_at: tuple[int, float] | None = None,
    analytic: bool = False,
    form: Literal["statement", "proof"] = "statement",
    C_tail: float | None = None,
) -> BoundReport:
    """C_n^{-1} alpha_n (nabla + tolerance) + (1 - C_n).

    ``evaluated_at`` is the (sample size, eps) at which the caller computed
    ``nabla_value`` and ``delta_value``; it must be (n + kappa_n, delta eps/2)
    in deletion mode (or (m, delta eps/2) with m - kappa_m >= n for
    ``form="proof"``) and (n, delta eps/2) in replacement mode.
    """
    _check_common(n, delta, eps, C_n)
    if mode == "deletion":
        size = n + kappa(n) if form == "statement" else proof_form_size(n)
    elif mode == "replacement":
        size = n
    else:
        raise ValueError(f"unknown mode {mode!r}")
    want = (size, delta * eps / 2)
    if evaluated_at is not None:
        got_n, got_eps = evaluated_at
        if int(got_n) != want[0] or not math.isclose(got_eps, want[1], rel_tol=1e-12, abs_tol=1e-15):
            raise ArgumentMismatch(f"inputs evaluated at {evaluated_at}, equation needs {want}")
    if nabla_value < 0 or delta_value < 0:
        raise ValueError("nabla and tolerance values must be nonnegative")
    s = nabla_value + delta_value
    body = math.log(alpha(n)) - math.log(C_n) + math.log(s) if s > 0 else -math.inf
    log_rhs = _log_plus(body, _tail(C_n, C_tail))
    formula = "tolerance_deletion" if mode == "deletion" else "tolerance_replacement"
    params = {"n": n, "delta": delta, "eps": eps, "C_n": C_n, "nabla": nabla_value,
              "tolerance": delta_value, "evaluated_n": want[0], "evaluated_eps": want[1]}
    rep = BoundReport(formula, params, log_rhs, analytic, form if mode == "deletion" else "statement")
    if not analytic:
        rep.notes.append("empirical assembly: an upper bound only if the inputs are upper bounds")
    return rep
