import itertools
import math

import pytest
from hypothesis import given, strategies as st

from condiid.bounds import (
    alpha,
    kappa,
    sauer_bound,
    shatter_intervals,
    shatter_k_intervals,
    tolerance_bound,
    erm_bounds,
    vc_bounds,
)
from condiid.errors import ArgumentMismatch, PoleAtOne, PreconditionViolated


def brute_shatter(k, n):
    """Distinct subsets of n collinear points picked out by at most k intervals."""
    count = 0
    for bits in itertools.product((0, 1), repeat=n):
        runs = sum(1 for i, b in enumerate(bits) if b and (i == 0 or not bits[i - 1]))
        count += runs <= k
    return count


@pytest.mark.parametrize("n", range(0, 13))
def test_shatter_intervals_brute_force(n):
    assert shatter_intervals(n) == brute_shatter(1, n)
    assert shatter_intervals(n) <= sauer_bound(2, n)


@pytest.mark.parametrize("k,n", [(k, n) for k in (1, 2, 3) for n in range(0, 12)])
def test_shatter_k_intervals_brute_force(k, n):
    assert shatter_k_intervals(k, n) == brute_shatter(k, n)
    assert shatter_k_intervals(k, n) <= sauer_bound(2 * k, n)


def test_examples():
    assert kappa(2) == 1
    assert alpha(4) == 2.0
    assert kappa(10**6) / 10**6 == pytest.approx(0.003716, abs=1e-6)
    assert shatter_intervals(3) == 7
    assert sauer_bound(2, 10) == 56
    with pytest.raises(PoleAtOne):
        alpha(1)


@given(st.integers(2, 10**9))
def test_kappa_is_floor(n):
    k = kappa(n)
    assert k * k <= n * math.log(n) < (k + 1) ** 2


def test_erm_realizable_at_large_n():
    rep = erm_bounds(shatter_intervals, 10**5, 0.3, 0.1, 1.0, True)["erm_realizable"]
    assert rep.rhs < 1e-70
    assert rep.log_rhs == pytest.approx(-163.78, abs=0.01)
    assert not rep.vacuous


def test_vacuous_flag():
    rep = erm_bounds(shatter_intervals, 1000, 0.3, 0.1, 1.0, True)["erm_realizable"]
    assert rep.vacuous and rep.clamped == 1.0


@given(st.integers(50, 10**6))
def test_erm_realizable_decreases_in_delta(n):
    lo = erm_bounds(shatter_intervals, n, 0.1, 0.1, 0.9, True)["erm_realizable"].log_rhs
    hi = erm_bounds(shatter_intervals, n, 0.5, 0.1, 0.9, True)["erm_realizable"].log_rhs
    assert hi <= lo


def test_erm_realizable_decreases_along_n_once_exponential_dominates():
    vals = [erm_bounds(shatter_intervals, n, 0.3, 0.1, 1.0, True)["erm_realizable"].log_rhs for n in (10**4, 10**5, 10**6)]
    assert vals[0] > vals[1] > vals[2]


def test_agnostic_precondition():
    with pytest.raises(PreconditionViolated):
        erm_bounds(shatter_intervals, 100, 0.3, 0.1, 1.0, False)
    reps = erm_bounds(shatter_intervals, 10**6, 0.3, 0.1, 1.0, False, indicator=True)
    assert reps["erm_agnostic_occupancy"].vacuous  # the indicator alone makes it >= 1


def test_large_shatter_coefficients_do_not_overflow():
    reps = vc_bounds(2**5000, 10, 0.1)
    assert math.isinf(reps["vc_agnostic"].rhs) and reps["vc_agnostic"].vacuous
    assert math.isfinite(reps["vc_agnostic"].log_rhs)


def test_tolerance_bound_argument_check():
    n, d, e = 100, 0.5, 0.2
    ok = (n + kappa(n), d * e / 2)
    tolerance_bound(0.9, n, d, e, 0.01, 0.01, "deletion", ok)
    with pytest.raises(ArgumentMismatch):
        tolerance_bound(0.9, n, d, e, 0.01, 0.01, "deletion", (n, d * e / 2))
    with pytest.raises(ArgumentMismatch):
        tolerance_bound(0.9, n, d, e, 0.01, 0.01, "replacement", ok)
    tolerance_bound(0.9, n, d, e, 0.01, 0.01, "replacement", (n, d * e / 2))


def test_tolerance_bound_agrees_with_erm_realizable_at_matching_inputs():
    # erm_realizable is tolerance_deletion's shape with nabla + tolerance = 4 S(n) exp(-n delta eps / 16)
    n, d, e, C = 5000, 0.3, 0.1, 0.95
    s = 4 * shatter_intervals(n) * math.exp(-n * d * e / 16)
    a = tolerance_bound(C, n, d, e, s / 2, s / 2, analytic=True)
    b = erm_bounds(shatter_intervals, n, d, e, C, True)["erm_realizable"]
    assert a.log_rhs == pytest.approx(b.log_rhs, rel=1e-12)


def test_tolerance_bound_proof_form_size():
    from condiid.bounds import proof_form_size

    m = proof_form_size(100)
    assert m - kappa(m) >= 100 and (m - 1) - kappa(m - 1) < 100
    tolerance_bound(0.9, 100, 0.5, 0.2, 0.0, 0.0, form="proof", evaluated_at=(m, 0.05))


def test_accurate_complement_keeps_tiny_bounds():
    # C_n rounded to 1 - 5e-12 would swamp the exponential term
    rough = erm_bounds(shatter_intervals, 10**5, 0.3, 0.1, 1 - 5e-12, True)["erm_realizable"]
    exact = erm_bounds(shatter_intervals, 10**5, 0.3, 0.1, 1 - 5e-12, True, C_tail=1e-290)["erm_realizable"]
    assert rough.rhs > 1e-12 and exact.rhs < 1e-70
