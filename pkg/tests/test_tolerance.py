import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from condiid.classifiers import Constant, Custom, ErmInterval, FittedHypothesis, BoxUnion, NearestNeighbour, fit
from condiid.data_model import DisjointBoxes, IidBernoulli, LabeledSample, generate
from condiid.errors import EnumerationTooLarge
from condiid.tolerance import MixtureError, delta_dist, delta_pointwise, replacement_pool

PAIR = DisjointBoxes((((0.0, 0.25),), ((0.75, 1.0),)), (((0.3, 0.7),),))


def brute_deletion(spec, sample, k, p=0.5):
    ev = MixtureError(PAIR, p)
    base = ev(fit(spec, sample))
    best = 0.0
    for j in range(1, min(k, sample.n - 1) + 1):
        for sub in itertools.combinations(range(sample.n), j):
            best = max(best, abs(base - ev(fit(spec, sample.without(list(sub))))))
    return best


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 9), k=st.integers(1, 3),
       spec=st.sampled_from([NearestNeighbour(), ErmInterval()]))
def test_exact_deletion_matches_brute_force(seed, n, k, spec):
    s = generate(IidBernoulli(0.5), PAIR, n, seed)
    k = min(k, n)
    rep = delta_pointwise(spec, PAIR, s, k, "deletion", "exact")
    assert rep.value == pytest.approx(brute_deletion(spec, s, k), abs=1e-12)


def test_kappa_zero_and_constant_give_zero():
    s = generate(IidBernoulli(0.5), PAIR, 10, 1)
    assert delta_pointwise(NearestNeighbour(), PAIR, s, 0).value == 0.0
    for mode in ("deletion", "replacement"):
        assert delta_pointwise(Constant(1), PAIR, s, 2, mode, "exact", fresh_per_class=2).value == 0.0


def test_budget_monotone():
    s = generate(IidBernoulli(0.5), PAIR, 60, 3)
    vals = [delta_pointwise(NearestNeighbour(), PAIR, s, None, "deletion", "stochastic", b, seed=9).value
            for b in (5, 20, 80, 200)]
    assert vals == sorted(vals)


def test_exhaustive_budget_equals_exact():
    s = generate(IidBernoulli(0.5), PAIR, 8, 4)
    for mode in ("deletion", "replacement"):
        ex = delta_pointwise(ErmInterval(), PAIR, s, 2, mode, "exact", fresh_per_class=2)
        st_ = delta_pointwise(ErmInterval(), PAIR, s, 2, mode, "stochastic", 10**5, fresh_per_class=2)
        assert st_.exhaustive
        assert st_.value == pytest.approx(ex.value, abs=1e-12)


def test_order_irrelevant_for_symmetric_rules():
    s = generate(IidBernoulli(0.5), PAIR, 5, 8)
    a = delta_pointwise(NearestNeighbour(), PAIR, s, 2, "deletion", "exact")
    b = delta_pointwise(NearestNeighbour(), PAIR, s, 2, "deletion", "exact", permutations=True)
    assert a.value == pytest.approx(b.value, abs=1e-15)


def _first_label(sample):
    # predicts the label of the first training example everywhere: order matters
    h = BoxUnion.always(int(sample.y[0]))
    return FittedHypothesis(None, sample, h, 0)


def test_asymmetric_rule_searches_orders():
    s = LabeledSample(np.array([0.1, 0.5, 0.2, 0.8]), np.array([0, 1, 0, 0]))
    spec = Custom(_first_label, symmetric=False, name="first-label")
    # deleting nothing but reordering is not an edit; deleting one point and
    # reordering can put the class-1 example first
    # at p = 0.3 the two constant rules have errors 0.3 and 0.7
    rep = delta_pointwise(spec, PAIR, s, 1, "deletion", "exact", p=0.3)
    assert rep.value == pytest.approx(0.4)
    assert rep.witness_order is not None
    sym = Custom(_first_label, symmetric=True)
    assert delta_pointwise(sym, PAIR, s, 1, "deletion", "exact", p=0.3).value == pytest.approx(0.4)  # drop index 0
    s2 = LabeledSample(np.array([0.1, 0.5, 0.2]), np.array([0, 0, 1]))
    assert delta_pointwise(sym, PAIR, s2, 1, "deletion", "exact", p=0.3).value == 0.0
    assert delta_pointwise(spec, PAIR, s2, 1, "deletion", "exact", p=0.3).value == pytest.approx(0.4)


def test_exact_guard():
    s = generate(IidBernoulli(0.5), PAIR, 20, 1)
    with pytest.raises(EnumerationTooLarge):
        delta_pointwise(NearestNeighbour(), PAIR, s, 2, "deletion", "exact")


def test_replacement_pool_labels():
    s = generate(IidBernoulli(0.5), PAIR, 10, 1)
    pts, lab = replacement_pool(PAIR, s, 0, 4)
    assert np.array_equal(PAIR.eta_many(pts), lab)
    assert len(pts) >= 4 + 10  # extremes plus sample copies


def test_delta_dist_deterministic_across_threads():
    a = delta_dist(ErmInterval(), PAIR, 0.5, 30, 0.05, runs=6, budget=20, seed=2, threads=1)
    b = delta_dist(ErmInterval(), PAIR, 0.5, 30, 0.05, runs=6, budget=20, seed=2, threads=2)
    assert np.array_equal(a.pointwise, b.pointwise)
    assert a.lower_bound
