import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from condiid.data_model import (
    AtomsVsContinuum,
    BlockSchedule,
    DiscreteAlphabet,
    DisjointBoxes,
    Explicit,
    IidBernoulli,
    Interval,
    LabeledSample,
    Periodic,
    TwoStateMarkov,
    class_measure,
    eta,
    generate,
    next_label_prob,
    occupancy_prob,
    sample_labels,
)
from condiid.errors import ImpossibleHistory, UnsupportedDimension

UNIT = DisjointBoxes((((0.0, 0.5),),), (((0.6, 1.0),),))


def test_label_examples():
    assert sample_labels(Periodic((0, 1)), 4, 0).tolist() == [0, 1, 0, 1]
    assert sample_labels(TwoStateMarkov(1, 1, 1.0), 4, 3).tolist() == [1, 0, 1, 0]
    assert sample_labels(IidBernoulli(1.0), 3, 5).tolist() == [1, 1, 1]


def test_block_schedule_layout():
    labels = sample_labels(BlockSchedule("power", 2), 20, 0)
    # one 1, then 2^i zeros
    assert labels.tolist()[:16] == [1, 0, 0, 1, 0, 0, 0, 0, 1] + [0] * 7
    assert BlockSchedule("constant", 0).k(5) == 0
    assert sample_labels(BlockSchedule("constant", 0), 4, 0).tolist() == [1, 1, 1, 1]


def test_same_seed_same_labels():
    p = TwoStateMarkov(0.2, 0.4, 0.5)
    assert np.array_equal(sample_labels(p, 500, 11), sample_labels(p, 500, 11))
    assert not np.array_equal(sample_labels(p, 500, 11), sample_labels(p, 500, 12))


def test_next_label_prob():
    assert next_label_prob(IidBernoulli(0.3), [0, 1]) == 0.3
    m = TwoStateMarkov(0.2, 0.4, 0.5)
    assert next_label_prob(m, []) == 0.5
    assert next_label_prob(m, [0]) == pytest.approx(0.2)
    assert next_label_prob(m, [1]) == pytest.approx(0.6)
    assert next_label_prob(Periodic((0, 0, 1)), [0, 0]) == 1.0
    with pytest.raises(ImpossibleHistory):
        next_label_prob(Periodic((0, 1)), [1])
    with pytest.raises(ImpossibleHistory):
        next_label_prob(TwoStateMarkov(1, 1, 0.5), [0, 0])
    assert next_label_prob(Explicit((1, 0, 1)), [1, 0]) == 1.0


def test_markov_stationary_frequency():
    m = TwoStateMarkov(0.3, 0.1, 0.5)
    y = sample_labels(m, 200_000, 1)
    assert abs(y.mean() - 0.75) < 0.01


def test_occupancy_examples():
    assert occupancy_prob(IidBernoulli(0.5), 0.25, 3).value == pytest.approx(0.75)
    assert occupancy_prob(Periodic((0, 1)), 0.5, 10).value == 1.0
    assert occupancy_prob(IidBernoulli(1.0), 0.1, 10).value == 0.0


@given(p=st.floats(0.05, 0.95), n=st.integers(1, 60), delta=st.floats(0.01, 0.5))
def test_iid_occupancy_matches_binomial(p, n, delta):
    ks = np.arange(n + 1)
    band = (ks >= delta * n) & (ks <= (1 - delta) * n)
    want = stats.binom.pmf(ks, n, p)[band].sum()
    assert occupancy_prob(IidBernoulli(p), delta, n).value == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("t01,t10,n", [(0.3, 0.3, 40), (0.1, 0.5, 200), (0.9, 0.8, 33)])
def test_markov_occupancy_exact_vs_mc(t01, t10, n):
    m = TwoStateMarkov(t01, t10, 0.5)
    ex = occupancy_prob(m, 0.3, n, method="exact")
    mc = occupancy_prob(m, 0.3, n, method="mc", mc_budget=40_000, seed=4)
    assert abs(ex.value - mc.value) <= 4 * max(mc.stderr, 1e-4)


def brute_occupancy(proc, delta, n):
    total = 0.0
    for bits in range(2**n):
        y = [(bits >> i) & 1 for i in range(n)]
        pr, hist = 1.0, []
        for v in y:
            q = next_label_prob(proc, hist)
            pr *= q if v else 1 - q
            hist.append(v)
        if delta * n <= sum(y) <= (1 - delta) * n:
            total += pr
    return total


@pytest.mark.parametrize("n", [1, 5, 9])
def test_markov_occupancy_brute_force(n):
    m = TwoStateMarkov(0.2, 0.6, 0.3)
    assert occupancy_prob(m, 0.25, n).value == pytest.approx(brute_occupancy(m, 0.25, n), abs=1e-12)


def test_class_measure_examples():
    assert class_measure(UNIT, 0, [(0.0, 0.25)]) == pytest.approx(0.5)
    assert class_measure(UNIT, 1, [Interval(0.8, 1.0)]) == pytest.approx(0.5)
    pair = AtomsVsContinuum(10)
    assert class_measure(pair, 0, [(0.0, 0.0)]) == pytest.approx(0.1)
    box2 = DisjointBoxes((((0, 1), (0, 1)),), (((2, 3), (2, 3)),))
    with pytest.raises(UnsupportedDimension):
        class_measure(box2, 0, [(0, 1)])


def test_eta_and_generation_agree():
    pair = AtomsVsContinuum(10)
    assert eta(pair, 0.3) == 0 and eta(pair, 0.31) == 1
    s = generate(TwoStateMarkov(0.3, 0.3), pair, 400, 2)
    assert np.array_equal(pair.eta_many(s.x), s.y)
    d = DiscreteAlphabet((0.0, 2.0), (1.0,))
    s = generate(IidBernoulli(0.5), d, 100, 0)
    assert set(s.x[s.y == 0, 0]) <= {0.0, 2.0}


def test_overlapping_boxes_rejected():
    with pytest.raises(ValueError):
        DisjointBoxes((((0.0, 0.5),),), (((0.5, 1.0),),))


def test_sample_edits():
    s = LabeledSample(np.arange(5.0), np.array([0, 1, 0, 1, 1]))
    assert s.without([0, 2]).y.tolist() == [1, 1, 1]
    assert s.take([4, 0]).x[:, 0].tolist() == [4.0, 0.0]
    assert s.d == 1 and s.n == 5


@settings(max_examples=30)
@given(seed=st.integers(0, 2**32), y=st.sampled_from([0, 1]))
def test_box_samples_stay_in_class_support(seed, y):
    pair = DisjointBoxes((((0.0, 0.2),), ((0.5, 0.7),)), (((0.3, 0.4),), ((0.8, 1.0),)))
    x = pair.sample(y, 200, np.random.default_rng(seed))
    assert np.all(pair.eta_many(x) == y)


def test_box_cdf_uniform():
    # mass proportional to length across boxes
    pair = DisjointBoxes((((0.0, 0.2),), ((0.5, 1.0),)), (((0.3, 0.4),),))
    assert float(pair.cdf(0, 0.2)) == pytest.approx(0.2 / 0.7)
    assert float(pair.cdf(0, 0.75)) == pytest.approx(0.45 / 0.7)
    assert math.isclose(float(pair.cdf(0, 2.0)), 1.0)


def test_within_class_overlap_check_uses_matching_bounds():
    pair = DisjointBoxes((((0.0, 0.1),), ((0.2, 0.3),), ((0.8, 0.9),)), (((0.4, 0.5),), ((0.6, 0.7),)))
    assert pair.dim == 1
    with pytest.raises(ValueError):
        DisjointBoxes((((0.0, 0.3),), ((0.2, 0.35),)), (((0.4, 0.5),),))


def test_occupancy_complement_is_accurate():
    m = TwoStateMarkov(0.3, 0.3, 0.5)
    o = occupancy_prob(m, 0.3, 20_000)
    assert o.complement < 1e-200
    small = occupancy_prob(m, 0.3, 9)
    assert small.complement == pytest.approx(1 - small.value, abs=1e-15)
    iid = occupancy_prob(IidBernoulli(0.5), 0.3, 1000)
    assert 0 < iid.complement < 1e-30
    assert iid.complement == pytest.approx(2 * stats.binom.cdf(299, 1000, 0.5), rel=1e-9)
