import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from condiid.classifiers import BoxUnion, ErmInterval, NearestNeighbour, Partition, fit
from condiid.data_model import AtomsVsContinuum, DisjointBoxes, IidBernoulli, LabeledSample, TwoStateMarkov, generate
from condiid.error_eval import (
    class_error_exact,
    class_error_mc,
    class_errors,
    error_prob_curve,
    nabla_estimate,
    p_grid,
    step_error,
)

PAIR = DisjointBoxes((((0.0, 0.25),), ((0.75, 1.0),)), (((0.3, 0.7),),))


def grid_error(fitted, pair, y, m=400_001):
    """Midpoint-rule integral of the misclassified class-y density (uniform boxes)."""
    total = 0.0
    for box in (pair.boxes_0 if y == 0 else pair.boxes_1):
        lo, hi = box[0]
        t = lo + (np.arange(m) + 0.5) * (hi - lo) / m
        total += (hi - lo) * np.mean(fitted.predict_many(t[:, None]) != y)
    mass = sum(b[0][1] - b[0][0] for b in (pair.boxes_0 if y == 0 else pair.boxes_1))
    return total / mass


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(1, 40),
       spec=st.sampled_from([NearestNeighbour(), Partition(), ErmInterval()]))
def test_exact_error_matches_quadrature(seed, n, spec):
    s = generate(IidBernoulli(0.5), PAIR, n, seed)
    f = fit(spec, s)
    for y in (0, 1):
        assert class_error_exact(f, PAIR, y).value == pytest.approx(grid_error(f, PAIR, y), abs=2e-5)


def test_exact_vs_mc_atoms():
    pair = AtomsVsContinuum(16)
    s = generate(IidBernoulli(0.5), pair, 30, 1)
    f = fit(NearestNeighbour(), s)
    for y in (0, 1):
        ex = class_error_exact(f, pair, y).value
        mc = class_error_mc(f, pair, y, 20_000, 3)
        sd = np.sqrt(ex * (1 - ex) / 20_000)
        assert abs(mc.value - ex) <= 4 * sd + 1e-12


def test_known_hypothesis_error():
    f = fit(ErmInterval(), LabeledSample(np.array([0.4, 0.6]), np.array([1, 1])))
    e0, e1 = class_errors(f, PAIR)
    assert e0.value == 0.0
    assert e1.value == pytest.approx(0.5)


def test_step_error_mixes_by_next_label_prob():
    s = LabeledSample(np.array([0.4, 0.6]), np.array([1, 1]))
    f = fit(ErmInterval(), s)
    m = TwoStateMarkov(0.3, 0.2, 0.5)
    e = step_error(f, PAIR, m, s.y)
    assert e.value == pytest.approx(0.8 * 0.5)
    assert e.q == pytest.approx(0.8)


def test_curve_is_deterministic_across_threads():
    args = (NearestNeighbour(), PAIR, TwoStateMarkov(0.3, 0.3), [20, 80], [0.05], 8, 42)
    a = error_prob_curve(*args, threads=1).to_csv()
    b = error_prob_curve(*args, threads=2).to_csv()
    assert a == b
    assert a.splitlines()[0] == "n,runs,mean_err,stderr,p_exceed_eps_0.05"


def test_p_grid():
    assert p_grid(0.25, 3).tolist() == [0.25, 0.5, 0.75]
    assert p_grid(0.5, 1).tolist() == [0.5]
    with pytest.raises(ValueError):
        p_grid(0.6, 3)


def test_nabla_is_grid_maximum():
    est = nabla_estimate(NearestNeighbour(), PAIR, 0.2, 10, 0.01, G=3, runs=20, seed=5)
    assert est.value == max(est.probs)
    assert est.argmax in est.p_grid


def test_constant_hypothesis_errors():
    f = fit(ErmInterval(), LabeledSample(np.array([0.1]), np.array([0])))
    assert f.hypothesis.boxes == BoxUnion(()).boxes
    e0, e1 = class_errors(f, PAIR)
    assert (e0.value, e1.value) == (0.0, 1.0)
