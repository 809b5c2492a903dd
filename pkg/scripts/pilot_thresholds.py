"""Pilot runs used to freeze the desk-scale thresholds.

Seeds here are disjoint from the ones in configs/, so the frozen values are
not tuned on the runs that check them.
"""
import numpy as np

from condiid.classifiers import NearestNeighbour, Partition
from condiid.config import load
from condiid.counterexamples import sparse_ones_control, sparse_ones_simulate
from condiid.error_eval import error_prob_curve

PILOT_SEED = 99


def consistency():
    cfg = load("configs/consistency_nn.json")
    for spec in (NearestNeighbour(), Partition()):
        curve = error_prob_curve(spec, cfg.class_pair(), cfg.label_process(), cfg.n_list, [0.1],
                                 cfg.runs, PILOT_SEED)
        cells = ", ".join(f"n={r.n}: {r.mean_err:.4g} +- {r.stderr:.2g}" for r in curve.records)
        print(f"{type(spec).__name__:18s} {cells}")


def sparse_ones():
    res = sparse_ones_simulate(256, horizon=10_000, runs=50, seed=PILOT_SEED)
    ctrl = sparse_ones_control(256, 10_000, 50, PILOT_SEED + 1)
    after = res.mean[res.steps > 1000]
    print(f"sparse ones: min mean class-1 error after n=1000 {after.min():.3f} "
          f"(lowest single run {res.err1[:, res.steps > 1000].min():.3f}); control {ctrl.mean_err:.4f}")


if __name__ == "__main__":
    np.set_printoptions(precision=4)
    consistency()
    sparse_ones()
