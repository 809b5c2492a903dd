"""Class-1 error of 1-NN under block schedules of different growth.

Faster-growing blocks flood the sample with atoms between the rare class-1
examples; the error stays high. Constant blocks behave like ordinary data.
"""
import sys

from condiid.counterexamples import sparse_ones_simulate
from condiid.data_model import BlockSchedule

SCHEDULES = [BlockSchedule("constant", 0), BlockSchedule("constant", 3), BlockSchedule("linear", 2),
             BlockSchedule("power", 2), BlockSchedule("power", 3)]


def main(horizon=3000, runs=5, N=256):
    print("schedule,steps,last_n,last_mean_err1,min_mean_after_1000")
    for s in SCHEDULES:
        res = sparse_ones_simulate(N, s, horizon, runs, seed=1)
        print(f"{s.rule}:{s.param},{len(res.steps)},{int(res.steps[-1])},{res.mean[-1]:.4f},"
              f"{res.min_mean_after(1000):.4f}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
