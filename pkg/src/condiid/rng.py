"""Seeding rules.

Every random stream is a numpy ``Generator`` over the PCG64 bit generator,
keyed by a ``SeedSequence`` built from a 64-bit master seed plus integer
stream tags. Per-run seeds are derived as::

    derive_seed(master, i) = first uint64 drawn from make_rng(master, i)

so run ``i`` of any experiment is reproducible on its own, independent of how
many workers execute the runs.
"""
from __future__ import annotations

import numpy as np

SEED_MASK = (1 << 64) - 1


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    entropy = [int(seed) & SEED_MASK, *(int(s) for s in stream)]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def derive_seed(master: int, index: int) -> int:
    return int(make_rng(master, index).integers(0, 1 << 64, dtype=np.uint64))
