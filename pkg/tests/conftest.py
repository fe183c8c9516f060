"""Seeded generators shared across the test suite.

Sets are built on rational grids (denominators from a small pool) so every
generated endpoint is exact and instances are reproducible from the seed.
"""

from __future__ import annotations

import random

import pytest

from arcflow.circle_sets import IntervalSet, from_segments
from arcflow.piecewise import step_fn
from arcflow.rational import Q

DENOMS = (32, 48, 64, 96, 120, 128)


def random_set(rng: random.Random, max_arcs: int = 4,
               denoms=DENOMS) -> IntervalSet:
    """Nonempty proper subset: up to max_arcs disjoint grid segments."""
    while True:
        denom = rng.choice(denoms)
        k = rng.randint(1, max_arcs)
        if 2 * k >= denom:
            continue
        pts = sorted(rng.sample(range(denom), 2 * k))
        segs = [(Q(pts[2 * i], denom), Q(pts[2 * i + 1] - pts[2 * i], denom))
                for i in range(k)]
        e = from_segments(segs)
        if not e.is_empty and not e.is_full:
            return e


def random_point(rng: random.Random, denom: int = 128):
    return Q(rng.randrange(denom), denom)


def random_step_fn(rng: random.Random, max_pieces: int = 4):
    """Step function with breakpoints on a rational grid, values in [0, 1]."""
    denom = rng.choice(DENOMS)
    k = rng.randint(2, max_pieces)
    bps = sorted(rng.sample(range(denom), k))
    vals = [Q(rng.randint(0, 16), 16) for _ in range(k)]
    return step_fn([Q(b, denom) for b in bps], vals)


def symmetric_nonincreasing_step(rng: random.Random, max_levels: int = 3):
    """Symmetric about 0 and nonincreasing away from 0, values in [0, 1]."""
    denom = rng.choice(DENOMS)
    k = rng.randint(1, max_levels)
    radii = [Q(r, denom) for r in sorted(rng.sample(range(1, denom // 2), k))]
    levels = sorted((Q(rng.randint(0, 16), 16) for _ in range(k + 1)),
                    reverse=True)
    bps = [Q(0)] + radii + [Q(1) - r for r in reversed(radii)]
    vals = levels + levels[-2::-1]
    return step_fn(bps, vals)


@pytest.fixture
def rng():
    return random.Random(20260823)
