"""Brute-force oracle on the cyclic group of order N: bitmask sets, exact
integer convolution counts, discrete defects, exhaustive extremizer search,
and the discretization bridge to the circle modules."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .circle_sets import IntervalSet
from .errors import Infeasible, MixedModulus, RangeError
from .functionals import defect_D, rs_star_value
from .piecewise import convolve_indicator
from .rational import Q, rat_str


@dataclass(frozen=True)
class ZnSet:
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise RangeError("modulus must be >= 1")
        if self.mask < 0 or self.mask >> self.n:
            raise RangeError("mask out of range for the modulus")

    @classmethod
    def from_members(cls, n: int, members) -> "ZnSet":
        mask = 0
        for k in members:
            mask |= 1 << (k % n)
        return cls(n, mask)

    @property
    def members(self):
        return [k for k in range(self.n) if self.mask >> k & 1]

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def rotate(self, t: int) -> "ZnSet":
        t %= self.n
        full = (1 << self.n) - 1
        return ZnSet(self.n, (self.mask << t | self.mask >> (self.n - t)) & full)

    def negate(self) -> "ZnSet":
        mask = 0
        for k in self.members:
            mask |= 1 << (-k % self.n)
        return ZnSet(self.n, mask)

    def dilate(self, u: int) -> "ZnSet":
        return ZnSet.from_members(self.n, (k * u for k in self.members))

    def to_json(self) -> dict:
        return {"n": self.n, "members": self.members}


def discretize(e: IntervalSet, n: int) -> ZnSet:
    """Residue k belongs iff the grid point k/n belongs to the set."""
    if n < 1:
        raise RangeError("modulus must be >= 1")
    return ZnSet.from_members(n, (k for k in range(n) if e.contains(Q(k, n))))


def _require_same_modulus(*sets):
    n = sets[0].n
    if any(s.n != n for s in sets):
        raise MixedModulus("all sets must share one modulus")
    return n


def zn_sumset(s1: ZnSet, s2: ZnSet) -> ZnSet:
    n = _require_same_modulus(s1, s2)
    mask = 0
    for k in s1.members:
        mask |= s2.rotate(k).mask
    return ZnSet(n, mask)


def zn_triple_functional(s1: ZnSet, s2: ZnSet, s3: ZnSet) -> int:
    """#{(x, y) : x in S1, y in S2, -x-y in S3}, exact."""
    n = _require_same_modulus(s1, s2, s3)
    neg3 = s3.negate()
    total = 0
    for x in s1.members:
        # y must satisfy y in S2 and x+y in -S3
        total += (s2.mask & neg3.rotate(-x).mask).bit_count()
    return total


def zn_defect(s1: ZnSet, s2: ZnSet, s3: ZnSet):
    """Continuum star pairing of the densities minus the normalized count;
    may be slightly negative on a cyclic group."""
    n = _require_same_modulus(s1, s2, s3)
    star = rs_star_value(Q(s1.size, n), Q(s2.size, n), Q(s3.size, n))
    # pair against S3 in the x+y orientation (the convolution pairing used
    # by the continuum defect): #{x+y in S3} = #{-x-y in -S3}
    return star - Q(zn_triple_functional(s1, s2, s3.negate()), n * n)


def zn_kneser_defect(s1: ZnSet, s2: ZnSet) -> int:
    n = _require_same_modulus(s1, s2)
    return zn_sumset(s1, s2).size - min(s1.size + s2.size - 1, n)


# -- canonicalization and search --------------------------------------------


def _units(n: int):
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def _canonical_pair_reps(n: int, k: int):
    """Lexicographically-least representatives of k-subsets modulo rotation."""
    reps = []
    seen = set()
    for members in combinations(range(n), k):
        s = ZnSet.from_members(n, members)
        if s.mask in seen:
            continue
        orbit = {s.rotate(t).mask for t in range(n)}
        seen |= orbit
        reps.append(ZnSet(n, min(orbit)))
    return reps


def _canonical_triple(s1: ZnSet, s2: ZnSet, s3: ZnSet):
    """Least triple under simultaneous translations (t1, t2, t1+t2) and
    common dilation by units."""
    n = s1.n
    best = None
    for u in _units(n):
        d1, d2, d3 = s1.dilate(u), s2.dilate(u), s3.dilate(u)
        for t1 in range(n):
            r1 = d1.rotate(t1)
            for t2 in range(n):
                key = (r1.mask, d2.rotate(t2).mask, d3.rotate(t1 + t2).mask)
                if best is None or key < best:
                    best = key
    return tuple(ZnSet(n, m) for m in best)


@dataclass(frozen=True)
class SearchResult:
    objective: str
    value: object
    sets: tuple

    def to_json(self) -> dict:
        return {
            "objective": self.objective,
            "value": rat_str(self.value) if not isinstance(self.value, int) else self.value,
            "sets": [s.to_json() for s in self.sets],
        }


def exhaustive_search(n: int, sizes, objective: str = "min_defect",
                      seed: int = 0, restarts: int = 40) -> SearchResult:
    """Best configuration for the given objective, canonicalized modulo the
    symmetry group.  Full exhaustion for n <= 24; seeded local search with
    random restarts beyond that."""
    if objective not in ("min_defect", "min_kneser"):
        raise RangeError(f"unknown objective {objective!r}")
    k1, k2, k3 = sizes
    if any(k > n for k in sizes) or any(k < 1 for k in sizes):
        raise Infeasible("set sizes must be between 1 and the modulus")
    if n <= 24:
        return _search_exhaustive(n, (k1, k2, k3), objective)
    return _search_local(n, (k1, k2, k3), objective, seed, restarts)


def _evaluate(objective, s1, s2, s3):
    if objective == "min_defect":
        return zn_defect(s1, s2, s3)
    return zn_kneser_defect(s1, s2)


def _search_exhaustive(n, sizes, objective):
    k1, k2, k3 = sizes
    best = None
    for s1 in _canonical_pair_reps(n, k1):
        for s2 in _canonical_pair_reps(n, k2):
            if objective == "min_kneser":
                val = zn_kneser_defect(s1, s2)
                s3 = ZnSet.from_members(n, range(k3))
                if best is None or val < best[0]:
                    best = (val, (s1, s2, s3))
                continue
            for members3 in combinations(range(n), k3):
                s3 = ZnSet.from_members(n, members3)
                val = zn_defect(s1, s2, s3)
                if best is None or val < best[0]:
                    best = (val, (s1, s2, s3))
    val, sets = best
    return SearchResult(objective, val, _canonical_triple(*sets))


def _search_local(n, sizes, objective, seed, restarts):
    rng = random.Random(seed)
    best = None
    for _ in range(restarts):
        cur = [ZnSet.from_members(n, rng.sample(range(n), k)) for k in sizes]
        val = _evaluate(objective, *cur)
        improved = True
        while improved:
            improved = False
            for i in range(3 if objective == "min_defect" else 2):
                members = cur[i].members
                outside = [k for k in range(n) if not cur[i].mask >> k & 1]
                for out in members:
                    for inn in outside:
                        cand = ZnSet(n, cur[i].mask ^ (1 << out) ^ (1 << inn))
                        trial = cur.copy()
                        trial[i] = cand
                        tv = _evaluate(objective, *trial)
                        if tv < val:
                            cur, val, improved = trial, tv, True
                            break
                    if improved:
                        break
                if improved:
                    break
        if best is None or val < best[0]:
            best = (val, tuple(cur))
    return SearchResult(objective, best[0], best[1])


# -- continuum bridge --------------------------------------------------------


def agreement_bound(a: IntervalSet, b: IntervalSet, c: IntervalSet, n: int):
    conv = convolve_indicator(a, b)
    count = (len(a.endpoints()) + len(b.endpoints()) + len(c.endpoints())
             + len(conv.breakpoints))
    return Q(3 * count, n)


def agreement_check(a: IntervalSet, b: IntervalSet, c: IntervalSet, n: int):
    """(continuum defect, discrete defect, gap); the gap is asserted to be
    within the boundary-cell counting bound."""
    continuum = defect_D(a, b, c)
    discrete = zn_defect(discretize(a, n), discretize(b, n), discretize(c, n))
    gap = abs(continuum - discrete)
    assert gap <= agreement_bound(a, b, c, n)
    return continuum, discrete, gap
