"""Exact set algebra for finite unions of closed arcs on the circle R/Z.

Sets are identified up to Lebesgue-null differences: touching arcs merge,
single-point components vanish, and every operation returns the canonical
representative, so equality of values is equality of sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, RangeError
from .rational import HALF, ONE, Q, ZERO, mod1, parse_rat, rat_str


@dataclass(frozen=True)
class Arc:
    """Closed arc given by center and halfwidth; length = 2*halfwidth <= 1."""

    center: object
    halfwidth: object

    def __post_init__(self):
        object.__setattr__(self, "center", mod1(self.center))
        object.__setattr__(self, "halfwidth", Q(self.halfwidth))
        if not (ZERO < self.halfwidth <= HALF):
            raise RangeError(f"halfwidth must be in (0, 1/2], got {self.halfwidth}")

    @property
    def left(self):
        return mod1(self.center - self.halfwidth)

    @property
    def length(self):
        return 2 * self.halfwidth


_FULL_ARC = Arc(ZERO, HALF)


@dataclass(frozen=True)
class IntervalSet:
    """Canonical finite disjoint union of closed arcs, sorted by left endpoint."""

    arcs: tuple = ()

    @staticmethod
    def empty() -> "IntervalSet":
        return IntervalSet(())

    @staticmethod
    def full() -> "IntervalSet":
        return IntervalSet((_FULL_ARC,))

    @property
    def is_empty(self) -> bool:
        return not self.arcs

    @property
    def is_full(self) -> bool:
        return len(self.arcs) == 1 and self.arcs[0].length == ONE

    @property
    def measure(self):
        return sum((a.length for a in self.arcs), ZERO)

    def segments(self):
        """Arcs as (left, right) with left in [0,1) and left < right <= left+1."""
        return [(a.left, a.left + a.length) for a in self.arcs]

    def endpoints(self):
        """All arc endpoints reduced mod 1 (2 per arc, duplicates possible)."""
        out = []
        for left, right in self.segments():
            out.append(left)
            out.append(mod1(right))
        return out

    def contains(self, x) -> bool:
        x = mod1(x)
        for a in self.arcs:
            if mod1(x - a.left) <= a.length:
                return True
        return False

    # -- transforms ---------------------------------------------------------

    def translate(self, y) -> "IntervalSet":
        if self.is_empty or self.is_full:
            return self
        y = Q(y)
        return from_segments([(mod1(a.left + y), a.length) for a in self.arcs])

    def negate(self) -> "IntervalSet":
        if self.is_empty or self.is_full:
            return self
        return from_segments(
            [(mod1(-(a.left + a.length)), a.length) for a in self.arcs]
        )

    def complement(self) -> "IntervalSet":
        if self.is_empty:
            return IntervalSet.full()
        if self.is_full:
            return IntervalSet.empty()
        segs = self.segments()
        gaps = []
        for i, (_, right) in enumerate(segs):
            next_left = segs[(i + 1) % len(segs)][0]
            gap = mod1(next_left - mod1(right))
            if gap > ZERO:
                gaps.append((mod1(right), gap))
        return from_segments(gaps)

    def symmetrize(self) -> "IntervalSet":
        """The arc centered at 0 with the same measure."""
        if self.is_empty or self.is_full:
            return self
        return IntervalSet((Arc(ZERO, self.measure / 2),))

    # -- booleans -----------------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return _boolean(self, other, lambda p, q: p or q)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        return _boolean(self, other, lambda p, q: p and q)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return _boolean(self, other, lambda p, q: p and not q)

    def symdiff(self, other: "IntervalSet") -> "IntervalSet":
        return _boolean(self, other, lambda p, q: p != q)


def _merge_line_segments(segs):
    """Merge overlapping/touching (l, r) segments on the line."""
    segs = sorted(segs)
    merged = []
    for l, r in segs:
        if merged and l <= merged[-1][1]:
            if r > merged[-1][1]:
                merged[-1][1] = r
        else:
            merged.append([l, r])
    return merged


def from_segments(raw) -> IntervalSet:
    """Canonicalize raw (left, length) pairs into an IntervalSet."""
    line = []
    for left, length in raw:
        if length <= ZERO:
            continue
        if length >= ONE:
            return IntervalSet.full()
        left = mod1(left)
        right = left + length
        if right <= ONE:
            line.append([left, right])
        else:
            line.append([left, ONE])
            line.append([ZERO, right - ONE])
    if not line:
        return IntervalSet.empty()
    merged = _merge_line_segments(line)
    # glue across the wrap point
    if len(merged) > 1 and merged[0][0] == ZERO and merged[-1][1] == ONE:
        first = merged.pop(0)
        merged[-1][1] += first[1]
    total = sum((r - l for l, r in merged), ZERO)
    if total >= ONE:
        return IntervalSet.full()
    arcs = []
    for l, r in merged:
        length = r - l
        arcs.append(Arc(mod1(l + length / 2), length / 2))
    arcs.sort(key=lambda a: a.left)
    return IntervalSet(tuple(arcs))


def _boolean(s1: IntervalSet, s2: IntervalSet, pred) -> IntervalSet:
    cuts = sorted({ZERO, *(p for s in (s1, s2) for p in s.endpoints())})
    out = []
    n = len(cuts)
    for i in range(n):
        a = cuts[i]
        b = cuts[i + 1] if i + 1 < n else cuts[0] + ONE
        if b <= a:
            continue
        mid = (a + b) / 2
        if pred(s1.contains(mid), s2.contains(mid)):
            out.append((a, b - a))
    return from_segments(out)


# -- spec-level operation names ---------------------------------------------


def normalize(raw_arcs: Iterable[Arc]) -> IntervalSet:
    """Canonical IntervalSet with the same union (up to null sets)."""
    return from_segments([(a.left, a.length) for a in raw_arcs])


def measure(s: IntervalSet):
    return s.measure


def boolean(op: str, s1: IntervalSet, s2: IntervalSet) -> IntervalSet:
    try:
        return {
            "union": s1.union,
            "intersect": s1.intersect,
            "difference": s1.difference,
            "symdiff": s1.symdiff,
        }[op](s2)
    except KeyError:
        raise RangeError(f"unknown boolean op {op!r}") from None


def transform(s: IntervalSet, kind: str, y=None) -> IntervalSet:
    if kind == "translate":
        if y is None:
            raise RangeError("translate needs an offset")
        return s.translate(y)
    if kind == "negate":
        return s.negate()
    if kind == "complement":
        return s.complement()
    raise RangeError(f"unknown transform {kind!r}")


def symmetrize(s: IntervalSet) -> IntervalSet:
    return s.symmetrize()


def sumset0(s1: IntervalSet, s2: IntervalSet) -> IntervalSet:
    """{x : 1_S1 * 1_S2 (x) > 0}, closed up to null boundary."""
    if s1.is_empty or s2.is_empty:
        raise EmptyInput("sumset0 needs nonempty sets")
    raw = []
    for a in s1.arcs:
        for b in s2.arcs:
            left = mod1(a.left + b.left)
            raw.append((left, min(a.length + b.length, ONE)))
    return from_segments(raw)


def interval(left, right) -> IntervalSet:
    """The closed arc travelled counterclockwise from left to right."""
    left, right = Q(left), Q(right)
    length = mod1(right - left)
    if length == ZERO and right != left:
        return IntervalSet.full()
    return from_segments([(mod1(left), length)])


def symdiff_measure(s1: IntervalSet, s2: IntervalSet):
    return s1.measure + s2.measure - 2 * s1.intersect(s2).measure


# -- JSON -------------------------------------------------------------------


def set_to_json(s: IntervalSet) -> dict:
    return {
        "arcs": [
            {"center": rat_str(a.center), "halfwidth": rat_str(a.halfwidth)}
            for a in s.arcs
        ]
    }


def set_from_json(obj) -> IntervalSet:
    if not isinstance(obj, dict) or "arcs" not in obj:
        raise RangeError("set JSON must be an object with an 'arcs' list")
    arcs = obj["arcs"]
    if not isinstance(arcs, (list, tuple)):
        raise RangeError("'arcs' must be a list")
    raw = []
    for entry in arcs:
        try:
            c = parse_rat(entry["center"])
            h = parse_rat(entry["halfwidth"])
        except (KeyError, TypeError) as exc:
            raise RangeError(f"bad arc entry {entry!r}") from exc
        raw.append(Arc(c, h))
    return normalize(raw)
