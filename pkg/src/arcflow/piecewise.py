"""Exact piecewise-constant and piecewise-linear functions on the circle.

Convolutions of indicators and step functions are piecewise linear with
breakpoints among pairwise endpoint sums; they are computed here by a
slope-event sweep: each pair of pieces contributes a (wrapped) trapezoid
whose second derivative is four signed impulses, so the convolution is
reconstructed exactly from one anchor value, one anchor slope and the
accumulated slope jumps.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .circle_sets import IntervalSet, from_segments
from .errors import RangeError
from .rational import HALF, ONE, Q, ZERO, mod1, parse_rat, rat_str


# ---------------------------------------------------------------------------
# step functions


@dataclass(frozen=True)
class StepFn:
    """Piecewise-constant function; values[i] holds on (bp[i], bp[i+1]), wrapping.

    No breakpoints means the constant function values[0].
    """

    breakpoints: tuple = ()
    values: tuple = (ZERO,)

    @property
    def is_constant(self) -> bool:
        return not self.breakpoints

    def __call__(self, x):
        if not self.breakpoints:
            return self.values[0]
        x = mod1(x)
        i = bisect_right(self.breakpoints, x) - 1
        return self.values[i]  # i == -1 wraps to the last piece

    def pieces(self):
        """(left, length, value) covering the circle."""
        if not self.breakpoints:
            return [(ZERO, ONE, self.values[0])]
        out = []
        n = len(self.breakpoints)
        for i in range(n):
            left = self.breakpoints[i]
            right = self.breakpoints[(i + 1) % n]
            length = mod1(right - left) if n > 1 else ONE
            out.append((left, length, self.values[i]))
        return out

    @property
    def integral(self):
        return sum((ln * v for _, ln, v in self.pieces()), ZERO)

    @property
    def min_value(self):
        return min(self.values)

    @property
    def max_value(self):
        return max(self.values)

    def in_unit_range(self) -> bool:
        return all(ZERO <= v <= ONE for v in self.values)

    def scale(self, c) -> "StepFn":
        c = Q(c)
        return step_fn(self.breakpoints, tuple(c * v for v in self.values))

    def reflect(self) -> "StepFn":
        """x -> f(-x)."""
        return step_from_pieces(
            (mod1(-(left + length)), length, v) for left, length, v in self.pieces()
        )

    def translate(self, y) -> "StepFn":
        y = Q(y)
        return step_from_pieces(
            (mod1(left + y), length, v) for left, length, v in self.pieces()
        )


def step_fn(breakpoints, values) -> StepFn:
    """Canonicalize: sorted breakpoints, adjacent equal values merged."""
    bps = tuple(mod1(b) for b in breakpoints)
    vals = tuple(Q(v) for v in values)
    if not bps:
        return StepFn((), (vals[0] if vals else ZERO,))
    if len(bps) != len(vals):
        raise RangeError("breakpoint/value count mismatch")
    order = sorted(range(len(bps)), key=lambda i: bps[i])
    bps = [bps[i] for i in order]
    vals = [vals[i] for i in order]
    if any(bps[i] == bps[i + 1] for i in range(len(bps) - 1)):
        raise RangeError("duplicate breakpoints")
    keep_b, keep_v = [], []
    for i, (b, v) in enumerate(zip(bps, vals)):
        if v != vals[i - 1]:  # i == 0 compares with the wrapping last piece
            keep_b.append(b)
            keep_v.append(v)
    if not keep_b:
        return StepFn((), (vals[0],))
    return StepFn(tuple(keep_b), tuple(keep_v))


def step_from_pieces(pieces) -> StepFn:
    """Build from (left, length, value) pieces that partition the circle."""
    items = sorted((mod1(l), ln, v) for l, ln, v in pieces if ln > ZERO)
    return step_fn([l for l, _, _ in items], [v for _, _, v in items])


def indicator(s: IntervalSet) -> StepFn:
    if s.is_empty:
        return StepFn((), (ZERO,))
    if s.is_full:
        return StepFn((), (ONE,))
    pieces = []
    segs = s.segments()
    for i, (left, right) in enumerate(segs):
        pieces.append((left, right - left, ONE))
        nxt = segs[(i + 1) % len(segs)][0]
        gap = mod1(nxt - mod1(right))
        pieces.append((mod1(right), gap, ZERO))
    return step_from_pieces(pieces)


def step_to_json(f: StepFn) -> dict:
    return {
        "breakpoints": [rat_str(b) for b in f.breakpoints],
        "values": [rat_str(v) for v in f.values],
    }


def step_from_json(obj) -> StepFn:
    try:
        return step_fn(
            [parse_rat(b) for b in obj["breakpoints"]],
            [parse_rat(v) for v in obj["values"]],
        )
    except (KeyError, TypeError) as exc:
        raise RangeError(f"bad step-function JSON: {obj!r}") from exc


# ---------------------------------------------------------------------------
# piecewise-linear functions


@dataclass(frozen=True)
class PLFn:
    """Continuous piecewise-linear function; node values at breakpoints,
    linear in between (wrapping). No breakpoints means a constant."""

    breakpoints: tuple = ()
    values: tuple = (ZERO,)

    @property
    def is_constant(self) -> bool:
        return not self.breakpoints

    def _segment(self, i):
        """(left, length, v_left, v_right) of the i-th linear segment."""
        n = len(self.breakpoints)
        left = self.breakpoints[i]
        right = self.breakpoints[(i + 1) % n]
        length = mod1(right - left) if n > 1 else ONE
        return left, length, self.values[i], self.values[(i + 1) % n]

    def segments(self):
        return [self._segment(i) for i in range(len(self.breakpoints))]

    def __call__(self, x):
        if not self.breakpoints:
            return self.values[0]
        x = mod1(x)
        i = bisect_right(self.breakpoints, x) - 1
        left, length, v0, v1 = self._segment(i)
        if length == ZERO:
            return v0
        return v0 + (v1 - v0) * mod1(x - left) / length

    @property
    def integral(self):
        if not self.breakpoints:
            return self.values[0]
        return sum((ln * (v0 + v1) / 2 for _, ln, v0, v1 in self.segments()), ZERO)

    @property
    def max_value(self):
        return max(self.values)

    @property
    def min_value(self):
        return min(self.values)


def pl_fn(breakpoints, values) -> PLFn:
    """Canonicalize: sorted breakpoints, collinear interior nodes dropped."""
    bps = [mod1(b) for b in breakpoints]
    vals = [Q(v) for v in values]
    if not bps:
        return PLFn((), (vals[0] if vals else ZERO,))
    order = sorted(range(len(bps)), key=lambda i: bps[i])
    bps = [bps[i] for i in order]
    vals = [vals[i] for i in order]
    if any(bps[i] == bps[i + 1] for i in range(len(bps) - 1)):
        raise RangeError("duplicate breakpoints")
    if len(bps) == 1 or len(set(vals)) == 1:
        # a single node, or equal nodes with equal slopes in between, is constant
        if len(bps) == 1 or all(v == vals[0] for v in vals):
            return PLFn((), (vals[0],))
    # iteratively drop nodes where the two incident slopes agree
    changed = True
    while changed and len(bps) > 2:
        changed = False
        n = len(bps)
        for i in range(n):
            ip, iq = (i - 1) % n, (i + 1) % n
            l0 = mod1(bps[i] - bps[ip]) or ONE
            l1 = mod1(bps[iq] - bps[i]) or ONE
            s0 = (vals[i] - vals[ip]) / l0
            s1 = (vals[iq] - vals[i]) / l1
            if s0 == s1:
                del bps[i]
                del vals[i]
                changed = True
                break
    if len(bps) == 2 and vals[0] == vals[1]:
        return PLFn((), (vals[0],))
    return PLFn(tuple(bps), tuple(vals))


def pl_to_json(f: PLFn) -> dict:
    return {
        "breakpoints": [rat_str(b) for b in f.breakpoints],
        "values": [rat_str(v) for v in f.values],
    }


def pl_from_json(obj) -> PLFn:
    try:
        return pl_fn(
            [parse_rat(b) for b in obj["breakpoints"]],
            [parse_rat(v) for v in obj["values"]],
        )
    except (KeyError, TypeError) as exc:
        raise RangeError(f"bad PL-function JSON: {obj!r}") from exc


# ---------------------------------------------------------------------------
# convolution


def _sweep(events, pair_geoms, anchor_value):
    """Reconstruct a PLFn from slope-jump events and weighted trapezoid pairs.

    events: {position: slope jump}; pair_geoms: (center, H, hd, weight) with
    rising slope +w on (center-H, center-hd) and -w on (center+hd, center+H),
    both taken mod 1.  anchor_value(x) returns the exact function value.
    """
    positions = sorted(p for p, j in events.items() if j != ZERO)
    if not positions:
        return PLFn((), (anchor_value(ZERO),))
    x0 = positions[0]
    v0 = anchor_value(x0)
    mid = (positions[0] + positions[1]) / 2 if len(positions) > 1 else x0 + HALF
    slope = ZERO
    for center, big, small, w in pair_geoms:
        width = big - small
        if width == ZERO:
            continue
        if mod1(mid - (center - big)) < width:
            slope += w
        if mod1(mid - (center + small)) < width:
            slope -= w
    values = [v0]
    for i in range(1, len(positions)):
        values.append(values[-1] + slope * (positions[i] - positions[i - 1]))
        slope += events[positions[i]]
    # closing the loop must return exactly to the anchor value
    closure = values[-1] + slope * (positions[0] + ONE - positions[-1])
    if closure != v0:
        raise AssertionError("convolution sweep failed to close")
    return pl_fn(positions, values)


def _pair_events(events, geoms, c1, h1, c2, h2, w):
    center = mod1(c1 + c2)
    big, small = h1 + h2, abs(h1 - h2)
    events[mod1(center - big)] = events.get(mod1(center - big), ZERO) + w
    events[mod1(center - small)] = events.get(mod1(center - small), ZERO) - w
    events[mod1(center + small)] = events.get(mod1(center + small), ZERO) - w
    events[mod1(center + big)] = events.get(mod1(center + big), ZERO) + w
    geoms.append((center, big, small, w))


def convolve_indicator(a: IntervalSet, b: IntervalSet) -> PLFn:
    """Exact 1_A * 1_B as a piecewise-linear function."""
    if a.is_empty or b.is_empty:
        return PLFn((), (ZERO,))
    if a.is_full:
        return PLFn((), (b.measure,))
    if b.is_full:
        return PLFn((), (a.measure,))
    events, geoms = {}, []
    for arc_a in a.arcs:
        for arc_b in b.arcs:
            _pair_events(
                events, geoms, arc_a.center, arc_a.halfwidth,
                arc_b.center, arc_b.halfwidth, ONE,
            )
    neg_b = b.negate()

    def value_at(x):
        return a.intersect(neg_b.translate(x)).measure

    return _sweep(events, geoms, value_at)


def convolve_step(f: StepFn, g: StepFn) -> PLFn:
    """Exact f * g for step functions with values in [0, 1]."""
    if not (f.in_unit_range() and g.in_unit_range()):
        raise RangeError("convolve_step requires values in [0, 1]")
    if f.is_constant:
        return PLFn((), (f.values[0] * g.integral,))
    if g.is_constant:
        return PLFn((), (g.values[0] * f.integral,))
    fp = [p for p in f.pieces() if p[2] != ZERO]
    gp = [p for p in g.pieces() if p[2] != ZERO]
    if not fp or not gp:
        return PLFn((), (ZERO,))
    events, geoms = {}, []
    for fl, fln, fv in fp:
        for gl, gln, gv in gp:
            _pair_events(
                events, geoms, fl + fln / 2, fln / 2, gl + gln / 2, gln / 2, fv * gv,
            )

    def value_at(x):
        cuts = sorted({*(mod1(x - bp) for bp in f.breakpoints), *g.breakpoints})
        total = ZERO
        n = len(cuts)
        for i in range(n):
            left = cuts[i]
            length = mod1(cuts[(i + 1) % n] - left) if n > 1 else ONE
            m = left + length / 2
            total += length * f(x - m) * g(m)
        return total

    return _sweep(events, geoms, value_at)


# ---------------------------------------------------------------------------
# integration and level sets


def integrate_over(phi: PLFn, c: IntervalSet):
    """Exact integral of a PLFn over an interval set."""
    if c.is_empty:
        return ZERO
    if phi.is_constant:
        return phi.values[0] * c.measure
    total = ZERO
    for left, right in c.segments():
        knots = [left]
        for bp in phi.breakpoints:
            t = left + mod1(bp - left)
            if left < t < right:
                knots.append(t)
        knots.append(right)
        knots.sort()
        vals = [phi(t) for t in knots]
        for i in range(len(knots) - 1):
            total += (knots[i + 1] - knots[i]) * (vals[i] + vals[i + 1]) / 2
    return total


def superlevel(phi: PLFn, t) -> IntervalSet:
    """{x : phi(x) > t}, closed up to null boundary; exact-level plateaus excluded."""
    t = Q(t)
    if phi.is_constant:
        return IntervalSet.full() if phi.values[0] > t else IntervalSet.empty()
    segs = []
    for left, length, v0, v1 in phi.segments():
        if v0 > t and v1 > t:
            segs.append((left, length))
        elif v0 > t >= v1:
            segs.append((left, length * (v0 - t) / (v0 - v1)))
        elif v0 <= t < v1:
            off = length * (t - v0) / (v1 - v0)
            segs.append((left + off, length - off))
    return from_segments(segs)


def clipped_integrals(phi: PLFn, tau):
    """(integral of min(phi, tau), integral of max(phi - tau, 0))."""
    tau = Q(tau)
    if phi.is_constant:
        v = phi.values[0]
        over = (v - tau) if v > tau else ZERO
        return v - over, over
    over = ZERO
    for _, length, v0, v1 in phi.segments():
        if v0 <= tau and v1 <= tau:
            continue
        if v0 >= tau and v1 >= tau:
            over += length * ((v0 + v1) / 2 - tau)
        elif v0 > tau:  # descending crossing
            cut = length * (v0 - tau) / (v0 - v1)
            over += cut * (v0 - tau) / 2
        else:  # ascending crossing
            cut = length * (tau - v0) / (v1 - v0)
            over += (length - cut) * (v1 - tau) / 2
    return phi.integral - over, over


def truncated_integrals(a: IntervalSet, b: IntervalSet, tau):
    """(integral of min(conv, tau), integral of max(conv - tau, 0)) for 1_A * 1_B."""
    tau = Q(tau)
    if tau < ZERO:
        raise RangeError("tau must be >= 0")
    return clipped_integrals(convolve_indicator(a, b), tau)


# ---------------------------------------------------------------------------
# pushforward and rearrangement


def pushforward(f, n: int) -> StepFn:
    """Pushforward along x -> n*x: (phi_* f)(y) = (1/n) sum_k f((y+k)/n)."""
    if isinstance(f, IntervalSet):
        f = indicator(f)
    if n < 1:
        raise RangeError("n must be >= 1")
    if n == 1 or f.is_constant:
        return f
    bps = sorted({mod1(n * b) for b in f.breakpoints})
    inv_n = Q(1, n)
    vals = []
    m = len(bps)
    for i in range(m):
        left = bps[i]
        length = mod1(bps[(i + 1) % m] - left) if m > 1 else ONE
        mid = left + length / 2
        vals.append(inv_n * sum((f((mid + k) * inv_n) for k in range(n)), ZERO))
    return step_fn(bps, vals)


def decreasing_rearrangement(f: StepFn) -> StepFn:
    """Symmetric nonincreasing step function equimeasurable with f."""
    if f.min_value < ZERO:
        raise RangeError("decreasing_rearrangement requires f >= 0")
    totals = {}
    for _, length, v in f.pieces():
        totals[v] = totals.get(v, ZERO) + length
    pieces = []
    cum = ZERO
    for v in sorted(totals, reverse=True):
        nxt = cum + totals[v]
        pieces.append((cum / 2, (nxt - cum) / 2, v))          # right flank
        pieces.append((mod1(-nxt / 2), (nxt - cum) / 2, v))   # left flank
        cum = nxt
    return step_from_pieces(pieces)


def step_pl_inner(phi: PLFn, f: StepFn):
    """Exact integral of phi * f over the circle."""
    if f.is_constant:
        return f.values[0] * phi.integral
    total = ZERO
    for left, length, v in f.pieces():
        if v != ZERO:
            total += v * integrate_over(phi, from_segments([(left, length)]))
    return total
