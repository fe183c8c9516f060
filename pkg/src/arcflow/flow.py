"""Interval-growth flow on the circle: every arc grows about its fixed
center by a common scale factor s >= 1, arcs merge on contact, and the
normalized pairing/sumset traces along the flow are monotone.

The flow is parametrized by the rational scale s (the exponential of the
usual time variable), which keeps every scheduled collision exact.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .circle_sets import IntervalSet, from_segments, sumset0
from .errors import EmptyInput, ScaleOutOfRange
from .functionals import defect_D, triple_functional
from .rational import ONE, Q, ZERO, mod1, rat_decimal, rat_float, rat_str


@dataclass(frozen=True)
class FlowState:
    arcs: IntervalSet
    stage_start_scale: object
    original_measure: object


@dataclass(frozen=True)
class FlowTraceRow:
    s: object
    m1: object
    m2: object
    m3: object
    T_norm: object
    sum_norm: object
    D_norm: object


def terminal_scale(e: IntervalSet):
    """The scale at which the flowed set is the full circle."""
    mu = e.measure
    if mu == ZERO:
        raise EmptyInput("terminal_scale needs a nonempty set")
    return 1 / mu


def _grow(e: IntervalSet, factor) -> IntervalSet:
    """Scale every arc about its center by the given factor >= 1."""
    if e.is_full or factor == ONE:
        return e
    return from_segments(
        [(a.center - a.halfwidth * factor, min(a.length * factor, ONE)) for a in e.arcs]
    )


def next_collision(state: FlowState):
    """(collision scale or None, state after merging at that scale).

    None means the single remaining arc just grows to the full circle.
    """
    arcs = state.arcs.arcs
    if len(arcs) <= 1 or state.arcs.is_full:
        return None, state
    s0 = state.stage_start_scale
    sigma = None
    n = len(arcs)
    for i in range(n):
        a, b = arcs[i], arcs[(i + 1) % n]
        gap = mod1(b.left - (a.left + a.length))
        cand = 1 + gap / (a.halfwidth + b.halfwidth)
        if sigma is None or cand < sigma:
            sigma = cand
    scale = s0 * sigma
    merged = _grow(state.arcs, sigma)
    return scale, FlowState(merged, scale, state.original_measure)


def flow_to_scale(e: IntervalSet, s) -> IntervalSet:
    """The flowed set at scale s, advancing stage-by-stage through collisions."""
    s = Q(s)
    mu = e.measure
    if mu == ZERO:
        raise EmptyInput("cannot flow the empty set")
    if not (ONE <= s <= terminal_scale(e)):
        raise ScaleOutOfRange(f"scale {rat_str(s)} outside [1, {rat_str(terminal_scale(e))}]")
    state = FlowState(e, ONE, mu)
    while True:
        collision, merged = next_collision(state)
        if collision is None or s <= collision:
            return _grow(state.arcs, s / state.stage_start_scale)
        state = merged


def flow_triple(e1, e2, e3, s):
    return flow_to_scale(e1, s), flow_to_scale(e2, s), flow_to_scale(e3, s)


def flow_trace(e1: IntervalSet, e2: IntervalSet, e3: IntervalSet, grid):
    """(rows, window): exact trace rows at the given increasing scales, and
    the length of the grid prefix on which m1 + m2 + m3 <= 2."""
    grid = [Q(s) for s in grid]
    if any(grid[i] >= grid[i + 1] for i in range(len(grid) - 1)):
        raise ScaleOutOfRange("grid must be strictly increasing")
    s_max = min(terminal_scale(e1), terminal_scale(e2), terminal_scale(e3))
    if grid and not (ONE <= grid[0] and grid[-1] <= s_max):
        raise ScaleOutOfRange(f"grid must lie in [1, {rat_str(s_max)}]")
    rows = []
    window = 0
    for s in grid:
        f1, f2, f3 = flow_triple(e1, e2, e3, s)
        m1, m2, m3 = f1.measure, f2.measure, f3.measure
        s2 = s * s
        row = FlowTraceRow(
            s=s,
            m1=m1,
            m2=m2,
            m3=m3,
            T_norm=triple_functional(f1, f2, f3) / s2,
            sum_norm=sumset0(f1, f2).measure / s,
            D_norm=defect_D(f1, f2, f3) / s2,
        )
        rows.append(row)
        if window == len(rows) - 1 and m1 + m2 + m3 <= 2:
            window += 1
    return rows, window


def geometric_grid(start, stop, points: int):
    """Increasing rational grid from start to stop, spaced approximately
    geometrically.  Interior points are rational snaps of the geometric
    positions (the grid itself is a free choice; evaluation at each rational
    point stays exact)."""
    start, stop = Q(start), Q(stop)
    if points < 1 or start <= ZERO or stop < start:
        raise ScaleOutOfRange("bad grid parameters")
    if points == 1 or start == stop:
        return [start]
    out = [start]
    ratio = rat_float(stop) / rat_float(start)
    for i in range(1, points - 1):
        x = rat_float(start) * ratio ** (i / (points - 1))
        snap = Q(Fraction(x).limit_denominator(10**6))
        if out[-1] < snap < stop:
            out.append(snap)
    out.append(stop)
    return out


def flow_equivariance_check(e: IntervalSet, y, s) -> bool:
    """Flow commutes with translation by y and with negation at scale s."""
    y, s = Q(y), Q(s)
    flowed = flow_to_scale(e, s)
    ok_t = flow_to_scale(e.translate(y), s) == flowed.translate(y)
    ok_n = flow_to_scale(e.negate(), s) == flowed.negate()
    return ok_t and ok_n


# -- CSV --------------------------------------------------------------------

TRACE_FIELDS = ("s", "m1", "m2", "m3", "T_norm", "sum_norm", "D_norm")


def trace_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(TRACE_FIELDS) + [f + "_dec" for f in TRACE_FIELDS])
    for row in rows:
        vals = [getattr(row, f) for f in TRACE_FIELDS]
        writer.writerow([rat_str(v) for v in vals] + [rat_decimal(v) for v in vals])
    return buf.getvalue()
