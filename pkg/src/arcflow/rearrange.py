"""Two-point rearrangement (polarization), iterated symmetrization by
polarization, and the relaxed-framework comparisons for step functions."""

from __future__ import annotations

from dataclasses import dataclass

from .circle_sets import Arc, IntervalSet, interval, symdiff_measure
from .errors import AxisMismatch, MaxStepsExceeded, RangeError, ShapeError
from .functionals import rs_star_value
from .piecewise import (
    StepFn,
    convolve_indicator,
    convolve_step,
    indicator,
    integrate_over,
    step_pl_inner,
)
from .rational import HALF, ONE, Q, ZERO, mod1


@dataclass(frozen=True)
class PolarizationAxis:
    """Reflection x -> 2a - x; fixed points a and a + 1/2; the upper half
    is the open arc (a, a + 1/2)."""

    a: object

    def __post_init__(self):
        object.__setattr__(self, "a", mod1(self.a))

    def reflect_point(self, x):
        return mod1(2 * self.a - x)

    def reflect_set(self, e: IntervalSet) -> IntervalSet:
        return e.negate().translate(2 * self.a)

    def upper_half(self) -> IntervalSet:
        return IntervalSet((Arc(mod1(self.a + Q(1, 4)), Q(1, 4)),))


def polarize(e: IntervalSet, axis: PolarizationAxis) -> IntervalSet:
    """Push the part of E not matched by its reflection into the upper half."""
    if e.is_empty or e.is_full:
        return e
    sigma_e = axis.reflect_set(e)
    shared = e.intersect(sigma_e)
    exclusive = e.difference(sigma_e)
    if exclusive.is_empty:
        return shared
    upper = axis.upper_half()
    kept = exclusive.intersect(upper)
    moved = axis.reflect_set(exclusive.difference(upper))
    return shared.union(kept).union(moved)


def _interval_pairing(a: IntervalSet, c: IntervalSet, b: IntervalSet):
    """<1_A * 1_C, 1_B> = integral over B of 1_A * 1_C."""
    return integrate_over(convolve_indicator(a, c), b)


def polarization_step(a: IntervalSet, b: IntervalSet, c_interval: IntervalSet,
                      axis: PolarizationAxis):
    """One polarization of (A, B) against an interval kernel C.

    C may be centered anywhere: the pairing <1_A * 1_C, 1_B> equals the
    centered-kernel pairing of A and B - center(C), so B is polarized in
    those shifted coordinates.  The gain is always >= 0.
    """
    if len(c_interval.arcs) != 1:
        raise AxisMismatch("the kernel C must be a single arc")
    c0 = c_interval.arcs[0].center
    a_pol = polarize(a, axis)
    b_pol = polarize(b.translate(-c0), axis).translate(c0)
    gain = _interval_pairing(a_pol, c_interval, b_pol) - _interval_pairing(
        a, c_interval, b
    )
    return a_pol, b_pol, gain


def _arc_overlap(e: IntervalSet, center, halfwidth):
    """m(E intersect [center - halfwidth, center + halfwidth]), exact."""
    b1, b2 = mod1(center) - halfwidth, mod1(center) + halfwidth
    total = ZERO
    for left, right in e.segments():
        for k in (-1, 0, 1):
            lo = left if left > b1 + k else b1 + k
            hi = right if right < b2 + k else b2 + k
            if hi > lo:
                total += hi - lo
    return total


def best_translate(e: IntervalSet):
    """(y, dist) minimizing m(E symdiff (E* + y)); exact breakpoint search."""
    mu = e.measure
    if e.is_empty or e.is_full:
        return ZERO, ZERO
    half = mu / 2
    candidates = set()
    for p in e.endpoints():
        candidates.add(mod1(p - half))
        candidates.add(mod1(p + half))
    best_y, best_ov = None, None
    for y in sorted(candidates):
        ov = _arc_overlap(e, y, half)
        if best_ov is None or ov > best_ov:
            best_y, best_ov = y, ov
    return best_y, 2 * (mu - best_ov)


def _axis_candidates(e: IntervalSet, y, tier: int, grid_denom: int = 16):
    """Axis pools of increasing size.

    Tier 0: reflections carrying arc centers onto the target center, plus
    target-fixing quarter offsets and a coarse grid.  Tier 1: half-sums of
    all endpoint pairs (set and target), which realize exact sliver-into-gap
    swaps.  Tier 2: a denser grid.
    """
    cands = set()
    half = e.measure / 2
    if tier == 0:
        for arc in e.arcs:
            m = mod1((arc.center + y) / 2)
            cands.add(m)
            cands.add(mod1(m + HALF))
        cands.add(mod1(y - Q(1, 4)))
        cands.add(mod1(y + Q(1, 4)))
        for k in range(grid_denom):
            cands.add(Q(k, grid_denom))
    else:
        pts = set(e.endpoints())
        pts.add(mod1(y - half))
        pts.add(mod1(y + half))
        pts = sorted(pts)
        for i, p in enumerate(pts):
            for q in pts[i:]:
                m = mod1((p + q) / 2)
                cands.add(m)
                cands.add(mod1(m + HALF))
        if tier >= 2:
            for k in range(grid_denom):
                cands.add(Q(k, grid_denom))
    return sorted(cands)


def symmetrize_by_polarization(e: IntervalSet, tol, max_steps: int):
    """Polarize greedily until E is within tol (in symmetric-difference
    measure) of some translate of its symmetrization."""
    if not (ZERO < e.measure < ONE):
        raise RangeError("measure must be in (0, 1)")
    tol = Q(tol)
    steps = []
    cur = e
    y, dist = best_translate(cur)
    grid = 16
    half = e.measure / 2
    while dist > tol:
        if len(steps) >= max_steps:
            raise MaxStepsExceeded(f"distance {dist} after {max_steps} steps")
        best = None
        for tier in (0, 1, 2):
            pool = _axis_candidates(cur, y, tier, grid)
            for a in pool:
                axis = PolarizationAxis(a)
                cand = polarize(cur, axis)
                if cand == cur:
                    continue
                # distance against the current best translate bounds the true
                # distance from above, so accepting surrogate < dist still
                # strictly decreases the tracked minimum
                surrogate = 2 * (cand.measure - _arc_overlap(cand, y, half))
                if surrogate < dist and (best is None or surrogate < best[0]):
                    best = (surrogate, axis, cand)
            if best is not None:
                break
            # the surrogate can miss axes that only help at a shifted
            # translate; re-rank the pool by the exact distance
            for a in pool:
                axis = PolarizationAxis(a)
                cand = polarize(cur, axis)
                if cand == cur:
                    continue
                _, cd = best_translate(cand)
                if cd < dist and (best is None or cd < best[0]):
                    best = (cd, axis, cand)
            if best is not None:
                break
        if best is None:
            if grid < 512:
                grid *= 2
                continue
            raise MaxStepsExceeded(f"no improving axis at distance {dist}")
        _, axis, cur = best
        steps.append(axis)
        y, dist = best_translate(cur)
    return cur, steps


def relaxed_defect(f: StepFn, g: StepFn, h: StepFn):
    """Star-interval pairing of the mass triple minus <f*g, h>; >= 0."""
    for fn in (f, g, h):
        if not fn.in_unit_range():
            raise RangeError("relaxed functions must take values in [0, 1]")
    star = rs_star_value(f.integral, g.integral, h.integral)
    return star - step_pl_inner(convolve_step(f, g), h)


def _is_symmetric_nonincreasing(f: StepFn) -> bool:
    if f.is_constant:
        return True
    if f.reflect() != f:
        return False
    cuts = sorted({ZERO, HALF, *(b for b in f.breakpoints if b < HALF)})
    mids = [(cuts[i] + cuts[i + 1]) / 2 for i in range(len(cuts) - 1)]
    vals = [f(m) for m in mids]
    return all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1))


def t_functional_step(f1: StepFn, f2: StepFn, f3: StepFn):
    """Exact T(f1,f2,f3) = integral of f1(x) f2(y) f3(-x-y)."""
    return step_pl_inner(convolve_step(f1, f2), f3.reflect())


def hl_compare(f1: StepFn, f2: StepFn, f3: StepFn):
    """T(1_I, f2, f3) - T(f1, f2, f3) >= 0 for symmetric nonincreasing inputs,
    I the arc centered at 0 with |I| = integral of f1."""
    for fn in (f1, f2, f3):
        if not fn.in_unit_range() or not _is_symmetric_nonincreasing(fn):
            raise ShapeError("inputs must be symmetric nonincreasing with values in [0,1]")
    mass = f1.integral
    if mass == ZERO:
        ind = StepFn((), (ZERO,))
    elif mass >= ONE:
        ind = StepFn((), (ONE,))
    else:
        ind = indicator(interval(-mass / 2, mass / 2))
    return t_functional_step(ind, f2, f3) - t_functional_step(f1, f2, f3)
