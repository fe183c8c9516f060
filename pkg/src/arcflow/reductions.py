"""Defect-preserving complementation, the exact overlap-translate solver,
and the doubling schedule that shrinks the larger set of a triple until its
measure matches the smaller one while at most doubling the truncated defect
per step."""

from __future__ import annotations

from dataclasses import dataclass

from .circle_sets import IntervalSet
from .errors import HypothesisViolated, RangeError, ScheduleStall
from .functionals import admissibility, defect_D, defect_Dprime, tau_C
from .rational import HALF, ONE, Q, ZERO, mod1, rat_str


def complement_transform(a: IntervalSet, b: IntervalSet, c: IntervalSet):
    """(complement A, complement B, C): the defect is invariant, exactly."""
    mu_a, mu_b, mu_c = a.measure, b.measure, c.measure
    if not (ZERO < mu_a < ONE and ZERO < mu_b < ONE):
        raise HypothesisViolated("measures of A and B must be in (0, 1)")
    report = admissibility(mu_a, mu_b, mu_c)
    if not report.admissible or report.sum > 2:
        raise HypothesisViolated("triple must be admissible with measure sum <= 2")
    ca, cb = a.complement(), b.complement()
    assert defect_D(ca, cb, c) == defect_D(a, b, c)
    return ca, cb, c


def _correlation(b: IntervalSet, x):
    """m(B intersect (x + B)), exact."""
    return b.intersect(b.translate(x)).measure


def overlap_translate(b: IntervalSet, t):
    """Smallest x >= 0 with m(B intersect (x+B)) = t, by exact inversion of
    the piecewise linear correlation along increasing x."""
    t = Q(t)
    mu = b.measure
    if b.is_empty or not (mu * mu <= t <= mu):
        raise RangeError(
            f"target overlap {rat_str(t)} outside [{rat_str(mu * mu)}, {rat_str(mu)}]"
        )
    if t == mu:
        return ZERO
    pts = sorted({mod1(p - q) for p in b.endpoints() for q in b.endpoints()} | {ZERO})
    pts.append(ONE)
    for i in range(len(pts) - 1):
        p, q = pts[i], pts[i + 1]
        if q == p:
            continue
        fp, fq = _correlation(b, p), _correlation(b, mod1(q))
        if fp == t:
            return p
        if (fp - t) * (fq - t) < 0 or fq == t:
            # linear on [p, q]: invert the chord
            x = p + (t - fp) * (q - p) / (fq - fp)
            return x if x < q else mod1(q)
    raise RangeError("no translate attains the target overlap")


@dataclass(frozen=True)
class ReductionStep:
    j: int
    b_j: object
    x_j: object
    measure_after: object
    dprime_after: object

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "b_j": rat_str(self.b_j),
            "x_j": rat_str(self.x_j),
            "measure_after": rat_str(self.measure_after),
            "dprime_after": rat_str(self.dprime_after),
        }


def reduce_to_equal(a: IntervalSet, b: IntervalSet, c: IntervalSet, eta):
    """(B', trace): B' a subset of B with m(B') = m(A), built by repeatedly
    intersecting B with a translate of itself.  The step sizes double while
    allowed, so the step count J obeys 2^J <= 2/eta^2, and the truncated
    defect at the matching level at most doubles per step (checked exactly).
    """
    eta = Q(eta)
    mu_a, mu_b, mu_c = a.measure, b.measure, c.measure
    if not (mu_c <= mu_a <= mu_b) or mu_a > HALF:
        raise HypothesisViolated("need m(C) <= m(A) <= m(B) and m(A) <= 1/2")
    report = admissibility(mu_a, mu_b, mu_c)
    if not (report.strictly_admissible and eta <= report.eta_strict
            and report.eta_bounded_at(eta)):
        raise HypothesisViolated("triple must be strictly admissible and bounded at eta")
    defect = defect_D(a, b, c)
    budget = eta * eta * mu_b / 400
    if defect > budget * budget:
        raise HypothesisViolated("defect too large for the reduction schedule")
    tau = tau_C(mu_a, mu_b, mu_c)
    d = (2 - mu_a - mu_b - mu_c) / 2
    cur = b
    trace = []
    dprime = defect_Dprime(a, cur, tau)
    p = 0
    j = 0
    while cur.measure > mu_a:
        mu = cur.measure
        need = mu - mu_a
        cap = mu - mu * mu
        step = d * 2**p
        advance = True
        if step >= need:
            if need <= cap:
                step = need
            else:
                step, advance = cap, False
        elif step > cap:
            step, advance = cap, False
        if step <= ZERO:
            raise ScheduleStall("no admissible step size")
        x = overlap_translate(cur, mu - step)
        nxt = cur.intersect(cur.translate(x))
        nd = defect_Dprime(a, nxt, tau)
        if nd > 2 * dprime:
            raise ScheduleStall("truncated defect more than doubled in one step")
        j += 1
        trace.append(ReductionStep(j, step, x, nxt.measure, nd))
        cur, dprime = nxt, nd
        if advance:
            p += 1
        if 2**j > 2 / (eta * eta):
            raise ScheduleStall("step count exceeded the doubling budget")
    return cur, trace
