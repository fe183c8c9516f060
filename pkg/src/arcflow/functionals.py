"""Scalar functionals on set triples: the triple pairing, its symmetrized
value on arcs, the two defects, the matching level tau, the sumset defect,
admissibility predicates, and the sharpened truncated bound."""

from __future__ import annotations

from dataclasses import dataclass

from .circle_sets import Arc, IntervalSet, sumset0
from .errors import EmptyInput, HypothesisViolated, RangeError
from .piecewise import clipped_integrals, convolve_indicator, integrate_over
from .rational import ONE, Q, ZERO, rat_str


def triple_functional(e1: IntervalSet, e2: IntervalSet, e3: IntervalSet):
    """Exact T(E1,E2,E3) = integral of 1_E1(x) 1_E2(y) 1_E3(-x-y) dx dy."""
    return integrate_over(convolve_indicator(e1, e2), e3.negate())


def _star(length) -> IntervalSet:
    length = Q(length)
    if length == ZERO:
        return IntervalSet.empty()
    if length >= ONE:
        return IntervalSet.full()
    return IntervalSet((Arc(ZERO, length / 2),))


def rs_star_closed_form(a, b, c):
    """Piecewise closed form for the pairing of three arcs (assertion target)."""
    # the pairing is symmetric, so relabel with a >= b >= c
    a, b, c = sorted((Q(a), Q(b), Q(c)), reverse=True)
    if c <= a - b:
        return c * b
    if a + b + c >= 2:
        return a * b - (a + b - 1) * (1 - c)
    return a * b - (a + b - c) ** 2 / 4


def rs_star_value(a, b, c):
    """Pairing of the three centered arcs of lengths a, b, c, by convolution."""
    a, b, c = Q(a), Q(b), Q(c)
    for v in (a, b, c):
        if not (ZERO <= v <= ONE):
            raise RangeError(f"arc length {v} outside [0, 1]")
    return integrate_over(convolve_indicator(_star(a), _star(b)), _star(c))


def defect_D(a: IntervalSet, b: IntervalSet, c: IntervalSet):
    """Symmetrized pairing minus the actual pairing: always >= 0."""
    star = rs_star_value(a.measure, b.measure, c.measure)
    return star - integrate_over(convolve_indicator(a, b), c)


def defect_Dprime(a: IntervalSet, b: IntervalSet, tau):
    """Truncated-integral defect at level tau."""
    tau = Q(tau)
    if tau < ZERO:
        raise RangeError("tau must be >= 0")
    star_conv = convolve_indicator(a.symmetrize(), b.symmetrize())
    _, star_over = clipped_integrals(star_conv, tau)
    _, over = clipped_integrals(convolve_indicator(a, b), tau)
    return star_over - over


def tau_C(a, b, c):
    """The level at which the symmetrized superlevel set has measure c."""
    a, b, c = Q(a), Q(b), Q(c)
    if c > a + b:
        raise RangeError(f"tau_C needs c <= a + b, got {rat_str(c)}")
    return (a + b - c) / 2


def kneser_defect(a: IntervalSet, b: IntervalSet):
    """measure(A +0 B) - min(measure A + measure B, 1); >= 0 exactly."""
    if a.is_empty or b.is_empty:
        raise EmptyInput("kneser_defect needs nonempty sets")
    return sumset0(a, b).measure - min(a.measure + b.measure, ONE)


@dataclass(frozen=True)
class AdmissibilityReport:
    measures: tuple
    admissible: bool
    strictly_admissible: bool
    eta_strict: object
    sum: object

    def eta_bounded_at(self, eta) -> bool:
        eta = Q(eta)
        return self.sum <= 2 - eta and min(self.measures) >= eta

    def to_json(self) -> dict:
        return {
            "measures": [rat_str(m) for m in self.measures],
            "admissible": self.admissible,
            "strictly_admissible": self.strictly_admissible,
            "eta_strict": rat_str(self.eta_strict),
            "sum": rat_str(self.sum),
        }


def admissibility(a, b, c, eta=None) -> AdmissibilityReport:
    """Exact admissibility predicates for a measure triple."""
    m = (Q(a), Q(b), Q(c))
    total = sum(m, ZERO)
    in_range = all(ZERO < v < ONE for v in m)
    slack = min(m[i % 3] + m[(i + 1) % 3] - m[(i + 2) % 3] for i in range(3))
    admissible = in_range and total < 2 and slack >= ZERO
    eta_strict = slack / max(m) if admissible else ZERO
    return AdmissibilityReport(
        measures=m,
        admissible=admissible,
        strictly_admissible=admissible and slack > ZERO,
        eta_strict=eta_strict,
        sum=total,
    )


def sharpened_bound(a, b, tau, s):
    """(rhs, h): the deficit-improved upper bound for the truncated integral
    when the superlevel set at tau has measure s."""
    a, b, tau, s = Q(a), Q(b), Q(tau), Q(s)
    if not (ZERO <= tau <= min(a, b)):
        raise HypothesisViolated("need 0 <= tau <= min(a, b)")
    if a + b + s > 2:
        raise HypothesisViolated("need a + b + s <= 2")
    sigma = (a + b - s) / 2
    if sigma <= min(a, b):
        h = (sigma - tau) ** 2
    else:
        h = (min(a, b) - tau) ** 2
    return (a - tau) * (b - tau) - h, h
