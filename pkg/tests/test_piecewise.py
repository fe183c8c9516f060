import pytest

from arcflow.circle_sets import IntervalSet, from_segments, interval
from arcflow.errors import RangeError
from arcflow.piecewise import (
    PLFn,
    StepFn,
    clipped_integrals,
    convolve_indicator,
    convolve_step,
    decreasing_rearrangement,
    indicator,
    integrate_over,
    pushforward,
    step_fn,
    step_pl_inner,
    superlevel,
    truncated_integrals,
)
from arcflow.rational import HALF, ONE, Q, ZERO

from conftest import random_set, random_step_fn


def test_convolution_triangle_profile():
    a = interval(-Q(1, 8), Q(1, 8))
    conv = convolve_indicator(a, a)
    assert conv(ZERO) == Q(1, 4)
    assert conv(Q(1, 4)) == ZERO
    assert conv(Q(1, 8)) == Q(1, 8)
    assert conv.integral == a.measure * a.measure


def test_convolution_mass_identity(rng):
    for _ in range(100):
        a, b = random_set(rng), random_set(rng)
        conv = convolve_indicator(a, b)
        assert conv.integral == a.measure * b.measure


def test_convolution_constant_case():
    a = interval(ZERO, HALF)
    conv = convolve_indicator(a, a.complement())
    # both sets are half circles, so overlap of translates is constant 1/4
    # only at the two balance points; profile is a wrapped triangle wave
    assert conv.integral == Q(1, 4)


def test_integrate_over_spot_values():
    a = interval(ZERO, Q(1, 4))
    conv = convolve_indicator(a, a)
    assert integrate_over(conv, a) == Q(1, 32)
    assert integrate_over(conv, IntervalSet.full()) == Q(1, 16)


def test_superlevel_of_triangle():
    a = interval(-Q(1, 8), Q(1, 8))
    conv = convolve_indicator(a, a)
    s = superlevel(conv, Q(1, 8))
    assert s == interval(-Q(1, 8), Q(1, 8))
    assert superlevel(conv, Q(1, 4)).is_empty  # plateau at the max excluded


def test_truncated_integrals():
    a = interval(ZERO, Q(1, 4))
    conv = convolve_indicator(a, a)
    below, above = truncated_integrals(a, a, Q(1, 8))
    assert below + above == conv.integral
    assert above == Q(1, 64)


def test_clipped_matches_truncated(rng):
    for _ in range(50):
        a, b = random_set(rng), random_set(rng)
        conv = convolve_indicator(a, b)
        tau = Q(rng.randrange(1, 16), 64)
        below, above = clipped_integrals(conv, tau)
        tbelow, tabove = truncated_integrals(a, b, tau)
        assert above == tabove
        assert below + above == conv.integral


def test_pushforward_degree_two():
    e = from_segments([(Q(7, 16), Q(1, 8)), (Q(15, 16), Q(1, 8))])
    f = pushforward(indicator(e), 2)
    # the two arcs are the degree-2 preimage of one arc, so the average is
    # its indicator
    assert f(ZERO) == ONE
    assert f(Q(1, 4)) == ZERO
    assert f.integral == e.measure


def test_pushforward_mass(rng):
    for _ in range(30):
        f = random_step_fn(rng)
        for n in (2, 3):
            assert pushforward(f, n).integral == f.integral


def test_decreasing_rearrangement_properties(rng):
    for _ in range(50):
        f = random_step_fn(rng)
        g = decreasing_rearrangement(f)
        assert g.integral == f.integral
        assert g.reflect() == g


def test_convolve_step_range_check():
    f = step_fn((ZERO, HALF), (Q(2), ZERO))
    with pytest.raises(RangeError):
        convolve_step(f, f)


def test_step_pl_inner_matches_indicator_pairing(rng):
    for _ in range(30):
        a, b, c = random_set(rng), random_set(rng), random_set(rng)
        conv = convolve_indicator(a, b)
        assert step_pl_inner(conv, indicator(c)) == integrate_over(conv, c)
