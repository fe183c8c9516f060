import pytest

from arcflow.circle_sets import (
    Arc,
    IntervalSet,
    from_segments,
    interval,
    set_from_json,
    set_to_json,
    sumset0,
    symdiff_measure,
)
from arcflow.errors import EmptyInput, RangeError
from arcflow.rational import HALF, Q, ZERO

from conftest import random_set


def test_canonical_merge_of_touching_arcs():
    e = from_segments([(ZERO, Q(1, 4)), (Q(1, 4), Q(1, 4))])
    assert len(e.arcs) == 1
    assert e.measure == HALF


def test_wraparound_merge():
    e = from_segments([(Q(7, 8), Q(1, 4))])
    assert e == interval(-Q(1, 8), Q(1, 8))


def test_full_circle_canonical():
    e = from_segments([(ZERO, HALF), (HALF, HALF)])
    assert e.is_full
    assert e.arcs == (Arc(ZERO, HALF),)


def test_boolean_algebra_random(rng):
    for _ in range(200):
        a, b = random_set(rng), random_set(rng)
        union = a.union(b)
        inter = a.intersect(b)
        assert union.measure + inter.measure == a.measure + b.measure
        assert a.difference(b).measure == a.measure - inter.measure
        assert symdiff_measure(a, b) == union.measure - inter.measure
        assert a.complement().complement() == a


def test_translate_negate_involutions(rng):
    for _ in range(100):
        e = random_set(rng)
        y = Q(rng.randrange(64), 64)
        assert e.translate(y).translate(-y) == e
        assert e.negate().negate() == e
        assert e.translate(y).measure == e.measure


def test_symmetrize_is_centered_arc():
    e = from_segments([(Q(1, 8), Q(1, 8)), (Q(1, 2), Q(1, 4))])
    star = e.symmetrize()
    assert star == interval(-Q(3, 16), Q(3, 16))


def test_sumset_of_arcs():
    a = interval(-Q(1, 8), Q(1, 8))
    b = interval(-Q(1, 4), Q(1, 4))
    assert sumset0(a, b) == interval(-Q(3, 8), Q(3, 8))


def test_sumset_measure_lower_bound(rng):
    for _ in range(200):
        a, b = random_set(rng), random_set(rng)
        assert sumset0(a, b).measure >= min(a.measure + b.measure, Q(1))


def test_sumset_empty_raises():
    with pytest.raises(EmptyInput):
        sumset0(IntervalSet.empty(), interval(ZERO, Q(1, 4)))


def test_json_roundtrip(rng):
    for _ in range(50):
        e = random_set(rng)
        assert set_from_json(set_to_json(e)) == e


def test_json_rejects_malformed():
    for bad in ({}, {"arcs": [{"center": "1/4"}]},
                {"arcs": [{"center": "x", "halfwidth": "1/8"}]}):
        with pytest.raises(RangeError):
            set_from_json(bad)


def test_membership_and_endpoints():
    e = interval(ZERO, Q(1, 4))
    assert e.contains(Q(1, 8))
    assert e.contains(ZERO) and e.contains(Q(1, 4))
    assert not e.contains(HALF)
    assert list(e.endpoints()) == [ZERO, Q(1, 4)]
