import pytest

from arcflow.bohr import bohr_to_set
from arcflow.circle_sets import interval
from arcflow.errors import HypothesisViolated, RangeError
from arcflow.functionals import admissibility, defect_D
from arcflow.rational import HALF, ONE, Q, ZERO
from arcflow.reductions import complement_transform, overlap_translate, reduce_to_equal

from conftest import random_set


def test_complement_symmetric_halves():
    h = interval(-Q(1, 4), Q(1, 4))
    ca, cb, cc = complement_transform(h, h, h)
    assert defect_D(ca, cb, cc) == defect_D(h, h, h)


def test_complement_bohr_triple_stays_extremal():
    a = bohr_to_set(2, Q(1, 8), Q(1, 16))
    b = bohr_to_set(2, Q(1, 4), Q(1, 8))
    c = bohr_to_set(2, Q(3, 8), Q(3, 16))
    ca, cb, cc = complement_transform(a, b, c)
    assert defect_D(ca, cb, cc) == ZERO


def test_complement_random_instances(rng):
    count = 0
    while count < 30:
        a, b, c = random_set(rng), random_set(rng), random_set(rng)
        rep = admissibility(a.measure, b.measure, c.measure)
        if not rep.admissible or rep.sum > 2:
            continue
        complement_transform(a, b, c)  # internal exact defect equality check
        count += 1


def test_complement_hypothesis_gate():
    tiny = interval(ZERO, Q(1, 10))
    big = interval(ZERO, HALF)
    with pytest.raises(HypothesisViolated):
        complement_transform(tiny, tiny, big)


def test_overlap_translate_arc():
    b = interval(-Q(1, 6), Q(1, 6))
    assert overlap_translate(b, Q(1, 4)) == Q(1, 12)
    assert overlap_translate(b, b.measure) == ZERO


def test_overlap_translate_bohr():
    b = bohr_to_set(2, ZERO, Q(1, 8))
    x = overlap_translate(b, Q(1, 8))
    assert b.intersect(b.translate(x)).measure == Q(1, 8)


def test_overlap_translate_range_gate():
    b = interval(ZERO, Q(1, 4))
    with pytest.raises(RangeError):
        overlap_translate(b, Q(1, 32))  # below the mu^2 floor
    with pytest.raises(RangeError):
        overlap_translate(b, HALF)


def test_overlap_translate_random(rng):
    for _ in range(100):
        b = random_set(rng, max_arcs=3)
        mu = b.measure
        t = mu * mu + (mu - mu * mu) * Q(rng.randint(0, 16), 16)
        x = overlap_translate(b, t)
        assert b.intersect(b.translate(x)).measure == t


def test_reduce_trivial_equal_measures():
    a = interval(-Q(1, 8), Q(1, 8))
    bprime, trace = reduce_to_equal(a, a, a, Q(1, 4))
    assert bprime == a and trace == []


def test_reduce_interval_instance():
    a = interval(-Q(1, 8), Q(1, 8))
    b = interval(-Q(3, 16), Q(3, 16))
    c = interval(-Q(1, 8), Q(1, 8))
    bprime, trace = reduce_to_equal(a, b, c, Q(1, 4))
    assert bprime.measure == a.measure
    assert bprime.intersect(b) == bprime  # subset of B
    assert 2 ** len(trace) <= 2 / Q(1, 16)


def test_reduce_hypothesis_gate():
    a = interval(ZERO, Q(1, 4))
    b = interval(ZERO, Q(3, 8))
    c = interval(ZERO, Q(1, 4))
    # same measures, but the defect budget fails for an uncentered triple
    with pytest.raises(HypothesisViolated):
        reduce_to_equal(a, b, c, Q(1, 4))
