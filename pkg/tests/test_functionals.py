import itertools

import pytest

from arcflow.circle_sets import IntervalSet, from_segments, interval
from arcflow.errors import HypothesisViolated, RangeError
from arcflow.functionals import (
    admissibility,
    defect_D,
    defect_Dprime,
    kneser_defect,
    rs_star_closed_form,
    rs_star_value,
    sharpened_bound,
    tau_C,
    triple_functional,
)
from arcflow.rational import HALF, ONE, Q, ZERO

from conftest import random_set


def test_star_spot_values():
    assert rs_star_value(HALF, HALF, HALF) == Q(3, 16)
    assert rs_star_value(Q(1, 4), Q(1, 4), Q(1, 4)) == Q(3, 64)
    assert rs_star_value(Q(1, 4), Q(1, 3), Q(1, 10)) == Q(359, 14400)
    assert rs_star_value(Q(1, 4), Q(1, 4), Q(3, 4)) == Q(1, 16)


def test_star_matches_closed_form(rng):
    for _ in range(200):
        a, b, c = (Q(rng.randint(0, 64), 64) for _ in range(3))
        assert rs_star_value(a, b, c) == rs_star_closed_form(a, b, c)


def test_star_out_of_range():
    with pytest.raises(RangeError):
        rs_star_value(Q(3, 2), HALF, HALF)


def test_defect_quarter_arcs():
    a = interval(ZERO, Q(1, 4))
    assert defect_D(a, a, a) == Q(1, 64)


def test_defect_translation_covariance(rng):
    for _ in range(50):
        a, b, c = random_set(rng), random_set(rng), random_set(rng)
        x, y = Q(rng.randrange(64), 64), Q(rng.randrange(64), 64)
        assert defect_D(a.translate(x), b.translate(y),
                        c.translate(x + y)) == defect_D(a, b, c)


def test_triple_functional_permutation_symmetry(rng):
    for _ in range(20):
        sets = [random_set(rng) for _ in range(3)]
        vals = {triple_functional(*p) for p in itertools.permutations(sets)}
        assert len(vals) == 1


def test_defect_relates_to_symmetric_functional(rng):
    # the pairing defect equals the gap between the symmetrized and actual
    # triple functionals once the third set is reflected
    for _ in range(20):
        a, b, c = random_set(rng), random_set(rng), random_set(rng)
        star = triple_functional(a.symmetrize(), b.symmetrize(),
                                 c.negate().symmetrize())
        assert defect_D(a, b, c) == star - triple_functional(a, b, c.negate())


def test_dprime_translation_invariance():
    a = interval(ZERO, Q(1, 4))
    assert defect_Dprime(a, a, Q(1, 8)) == ZERO
    b = a.translate(Q(1, 3))
    assert defect_Dprime(a, b, Q(1, 8)) == ZERO


def test_dprime_nonnegative(rng):
    for _ in range(100):
        a, b = random_set(rng), random_set(rng)
        tau = Q(rng.randrange(0, 16), 64)
        if tau <= min(a.measure, b.measure):
            assert defect_Dprime(a, b, tau) >= ZERO


def test_tau_c():
    assert tau_C(Q(1, 4), Q(1, 4), Q(1, 4)) == Q(1, 8)
    with pytest.raises(RangeError):
        tau_C(Q(1, 10), Q(1, 10), HALF)


def test_kneser_defect_parallel_bohr_pair():
    from arcflow.bohr import bohr_to_set

    a = bohr_to_set(2, ZERO, Q(1, 16))
    b = bohr_to_set(2, Q(1, 4), Q(1, 8))
    assert kneser_defect(a, b) == ZERO


def test_admissibility_reports():
    r = admissibility(Q(1, 4), Q(1, 4), Q(1, 4))
    assert r.admissible and r.strictly_admissible and r.eta_strict == ONE
    r2 = admissibility(Q(1, 4), Q(1, 4), HALF)
    assert r2.admissible and not r2.strictly_admissible
    r3 = admissibility(Q(1, 10), Q(1, 10), HALF)
    assert not r3.admissible


def test_sharpened_bound_cases():
    rhs, h = sharpened_bound(Q(3, 10), Q(3, 10), Q(1, 10), Q(3, 10))
    assert (rhs, h) == (Q(15, 400), Q(1, 400))
    rhs2, h2 = sharpened_bound(Q(1, 10), HALF, Q(1, 20), Q(1, 10))
    assert h2 == Q(1, 400)
    with pytest.raises(HypothesisViolated):
        sharpened_bound(Q(1, 4), Q(1, 4), HALF, Q(1, 4))


def test_triple_functional_full_third(rng):
    for _ in range(20):
        a, b = random_set(rng), random_set(rng)
        assert triple_functional(a, b, IntervalSet.full()) == a.measure * b.measure
