import pytest

from arcflow.errors import RangeError
from arcflow.rational import (
    HALF,
    ONE,
    Q,
    ZERO,
    circle_norm,
    mod1,
    parse_rat,
    rat_decimal,
    rat_str,
)


def test_parse_and_render_roundtrip():
    for text in ("1/4", "0", "7/3", "-3/8", "5"):
        assert rat_str(parse_rat(text)) == rat_str(Q(text.replace(" ", "")))


def test_parse_rejects_junk():
    for bad in ("", "a/b", "1/0", "1.5.2", "1//2"):
        with pytest.raises(RangeError):
            parse_rat(bad)


def test_mod1():
    assert mod1(Q(5, 4)) == Q(1, 4)
    assert mod1(Q(-1, 4)) == Q(3, 4)
    assert mod1(Q(3)) == ZERO
    assert mod1(Q(-7, 3)) == Q(2, 3)


def test_circle_norm():
    assert circle_norm(Q(3, 4)) == Q(1, 4)
    assert circle_norm(Q(1, 4)) == Q(1, 4)
    assert circle_norm(HALF) == HALF
    assert circle_norm(ONE) == ZERO


def test_rat_decimal_exact_dyadic():
    assert rat_decimal(Q(1, 4)) == "0.25"
    assert rat_decimal(ZERO) == "0"
    text = rat_decimal(Q(1, 3))
    assert text.startswith("0.3333333333333333333")
