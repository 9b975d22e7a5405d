import random
from fractions import Fraction

import pytest

from homalg import rat, rat_str


def test_parse_fraction_string():
    assert rat("1/3") == Fraction(1, 3)
    assert rat("-2/4") == Fraction(-1, 2)
    assert rat("7") == Fraction(7)
    assert rat(" -5/10 ") == Fraction(-1, 2)


def test_parse_rejects_garbage():
    for bad in ("", "1/0", "x", "1.5.2", "2/"):
        with pytest.raises(ValueError):
            rat(bad)


def test_render_round_trip():
    values = [Fraction(0), Fraction(5), Fraction(-3, 7), Fraction(22, 4)]
    for v in values:
        assert rat(rat_str(v)) == v
    assert rat_str(Fraction(-3, 7)) == "-3/7"
    assert rat_str(Fraction(4)) == "4"


def test_canonical_invariants():
    v = rat(Fraction(6, -8))
    assert v.denominator > 0
    assert v.numerator == -3 and v.denominator == 4
    assert rat("-6/8") == Fraction(-3, 4)


def test_field_laws_on_large_rationals():
    # numerators/denominators up to 10**6: exercises arbitrary precision
    rng = random.Random(20240531)

    def draw():
        return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))

    for _ in range(200):
        a, b, c = draw(), draw(), draw()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
