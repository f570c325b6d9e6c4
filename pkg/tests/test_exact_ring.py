from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fockblocks.exact_ring import (
    ONE,
    V,
    ZERO,
    LaurentPoly,
    quantum_factorial,
    quantum_integer,
)

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=6).map(LaurentPoly)
nonzero = laurent.filter(bool)


def test_mul_examples():
    assert V * V.bar() == ONE
    a = LaurentPoly({0: 1, -1: -1})
    b = LaurentPoly({0: 1, 1: 1})
    assert a * b == LaurentPoly({1: 1, -1: -1})
    assert ZERO * a == ZERO


def test_bar_examples():
    assert V.bar() == LaurentPoly({-1: 1})
    assert LaurentPoly({0: 1, 2: 1}).bar() == LaurentPoly({0: 1, -2: 1})


def test_eval_one_examples():
    assert LaurentPoly({1: 1, -1: -1}).eval_one() == 0
    assert LaurentPoly({0: 1, 1: 1}).eval_one() == 2
    assert ZERO.eval_one() == 0


def test_canonical_form_drops_zeros():
    assert LaurentPoly({3: 0, 1: 2}) == LaurentPoly({1: 2})
    assert (V - V).is_zero()
    assert LaurentPoly(0) == 0 and LaurentPoly(5) == 5


def test_degrees_and_units():
    p = LaurentPoly({-2: 1, 3: -4})
    assert (p.low_degree, p.degree) == (-2, 3)
    assert LaurentPoly.monomial(-1, 4).is_unit()
    assert not LaurentPoly({0: 2}).is_unit()
    assert LaurentPoly.monomial(-1, 4).unit_inverse() == LaurentPoly.monomial(-1, -4)
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 2}).unit_inverse()


def test_quantum_integers():
    assert quantum_integer(3) == LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert quantum_factorial(3).eval_one() == 6
    assert quantum_factorial(0) == ONE


def test_divexact():
    a = quantum_factorial(4)
    assert a.divexact(quantum_integer(4)) == quantum_factorial(3)
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).divexact(LaurentPoly({0: 2}))


def test_str_and_parse():
    p = LaurentPoly({-1: -1, 0: 1, 3: 2})
    assert str(p) == "1 - v^-1 + 2v^3"
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.parse("-v^-1") == LaurentPoly({-1: -1})
    assert LaurentPoly.parse("0") == ZERO
    with pytest.raises(ValueError):
        LaurentPoly.parse("v^^2")


def test_json_roundtrip():
    p = LaurentPoly({-1: -1, 0: 1, 3: 2})
    assert p.to_json() == {"-1": -1, "0": 1, "3": 2}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_evaluate_fraction():
    assert LaurentPoly({-1: 1}).evaluate(2) == Fraction(1, 2)
    assert LaurentPoly({-1: 1, 1: 1}).evaluate(-1) == -2


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(laurent, laurent)
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurent, laurent)
def test_eval_one_is_homomorphism(a, b):
    assert (a * b).eval_one() == a.eval_one() * b.eval_one()
    assert (a + b).eval_one() == a.eval_one() + b.eval_one()


@given(laurent, nonzero)
def test_divexact_inverts_multiplication(a, b):
    assert (a * b).divexact(b) == a


@given(laurent)
def test_positive_negative_split(a):
    const = LaurentPoly(a.coefficient(0))
    assert a.positive_part() + a.negative_part() + const == a


@given(laurent)
def test_parse_roundtrip(a):
    assert LaurentPoly.parse(str(a)) == a
    assert hash(LaurentPoly.parse(str(a))) == hash(a)
