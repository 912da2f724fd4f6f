"""
Tests for exact GF(p) / GF(p^2) arithmetic
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from exceptions import DivisionByZero, FiliformError, NotPrime, ReducibleModulus
from field import arith, frobenius, make_field

GF5 = make_field(5)
GF25 = make_field(5, (3, 0))  # t^2 + 3, irreducible since 2 is not a square mod 5


def test_prime_field_basics():
    assert GF5.order == 5
    assert GF5.is_prime_field
    assert GF5.describe() == "GF(5)"
    assert int(arith(GF5(3), GF5(4), "add")) == 2
    assert int(arith(GF5(2), None, "inv")) == 3
    assert int(arith(GF5(2), None, "pow", 5)) == 2
    assert int(arith(GF5(1), GF5(3), "sub")) == 3
    assert int(arith(GF5(2), None, "neg")) == 3


def test_scalar_reduces_integers():
    assert GF5.scalar(-1) == GF5(4)
    assert GF5.scalar(12) == GF5(2)
    assert GF25.scalar(-1) == GF25(4)


def test_non_prime_rejected():
    with pytest.raises(NotPrime):
        make_field(4)
    with pytest.raises(NotPrime):
        make_field(1)


def test_reducible_modulus_rejected():
    # t^2 has the root 0, t^2 + 4 = (t - 1)(t + 1)
    with pytest.raises(ReducibleModulus):
        make_field(5, (0, 0))
    with pytest.raises(ReducibleModulus):
        make_field(5, (4, 0))


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        arith(GF5(0), None, "inv")
    with pytest.raises(ZeroDivisionError):
        arith(GF25(0), None, "pow", -1)


def test_unknown_operation():
    with pytest.raises(ValueError):
        arith(GF5(1), GF5(1), "div")


def test_extension_generator():
    t = GF25.generator()
    assert GF25.order == 25
    assert not GF25.is_prime_field
    assert GF25.format(t) == "t"
    # t^2 = -3 = 2
    assert t * t == GF25.from_coefficients(2, 0)
    assert GF25.format(GF25.from_coefficients(1, 2)) == "2t+1"
    assert GF25.format(GF25.from_coefficients(0, 4)) == "4t"


def test_integer_code_is_a1_p_plus_a0():
    x = GF25.from_coefficients(3, 2)
    assert int(x) == 2 * 5 + 3
    assert GF25.coefficients(x) == (3, 2)


def test_prime_field_rejects_t_coefficient():
    with pytest.raises(ValueError):
        GF5.from_coefficients(1, 1)


def test_frobenius_is_not_identity_over_gf25():
    t = GF25.generator()
    assert frobenius(t) != t
    assert GF25.frobenius(t) == frobenius(t)


def test_frobenius_is_an_involution_over_gf25():
    elements = GF25.elements()
    assert (frobenius(frobenius(elements)) == elements).all()


def test_frobenius_fixes_prime_field():
    elements = GF5.elements()
    assert (frobenius(elements) == elements).all()


def test_element_listing():
    assert GF25.elements().size == 25
    assert GF25.nonzero_elements().size == 24
    assert int(GF25.nonzero_elements()[0]) == 1


@settings(deadline=None, max_examples=50)
@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
def test_gf25_distributivity(a, b, c):
    x, y, z = GF25(a), GF25(b), GF25(c)
    assert arith(x, arith(y, z, "add"), "mul") == arith(arith(x, y, "mul"), arith(x, z, "mul"), "add")


@settings(deadline=None, max_examples=50)
@given(st.integers(1, 24))
def test_gf25_inverse(a):
    x = GF25(a)
    assert x * arith(x, None, "inv") == GF25(1)


@settings(deadline=None, max_examples=50)
@given(st.integers(0, 24), st.integers(0, 24))
def test_frobenius_is_additive(a, b):
    x, y = GF25(a), GF25(b)
    assert frobenius(x + y) == frobenius(x) + frobenius(y)


def test_t_squared_plus_two():
    field = make_field(5, (2, 0))
    t = field.generator()
    assert arith(t, t, "mul") == field.scalar(3)
    assert frobenius(t) == field.from_coefficients(0, 4)
    assert field.format(frobenius(t)) == "4t"


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_every_inverse(p):
    field = make_field(p)
    x = field.nonzero_elements()
    assert (arith(x, None, "inv") * x == 1).all()


def test_every_inverse_over_gf25():
    x = GF25.nonzero_elements()
    assert (arith(x, None, "inv") * x == 1).all()


@pytest.mark.parametrize("modulus", [None, (3, 0)], ids=["gf5", "gf25"])
def test_frobenius_additive_on_all_pairs(modulus):
    elements = make_field(5, modulus).elements()
    x, y = elements[:, None], elements[None, :]
    assert (frobenius(x + y) == frobenius(x) + frobenius(y)).all()


def test_frobenius_additive_on_all_pairs_gf7():
    elements = make_field(7).elements()
    x, y = elements[:, None], elements[None, :]
    assert (frobenius(x + y) == frobenius(x) + frobenius(y)).all()


def test_missing_operands():
    with pytest.raises(FiliformError):
        arith(GF5(2), None, "pow")
    with pytest.raises(FiliformError):
        arith(GF5(2), None, "pow", 1.5)
    with pytest.raises(FiliformError):
        arith(GF5(2), None, "add")
