from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcheck.fields import (DivisionByZero, NotPrime, RootOrderUnavailable,
                              ZeroPolynomial, factor_poly, make_field,
                              poly_mul, poly_trim)


def test_make_field_examples():
    assert make_field(5, 4).omega == 2
    assert make_field(7, 1).omega == 1
    assert make_field("Q", 2).omega == Fraction(-1)
    assert make_field("Q", 1).omega == Fraction(1)


def test_make_field_determinism():
    a = make_field(13, 12)
    b = make_field(13, 12)
    assert a.omega == b.omega


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(6, 1)
    with pytest.raises(RootOrderUnavailable):
        make_field(7, 4)
    with pytest.raises(RootOrderUnavailable):
        make_field("Q", 3)


def test_scalar_arithmetic():
    f5 = make_field(5, 4)
    assert f5.inv(2) == 3
    assert f5.pow(f5.omega, 4) == 1
    fq = make_field("Q", 2)
    assert fq.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    with pytest.raises(DivisionByZero):
        f5.inv(0)
    with pytest.raises(DivisionByZero):
        fq.inv(Fraction(0))


def test_omega_primitive():
    for p, r in [(5, 4), (7, 3), (7, 6), (13, 12), (17, 8)]:
        f = make_field(p, r)
        assert f.pow(f.omega, r) == 1
        for s in range(1, r):
            assert f.pow(f.omega, s) != 1


def test_factor_examples():
    f3 = make_field(3, 2)
    f5 = make_field(5, 4)
    # x^2 - 1 = (x - 1)(x + 1) over F_3
    assert factor_poly(f3, [-1, 0, 1]) == [((1, 1), 1), ((2, 1), 1)]
    # x^2 + 1 over F_5 has roots 2 and 3
    assert factor_poly(f5, [1, 0, 1]) == [((2, 1), 1), ((3, 1), 1)]
    # x^2 + 1 irreducible over F_3
    assert factor_poly(f3, [1, 0, 1]) == [((1, 0, 1), 1)]


def test_factor_zero_raises():
    with pytest.raises(ZeroPolynomial):
        factor_poly(make_field(3, 2), [0, 0])


def test_factor_repeated_and_char_p():
    f3 = make_field(3, 2)
    # (x - 1)^3 = x^3 - 1 in characteristic 3 (derivative vanishes)
    assert factor_poly(f3, [-1, 0, 0, 1]) == [((2, 1), 3)]


def test_factor_char2():
    f2 = make_field(2, 1)
    # x^2 + x + 1 irreducible, x^2 + x = x(x+1)
    assert factor_poly(f2, [1, 1, 1]) == [((1, 1, 1), 1)]
    assert factor_poly(f2, [0, 1, 1]) == [((0, 1), 1), ((1, 1), 1)]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5 ** 7 - 1), st.sampled_from([3, 5, 7]))
def test_factor_remultiplies(code, p):
    f = make_field(p, 2 if p > 2 else 1)
    coeffs = []
    c = code
    for _ in range(7):
        coeffs.append(c % p)
        c //= p
    coeffs = poly_trim(coeffs)
    if not coeffs:
        return
    lead = coeffs[-1]
    prod = [lead]
    for irr, mult in factor_poly(f, coeffs):
        for _ in range(mult):
            prod = poly_mul(prod, list(irr), p)
    assert prod == coeffs


@settings(max_examples=60, deadline=None)
@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
def test_field_laws(a, b, c):
    for f in (make_field(7, 6), make_field("Q", 2)):
        x, y, z = f.of_int(a), f.of_int(b), f.of_int(c)
        assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        if x != 0:
            assert f.mul(x, f.inv(x)) == f.one()


def test_scalar_serialization():
    f5 = make_field(5, 4)
    assert f5.scalar_str(7) == "2"
    assert f5.scalar_from_str("2") == 2
    fq = make_field("Q", 2)
    assert fq.scalar_str(Fraction(-3, 4)) == "-3/4"
    assert fq.scalar_from_str("-3/4") == Fraction(-3, 4)
    assert fq.scalar_str(Fraction(6, 3)) == "2"
