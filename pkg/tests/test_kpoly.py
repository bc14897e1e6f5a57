import pytest
from hypothesis import given, settings, strategies as st

from ssv import ConsistencyError
from ssv.kpoly import K, KPoly, MINUS_ONE, ONE, ZERO, const


def test_zero_is_empty_map():
    assert ZERO.is_zero()
    assert KPoly({0: 0, 3: 0}).is_zero()
    assert (ONE - ONE).is_zero()


def test_no_stored_zero_coefficients():
    p = KPoly({2: 5, 1: 0, 0: -3})
    assert set(p.coeffs) == {2, 0}


def test_arithmetic():
    p = K * K - 2 * K + const(4)
    q = K + const(1)
    assert p + q == KPoly({2: 1, 1: -1, 0: 5})
    assert p * q == KPoly({3: 1, 2: -1, 1: 2, 0: 4})
    assert -p == KPoly({2: -1, 1: 2, 0: -4})
    assert p - p == ZERO


def test_int_equality():
    assert const(7) == 7
    assert ZERO == 0
    assert K != 1


def test_substitute():
    p = K * K + 3 * K - const(1)
    assert p.substitute(-2) == 4 - 6 - 1
    assert ZERO.substitute(5) == 0
    # the critical charge kills -K - 2 at n = 2
    assert KPoly({1: -1, 0: -2}).substitute(-2) == 0


def test_mul_k_shifts_exponents():
    p = 3 * K + const(2)
    assert p.mul_k() == KPoly({2: 3, 1: 2})


def test_div_exact():
    p = const(48) * K + const(-96)
    assert p.div_exact(48) == K - const(2)
    with pytest.raises(ConsistencyError):
        const(7).div_exact(2)


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(MINUS_ONE) == "-1"
    assert str(K) == "K"
    assert str(KPoly({1: -1, 0: -2})) == "-K - 2"
    assert str(KPoly({2: 1, 1: 3, 0: -4})) == "K^2 + 3*K - 4"
    assert str(KPoly({2: -2})) == "-2*K^2"


small_polys = st.dictionaries(st.integers(0, 3), st.integers(-50, 50), max_size=4).map(KPoly)


@settings(derandomize=True, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(derandomize=True, deadline=None)
@given(small_polys, small_polys, st.integers(-5, 5))
def test_substitution_is_a_morphism(a, b, k):
    assert (a + b).substitute(k) == a.substitute(k) + b.substitute(k)
    assert (a * b).substitute(k) == a.substitute(k) * b.substitute(k)
