from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadres.cyclo import (
    CycloElem,
    constant,
    cyclo_add,
    cyclo_mul,
    cyclo_mul_schoolbook,
    cyclo_neg,
    from_quad_elem,
    galois_action,
    gauss_sum,
    plus_product,
    plus_product_fold,
    root_power,
    to_quad_elem,
    to_quadratic,
    trace,
)
from quadres.modint import primes_in
from quadres.quadfield import QuadElem


def test_root_power_examples():
    assert root_power(5, 0).coeffs == (1, 0, 0, 0)
    assert root_power(5, 7).coeffs == (0, 0, 1, 0)
    assert root_power(5, 4).coeffs == (-1, -1, -1, -1)
    assert root_power(5, -1) == root_power(5, 4)


def test_zeta_times_zeta4_is_one():
    assert cyclo_mul(root_power(5, 1), root_power(5, 4)) == constant(5, 1)


def test_vanishing_sum():
    total = constant(7, 0)
    for k in range(7):
        total = cyclo_add(total, root_power(7, k))
    assert total.is_zero()


def test_mismatched_primes():
    with pytest.raises(ValueError):
        cyclo_mul(root_power(5, 1), root_power(7, 1))
    with pytest.raises(ValueError):
        cyclo_add(root_power(5, 1), root_power(7, 1))


def test_gauss_sum_squares_small():
    assert cyclo_mul(gauss_sum(5), gauss_sum(5)) == constant(5, 5)
    assert cyclo_mul(gauss_sum(7), gauss_sum(7)) == constant(7, -7)


@pytest.mark.parametrize("p", primes_in(3, 101))
def test_gauss_sum_square(p):
    g = gauss_sum(p)
    sign = 1 if p % 4 == 1 else -1
    assert cyclo_mul(g, g) == constant(p, sign * p)
    assert cyclo_mul_schoolbook(g, g) == constant(p, sign * p)


def test_trace_examples():
    assert trace(constant(11, 1)) == 10
    assert trace(root_power(11, 1)) == -1
    assert trace(gauss_sum(5)) == 0
    assert trace(gauss_sum(13)) == 0


def test_to_quadratic_examples():
    assert to_quadratic(constant(13, 3)) == (3, 0)
    assert to_quadratic(gauss_sum(13)) == (0, 1)
    assert to_quadratic(plus_product(5, 1)) == (Fraction(-1, 2), Fraction(1, 2))


def test_to_quadratic_rejects_outside_subfield():
    with pytest.raises(ValueError):
        to_quadratic(root_power(13, 1))
    with pytest.raises(ValueError):
        to_quadratic(constant(7, 1))


def test_plus_product_examples():
    z = lambda e: root_power(5, e)  # noqa: E731
    assert plus_product(5, 1) == cyclo_add(z(1), z(4))
    assert plus_product(7, 1) == constant(7, 1)
    assert plus_product(17, 1) == constant(17, -1)


def test_plus_product_7_by_hand():
    z = lambda e: root_power(7, e)  # noqa: E731
    factors = [cyclo_add(z(1), z(4)), cyclo_add(z(1), z(2)), cyclo_add(z(4), z(2))]
    prod = constant(7, 1)
    for f in factors:
        prod = cyclo_mul_schoolbook(prod, f)
    assert prod == constant(7, 1)


@pytest.mark.parametrize("p,a", [(5, 5), (7, 14), (3, 1)])
def test_plus_product_domain(p, a):
    with pytest.raises(ValueError):
        plus_product(p, a)


def _elements(p, n):
    coeff = st.integers(-9, 9)
    return st.lists(st.lists(coeff, min_size=p - 1, max_size=p - 1), min_size=n, max_size=n)


PRIMES_31 = primes_in(3, 31)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRIMES_31).flatmap(lambda p: st.tuples(st.just(p), _elements(p, 3))))
def test_ring_laws(data):
    p, raw = data
    x, y, z = (CycloElem(p, tuple(c)) for c in raw)
    assert cyclo_mul(x, y) == cyclo_mul(y, x)
    assert cyclo_mul(cyclo_mul(x, y), z) == cyclo_mul(x, cyclo_mul(y, z))
    assert cyclo_mul(x, cyclo_add(y, z)) == cyclo_add(cyclo_mul(x, y), cyclo_mul(x, z))
    assert cyclo_add(x, cyclo_neg(x)).is_zero()
    assert cyclo_mul(x, y) == cyclo_mul_schoolbook(x, y)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([5, 7, 13]).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.integers(-10**40, 10**40), min_size=p - 1, max_size=p - 1))))
def test_kronecker_handles_huge_coefficients(data):
    p, coeffs = data
    x = CycloElem(p, tuple(coeffs))
    y = CycloElem(p, tuple(reversed(coeffs)))
    assert cyclo_mul(x, y) == cyclo_mul_schoolbook(x, y)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_root_power_exponent_law(p):
    for e1 in range(2 * p):
        for e2 in range(2 * p):
            assert cyclo_mul(root_power(p, e1), root_power(p, e2)) == root_power(p, e1 + e2)


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(primes_in(5, 61, (1, 4))), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_to_quadratic_round_trip(p, a2, k):
    # (a2 + b2 sqrt p)/2 is integral iff a2 = b2 (mod 2)
    b2 = 2 * k + a2 % 2
    q = QuadElem(p, a2, b2)
    x = from_quad_elem(q)
    assert to_quadratic(x) == (Fraction(a2, 2), Fraction(b2, 2))
    assert to_quad_elem(x) == q


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 29])
def test_galois_conjugation_of_product(p):
    base = plus_product(p, 1)
    for a in range(1, p):
        assert galois_action(base, a) == plus_product(p, a)
        assert not plus_product(p, a).is_zero()


@pytest.mark.parametrize("p", primes_in(5, 73))
def test_tree_matches_fold(p):
    for a in (1, 2, p - 1):
        assert plus_product(p, a) == plus_product_fold(p, a)
