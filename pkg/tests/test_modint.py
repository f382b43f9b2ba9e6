import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadres import oracles
from quadres.modint import (
    ResidueTable,
    factorial_mod,
    is_prime,
    jacobi,
    legendre,
    lnr,
    primes_in,
    residue_table,
    sqrt_mod,
    two_squares,
)

SMALL_PRIMES = primes_in(3, 1000)


@pytest.mark.parametrize("a,p,expected", [(1, 7, 1), (14, 7, 0), (3, 7, -1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected
    assert oracles.legendre_by_squares(a, p) == expected


@pytest.mark.parametrize("p", [2, 9, 15, 1])
def test_legendre_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        legendre(1, p)


@pytest.mark.parametrize("a,n,expected", [(1, 9, 1), (2, 15, 1), (3, 7, -1)])
def test_jacobi_examples(a, n, expected):
    assert jacobi(a, n) == expected


def test_jacobi_rejects_even():
    with pytest.raises(ValueError):
        jacobi(3, 10)


@pytest.mark.parametrize("x,p,expected", [(10, 7, 3), (-1, 7, 6), (7, 7, 0)])
def test_lnr(x, p, expected):
    assert lnr(x, p) == expected


@pytest.mark.parametrize("a,p,expected", [(4, 13, 2), (1, 13, 1), (2, 7, 3)])
def test_sqrt_mod_examples(a, p, expected):
    assert sqrt_mod(a, p) == expected


@pytest.mark.parametrize("a,p", [(3, 7), (0, 7), (14, 7)])
def test_sqrt_mod_rejects(a, p):
    with pytest.raises(ValueError):
        sqrt_mod(a, p)


def test_two_squares_examples():
    assert two_squares(5) == (1, 2)
    assert two_squares(13) == (-3, -2)
    assert two_squares(17) == oracles.two_squares(17)
    assert two_squares(17)[0] == 1 and abs(two_squares(17)[1]) == 4


def test_two_squares_rejects_3mod4():
    with pytest.raises(ValueError):
        two_squares(7)


@pytest.mark.parametrize("p", primes_in(5, 3000, (1, 4)))
def test_two_squares_constraints_and_oracle(p):
    x, y = two_squares(p)
    assert x * x + y * y == p
    assert x % 4 == 1
    assert (y - factorial_mod((p - 1) // 2, p) * x) % p == 0
    if p < 800:
        assert (x, y) == oracles.two_squares(p)


@pytest.mark.parametrize(
    "lo,hi,filt,expected",
    [(3, 20, (1, 4), [5, 13, 17]), (3, 20, (3, 4), [3, 7, 11, 19]), (90, 100, None, [97])],
)
def test_primes_in(lo, hi, filt, expected):
    assert primes_in(lo, hi, filt) == expected


def test_primes_in_matches_trial_division():
    assert primes_in(2, 2000) == [n for n in range(2, 2001) if is_prime(n)]
    assert [n for n in range(2, 2000) if all(n % d for d in range(2, n))] == primes_in(2, 1999)


def test_is_prime_large():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31 - 3)  # divisible by 5
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@pytest.mark.parametrize("p", [3, 5, 7, 13, 101, 997])
def test_residue_table_invariants(p):
    t = ResidueTable(p)
    chi = t.chi
    assert chi[0] == 0
    assert np.count_nonzero(chi == 1) == np.count_nonzero(chi == -1) == (p - 1) // 2
    assert (chi[p - 1] == 1) == (p % 4 == 1)
    j, k = np.meshgrid(np.arange(p), np.arange(p))
    assert np.array_equal(chi[(j * k) % p], chi[j] * chi[k])


def test_residue_table_smallest_nonresidue():
    assert residue_table(7).smallest_nonresidue() == 3
    assert residue_table(17).smallest_nonresidue() == 3
    assert residue_table(71).smallest_nonresidue() == 7


def test_euler_criterion_sweep():
    for p in primes_in(3, 10_000):
        chi = residue_table(p).chi
        for a in (1, 2, 3, p - 1, p // 2, p // 3 + 1):
            euler = pow(a, (p - 1) // 2, p)
            assert int(chi[a % p]) % p == euler
            assert legendre(a, p) % p == euler


def test_jacobi_agrees_with_factoring():
    for n in range(1, 200, 2):
        for a in range(-3, 40):
            assert jacobi(a, n) == oracles.jacobi_by_factoring(a, n)


@settings(max_examples=300, deadline=None)
@given(
    st.integers(-10**6, 10**6),
    st.sampled_from([n for n in range(3, 1000, 2)]),
    st.sampled_from([n for n in range(3, 1000, 2)]),
)
def test_jacobi_multiplicative_in_modulus(a, n1, n2):
    from math import gcd

    if gcd(n1, n2) != 1:
        return
    assert jacobi(a, n1 * n2) == jacobi(a, n1) * jacobi(a, n2)


def test_jacobi_equals_legendre_on_primes():
    for p in SMALL_PRIMES[:60]:
        for a in range(p):
            assert jacobi(a, p) == legendre(a, p)


def test_sqrt_mod_all_residues():
    for p in SMALL_PRIMES:
        for a in {k * k % p for k in range(1, p)}:
            r = sqrt_mod(a, p)
            assert r * r % p == a
            assert 1 <= r <= (p - 1) // 2


def test_williams_currie_congruence():
    for p in primes_in(3, 5000, (1, 8)):
        chi = residue_table(p).chi
        w = pow(2, (p - 1) // 4, p)
        assert w in (1, p - 1)
        nonres = sum(1 for k in range(1, p) if 4 * k < p and chi[k] == -1)
        assert (w == 1) == (nonres % 2 == 0)
