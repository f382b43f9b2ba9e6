"""Modular arithmetic primitives over odd primes.

Legendre and Jacobi symbols, least nonnegative residues, modular square
roots, the normalized two-squares decomposition of primes p = 1 (mod 4),
and deterministic prime enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

import numpy as np

# chi is stored as a full table below this bound, computed on demand above it
TABLE_LIMIT = 1 << 20

# deterministic Miller-Rabin witnesses, valid for n < 3.4e14
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for q in _MR_BASES:
        x = pow(q, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def lnr(x: int, p: int) -> int:
    """Least nonnegative residue of x modulo p."""
    return x % p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, via quadratic reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class ResidueTable:
    """Legendre character of a fixed odd prime p.

    ``chi[k]`` is (k/p) for 0 <= k < p. For p >= 2**20 the table is not
    materialized and ``chi`` is None; use :meth:`symbol` instead.
    """

    p: int
    half: int = field(init=False)
    chi: np.ndarray | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _require_odd_prime(self.p)
        object.__setattr__(self, "half", (self.p - 1) // 2)
        chi = None
        if self.p < TABLE_LIMIT:
            chi = np.full(self.p, -1, dtype=np.int8)
            j = np.arange(1, self.half + 1, dtype=np.int64)
            chi[(j * j) % self.p] = 1
            chi[0] = 0
            chi.setflags(write=False)
        object.__setattr__(self, "chi", chi)

    def symbol(self, k: int) -> int:
        k %= self.p
        if self.chi is not None:
            return int(self.chi[k])
        return legendre(k, self.p)

    def smallest_nonresidue(self) -> int:
        k = 2
        while self.symbol(k) != -1:
            k += 1
        return k


@lru_cache(maxsize=256)
def residue_table(p: int) -> ResidueTable:
    return ResidueTable(p)


def sqrt_mod(a: int, p: int) -> int:
    """Square root of a quadratic residue a modulo p (Tonelli-Shanks).

    Returns the smaller of the two roots r, p - r.
    """
    _require_odd_prime(p)
    a %= p
    if a == 0 or pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a nonzero quadratic residue mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def factorial_mod(n: int, p: int) -> int:
    acc = 1
    for k in range(2, n + 1):
        acc = acc * k % p
    return acc


def two_squares(p: int) -> tuple[int, int]:
    """Write p = x^2 + y^2 with x = 1 (mod 4) and y = ((p-1)/2)! x (mod p).

    The pair is found by running Euclid's algorithm on (p, sqrt(-1) mod p)
    until the remainder drops below sqrt(p), then normalized by sign and
    order to meet both congruences.
    """
    if p % 4 != 1:
        raise ValueError(f"two_squares needs p = 1 (mod 4), got {p}")
    _require_odd_prime(p)
    r0, r1 = p, sqrt_mod(p - 1, p)
    bound = isqrt(p)
    while r1 > bound:
        r0, r1 = r1, r0 % r1
    u = r1
    v = isqrt(p - u * u)
    if u * u + v * v != p:
        raise ArithmeticError(f"descent failed for p={p}")
    x, y = (u, v) if u % 2 else (v, u)
    if x % 4 != 1:
        x = -x
    w = factorial_mod((p - 1) // 2, p)
    if (y - w * x) % p:
        y = -y
    assert (y - w * x) % p == 0
    return x, y


def primes_in(lo: int, hi: int, residue_filter: tuple[int, int] | None = None) -> list[int]:
    """Primes in [lo, hi], ascending, optionally only those = r (mod m)."""
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    found = np.nonzero(sieve[lo:])[0] + lo
    if residue_filter is not None:
        r, m = residue_filter
        found = found[found % m == r % m]
    return [int(q) for q in found]
