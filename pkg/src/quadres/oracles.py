"""Slow brute-force references for every derived quantity.

Nothing here shares code with the production paths beyond Python's
built-in integers: symbols come from enumerating squares, counts from
nested loops, units and two-squares decompositions from exhaustive scans.
"""

from __future__ import annotations

from math import isqrt


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def inversion_count(seq):
    seq = list(seq)
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def s_count(p, a=1):
    half = (p - 1) // 2
    return sum(
        1
        for j in range(1, half + 1)
        for k in range(j + 1, half + 1)
        if (a * j * j) % p > (a * k * k) % p
    )


def t_count(p, a=1):
    half = (p - 1) // 2
    return sum(
        1
        for j in range(1, half + 1)
        for k in range(j + 1, half + 1)
        if 2 * ((a * k * k - a * j * j) % p) > p
    )


def wide_gap_count(p, a=1):
    half = (p - 1) // 2
    return sum(
        1
        for j in range(1, half + 1)
        for k in range(j + 1, half + 1)
        if 2 * abs((a * j * j) % p - (a * k * k) % p) > p
    )


def tri_inversions(p, delta):
    half = (p - 1) // 2
    T = [None] + [delta * m * (m + 1) // 2 % p for m in range(1, half + 1)]
    return sum(1 for j in range(1, half + 1) for k in range(j + 1, half + 1) if T[j] > T[k])


def shifted_count(p, a, b):
    n = (p - 1) // 2
    return sum(
        1
        for s in range(n + 1)
        for t in range(s)
        if (a * s * s - b) % p > (a * t * t - b) % p
    )


def count_below_b(p, a, b):
    target = legendre_by_squares(a, p)
    return sum(1 for r in range(1, b) if legendre_by_squares(r, p) == target)


def count_below_quarter(p, a, sign):
    target = sign * legendre_by_squares(a, p)
    return sum(1 for k in range(1, p) if 4 * k < p and legendre_by_squares(k, p) == target)


def pan_sign_by_inversions(n, c):
    half = (n - 1) // 2
    perm = []
    for j in range(1, half + 1):
        r = c * j % n
        perm.append(min(r, n - r))
    return -1 if inversion_count(perm) % 2 else 1


def jacobi_by_factoring(a, n):
    result = 1
    m, q = n, 3
    while m > 1:
        if q * q > m:
            q = m
        while m % q == 0:
            result *= legendre_by_squares(a, q)
            m //= q
        q += 2
    return result


def two_squares(p):
    """Scan x over odd values up to sqrt(p) and apply the sign conventions."""
    w = 1
    for k in range(2, (p - 1) // 2 + 1):
        w = w * k % p
    for x in range(-isqrt(p), isqrt(p) + 1):
        if x % 4 != 1:
            continue
        rest = p - x * x
        y = isqrt(rest)
        if y * y != rest:
            continue
        for cand in {y, -y}:
            if (cand - w * x) % p == 0:
                return x, cand
    raise ValueError(f"no representation found for {p}")


def fundamental_unit(p, b_limit=None):
    """Smallest (a, b), b >= 1, with |a^2 - p b^2| = 4; value (a + b sqrt p)/2.

    Returns None if no solution has b <= b_limit.
    """
    b = 1
    while b_limit is None or b <= b_limit:
        for target in (p * b * b - 4, p * b * b + 4):
            a = isqrt(target)
            if a > 0 and a * a == target:
                return a, b
        b += 1
    return None
