"""Pair counts and permutation signs built from residues {a j^2}_p.

Every count here is an exact integer. Inversion-shaped counts go through
:func:`inversions`, which switches to a merge-sort counter for long
sequences; the remaining pair counts are evaluated on the full upper
triangle with numpy. Plain nested-loop versions live in
:mod:`quadres.oracles`.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .modint import residue_table

# sequences longer than this use the O(n log n) merge counter
MERGE_THRESHOLD = 256


def _check_coprime(p: int, a: int) -> None:
    if a % p == 0:
        raise ValueError(f"{p} divides a={a}")


def square_residues(p: int, a: int) -> np.ndarray:
    """Vector of {a j^2}_p for j = 1..(p-1)/2."""
    j = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    return (a % p) * (j * j % p) % p


def _upper_pairs(mask: np.ndarray) -> int:
    return int(np.count_nonzero(np.triu(mask, 1)))


def inversions_merge(seq) -> int:
    """Number of pairs i < j with seq[i] > seq[j], by merge sort."""
    items = list(seq)
    count = 0
    width = 1
    n = len(items)
    buf = [0] * n
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if items[i] <= items[j]:
                    buf[k] = items[i]
                    i += 1
                else:
                    buf[k] = items[j]
                    count += mid - i
                    j += 1
                k += 1
            buf[k : k + mid - i] = items[i:mid]
            k += mid - i
            buf[k : k + hi - j] = items[j:hi]
        items, buf = buf, items
        width *= 2
    return count


def inversions(seq) -> int:
    arr = np.asarray(seq, dtype=np.int64)
    if len(arr) > MERGE_THRESHOLD:
        return inversions_merge(arr.tolist())
    return _upper_pairs(arr[:, None] > arr[None, :])


def count_below_quarter(p: int, a: int, sign: int) -> int:
    """|{1 <= k < p/4 : (k/p) = sign * (a/p)}|."""
    _check_coprime(p, a)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    table = residue_table(p)
    target = sign * table.symbol(a)
    return sum(1 for k in range(1, (p - 1) // 4 + 1) if table.symbol(k) == target)


def s_count(p: int, a: int = 1) -> int:
    """Pairs 1 <= j < k <= (p-1)/2 with {a j^2}_p > {a k^2}_p."""
    _check_coprime(p, a)
    return inversions(square_residues(p, a))


def t_count(p: int, a: int = 1) -> int:
    """Pairs 1 <= j < k <= (p-1)/2 with {a k^2 - a j^2}_p > p/2."""
    _check_coprime(p, a)
    r = square_residues(p, a)
    diff = (r[None, :] - r[:, None]) % p
    return _upper_pairs(2 * diff > p)


def wide_gap_count(p: int, a: int = 1) -> int:
    """Pairs 1 <= j < k <= (p-1)/2 with |{a j^2}_p - {a k^2}_p| > p/2."""
    _check_coprime(p, a)
    r = square_residues(p, a)
    gap = np.abs(r[:, None] - r[None, :])
    return _upper_pairs(2 * gap > p)


def triangular_residues(p: int, delta: int) -> np.ndarray:
    m = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    return delta * (m * (m + 1) // 2) % p


def tri_inversions(p: int, delta: int) -> int:
    """Pairs 1 <= j < k <= (p-1)/2 with {delta T_j}_p > {delta T_k}_p."""
    if p % 4 != 3:
        raise ValueError(f"tri_inversions needs p = 3 (mod 4), got {p}")
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")
    return inversions(triangular_residues(p, delta))


def shifted_count(p: int, a: int, b: int) -> int:
    """Pairs 0 <= t < s <= (p-1)/2 with {a s^2 - b}_p > {a t^2 - b}_p.

    Index 0 is included, and the later index s carries the larger value,
    so this counts ascents of the sequence rather than descents.
    """
    if p % 4 != 3:
        raise ValueError(f"shifted_count needs (p-1)/2 odd, got p={p}")
    if not (1 <= a <= p - 1 and 1 <= b <= p - 1):
        raise ValueError(f"a, b must lie in [1, {p - 1}]")
    s = np.arange(0, (p - 1) // 2 + 1, dtype=np.int64)
    vals = (a * (s * s % p) - b) % p
    # values are distinct, so ascents = all pairs - descents
    n = len(vals)
    return n * (n - 1) // 2 - inversions(vals)


@lru_cache(maxsize=256)
def _prefix_residue_counts(p: int) -> tuple[np.ndarray, np.ndarray]:
    chi = residue_table(p).chi
    if chi is None:
        chi = np.array([residue_table(p).symbol(k) for k in range(p)], dtype=np.int8)
    plus = np.concatenate(([0], np.cumsum(chi == 1)))
    minus = np.concatenate(([0], np.cumsum(chi == -1)))
    return plus, minus


def count_below_b(p: int, a: int, b: int) -> int:
    """|{0 < r < b : (r/p) = (a/p)}|."""
    _check_coprime(p, a)
    if not 1 <= b <= p - 1:
        raise ValueError(f"b must lie in [1, {p - 1}]")
    plus, minus = _prefix_residue_counts(p)
    # prefix[b] counts r in [0, b); r = 0 has symbol 0 and never matches
    counts = plus if residue_table(p).symbol(a) == 1 else minus
    return int(counts[b])


def pan_permutation(n: int, c: int) -> list[int]:
    """pi_c as a list: entry j-1 is the r in 1..(n-1)/2 with c j = +-r (mod n)."""
    if n <= 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and > 1, got {n}")
    if gcd(c, n) != 1:
        raise ValueError(f"c={c} is not coprime to n={n}")
    half = (n - 1) // 2
    perm = []
    for j in range(1, half + 1):
        r = c * j % n
        perm.append(r if r <= half else n - r)
    return perm


def pan_sign(n: int, c: int) -> int:
    """Sign of pi_c, from its cycle decomposition."""
    perm = pan_permutation(n, c)
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1
