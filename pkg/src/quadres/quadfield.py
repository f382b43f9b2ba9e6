"""Exact arithmetic in real quadratic orders, fundamental units, class numbers.

Elements are stored as (a + b*sqrt(D))/2 with integer a, b. Real class
numbers come from counting cycles of reduced indefinite forms, imaginary
ones from Dirichlet's character-sum formula with a reduced-forms count as
an independent cross-check. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .modint import is_prime, legendre, residue_table


@dataclass(frozen=True)
class QuadElem:
    """The number (a + b*sqrt(D))/2."""

    D: int
    a: int
    b: int

    def __post_init__(self):
        if self.D % 4 == 1:
            if (self.a - self.b) % 2:
                raise ValueError(f"({self.a}+{self.b}*sqrt({self.D}))/2 is not integral")
        elif self.a % 2 or self.b % 2:
            raise ValueError(f"({self.a}+{self.b}*sqrt({self.D}))/2 is not integral")

    def __mul__(self, other):
        return quad_mul(self, other)

    def __neg__(self):
        return QuadElem(self.D, -self.a, -self.b)

    def __pow__(self, e):
        return quad_pow(self, e)

    def __str__(self):
        if self.b == 0 and self.a % 2 == 0:
            return str(self.a // 2)
        sign = "+" if self.b >= 0 else "-"
        return f"({self.a}{sign}{abs(self.b)}*sqrt({self.D}))/2"

    def is_positive(self) -> bool:
        """Sign of the real value a + b*sqrt(D), decided exactly."""
        a, b = self.a, self.b
        if b >= 0 and a >= 0:
            return a > 0 or b > 0
        if b <= 0 and a <= 0:
            return False
        # opposite signs: compare a^2 with D b^2
        return (a * a > self.D * b * b) if a > 0 else (self.D * b * b > a * a)


def quad_one(D: int) -> QuadElem:
    return QuadElem(D, 2, 0)


def _same_field(x: QuadElem, y: QuadElem) -> None:
    if x.D != y.D:
        raise ValueError(f"mixed discriminants {x.D} and {y.D}")


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    _same_field(x, y)
    # (a1 + b1 r)(a2 + b2 r)/4 = ((a1 a2 + D b1 b2) + (a1 b2 + a2 b1) r)/4
    a = x.a * y.a + x.D * x.b * y.b
    b = x.a * y.b + x.b * y.a
    return QuadElem(x.D, a // 2, b // 2)


def quad_conj(x: QuadElem) -> QuadElem:
    return QuadElem(x.D, x.a, -x.b)


def quad_norm(x: QuadElem) -> int:
    return (x.a * x.a - x.D * x.b * x.b) // 4


def quad_pow(x: QuadElem, e: int) -> QuadElem:
    if e < 0:
        n = quad_norm(x)
        if abs(n) != 1:
            raise ValueError(f"{x} is not a unit (norm {n})")
        inv = quad_conj(x) if n == 1 else -quad_conj(x)
        return quad_pow(inv, -e)
    result = quad_one(x.D)
    base = x
    while e:
        if e & 1:
            result = quad_mul(result, base)
        base = quad_mul(base, base)
        e >>= 1
    return result


def _require_1mod4(p: int) -> None:
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"expected a prime p = 1 (mod 4), got {p}")


def _require_3mod4(p: int) -> None:
    if p % 4 != 3 or not is_prime(p):
        raise ValueError(f"expected a prime p = 3 (mod 4), got {p}")


def _floor_quadratic(P: int, Q: int, s: int) -> int:
    # floor((P + sqrt(D))/Q) for non-square D with isqrt(D) = s
    if Q > 0:
        return (P + s) // Q
    return (-P - s - 1) // (-Q)


@lru_cache(maxsize=None)
def fundamental_unit(p: int) -> QuadElem:
    """Fundamental unit of Q(sqrt p) for a prime p = 1 (mod 4).

    Runs the continued fraction of (sqrt(p) - 1)/2 on (P, Q) states; the
    first convergent u/v with N(u + v*omega) = +-1, omega = (1+sqrt p)/2,
    gives the unit u + v*omega.
    """
    _require_1mod4(p)
    s = isqrt(p)
    P, Q = -1, 2
    h_prev, h = 1, _floor_quadratic(P, Q, s)
    k_prev, k = 0, 1
    seen = set()
    while True:
        # u + v*omega = ((2u + v) + v*sqrt p)/2
        unit = QuadElem(p, 2 * h + k, k)
        if abs(quad_norm(unit)) == 1:
            break
        a = _floor_quadratic(P, Q, s)
        P = a * Q - P
        Q = (p - P * P) // Q
        if (P, Q) in seen:
            raise ArithmeticError(f"period closed without a unit for p={p}")
        seen.add((P, Q))
        a = _floor_quadratic(P, Q, s)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    if quad_norm(unit) != -1:
        raise ArithmeticError(f"fundamental unit of Q(sqrt {p}) has norm +1")
    return unit


def character_sum(p: int, lo_num: int, lo_den: int, hi_num: int, hi_den: int) -> int:
    """Sum of (k/p) over lo < k < hi, bounds given as fractions of p."""
    table = residue_table(p)
    return sum(
        table.symbol(k)
        for k in range(1, p)
        if k * lo_den > lo_num * p and k * hi_den < hi_num * p
    )


@lru_cache(maxsize=None)
def class_number_imag(p: int) -> int:
    """h(-p) from (2 - (2/p)) h(-p) = sum_{k=1}^{(p-1)/2} (k/p)."""
    _require_3mod4(p)
    if p == 3:
        raise ValueError("Dirichlet's formula here needs p > 3")
    table = residue_table(p)
    if table.chi is not None:
        total = int(table.chi[1 : (p - 1) // 2 + 1].sum(dtype=np.int64))
    else:
        total = sum(table.symbol(k) for k in range(1, (p - 1) // 2 + 1))
    factor = 2 - legendre(2, p)
    h, rem = divmod(total, factor)
    if rem or h <= 0:
        raise ArithmeticError(f"inexact class number division for p={p}: {total}/{factor}")
    return h


def reduced_forms_imag(d: int) -> list[tuple[int, int, int]]:
    """Reduced positive definite primitive forms of negative discriminant d."""
    forms = []
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


@lru_cache(maxsize=None)
def class_number_imag_forms(p: int) -> int:
    _require_3mod4(p)
    return len(reduced_forms_imag(-p))


def reduced_forms_real(D: int) -> list[tuple[int, int, int]]:
    """Reduced indefinite forms (a, b, c) of discriminant D.

    Reduced means 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
    """
    forms = []
    for b in range(1, isqrt(D) + 1):
        if b * b >= D or (b * b - D) % 4:
            continue
        for m in range(1, isqrt(D) + b + 1):
            two_a = 2 * m
            if (two_a + b) ** 2 <= D:
                continue
            if two_a > b and (two_a - b) ** 2 >= D:
                continue
            for a in (m, -m):
                if (b * b - D) % (4 * a) == 0:
                    forms.append((a, b, (b * b - D) // (4 * a)))
    return forms


def _rho(form: tuple[int, int, int], D: int) -> tuple[int, int, int]:
    _, b, c = form
    s = isqrt(D)
    m = 2 * abs(c)
    if abs(c) < s + 1:
        # largest r = -b (mod 2|c|) with r < sqrt(D)
        r = s - ((s + b) % m)
    else:
        r = (-b) % m
        if r > abs(c):
            r -= m
    return c, r, (r * r - D) // (4 * c)


def form_cycles(D: int) -> list[list[tuple[int, int, int]]]:
    remaining = set(reduced_forms_real(D))
    cycles = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        cycle = [start]
        remaining.discard(start)
        f = _rho(start, D)
        while f != start:
            if f not in remaining:
                raise ArithmeticError(f"rho left the reduced set at {f} for D={D}")
            cycle.append(f)
            remaining.discard(f)
            f = _rho(f, D)
        cycles.append(cycle)
    return cycles


@lru_cache(maxsize=None)
def class_number_real(p: int) -> int:
    """h(p) as the number of rho-cycles of reduced forms of discriminant p.

    Cycles count narrow classes. The narrow and wide class numbers agree
    only because the fundamental unit has norm -1, which is asserted.
    """
    _require_1mod4(p)
    if quad_norm(fundamental_unit(p)) != -1:
        raise ArithmeticError(f"norm(eps_{p}) != -1; narrow class number differs")
    h = len(form_cycles(p))
    if h % 2 == 0:
        raise ArithmeticError(f"even class number {h} for p={p}")
    return h


@dataclass(frozen=True)
class ClassData:
    p: int
    h_real: int | None = None
    h_imag: int | None = None
    eps: QuadElem | None = None
    method: dict = field(default_factory=dict)


def class_data(p: int) -> ClassData:
    if p % 4 == 1:
        return ClassData(
            p,
            h_real=class_number_real(p),
            eps=fundamental_unit(p),
            method={"h_real": "form-cycles", "eps": "continued-fraction"},
        )
    if p > 3:
        return ClassData(p, h_imag=class_number_imag(p), method={"h_imag": "dirichlet"})
    return ClassData(p)
