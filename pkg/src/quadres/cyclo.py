"""Exact arithmetic in Z[zeta_p] and the products of zeta^(a j^2) + zeta^(a k^2).

An element is held in canonical form on the basis zeta^0, ..., zeta^(p-2),
with zeta^(p-1) rewritten as -(1 + zeta + ... + zeta^(p-2)). Internally,
products are formed on the length-p cyclic basis and folded back.

Dense multiplication packs both operands into single Python integers
(Kronecker substitution) so the convolution runs inside the big-integer
multiply; products of sparse operands are formed term by term.
:func:`cyclo_mul_schoolbook` is the direct double loop kept for checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .modint import residue_table
from .quadfield import QuadElem


@dataclass(frozen=True)
class CycloElem:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    def __add__(self, other):
        return cyclo_add(self, other)

    def __sub__(self, other):
        return cyclo_add(self, cyclo_neg(other))

    def __neg__(self):
        return cyclo_neg(self)

    def __mul__(self, other):
        return cyclo_mul(self, other)

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        if self.is_constant():
            return str(self.coeffs[0])
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms)


def from_cyclic(p: int, vec) -> CycloElem:
    """Canonical form of sum vec[k] zeta^k over a length-p cyclic vector."""
    top = vec[p - 1]
    return CycloElem(p, tuple(vec[k] - top for k in range(p - 1)))


def to_cyclic(x: CycloElem) -> list[int]:
    return list(x.coeffs) + [0]


def constant(p: int, c: int) -> CycloElem:
    return CycloElem(p, (c,) + (0,) * (p - 2))


def root_power(p: int, e: int) -> CycloElem:
    vec = [0] * p
    vec[e % p] = 1
    return from_cyclic(p, vec)


def _same_p(x: CycloElem, y: CycloElem) -> None:
    if x.p != y.p:
        raise ValueError(f"mismatched primes {x.p} and {y.p}")


def cyclo_add(x: CycloElem, y: CycloElem) -> CycloElem:
    _same_p(x, y)
    return CycloElem(x.p, tuple(u + v for u, v in zip(x.coeffs, y.coeffs)))


def cyclo_neg(x: CycloElem) -> CycloElem:
    return CycloElem(x.p, tuple(-u for u in x.coeffs))


def _pack(coeffs, width: int) -> int:
    # each slot holds c + 2^(8*width - 1), so every digit is nonnegative
    half = 1 << (8 * width - 1)
    return int.from_bytes(b"".join((c + half).to_bytes(width, "little") for c in coeffs), "little")


def _offset(width: int, count: int) -> int:
    return int.from_bytes((1 << (8 * width - 1)).to_bytes(width, "little") * count, "little")


def _mul_sparse(p, xs, ys) -> CycloElem:
    vec = [0] * p
    for i, u in xs:
        for j, v in ys:
            vec[(i + j) % p] += u * v
    return from_cyclic(p, vec)


def cyclo_mul(x: CycloElem, y: CycloElem) -> CycloElem:
    _same_p(x, y)
    p = x.p
    xs = [(i, c) for i, c in enumerate(x.coeffs) if c]
    ys = [(i, c) for i, c in enumerate(y.coeffs) if c]
    if len(xs) * len(ys) <= 4 * p:
        return _mul_sparse(p, xs, ys)
    mx = max(map(abs, x.coeffs))
    my = max(map(abs, y.coeffs))
    # |product coefficient| <= (p-1) * mx * my, and slots must also carry
    # the offsets of the packed operands
    bound = max((p - 1) * mx * my, mx, my)
    width = (bound.bit_length() + 2 + (p - 1).bit_length()) // 8 + 2
    half = 1 << (8 * width - 1)
    n = p - 1
    ox, oy = _offset(width, n), _offset(width, n)
    X, Y = _pack(x.coeffs, width) - ox, _pack(y.coeffs, width) - oy
    count = 2 * p - 3
    z = X * Y + _offset(width, count)
    raw = z.to_bytes(width * count, "little")
    full = [int.from_bytes(raw[i * width : (i + 1) * width], "little") - half for i in range(count)]
    vec = full[:p]
    vec += [0] * (p - len(vec))
    for k in range(p, count):
        vec[k - p] += full[k]
    return from_cyclic(p, vec)


def cyclo_mul_schoolbook(x: CycloElem, y: CycloElem) -> CycloElem:
    _same_p(x, y)
    p = x.p
    vec = [0] * p
    for i, u in enumerate(x.coeffs):
        if u:
            for j, v in enumerate(y.coeffs):
                vec[(i + j) % p] += u * v
    return from_cyclic(p, vec)


def galois_action(x: CycloElem, a: int) -> CycloElem:
    """Image of x under the automorphism zeta -> zeta^a."""
    p = x.p
    if a % p == 0:
        raise ValueError(f"{p} divides a={a}")
    vec = [0] * p
    for k, c in enumerate(to_cyclic(x)):
        vec[a * k % p] += c
    return from_cyclic(p, vec)


def gauss_sum(p: int) -> CycloElem:
    """G = sum_{x=0}^{p-1} zeta^(x^2)."""
    vec = [0] * p
    for x in range(p):
        vec[x * x % p] += 1
    return from_cyclic(p, vec)


def trace(x: CycloElem) -> int:
    """Trace from Q(zeta_p) down to Q."""
    return (x.p - 1) * x.coeffs[0] - sum(x.coeffs[1:])


def to_quadratic(x: CycloElem) -> tuple[Fraction, Fraction]:
    """Coordinates (a, b) with x = a + b*sqrt(p), for x in Q(sqrt p), p = 1 (mod 4).

    Raises ValueError when x does not lie in the quadratic subfield.
    """
    p = x.p
    if p % 4 != 1:
        raise ValueError(f"sqrt({p}) is not in Q(zeta_{p}) as the Gauss sum; need p = 1 (mod 4)")
    g = gauss_sum(p)
    a = Fraction(trace(x), p - 1)
    b = Fraction(trace(cyclo_mul(x, g)), p * (p - 1))
    if a.denominator not in (1, 2) or b.denominator not in (1, 2):
        raise ValueError(f"{x} is not an algebraic integer of Q(sqrt {p})")
    # 2x = 2a + 2b G must match exactly
    rebuilt = cyclo_add(constant(p, int(2 * a)), cyclo_mul(constant(p, int(2 * b)), g))
    if rebuilt != CycloElem(p, tuple(2 * c for c in x.coeffs)):
        raise ValueError(f"element does not lie in Q(sqrt {p})")
    return a, b


def to_quad_elem(x: CycloElem) -> QuadElem:
    a, b = to_quadratic(x)
    return QuadElem(x.p, int(2 * a), int(2 * b))


def from_quad_elem(q: QuadElem) -> CycloElem:
    """Embed (a + b*sqrt(p))/2 into Z[zeta_p] via sqrt(p) = G."""
    p = q.D
    g = gauss_sum(p)
    twice = cyclo_add(constant(p, q.a), cyclo_mul(constant(p, q.b), g))
    return CycloElem(p, tuple(c // 2 for c in twice.coeffs))


def _check_product_args(p: int, a: int) -> None:
    if p < 5:
        raise ValueError(f"plus_product needs p >= 5, got {p}")
    residue_table(p)  # validates p
    if a % p == 0:
        raise ValueError(f"{p} divides a={a}")


def plus_factors(p: int, a: int) -> list[tuple[int, int]]:
    """Exponent pairs (a j^2 mod p, a k^2 mod p) for 1 <= j < k <= (p-1)/2."""
    half = (p - 1) // 2
    e = [a * j * j % p for j in range(half + 1)]
    return [(e[j], e[k]) for j in range(1, half + 1) for k in range(j + 1, half + 1)]


def _binomial(p: int, u: int, v: int) -> CycloElem:
    vec = [0] * p
    vec[u] += 1
    vec[v] += 1
    return from_cyclic(p, vec)


def plus_product(p: int, a: int = 1) -> CycloElem:
    """prod_{1<=j<k<=(p-1)/2} (zeta^(a j^2) + zeta^(a k^2)) by a balanced product tree."""
    _check_product_args(p, a)
    level = [_binomial(p, u, v) for u, v in plus_factors(p, a)]
    while len(level) > 1:
        nxt = [cyclo_mul(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def plus_product_fold(p: int, a: int = 1) -> CycloElem:
    """Same product as a left fold, each step a shift-and-add by one binomial."""
    _check_product_args(p, a)
    vec = [1] + [0] * (p - 1)
    for u, v in plus_factors(p, a):
        vec = [vec[(k - u) % p] + vec[(k - v) % p] for k in range(p)]
        # subtracting a multiple of 1 + zeta + ... + zeta^(p-1) keeps entries small
        top = vec[p - 1]
        vec = [c - top for c in vec]
    return from_cyclic(p, vec)
