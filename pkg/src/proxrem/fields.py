"""Arithmetic tables for GF(q), q a prime power up to 32.

Elements are encoded as integers 0..q-1. For prime q the encoding is the
residue itself; for q = p^m an element encodes its coefficient vector in
base p (little-endian), and multiplication reduces by a fixed built-in
irreducible polynomial. The tables are verified to satisfy the field axioms
when built, so downstream constructions can trust them blindly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


class FieldError(ValueError):
    """Raised for invalid or unsupported field orders."""


# Irreducible reduction polynomials, little-endian coefficients including the
# leading 1 (index = power of x).
_REDUCTION_POLYS: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 0, 1),  # x^2 + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}

MAX_ORDER = 32


def _prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m and p prime, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    t = q
    while t % p == 0:
        t //= p
        m += 1
    return (p, m) if t == 1 else None


@dataclass(frozen=True)
class FieldSpec:
    """GF(q) with full addition/multiplication tables over the integer encoding."""

    q: int
    p: int
    m: int
    add_table: tuple[tuple[int, ...], ...] = field(repr=False)
    mul_table: tuple[tuple[int, ...], ...] = field(repr=False)
    reduction: tuple[int, ...] | None = field(default=None, repr=False)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        row = self.add_table[a]
        return row.index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.mul_table[a].index(1)

    def dot3(self, x: tuple[int, int, int], y: tuple[int, int, int]) -> int:
        """Standard bilinear form x1*y1 + x2*y2 + x3*y3."""
        s = 0
        for xi, yi in zip(x, y):
            s = self.add_table[s][self.mul_table[xi][yi]]
        return s


def _extension_tables(q: int, p: int, m: int) -> tuple[list[list[int]], list[list[int]]]:
    red = _REDUCTION_POLYS[q]

    def to_poly(e: int) -> list[int]:
        coeffs = []
        for _ in range(m):
            coeffs.append(e % p)
            e //= p
        return coeffs

    def from_poly(coeffs: list[int]) -> int:
        v = 0
        for c in reversed(coeffs[:m]):
            v = v * p + c
        return v

    def mul_poly(a: list[int], b: list[int]) -> list[int]:
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(len(prod) - 1, m - 1, -1):
            f = prod[d]
            if f:
                for i in range(m + 1):
                    prod[d - m + i] = (prod[d - m + i] - f * red[i]) % p
        return prod[:m]

    polys = [to_poly(e) for e in range(q)]
    add = [
        [from_poly([(x + y) % p for x, y in zip(polys[a], polys[b])]) for b in range(q)]
        for a in range(q)
    ]
    mul = [[from_poly(mul_poly(polys[a], polys[b])) for b in range(q)] for a in range(q)]
    return add, mul


def _verify_tables(q: int, add: list[list[int]], mul: list[list[int]]) -> None:
    rng = range(q)
    for a in rng:
        if add[a][0] != a or mul[a][1] != a or mul[a][0] != 0:
            raise FieldError(f"GF({q}) identity axiom failed at element {a}")
        if not any(add[a][b] == 0 for b in rng):
            raise FieldError(f"GF({q}) element {a} has no additive inverse")
        if a != 0 and not any(mul[a][b] == 1 for b in rng):
            raise FieldError(f"GF({q}) element {a} has no multiplicative inverse")
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError(f"GF({q}) commutativity failed at ({a}, {b})")
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError(f"GF({q}) additive associativity failed at ({a}, {b}, {c})")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError(f"GF({q}) multiplicative associativity failed at ({a}, {b}, {c})")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError(f"GF({q}) distributivity failed at ({a}, {b}, {c})")


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build (and axiom-check) GF(q) for a prime power q in [2, 32]."""
    pp = _prime_power(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    p, m = pp
    if q > MAX_ORDER:
        raise FieldError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
    if m == 1:
        add = [[(a + b) % p for b in range(q)] for a in range(q)]
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        reduction = None
    else:
        if q not in _REDUCTION_POLYS:
            raise FieldError(f"no built-in reduction polynomial for GF({q})")
        add, mul = _extension_tables(q, p, m)
        reduction = _REDUCTION_POLYS[q]
    _verify_tables(q, add, mul)
    return FieldSpec(
        q=q,
        p=p,
        m=m,
        add_table=tuple(tuple(row) for row in add),
        mul_table=tuple(tuple(row) for row in mul),
        reduction=reduction,
    )
