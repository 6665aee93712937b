"""Exact dimension arithmetic for q-ary Reed-Muller codes.

The dimension of RM(d, m) over F_q equals the number of exponent tuples
in {0, ..., q-1}^m with coordinate sum at most d.  This module computes
it by three independent routes (inclusion-exclusion formula, column
recursion, plain binomial for low degrees) so they can cross-check each
other.  Everything is unbounded-integer arithmetic; no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime_power(q: int) -> bool:
    """Return True iff q = p^k for a prime p and k >= 1 (trial division)."""
    if q < 2:
        return False
    if q > 2**32:
        raise ValueError("prime-power test only supported for q <= 2**32")
    p = None
    for c in range(2, math.isqrt(q) + 1):
        if q % c == 0:
            p = c
            break
    if p is None:
        return True  # q itself is prime
    while q % p == 0:
        q //= p
    return q == 1


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), zero whenever a < b or b < 0."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def _check_q(q: int) -> None:
    if not isinstance(q, int) or not is_prime_power(q):
        raise ValueError("q must be a prime power")


def _check_m(m: int) -> None:
    if m < -1:
        raise ValueError("m must be >= -1")


@lru_cache(maxsize=None)
def _rho(q: int, d: int, m: int) -> int:
    if d < 0 or m == -1:
        return 0
    if m == 0:
        return 1
    if d > m * (q - 1):
        return q**m  # every further degree term counts zero tuples
    # terms with q*j > i vanish (negative top), so j never exceeds d // q
    return sum(
        (-1) ** j * binomial(m, j) * binomial(m - 1 + i - q * j, m - 1)
        for i in range(d + 1)
        for j in range(min(m, d // q) + 1)
    )


def rho(q: int, d: int, m: int) -> int:
    """Dimension of RM(d, m) over F_q by the inclusion-exclusion formula.

    Conventions: 0 for d < 0 or m = -1, and 1 for d >= 0, m = 0.  For
    d >= m(q-1) the code fills the whole space, so the value is q^m.
    """
    _check_q(q)
    _check_m(m)
    return _rho(q, d, m)


def rho_binomial(q: int, d: int, m: int) -> int:
    """Dimension as C(m+d, d); only valid while 0 <= d <= q-1."""
    _check_q(q)
    _check_m(m)
    if d < 0 or d > q - 1:
        raise ValueError("rho_binomial requires 0 <= d <= q-1")
    return binomial(m + d, d)


def rho_recursive(q: int, d: int, m: int) -> int:
    """Dimension via the recursion over the last variable's exponent."""
    _check_q(q)
    _check_m(m)
    return _rho_rec(q, d, m)


@lru_cache(maxsize=None)
def _rho_rec(q: int, d: int, m: int) -> int:
    if d < 0 or m == -1:
        return 0
    if m == 0:
        return 1
    return sum(_rho_rec(q, d - i, m - 1) for i in range(min(d, q - 1) + 1))


@dataclass(frozen=True)
class CodeParams:
    """Validated parameter triple (q, d, m) of a Reed-Muller code RM(d, m).

    q must be a prime power and the degree must satisfy 1 <= d <= m(q-1);
    beyond that bound the code is the whole ambient space.
    """

    q: int
    d: int
    m: int

    def __post_init__(self):
        _check_q(self.q)
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not 1 <= self.d <= self.m * (self.q - 1):
            raise ValueError(f"d must be in [1, {self.m * (self.q - 1)}]")

    @property
    def length(self) -> int:
        """Block length q^m of the code."""
        return self.q**self.m

    @property
    def dimension(self) -> int:
        """Code dimension rho_q(d, m)."""
        return rho(self.q, self.d, self.m)
