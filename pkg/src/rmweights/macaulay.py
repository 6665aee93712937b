"""Macaulay representations of nonnegative integers with respect to q.

Every N >= 0 has a unique expansion N = sum_{i=1..d} rho_q(i, m_i) with
coefficients -1 <= m_1 <= ... <= m_d such that entries q-1 positions
apart strictly increase unless both are -1.  Passing ``INFINITY`` for q
switches the summands to plain binomials C(m_i + i, i), which recovers
the classical d-binomial representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dims import binomial, is_prime_power, rho

INFINITY = float("inf")


def _check_qparam(qparam) -> None:
    if qparam == INFINITY:
        return
    if not isinstance(qparam, int) or not is_prime_power(qparam):
        raise ValueError("q must be a prime power or INFINITY")


def dim_term(qparam, i: int, m: int) -> int:
    """Value of the degree-i summand: rho_q(i, m), or C(m+i, i) at q = INFINITY."""
    if qparam == INFINITY:
        return binomial(m + i, i)
    return rho(qparam, i, m)


def validate(coeffs: Sequence[int], d: int, qparam) -> bool:
    """Check the ordering and spacing conditions on a coefficient tuple.

    Requires -1 <= m_1 <= ... <= m_d and, for finite q, that
    m_{i+q-1} > m_i for every i unless both entries are -1.  The
    spacing condition is vacuous at q = INFINITY.  The tuple is given
    highest degree first, (m_d, ..., m_1).
    """
    _check_qparam(qparam)
    if len(coeffs) != d:
        raise ValueError(f"expected {d} coefficients, got {len(coeffs)}")
    if any(c < -1 for c in coeffs):
        return False
    # coeffs runs m_d down to m_1, so it must be nonincreasing as stored
    if any(coeffs[j] < coeffs[j + 1] for j in range(d - 1)):
        return False
    if qparam != INFINITY:
        step = qparam - 1
        for i in range(1, d - step + 1):  # positions m_i and m_{i+q-1}
            low = coeffs[d - i]
            high = coeffs[d - i - step]
            if not (high > low or high == low == -1):
                return False
    return True


@dataclass(frozen=True)
class MacaulayRep:
    """A d-th Macaulay representation with respect to q (or INFINITY).

    coeffs holds (m_d, ..., m_1); n is the represented integer.  All
    three defining conditions are enforced at construction time.
    """

    qparam: int | float
    d: int
    coeffs: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not validate(self.coeffs, self.d, self.qparam):
            raise ValueError(f"invalid coefficient tuple {self.coeffs}")
        total = sum(
            dim_term(self.qparam, i, c)
            for i, c in zip(range(self.d, 0, -1), self.coeffs)
        )
        if total != self.n:
            raise ValueError(f"coefficients sum to {total}, not {self.n}")

    @property
    def binomial_tops(self) -> tuple[int, ...]:
        """Classical-form tops (m_d + d, ..., m_1 + 1), so n = sum C(top_i, i)."""
        return tuple(c + i for i, c in zip(range(self.d, 0, -1), self.coeffs))

    def term_values(self) -> tuple[int, ...]:
        """The individual summands, highest degree first."""
        return tuple(
            dim_term(self.qparam, i, c)
            for i, c in zip(range(self.d, 0, -1), self.coeffs)
        )


def _greedy_coefficient(qparam, i: int, remainder: int) -> int:
    """Largest m >= -1 with dim_term(q, i, m) <= remainder.

    dim_term is strictly increasing in m for i >= 1, so the bracket is
    found by doubling and then bisection.
    """
    lo = -1
    hi = 0
    while dim_term(qparam, i, hi) <= remainder:
        lo = hi
        hi = 2 * hi + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if dim_term(qparam, i, mid) <= remainder:
            lo = mid
        else:
            hi = mid
    return lo


def decompose(n: int, d: int, qparam) -> MacaulayRep:
    """Compute the d-th Macaulay representation of n with respect to qparam.

    Greedy from degree d down to 1: each coefficient is the unique
    m_i >= -1 with dim_term(i, m_i) <= remainder < dim_term(i, m_i + 1).
    """
    _check_qparam(qparam)
    if n < 0:
        raise ValueError("n must be >= 0")
    if d < 1:
        raise ValueError("d must be >= 1")
    coeffs = []
    remainder = n
    for i in range(d, 0, -1):
        c = _greedy_coefficient(qparam, i, remainder)
        remainder -= dim_term(qparam, i, c)
        coeffs.append(c)
    return MacaulayRep(qparam=qparam, d=d, coeffs=tuple(coeffs), n=n)


def recompose(coeffs, d: int | None = None, qparam=None) -> int:
    """Sum the summands of a coefficient tuple, rejecting invalid tuples.

    Accepts either a MacaulayRep or a raw (m_d, ..., m_1) sequence with
    explicit d and qparam.
    """
    if isinstance(coeffs, MacaulayRep):
        rep = coeffs
        coeffs, d, qparam = rep.coeffs, rep.d, rep.qparam
    if d is None or qparam is None:
        raise ValueError("d and qparam are required for a raw coefficient tuple")
    if not validate(coeffs, d, qparam):
        raise ValueError(f"invalid coefficient tuple {tuple(coeffs)}")
    return sum(dim_term(qparam, i, c) for i, c in zip(range(d, 0, -1), coeffs))


def compare(a: MacaulayRep, b: MacaulayRep) -> int:
    """Lexicographic order of two coefficient tuples: -1, 0 or 1.

    Equals the numeric order of the represented integers.  Both
    representations must share the same degree and the same qparam.
    """
    if a.d != b.d or a.qparam != b.qparam:
        raise ValueError("representations must share d and qparam")
    return (a.coeffs > b.coeffs) - (a.coeffs < b.coeffs)
