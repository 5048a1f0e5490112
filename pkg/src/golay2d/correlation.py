"""Exact aperiodic correlations as integer combinations of q-th roots of unity.

Every summand of an aperiodic correlation over a q-ary array is xi^e with
xi = exp(2*pi*sqrt(-1)/q) and e in Z_q, so a correlation value is fully
described by counting how many summands land on each exponent.  We keep that
length-q integer count vector and decide zero (and equality) by reducing the
polynomial sum_e counts[e] * x^e modulo the q-th cyclotomic polynomial: the
remainder vanishes exactly when the complex value does.  This removes all
floating-point tolerance from verification; complex numbers are a derived,
display-only view.

Out-of-range summands of a shifted correlation are handled by clipping the
summation bounds rather than padding the arrays.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np

from .boolfunc import QaryArray, require_even_q

__all__ = [
    "cyclotomic_polynomial",
    "CorrelationValue",
    "CorrelationTable",
    "cross_correlation",
    "auto_correlation",
    "auto_correlation_table",
    "cross_correlation_table",
    "correlation_sum",
]


def _exact_polydiv(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of integer polynomials (coefficients low degree first).

    den must be monic and must divide num exactly.
    """
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for j, pj in enumerate(den):
                num[k - dd + j] -= c * pj
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the q-th cyclotomic polynomial.

    Computed by dividing x^q - 1 by the cyclotomic polynomials of all proper
    divisors of q.  Cached per q; cost is negligible at the sizes used here.
    """
    if q < 1:
        raise ValueError("q must be positive")
    poly = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            poly = _exact_polydiv(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_counts(q: int, counts: tuple[int, ...]) -> tuple[int, ...]:
    """Remainder of sum_e counts[e] x^e modulo the q-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    rem = list(counts)
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            for j, pj in enumerate(phi):
                rem[k - deg + j] -= c * pj
    return tuple(rem[:deg])


class CorrelationValue:
    """Exact value sum_e counts[e] * xi^e for xi the primitive q-th root of unity.

    Counts may go negative (sums and differences of values stay exact).  Two
    values are equal when they are equal as algebraic numbers; rational
    integers additionally compare equal across different q and against plain
    Python ints.
    """

    __slots__ = ("q", "counts", "reduced")

    def __init__(self, q, counts):
        q = require_even_q(q)
        counts = tuple(int(x) for x in counts)
        if len(counts) != q:
            raise ValueError(f"need exactly q={q} exponent counts, got {len(counts)}")
        self.q = q
        self.counts = counts
        self.reduced = _reduce_counts(q, counts)

    @classmethod
    def zero(cls, q) -> "CorrelationValue":
        return cls(q, (0,) * q)

    @classmethod
    def from_int(cls, k, q) -> "CorrelationValue":
        counts = [0] * q
        counts[0] = int(k)
        return cls(q, counts)

    @classmethod
    def from_gaussian(cls, a, b, q) -> "CorrelationValue":
        """The Gaussian integer a + b*i; b != 0 requires q divisible by 4."""
        counts = [0] * q
        counts[0] = int(a)
        if b:
            if q % 4 != 0:
                raise ValueError(f"q={q} has no exact exponent for sqrt(-1)")
            counts[q // 4] = int(b)
        return cls(q, counts)

    def _require_same_q(self, other: "CorrelationValue"):
        if self.q != other.q:
            raise ValueError(f"alphabet mismatch: q={self.q} vs q={other.q}")

    def __add__(self, other):
        if not isinstance(other, CorrelationValue):
            return NotImplemented
        self._require_same_q(other)
        return CorrelationValue(self.q, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __neg__(self):
        return CorrelationValue(self.q, tuple(-a for a in self.counts))

    def __sub__(self, other):
        if not isinstance(other, CorrelationValue):
            return NotImplemented
        self._require_same_q(other)
        return CorrelationValue(self.q, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def conjugate(self) -> "CorrelationValue":
        """Complex conjugate: every exponent e is replaced by -e mod q."""
        return CorrelationValue(
            self.q, tuple(self.counts[(-e) % self.q] for e in range(self.q))
        )

    def is_zero(self) -> bool:
        return not any(self.reduced)

    def as_int(self) -> int | None:
        """The value as a rational integer, or None when it is not one."""
        if any(self.reduced[1:]):
            return None
        return self.reduced[0]

    def to_complex(self) -> complex:
        return sum(
            c * cmath.exp(2j * cmath.pi * e / self.q)
            for e, c in enumerate(self.counts)
            if c
        ) + 0j

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_int() == other
        if not isinstance(other, CorrelationValue):
            return NotImplemented
        a, b = self.as_int(), other.as_int()
        if a is not None or b is not None:
            return a == b
        return self.q == other.q and self.reduced == other.reduced

    def __hash__(self):
        k = self.as_int()
        if k is not None:
            return hash(k)
        return hash((self.q, self.reduced))

    def __repr__(self):
        return f"CorrelationValue(q={self.q}, counts={self.counts})"


def _require_compatible(c: QaryArray, d: QaryArray):
    if c.q != d.q:
        raise ValueError(f"alphabet mismatch: q={c.q} vs q={d.q}")
    if (c.L1, c.L2) != (d.L1, d.L2):
        raise ValueError(
            f"shape mismatch: {c.L1}x{c.L2} vs {d.L1}x{d.L2}"
        )


def cross_correlation(c: QaryArray, d: QaryArray, u1: int, u2: int) -> CorrelationValue:
    """Aperiodic cross-correlation of the complex arrays xi^c and xi^d at (u1, u2).

    Returns the exact value of sum_{g,i} xi^(c[g+u1, i+u2] - d[g, i]): the
    first array is the shifted one, with its out-of-range cells contributing
    nothing.  This orientation is what the frozen reference mate tables in
    the test suite follow.
    """
    _require_compatible(c, d)
    L1, L2, q = c.L1, c.L2, c.q
    if not (-L1 < u1 < L1 and -L2 < u2 < L2):
        raise ValueError(f"shift ({u1}, {u2}) outside (-{L1},{L1}) x (-{L2},{L2})")
    g0, g1 = max(0, -u1), min(L1, L1 - u1)
    i0, i1 = max(0, -u2), min(L2, L2 - u2)
    diff = (c.entries[g0 + u1:g1 + u1, i0 + u2:i1 + u2] - d.entries[g0:g1, i0:i1]) % q
    counts = np.bincount(diff.ravel(), minlength=q)
    return CorrelationValue(q, counts)


def auto_correlation(c: QaryArray, u1: int, u2: int) -> CorrelationValue:
    return cross_correlation(c, c, u1, u2)


class CorrelationTable:
    """Dense grid of exact correlation values over all aperiodic shifts.

    Values are indexed by (u1, u2) with -L1 < u1 < L1 and -L2 < u2 < L2.
    """

    __slots__ = ("q", "L1", "L2", "_grid")

    def __init__(self, q, L1, L2, grid):
        self.q = require_even_q(q)
        self.L1 = int(L1)
        self.L2 = int(L2)
        grid = tuple(tuple(row) for row in grid)
        if len(grid) != 2 * self.L1 - 1 or any(len(r) != 2 * self.L2 - 1 for r in grid):
            raise ValueError("grid must be (2*L1-1) x (2*L2-1)")
        self._grid = grid

    def value(self, u1: int, u2: int) -> CorrelationValue:
        if not (-self.L1 < u1 < self.L1 and -self.L2 < u2 < self.L2):
            raise ValueError(f"shift ({u1}, {u2}) out of range")
        return self._grid[u1 + self.L1 - 1][u2 + self.L2 - 1]

    def shifts(self):
        """All shifts in row-major order, u1 then u2 ascending."""
        for u1 in range(-(self.L1 - 1), self.L1):
            for u2 in range(-(self.L2 - 1), self.L2):
                yield (u1, u2)

    def items(self):
        for u1, u2 in self.shifts():
            yield (u1, u2), self.value(u1, u2)

    def __add__(self, other):
        if not isinstance(other, CorrelationTable):
            return NotImplemented
        if (self.q, self.L1, self.L2) != (other.q, other.L1, other.L2):
            raise ValueError("tables have different shape or alphabet")
        grid = [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self._grid, other._grid)
        ]
        return CorrelationTable(self.q, self.L1, self.L2, grid)

    def __eq__(self, other):
        if not isinstance(other, CorrelationTable):
            return NotImplemented
        return (
            (self.q, self.L1, self.L2) == (other.q, other.L1, other.L2)
            and all(
                a == b for ra, rb in zip(self._grid, other._grid) for a, b in zip(ra, rb)
            )
        )

    def __repr__(self):
        return f"CorrelationTable(q={self.q}, L1={self.L1}, L2={self.L2})"


def auto_correlation_table(c: QaryArray) -> CorrelationTable:
    """Full autocorrelation table; computes one half plane and conjugates.

    Uses the exact symmetry value(-u1, -u2) == value(u1, u2).conjugate(),
    which holds at the count-vector level.
    """
    L1, L2 = c.L1, c.L2
    grid: list[list] = [[None] * (2 * L2 - 1) for _ in range(2 * L1 - 1)]
    for u1 in range(L1):
        for u2 in range(-(L2 - 1), L2):
            if u1 == 0 and u2 < 0:
                continue
            v = cross_correlation(c, c, u1, u2)
            grid[u1 + L1 - 1][u2 + L2 - 1] = v
            grid[-u1 + L1 - 1][-u2 + L2 - 1] = v.conjugate()
    return CorrelationTable(c.q, L1, L2, grid)


def cross_correlation_table(c: QaryArray, d: QaryArray) -> CorrelationTable:
    """Full cross-correlation table (no symmetry to exploit)."""
    _require_compatible(c, d)
    L1, L2 = c.L1, c.L2
    grid = [
        [cross_correlation(c, d, u1, u2) for u2 in range(-(L2 - 1), L2)]
        for u1 in range(-(L1 - 1), L1)
    ]
    return CorrelationTable(c.q, L1, L2, grid)


def correlation_sum(values, q: int | None = None) -> CorrelationValue:
    """Entrywise sum of count vectors.  q is required when values is empty."""
    values = list(values)
    if not values:
        if q is None:
            raise ValueError("q is required to sum an empty collection of values")
        return CorrelationValue.zero(q)
    total = values[0]
    if q is not None and total.q != q:
        raise ValueError(f"alphabet mismatch: q={total.q} vs q={q}")
    for v in values[1:]:
        total = total + v
    return total
