"""Definition-level checkers and a brute-force oracle for small instances.

A set of arrays is complementary when its autocorrelations sum to zero at
every nonzero shift and to N*L1*L2 at the origin; two complementary pairs
are mates when their pairwise cross-correlations cancel at every shift, the
origin included.  All decisions here are exact: sums of correlation values
are tested for zero algebraically, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfunc import QaryArray, require_even_q
from .correlation import (
    CorrelationValue,
    auto_correlation_table,
    cross_correlation_table,
)

__all__ = [
    "VerificationResult",
    "is_gcs",
    "is_gcap",
    "is_mate",
    "is_gcas",
    "brute_force_gcaps",
    "DEFAULT_MAX_VIOLATIONS",
    "DEFAULT_PAIR_BUDGET",
]

DEFAULT_MAX_VIOLATIONS = 16
DEFAULT_PAIR_BUDGET = 1 << 26


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one exact check.

    violations lists (shift, offending complex sum) pairs, capped at the
    checker's max_violations (truncated says whether the cap was hit);
    center_value is the exact correlation sum at zero shift.  passed is true
    exactly when no shift violated its predicted value and every input
    precondition held (notes lists any that did not).
    """

    passed: bool
    violations: tuple[tuple[tuple[int, int], complex], ...]
    center_value: CorrelationValue
    expected_center: int
    truncated: bool = False
    notes: tuple[str, ...] = ()


def _require_uniform(arrays):
    arrays = list(arrays)
    if not arrays:
        raise ValueError("need at least one array")
    q, L1, L2 = arrays[0].q, arrays[0].L1, arrays[0].L2
    for a in arrays[1:]:
        if a.q != q:
            raise ValueError(f"alphabet mismatch: q={a.q} vs q={q}")
        if (a.L1, a.L2) != (L1, L2):
            raise ValueError(f"shape mismatch: {a.L1}x{a.L2} vs {L1}x{L2}")
    return arrays


def _check_table_sum(total, expected_center, max_violations, notes=()):
    violations = []
    truncated = False
    for (u1, u2), value in total.items():
        expected = (
            CorrelationValue.from_int(expected_center, total.q)
            if (u1, u2) == (0, 0)
            else CorrelationValue.zero(total.q)
        )
        if value != expected:
            if len(violations) < max_violations:
                violations.append(((u1, u2), value.to_complex()))
            else:
                truncated = True
    center = total.value(0, 0)
    passed = not violations and not truncated and not notes
    return VerificationResult(
        passed, tuple(violations), center, expected_center, truncated, tuple(notes)
    )


def is_gcas(arrays, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> VerificationResult:
    """Check the complementary-set condition for N same-sized arrays."""
    arrays = _require_uniform(arrays)
    total = auto_correlation_table(arrays[0])
    for a in arrays[1:]:
        total = total + auto_correlation_table(a)
    expected = len(arrays) * arrays[0].L1 * arrays[0].L2
    return _check_table_sum(total, expected, max_violations)


def is_gcap(c: QaryArray, d: QaryArray, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> VerificationResult:
    """Check the complementary-pair condition (set condition with N = 2)."""
    return is_gcas([c, d], max_violations)


def is_gcs(sequences, q: int | None = None, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> VerificationResult:
    """Check the 1-D complementary-set condition.

    Accepts single-row arrays or plain integer sequences (q required for the
    latter).  Shifts in the result are reported as (0, u).
    """
    normalized = []
    for s in sequences:
        if isinstance(s, QaryArray):
            if s.L1 != 1:
                raise ValueError(f"sequence input is {s.L1}x{s.L2}, expected one row")
            normalized.append(s)
        else:
            if q is None:
                raise ValueError("q is required for plain integer sequences")
            normalized.append(QaryArray.from_sequence(q, s))
    return is_gcas(normalized, max_violations)


def is_mate(pair1, pair2, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> VerificationResult:
    """Check that two complementary pairs cancel each other at every shift.

    The cross-correlations of the aligned members must sum to zero for all
    shifts including the origin, so expected_center is 0.  Inputs that fail
    the pair condition themselves are reported in notes and fail the check.
    """
    c, d = pair1
    c2, d2 = pair2
    _require_uniform([c, d, c2, d2])
    notes = []
    if not is_gcap(c, d, max_violations).passed:
        notes.append("first pair fails the complementary-pair condition")
    if not is_gcap(c2, d2, max_violations).passed:
        notes.append("second pair fails the complementary-pair condition")
    total = cross_correlation_table(c, c2) + cross_correlation_table(d, d2)
    return _check_table_sum(total, 0, max_violations, notes)


def _index_to_entries(idx: int, q: int, L1: int, L2: int) -> np.ndarray:
    cells = L1 * L2
    digits = np.empty(cells, dtype=np.int64)
    for pos in range(cells - 1, -1, -1):
        digits[pos] = idx % q
        idx //= q
    return digits.reshape(L1, L2)


def brute_force_gcaps(q, L1, L2, budget: int = DEFAULT_PAIR_BUDGET):
    """Exhaustively list every ordered complementary pair of L1 x L2 arrays.

    Arrays are enumerated in lexicographic row-major order and all q^(2*L1*L2)
    ordered pairs are tested, so the budget (measured in pair evaluations)
    must cover that count.  Per-array autocorrelation tables are precomputed
    once; a pair passes when the reduced forms of the two tables cancel at
    every nonzero shift, which is the same exact test is_gcap performs.
    """
    q = require_even_q(q)
    n_arrays = q ** (L1 * L2)
    n_pairs = n_arrays * n_arrays
    if n_pairs > budget:
        raise ValueError(
            f"brute-force budget exceeded: {n_pairs} pair evaluations > budget {budget}"
        )
    shifts = [
        (u1, u2)
        for u1 in range(-(L1 - 1), L1)
        for u2 in range(-(L2 - 1), L2)
        if (u1, u2) != (0, 0)
    ]
    arrays = []
    reduced = []
    for idx in range(n_arrays):
        a = QaryArray(q, _index_to_entries(idx, q, L1, L2))
        table = auto_correlation_table(a)
        arrays.append(a)
        reduced.append([table.value(u1, u2).reduced for u1, u2 in shifts])
    out = []
    for ia in range(n_arrays):
        ra = reduced[ia]
        for ib in range(n_arrays):
            rb = reduced[ib]
            if all(
                not any(x + y for x, y in zip(va, vb))
                for va, vb in zip(ra, rb)
            ):
                out.append((arrays[ia], arrays[ib]))
    return out
