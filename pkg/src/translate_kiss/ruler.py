"""Ruler sequence (OEIS A001511 by definition, no lookup), prefix sums, and
the minimal-prefix-sum window check.

``ruler(i)`` counts bits from the right up to and including the first set bit
of ``i``.  The sequence of these values gives the connector heights of the
rectilinear disks; its key property is that every length-k window has sum at
least the sum of the first k terms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, RangeError


def ruler(i: int) -> int:
    """Number of trailing zero bits of i, plus one.  Bit-inspection route."""
    if i < 1:
        raise ParameterError(f"ruler is defined for i >= 1, got {i}")
    return (i & -i).bit_length()


def ruler_by_halving(i: int) -> int:
    """Independent computation of ruler(i) by parity recursion.

    Uses only the rule that odd positions hold 1 and position 2j holds one
    more than position j.  Kept deliberately free of bit tricks so it can
    cross-check ruler().
    """
    if i < 1:
        raise ParameterError(f"ruler is defined for i >= 1, got {i}")
    h = 1
    while i % 2 == 0:
        i //= 2
        h += 1
    return h


@dataclass(frozen=True)
class PrefixTable:
    """Cached prefix sums of the ruler sequence.

    sums[i] is the sum of the first i terms; sums[0] == 0.  The table is
    built eagerly and never extends itself.
    """

    limit: int
    sums: tuple[int, ...]

    @classmethod
    def build(cls, limit: int) -> "PrefixTable":
        if limit < 1:
            raise ParameterError(f"table limit must be >= 1, got {limit}")
        sums = [0] * (limit + 1)
        acc = 0
        for i in range(1, limit + 1):
            acc += ruler(i)
            sums[i] = acc
        return cls(limit=limit, sums=tuple(sums))


def prefix_sum(i: int, table: PrefixTable) -> int:
    """Sum of the first i ruler terms (0 for i == 0)."""
    if i < 0:
        raise ParameterError(f"prefix_sum needs i >= 0, got {i}")
    if i > table.limit:
        raise RangeError(f"prefix_sum({i}) exceeds table limit {table.limit}")
    return table.sums[i]


def check_lemma1(k: int, r: int, table: PrefixTable) -> bool:
    """True iff the first k terms sum to at most the k terms starting at r."""
    if k < 1 or r < 1:
        raise ParameterError(f"need k, r >= 1, got k={k}, r={r}")
    if r + k - 1 > table.limit:
        raise RangeError(
            f"window [{r}, {r + k - 1}] exceeds table limit {table.limit}"
        )
    return table.sums[k] <= table.sums[r + k - 1] - table.sums[r - 1]


def check_lemma1_exhaustive(
    k_max: int, r_max: int, table: PrefixTable
) -> tuple[int, int] | None:
    """Check every window with k <= k_max and r + k - 1 <= r_max.

    Returns None if all windows pass, else the first failing (k, r) in
    lexicographic order.  Vectorized per k so the full desk-scale sweep
    stays well under a second.
    """
    if r_max > table.limit:
        raise RangeError(f"r_max {r_max} exceeds table limit {table.limit}")
    sums = np.asarray(table.sums[: r_max + 1], dtype=np.int64)
    for k in range(1, min(k_max, r_max) + 1):
        windows = sums[k:] - sums[: r_max + 1 - k]
        bad = np.nonzero(sums[k] > windows)[0]
        if bad.size:
            return (k, int(bad[0]) + 1)
    return None
