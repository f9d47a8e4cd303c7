"""Placement of the n+1 translates and generation of disjointness test cases.

The translates A_1..A_n follow the recursion: the leftmost level-(n+1-i)
sub-copy of A_i coincides with the second such sub-copy of A_{i-1} shifted
right by one and down by one.  A_0 is A_1 shifted down by n+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .disk import SubCopyRef, build_disk, sub_copy_offset
from .errors import ConstructionBroken, ParameterError
from .rect import Rect, Vec2, union_interiors_disjoint
from .ruler import PrefixTable, prefix_sum


@dataclass(frozen=True)
class Scene:
    """Offsets of the translates A_0..A_n of one shared disk."""

    m: int
    n: int
    offsets: tuple[Vec2, ...]


@dataclass(frozen=True)
class Lemma2Case:
    """One instance of the stepping-disjointness lemma.

    The second translate's first bar is bar r of the first translate,
    shifted right by xstar and down by ystar.
    """

    m: int
    n: int
    r: int
    xstar: int
    ystar: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 2:
            raise ParameterError(f"need m, n >= 2, got m={self.m}, n={self.n}")
        if not 1 <= self.r <= 2**self.n:
            raise ParameterError(f"bar index r={self.r} out of range 1..{2 ** self.n}")
        if not 1 <= self.xstar <= self.m - 1:
            raise ParameterError(f"xstar={self.xstar} out of range 1..{self.m - 1}")
        if self.ystar < 1:
            raise ParameterError(f"ystar={self.ystar} must be >= 1")


def _check_theorem_params(m: int, n: int) -> None:
    if n < 2:
        raise ParameterError(f"construction needs n >= 2, got {n}")
    if m < n:
        raise ParameterError(f"construction needs m >= n, got m={m}, n={n}")


def place_translates(m: int, n: int) -> Scene:
    """Offsets t_0..t_n of the full construction, by the literal recursion."""
    _check_theorem_params(m, n)
    offsets = [Vec2(0, 0)]
    for i in range(2, n + 1):
        step = sub_copy_offset(m, n, SubCopyRef(level=n + 1 - i, copy=2))
        offsets.append(offsets[-1] + step + Vec2(1, -1))
    return Scene(m=m, n=n, offsets=(Vec2(0, -(n + 1)), *offsets))


def lemma2_instance(case: Lemma2Case) -> tuple[list[Rect], list[Rect]]:
    """The two rect lists of a lemma instance: one at the origin, one shifted."""
    shape = build_disk(case.m, case.n)
    table = PrefixTable.build(max(case.r - 1, 1))
    y_r = prefix_sum(case.r - 1, table)
    off = Vec2((case.r - 1) * case.m + case.xstar, y_r - case.ystar)
    return shape.rects(), [r.translate(off) for r in shape.rects()]


def iter_lemma2_cases(m: int, n: int) -> Iterator[Lemma2Case]:
    """All cases worth testing: beyond ystar = height + 1 the bounding
    boxes are vertically disjoint and every case is vacuous."""
    height = build_disk(m, n).height
    for r in range(1, 2**n + 1):
        for xstar in range(1, m):
            for ystar in range(1, height + 2):
                yield Lemma2Case(m=m, n=n, r=r, xstar=xstar, ystar=ystar)


def check_lemma2_exhaustive(m: int, n: int) -> Lemma2Case | None:
    """Check every case for (m, n); None if all disjoint, else first failure."""
    shape = build_disk(m, n)
    rects = shape.rects()
    table = PrefixTable.build(2**n)
    for case in iter_lemma2_cases(m, n):
        y_r = prefix_sum(case.r - 1, table)
        off = Vec2((case.r - 1) * m + case.xstar, y_r - case.ystar)
        shifted = [r.translate(off) for r in rects]
        if not union_interiors_disjoint(rects, shifted):
            return case
    return None


@dataclass(frozen=True)
class PairWitness:
    """Structural witness reducing an A_i/A_j pair to a lemma case.

    A_j's leftmost level sub-copy is copy `copy` at level `level` inside
    A_i, shifted right and down by j - i; `bar_index` is the first bar of
    that sub-copy, so the lemma applies with xstar = ystar = j - i.
    """

    level: int
    copy: int
    bar_index: int
    xstar: int
    ystar: int


def theorem_pair_witness(m: int, n: int, i: int, j: int) -> PairWitness:
    """Find the sub-copy of A_i that A_j's leftmost sub-copy steps off from."""
    _check_theorem_params(m, n)
    if not 1 <= i < j <= n:
        raise ParameterError(f"need 1 <= i < j <= n, got i={i}, j={j}")
    scene = place_translates(m, n)
    level = n + 1 - j
    shift = j - i
    target = scene.offsets[j] - scene.offsets[i] - Vec2(shift, -shift)
    for copy in range(1, 2 ** (n - level) + 1):
        if sub_copy_offset(m, n, SubCopyRef(level=level, copy=copy)) == target:
            return PairWitness(
                level=level,
                copy=copy,
                bar_index=(copy - 1) * 2**level + 1,
                xstar=shift,
                ystar=shift,
            )
    raise ConstructionBroken(
        f"no sub-copy of A_{i} matches A_{j}'s leftmost copy (m={m}, n={n})"
    )
