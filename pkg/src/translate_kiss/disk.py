"""Construction of the staircase disks and their recursive sub-copy structure.

A disk with parameters (m, n) is the union of 2^n horizontal bars of size
m x 1 and 2^n - 1 vertical connectors of width 1, where connector i has
height ruler(i).  Bars i and i+1 are joined through connector i, so the
whole union is a topological disk whose pieces form a single path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .rect import Rect, Vec2
from .ruler import PrefixTable, prefix_sum

BAR = "bar"
CONNECTOR = "connector"


@dataclass(frozen=True)
class Piece:
    """One named rectangle of the union: bar B_i or connector V_i."""

    role: str
    index: int
    rect: Rect

    @property
    def name(self) -> str:
        return ("B" if self.role == BAR else "V") + str(self.index)


@dataclass(frozen=True)
class Shape:
    """A built disk: pieces in construction order B1, V1, B2, ..., B_{2^n}."""

    m: int
    n: int
    pieces: tuple[Piece, ...]

    def rects(self) -> list[Rect]:
        return [p.rect for p in self.pieces]

    def bounding_box(self) -> Rect:
        rs = self.rects()
        return Rect(
            min(r.x0 for r in rs),
            min(r.y0 for r in rs),
            max(r.x1 for r in rs),
            max(r.y1 for r in rs),
        )

    @property
    def height(self) -> int:
        bb = self.bounding_box()
        return bb.y1 - bb.y0


@dataclass(frozen=True)
class SubCopyRef:
    """Copy number `copy` among the 2^(n-level) sub-disks at a given level.

    level k addresses the tiling of the bars by 2^(n-k) translates of the
    (m, k) disk; level 0 addresses single bars.
    """

    level: int
    copy: int


def _validate_ref(n: int, ref: SubCopyRef) -> None:
    if not 0 <= ref.level <= n:
        raise ParameterError(f"level {ref.level} out of range 0..{n}")
    if not 1 <= ref.copy <= 2 ** (n - ref.level):
        raise ParameterError(
            f"copy {ref.copy} out of range 1..{2 ** (n - ref.level)} at level {ref.level}"
        )


def _build(m: int, n: int) -> Shape:
    bars = 2**n
    table = PrefixTable.build(max(bars, 1))
    pieces: list[Piece] = []
    for i in range(1, bars + 1):
        y = prefix_sum(i - 1, table)
        pieces.append(Piece(BAR, i, Rect((i - 1) * m, y, i * m, y + 1)))
        if i < bars:
            y_next = prefix_sum(i, table)
            pieces.append(Piece(CONNECTOR, i, Rect(i * m - 1, y + 1, i * m, y_next + 1)))
    return Shape(m=m, n=n, pieces=tuple(pieces))


def build_disk(m: int, n: int) -> Shape:
    """Build the (m, n) disk from the closed-form bar/connector coordinates."""
    if m < 2:
        raise ParameterError(f"need bar width m >= 2, got {m}")
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    return _build(m, n)


def sub_copy_offset(m: int, n: int, ref: SubCopyRef) -> Vec2:
    """Translation placing the origin of a level-k disk at its copy's spot."""
    if m < 2 or n < 1:
        raise ParameterError(f"invalid disk parameters m={m}, n={n}")
    _validate_ref(n, ref)
    first = (ref.copy - 1) * 2**ref.level
    table = PrefixTable.build(max(first, 1))
    return Vec2(first * m, prefix_sum(first, table))


def extract_sub_copy(shape: Shape, ref: SubCopyRef) -> Shape:
    """The pieces of one sub-copy, re-based and re-indexed to a fresh disk.

    For level >= 1 the result equals build_disk(shape.m, level) exactly;
    level 0 yields a single bar at the origin.
    """
    _validate_ref(shape.n, ref)
    base = (ref.copy - 1) * 2**ref.level
    last = ref.copy * 2**ref.level
    # pieces are interleaved B1 V1 B2 ... B_{2^n}: bar i sits at slot 2(i-1)
    span = shape.pieces[2 * base : 2 * (last - 1) + 1]
    first_bar = span[0].rect
    off = Vec2(first_bar.x0, first_bar.y0)
    pieces = tuple(
        Piece(p.role, p.index - base, p.rect.translate(-off)) for p in span
    )
    return Shape(m=shape.m, n=ref.level, pieces=pieces)
