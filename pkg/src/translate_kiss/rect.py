"""Exact integer axis-aligned rectangle primitives.

Closed-rectangle semantics throughout: two rects "touch" when their closed
intersection is nonempty while their interiors are disjoint.  All
coordinates are Python ints, so every test here is exact.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import ContractViolation, ParameterError

POINT = "point"
HSEG = "horizontal-segment"
VSEG = "vertical-segment"


@dataclass(frozen=True, order=True)
class Vec2:
    dx: int
    dy: int

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.dx, -self.dy)


@dataclass(frozen=True, order=True)
class Rect:
    """Closed rectangle [x0, x1] x [y0, y1] with positive area."""

    x0: int
    y0: int
    x1: int
    y1: int

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ParameterError(f"degenerate rectangle {self!r}")

    @property
    def width(self) -> int:
        return self.x1 - self.x0

    @property
    def height(self) -> int:
        return self.y1 - self.y0

    def translate(self, v: Vec2) -> "Rect":
        return Rect(self.x0 + v.dx, self.y0 + v.dy, self.x1 + v.dx, self.y1 + v.dy)


@dataclass(frozen=True, order=True)
class ContactComponent:
    """A maximal point or axis-parallel segment of shared boundary."""

    kind: str
    a: tuple[int, int]
    b: tuple[int, int]
    length: int

    def __post_init__(self) -> None:
        if self.kind == POINT:
            if self.a != self.b or self.length != 0:
                raise ParameterError(f"inconsistent point component {self!r}")
        elif self.kind == HSEG:
            if self.a[1] != self.b[1] or self.b[0] - self.a[0] != self.length or self.length < 1:
                raise ParameterError(f"inconsistent horizontal segment {self!r}")
        elif self.kind == VSEG:
            if self.a[0] != self.b[0] or self.b[1] - self.a[1] != self.length or self.length < 1:
                raise ParameterError(f"inconsistent vertical segment {self!r}")
        else:
            raise ParameterError(f"unknown component kind {self.kind!r}")


def point_component(p: tuple[int, int]) -> ContactComponent:
    return ContactComponent(POINT, p, p, 0)


def hseg(y: int, xa: int, xb: int) -> ContactComponent:
    return ContactComponent(HSEG, (xa, y), (xb, y), xb - xa)


def vseg(x: int, ya: int, yb: int) -> ContactComponent:
    return ContactComponent(VSEG, (x, ya), (x, yb), yb - ya)


def interiors_overlap(a: Rect, b: Rect) -> bool:
    """Open-rectangle intersection test."""
    return (
        max(a.x0, b.x0) < min(a.x1, b.x1)
        and max(a.y0, b.y0) < min(a.y1, b.y1)
    )


def closed_contact(a: Rect, b: Rect) -> Optional[ContactComponent]:
    """Intersection of the closed rects, given disjoint interiors.

    Returns a point or segment component, or None when the closed rects do
    not meet at all.
    """
    if interiors_overlap(a, b):
        raise ContractViolation(f"interiors of {a} and {b} overlap")
    ix0, ix1 = max(a.x0, b.x0), min(a.x1, b.x1)
    iy0, iy1 = max(a.y0, b.y0), min(a.y1, b.y1)
    if ix0 > ix1 or iy0 > iy1:
        return None
    if ix0 == ix1 and iy0 == iy1:
        return point_component((ix0, iy0))
    if ix0 == ix1:
        return vseg(ix0, iy0, iy1)
    # iy0 == iy1 is forced: a 2D closed intersection would mean open overlap
    return hseg(iy0, ix0, ix1)


def _candidate_pairs(
    A: Iterable[Rect], B: Iterable[Rect], closed: bool
) -> Iterator[tuple[Rect, Rect]]:
    """Pairs whose x-ranges overlap (openly or closedly).

    B is sorted by x0 once; for each rect of A a binary search bounds the
    candidate window, padded on the left by B's maximum width so rects
    starting earlier but reaching into the window are not missed.
    """
    B_sorted = sorted(B, key=lambda r: (r.x0, r.y0, r.x1, r.y1))
    if not B_sorted:
        return
    xs = [r.x0 for r in B_sorted]
    max_w = max(r.width for r in B_sorted)
    for a in A:
        lo = bisect_left(xs, a.x0 - max_w)
        hi = bisect_right(xs, a.x1) if closed else bisect_left(xs, a.x1)
        for b in B_sorted[lo:hi]:
            if closed:
                if b.x1 >= a.x0:
                    yield a, b
            else:
                if b.x1 > a.x0:
                    yield a, b


def union_interiors_disjoint(A: list[Rect], B: list[Rect]) -> bool:
    """True iff no rect of A interior-overlaps any rect of B."""
    for a, b in _candidate_pairs(A, B, closed=False):
        if max(a.y0, b.y0) < min(a.y1, b.y1):
            return False
    return True


def _merge_intervals(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Merge intervals that overlap or share an endpoint."""
    merged: list[tuple[int, int]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def contact_components(A: list[Rect], B: list[Rect]) -> list[ContactComponent]:
    """All maximal contact components between the unions of A and B.

    Collinear touching segments are merged; a point lying on some segment is
    absorbed by it.  Output order is canonical: sorted by (kind, a, b).
    """
    if not union_interiors_disjoint(A, B):
        raise ContractViolation("unions have overlapping interiors")
    verticals: dict[int, list[tuple[int, int]]] = {}
    horizontals: dict[int, list[tuple[int, int]]] = {}
    points: set[tuple[int, int]] = set()
    for a, b in _candidate_pairs(A, B, closed=True):
        c = closed_contact(a, b)
        if c is None:
            continue
        if c.kind == VSEG:
            verticals.setdefault(c.a[0], []).append((c.a[1], c.b[1]))
        elif c.kind == HSEG:
            horizontals.setdefault(c.a[1], []).append((c.a[0], c.b[0]))
        else:
            points.add(c.a)

    components: list[ContactComponent] = []
    for x, runs in verticals.items():
        for ya, yb in _merge_intervals(runs):
            components.append(vseg(x, ya, yb))
    for y, runs in horizontals.items():
        for xa, xb in _merge_intervals(runs):
            components.append(hseg(y, xa, xb))

    def absorbed(p: tuple[int, int]) -> bool:
        px, py = p
        for x, runs in verticals.items():
            if px == x and any(ya <= py <= yb for ya, yb in _merge_intervals(runs)):
                return True
        for y, runs in horizontals.items():
            if py == y and any(xa <= px <= xb for xa, xb in _merge_intervals(runs)):
                return True
        return False

    components.extend(point_component(p) for p in points if not absorbed(p))
    return sorted(components, key=lambda c: (c.kind, c.a, c.b))


def total_contact_length(components: list[ContactComponent]) -> int:
    """Summed length of segment components; points contribute nothing."""
    return sum(c.length for c in components)
