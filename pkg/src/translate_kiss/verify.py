"""Full verification of the construction, producing a re-checkable certificate.

For the theorem check, "touches" means a positive-length shared boundary
segment; isolated point contacts are recorded but do not qualify.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .disk import Shape, SubCopyRef, build_disk, sub_copy_offset
from .errors import ParameterError
from .placement import _check_theorem_params, place_translates
from .rect import (
    ContactComponent,
    Vec2,
    contact_components,
    total_contact_length,
    union_interiors_disjoint,
)


@dataclass(frozen=True)
class PairVerdict:
    i: int
    j: int
    interiors_disjoint: bool
    contacts: tuple[ContactComponent, ...]
    segment_length_total: int


@dataclass(frozen=True)
class Certificate:
    """Everything needed to re-check the construction without rebuilding it."""

    m: int
    n: int
    offsets: tuple[Vec2, ...]
    pair_verdicts: tuple[PairVerdict, ...]
    touching_count: int
    ok: bool


def verify_construction(m: int, n: int) -> Certificate:
    """Check all translate pairs for disjoint interiors and collect contacts.

    ok is a verdict, not an error: a False certificate faithfully reports a
    broken build.
    """
    _check_theorem_params(m, n)
    shape = build_disk(m, n)
    scene = place_translates(m, n)
    placed = [[r.translate(t) for r in shape.rects()] for t in scene.offsets]

    verdicts: list[PairVerdict] = []
    touching = 0
    all_disjoint = True
    for i, j in combinations(range(n + 1), 2):
        disjoint = union_interiors_disjoint(placed[i], placed[j])
        contacts: tuple[ContactComponent, ...] = ()
        seg_total = 0
        if disjoint:
            contacts = tuple(contact_components(placed[i], placed[j]))
            seg_total = total_contact_length(contacts)
        else:
            all_disjoint = False
        if i == 0 and seg_total >= 1:
            touching += 1
        verdicts.append(
            PairVerdict(
                i=i,
                j=j,
                interiors_disjoint=disjoint,
                contacts=contacts,
                segment_length_total=seg_total,
            )
        )
    return Certificate(
        m=m,
        n=n,
        offsets=scene.offsets,
        pair_verdicts=tuple(verdicts),
        touching_count=touching,
        ok=all_disjoint and touching == n,
    )


@dataclass(frozen=True)
class VerticalRun:
    """A maximal merged run of piece right edges in one column."""

    x: int
    y0: int
    y1: int

    @property
    def height(self) -> int:
        return self.y1 - self.y0


def rightward_runs(shape: Shape) -> list[VerticalRun]:
    """Maximal vertical runs formed by merging collinear piece right edges."""
    columns: dict[int, list[tuple[int, int]]] = {}
    for p in shape.pieces:
        columns.setdefault(p.rect.x1, []).append((p.rect.y0, p.rect.y1))
    runs: list[VerticalRun] = []
    for x in sorted(columns):
        for y0, y1 in _merge(columns[x]):
            runs.append(VerticalRun(x, y0, y1))
    return runs


def _merge(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    merged: list[tuple[int, int]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


@dataclass(frozen=True)
class TouchingReport:
    """Why A_0 and A_i touch: the geometry of their facing sub-copies."""

    i: int
    offset: Vec2
    offset_expected: Vec2
    offset_ok: bool
    tallest_run: VerticalRun
    tallest_is_unique: bool
    tallest_height_expected: int
    contacts: tuple[ContactComponent, ...]
    has_segment_contact: bool

    @property
    def ok(self) -> bool:
        return (
            self.offset_ok
            and self.tallest_is_unique
            and self.tallest_run.height == self.tallest_height_expected
            and self.has_segment_contact
        )


def verify_touching_heights(m: int, n: int, i: int) -> TouchingReport:
    """Check the contact between A_0's last and A_i's first level sub-copy.

    The facing sub-copies are disks of level n+1-i; the shift between them
    must be (i-1, n+2-i), and the tallest merged right-edge run of the
    sub-copy, height n+2-i, must sit alone at its middle column so the
    upward shift produces contact without overlap.
    """
    _check_theorem_params(m, n)
    if not 1 <= i <= n:
        raise ParameterError(f"translate index i={i} out of range 1..{n}")
    level = n + 1 - i
    scene = place_translates(m, n)
    sub = build_disk(m, level)

    last_copy = SubCopyRef(level=level, copy=2 ** (n - level))
    d_offset = scene.offsets[0] + sub_copy_offset(m, n, last_copy)
    d_prime_offset = scene.offsets[i]
    offset = d_prime_offset - d_offset
    expected = Vec2(i - 1, n + 2 - i)

    runs = rightward_runs(sub)
    tallest = max(runs, key=lambda r: r.height)
    unique = sum(1 for r in runs if r.height == tallest.height) == 1

    d_rects = [r.translate(d_offset) for r in sub.rects()]
    d_prime_rects = [r.translate(d_prime_offset) for r in sub.rects()]
    contacts = tuple(contact_components(d_rects, d_prime_rects))
    has_segment = any(c.length >= 1 for c in contacts)

    return TouchingReport(
        i=i,
        offset=offset,
        offset_expected=expected,
        offset_ok=offset == expected,
        tallest_run=tallest,
        tallest_is_unique=unique,
        tallest_height_expected=n + 2 - i,
        contacts=contacts,
        has_segment_contact=has_segment,
    )
