"""Canonical JSON documents for shapes, scenes, and certificates.

Serialization is canonical: fixed key order, compact separators, pieces in
construction order.  Semantically equal objects always produce identical
bytes, and parse(serialize(x)) round-trips exactly.  Schema version "tk-1".
"""

from __future__ import annotations

import json
from typing import Any, Union

from .disk import Piece, Shape
from .errors import DocumentInvariantError, MalformedDocument, SchemaVersionMismatch
from .placement import Scene
from .rect import ContactComponent, Rect, Vec2
from .verify import Certificate, PairVerdict

SCHEMA_VERSION = "tk-1"

Document = Union[Shape, Scene, Certificate]


def _rect_json(r: Rect) -> list[int]:
    return [r.x0, r.y0, r.x1, r.y1]


def _piece_json(p: Piece) -> dict[str, Any]:
    return {"role": p.role, "index": p.index, "rect": _rect_json(p.rect)}


def _contact_json(c: ContactComponent) -> dict[str, Any]:
    return {"kind": c.kind, "a": list(c.a), "b": list(c.b), "length": c.length}


def _verdict_json(v: PairVerdict) -> dict[str, Any]:
    return {
        "i": v.i,
        "j": v.j,
        "interiors_disjoint": v.interiors_disjoint,
        "contacts": [_contact_json(c) for c in v.contacts],
        "segment_length_total": v.segment_length_total,
    }


def to_document(obj: Document) -> dict[str, Any]:
    doc: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    if isinstance(obj, Shape):
        doc["kind"] = "shape"
        doc["m"], doc["n"] = obj.m, obj.n
        doc["pieces"] = [_piece_json(p) for p in obj.pieces]
    elif isinstance(obj, Scene):
        doc["kind"] = "scene"
        doc["m"], doc["n"] = obj.m, obj.n
        doc["offsets"] = [[t.dx, t.dy] for t in obj.offsets]
    elif isinstance(obj, Certificate):
        doc["kind"] = "certificate"
        doc["m"], doc["n"] = obj.m, obj.n
        doc["offsets"] = [[t.dx, t.dy] for t in obj.offsets]
        doc["pair_verdicts"] = [_verdict_json(v) for v in obj.pair_verdicts]
        doc["touching_count"] = obj.touching_count
        doc["ok"] = obj.ok
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return doc


def serialize(obj: Document) -> bytes:
    return (json.dumps(to_document(obj), separators=(",", ":")) + "\n").encode("utf-8")


def _require(doc: dict[str, Any], key: str) -> Any:
    if key not in doc:
        raise MalformedDocument(f"missing field {key!r}")
    return doc[key]


def _int(value: Any, what: str) -> int:
    if type(value) is not int:
        raise DocumentInvariantError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_rect(data: Any) -> Rect:
    if not (isinstance(data, list) and len(data) == 4):
        raise MalformedDocument(f"rect must be [x0, y0, x1, y1], got {data!r}")
    x0, y0, x1, y1 = (_int(v, "rect coordinate") for v in data)
    if x0 >= x1 or y0 >= y1:
        raise DocumentInvariantError(f"degenerate rect {data!r}")
    return Rect(x0, y0, x1, y1)


def _parse_contact(data: Any) -> ContactComponent:
    kind = _require(data, "kind")
    a = tuple(_int(v, "contact coordinate") for v in _require(data, "a"))
    b = tuple(_int(v, "contact coordinate") for v in _require(data, "b"))
    length = _int(_require(data, "length"), "contact length")
    try:
        return ContactComponent(kind, a, b, length)  # type: ignore[arg-type]
    except ValueError as exc:
        raise DocumentInvariantError(str(exc)) from exc


def parse(data: bytes) -> Document:
    """Parse and validate a document produced by serialize()."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("top-level value must be an object")
    version = _require(doc, "schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"expected schema {SCHEMA_VERSION!r}, got {version!r}"
        )
    kind = _require(doc, "kind")
    m = _int(_require(doc, "m"), "m")
    n = _int(_require(doc, "n"), "n")

    if kind == "shape":
        pieces = []
        for pd in _require(doc, "pieces"):
            role = _require(pd, "role")
            if role not in ("bar", "connector"):
                raise DocumentInvariantError(f"unknown piece role {role!r}")
            pieces.append(
                Piece(role, _int(_require(pd, "index"), "piece index"), _parse_rect(_require(pd, "rect")))
            )
        if len(pieces) != 2 ** (n + 1) - 1:
            raise DocumentInvariantError(
                f"shape must have {2 ** (n + 1) - 1} pieces, got {len(pieces)}"
            )
        return Shape(m=m, n=n, pieces=tuple(pieces))

    if kind == "scene":
        offsets = _parse_offsets(_require(doc, "offsets"), n)
        return Scene(m=m, n=n, offsets=offsets)

    if kind == "certificate":
        offsets = _parse_offsets(_require(doc, "offsets"), n)
        verdicts = []
        for vd in _require(doc, "pair_verdicts"):
            verdicts.append(
                PairVerdict(
                    i=_int(_require(vd, "i"), "pair index"),
                    j=_int(_require(vd, "j"), "pair index"),
                    interiors_disjoint=bool(_require(vd, "interiors_disjoint")),
                    contacts=tuple(_parse_contact(c) for c in _require(vd, "contacts")),
                    segment_length_total=_int(
                        _require(vd, "segment_length_total"), "segment length"
                    ),
                )
            )
        return Certificate(
            m=m,
            n=n,
            offsets=offsets,
            pair_verdicts=tuple(verdicts),
            touching_count=_int(_require(doc, "touching_count"), "touching_count"),
            ok=bool(_require(doc, "ok")),
        )

    raise MalformedDocument(f"unknown document kind {kind!r}")


def _parse_offsets(data: Any, n: int) -> tuple[Vec2, ...]:
    offsets = []
    for od in data:
        if not (isinstance(od, list) and len(od) == 2):
            raise MalformedDocument(f"offset must be [dx, dy], got {od!r}")
        offsets.append(Vec2(_int(od[0], "offset"), _int(od[1], "offset")))
    if len(offsets) != n + 1:
        raise DocumentInvariantError(
            f"expected {n + 1} offsets, got {len(offsets)}"
        )
    return tuple(offsets)
