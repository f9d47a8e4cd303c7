"""Exact integer verification that planar kissing numbers of topological
disks are unbounded: staircase disk construction, translate placement,
machine-checkable certificates, and SVG figures."""

from .disk import Piece, Shape, SubCopyRef, build_disk, extract_sub_copy, sub_copy_offset
from .errors import (
    ConstructionBroken,
    ContractViolation,
    DocumentInvariantError,
    MalformedDocument,
    ParameterError,
    RangeError,
    SchemaVersionMismatch,
)
from .placement import (
    Lemma2Case,
    PairWitness,
    Scene,
    check_lemma2_exhaustive,
    iter_lemma2_cases,
    lemma2_instance,
    place_translates,
    theorem_pair_witness,
)
from .rect import (
    ContactComponent,
    Rect,
    Vec2,
    closed_contact,
    contact_components,
    interiors_overlap,
    total_contact_length,
    union_interiors_disjoint,
)
from .render import render_svg
from .ruler import (
    PrefixTable,
    check_lemma1,
    check_lemma1_exhaustive,
    prefix_sum,
    ruler,
    ruler_by_halving,
)
from .serial import parse, serialize
from .verify import (
    Certificate,
    PairVerdict,
    TouchingReport,
    VerticalRun,
    rightward_runs,
    verify_construction,
    verify_touching_heights,
)

__all__ = [
    "Certificate",
    "ConstructionBroken",
    "ContactComponent",
    "ContractViolation",
    "DocumentInvariantError",
    "Lemma2Case",
    "MalformedDocument",
    "PairVerdict",
    "PairWitness",
    "ParameterError",
    "Piece",
    "PrefixTable",
    "RangeError",
    "Rect",
    "Scene",
    "SchemaVersionMismatch",
    "Shape",
    "SubCopyRef",
    "TouchingReport",
    "Vec2",
    "VerticalRun",
    "build_disk",
    "check_lemma1",
    "check_lemma1_exhaustive",
    "check_lemma2_exhaustive",
    "closed_contact",
    "contact_components",
    "extract_sub_copy",
    "interiors_overlap",
    "iter_lemma2_cases",
    "lemma2_instance",
    "parse",
    "place_translates",
    "prefix_sum",
    "render_svg",
    "rightward_runs",
    "ruler",
    "ruler_by_halving",
    "serialize",
    "sub_copy_offset",
    "theorem_pair_witness",
    "total_contact_length",
    "union_interiors_disjoint",
    "verify_construction",
    "verify_touching_heights",
]
