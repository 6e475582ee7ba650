"""Polytope data files, the embedded classification datasets, and table
reproduction.

The text format is line-oriented UTF-8:

    dim <n>
    convention moment|fan
    label <string>            # optional metadata
    expected_mabuchi <p/q>    # optional
    expected_verdict uniformly_polystable|boundary|unstable   # optional
    vertex <i1> ... <in>      # one line per vertex, integers
    # comments run to end of line

Catalog files store the fan polytope (the databases' native convention);
the loader dualizes fan-convention data, so the polytopes handed to the
stability layer are always moment polytopes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .linalg import format_rational, parse_rational, vec
from .polytope import VPolytope, dual, from_vertices, is_fano_polytope, is_integral
from .stability import StabilityReport, Verdict, classify


class ParseError(ValueError):
    """Raised on malformed polytope files, with line/column context."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DimensionMismatch(ValueError):
    """Raised when a vertex row disagrees with the declared dimension."""


class NotReflexive(ValueError):
    """Raised when a fan-convention file has a non-integral dual."""


class MissingDataset(FileNotFoundError):
    """Raised when the embedded dataset for a dimension is absent."""


@dataclass(frozen=True)
class PolytopeFile:
    dim: int
    convention: str
    vertices: tuple[tuple[int, ...], ...]
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    label: str | None
    polytope: VPolytope
    expected_mabuchi: Fraction | None = None
    expected_verdict: Verdict | None = None


_KNOWN_KEYS = ("label", "expected_mabuchi", "expected_verdict")
_VERDICT_TOKENS = {v.value: v for v in Verdict}


def parse_polytope(text: str) -> PolytopeFile:
    """Parse the text format exactly; unknown metadata keys are preserved."""
    dim = None
    convention = None
    vertices: list[tuple[int, ...]] = []
    metadata: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "dim":
            try:
                dim = int(rest)
            except ValueError:
                raise ParseError(f"bad dimension {rest!r}", lineno) from None
        elif key == "convention":
            if rest not in ("moment", "fan"):
                raise ParseError(f"unknown convention {rest!r}", lineno)
            convention = rest
        elif key == "vertex":
            entries = rest.split()
            row = []
            for pos, token in enumerate(entries):
                try:
                    row.append(int(token))
                except ValueError:
                    column = raw.index(token) + 1
                    raise ParseError(
                        f"vertex entries must be integers, got {token!r}",
                        lineno,
                        column,
                    ) from None
            if dim is not None and len(row) != dim:
                raise DimensionMismatch(
                    f"line {lineno}: vertex has {len(row)} entries, dim is {dim}"
                )
            vertices.append(tuple(row))
        elif key in _KNOWN_KEYS:
            metadata[key] = rest
        else:
            metadata[key] = rest
    if dim is None:
        raise ParseError("missing 'dim' header", 1)
    if convention is None:
        raise ParseError("missing 'convention' header", 1)
    if not vertices:
        raise ParseError("no vertex rows", 1)
    return PolytopeFile(dim, convention, tuple(vertices), metadata)


def load_polytope(pf: PolytopeFile) -> VPolytope:
    """Moment-convention polytope; fan files are dualized and must be reflexive."""
    hull = from_vertices([vec(v) for v in pf.vertices])
    if pf.convention == "moment":
        return hull
    moment = dual(hull)
    if not is_integral(moment):
        raise NotReflexive("fan polytope has a non-integral dual")
    return moment


def data_root() -> Path:
    """Embedded dataset directory, overridable via DINGSTAB_DATA."""
    override = os.environ.get("DINGSTAB_DATA")
    if override:
        return Path(override)
    return Path(resources.files("dingstab") / "data")


def catalog_entries(dim: int, root: Path | None = None) -> list[CatalogEntry]:
    """All catalog entries of one dimension, in catalog (file name) order."""
    base = (root or data_root()) / f"dim{dim}"
    if not base.is_dir():
        raise MissingDataset(f"no dataset directory {base}")
    expected: dict[str, tuple[Fraction, Verdict]] = {}
    tsv = base / "expected.tsv"
    if tsv.is_file():
        for line in tsv.read_text().splitlines():
            if not line.strip():
                continue
            entry_id, m_text, verdict_text = line.split("\t")
            expected[entry_id] = (
                parse_rational(m_text),
                _VERDICT_TOKENS[verdict_text],
            )
    entries = []
    for path in sorted(base.glob("*.poly")):
        pf = parse_polytope(path.read_text())
        entry_id = f"dim{dim}/{path.stem}"
        exp = expected.get(entry_id)
        entries.append(
            CatalogEntry(
                id=entry_id,
                label=pf.metadata.get("label"),
                polytope=load_polytope(pf),
                expected_mabuchi=exp[0] if exp else None,
                expected_verdict=exp[1] if exp else None,
            )
        )
    if not entries:
        raise MissingDataset(f"no .poly files under {base}")
    return entries


@dataclass(frozen=True)
class TableRow:
    id: str
    label: str | None
    mabuchi: Fraction
    verdict: Verdict
    report: StabilityReport


@dataclass(frozen=True)
class TableDiff:
    missing_expectations: tuple[str, ...]
    mismatches: tuple[tuple[str, str, str], ...]  # (id, got, expected)

    @property
    def clean(self) -> bool:
        return not self.missing_expectations and not self.mismatches


def reproduce_table(
    dim: int, root: Path | None = None
) -> tuple[list[TableRow], TableDiff]:
    """Classify every catalog entry in order and diff against expectations."""
    rows = []
    missing = []
    mismatches = []
    for entry in catalog_entries(dim, root):
        report = classify(entry.polytope)
        rows.append(
            TableRow(entry.id, entry.label, report.mabuchi, report.verdict, report)
        )
        if entry.expected_mabuchi is None or entry.expected_verdict is None:
            missing.append(entry.id)
            continue
        got = (format_rational(report.mabuchi), report.verdict.value)
        want = (format_rational(entry.expected_mabuchi), entry.expected_verdict.value)
        if got != want:
            mismatches.append((entry.id, "/".join(got), "/".join(want)))
    return rows, TableDiff(tuple(missing), tuple(mismatches))


def match_by_value(computed, expected) -> tuple[bool, list[Fraction], list[Fraction]]:
    """Label-agnostic multiset comparison of two value lists.

    Returns (full match, unmatched on the computed side, unmatched on the
    expected side).
    """
    if len(computed) != len(expected):
        raise ValueError("value lists must have equal length")
    remaining = sorted(expected)
    unmatched_computed = []
    for value in computed:
        try:
            remaining.remove(value)
        except ValueError:
            unmatched_computed.append(value)
    return (not unmatched_computed and not remaining, unmatched_computed, remaining)


def product_polytope(p: VPolytope, q: VPolytope) -> VPolytope:
    """Moment polytope of a product: the Cartesian product of the factors."""
    verts = [tuple(v) + tuple(w) for v in p.vertices for w in q.vertices]
    return VPolytope(p.dim + q.dim, tuple(verts))


def simplex_moment_polytope(n: int) -> VPolytope:
    """Moment polytope of projective n-space (anticanonical)."""
    fan = from_vertices(
        [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(-1,) * n]
    )
    return dual(fan)


_SURFACE_FANS = {
    "P2": [(1, 0), (0, 1), (-1, -1)],
    "P1xP1": [(1, 0), (-1, 0), (0, 1), (0, -1)],
    "S1": [(1, 0), (0, 1), (-1, -1), (1, 1)],
    "S2": [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0)],
    "S3": [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0), (0, -1)],
}


def surface_moment_polytope(name: str) -> VPolytope:
    """Moment polytopes of the five smooth toric del Pezzo surfaces."""
    return dual(from_vertices(_SURFACE_FANS[name]))


def verify_catalog_entry(entry: CatalogEntry) -> bool:
    """Spec invariant: every embedded entry is a Fano polytope."""
    return is_fano_polytope(entry.polytope)
