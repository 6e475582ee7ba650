from fractions import Fraction

import pytest

from dingstab.catalog import (
    CatalogEntry,
    DimensionMismatch,
    MissingDataset,
    NotReflexive,
    ParseError,
    catalog_entries,
    load_polytope,
    match_by_value,
    parse_polytope,
    product_polytope,
    reproduce_table,
    simplex_moment_polytope,
    surface_moment_polytope,
)
from dingstab.linalg import format_rational
from dingstab.polytope import dual, from_vertices, is_fano_polytope
from dingstab.stability import Verdict, classify, mabuchi_constant
from conftest import D6_DUAL_VERTICES, D6_VERTICES
from reference_tables import EXPECTED_SPLITS, REFERENCE_TABLES

D6_FAN_FILE = "dim 4\nconvention fan\nlabel D6\n" + "".join(
    "vertex " + " ".join(str(x) for x in v) + "\n" for v in D6_DUAL_VERTICES
)

D6_MOMENT_FILE = "dim 4\nconvention moment\n" + "".join(
    "vertex " + " ".join(str(x) for x in v) + "\n" for v in D6_VERTICES
)


def test_parse_moment_file():
    pf = parse_polytope(D6_MOMENT_FILE)
    assert pf.dim == 4
    assert pf.convention == "moment"
    assert len(pf.vertices) == 12


def test_parse_fan_file_with_metadata_and_comments():
    text = "dim 2\nconvention fan\nlabel P2  # the plane\nnote keepme\nvertex 1 0\nvertex 0 1\nvertex -1 -1\n"
    pf = parse_polytope(text)
    assert pf.metadata["label"] == "P2"
    assert pf.metadata["note"] == "keepme"
    assert pf.vertices == ((1, 0), (0, 1), (-1, -1))


def test_parse_rejects_non_integer_vertex():
    with pytest.raises(ParseError) as excinfo:
        parse_polytope("dim 2\nconvention fan\nvertex 1 2\nvertex 1 x\nvertex 0 1\n")
    assert excinfo.value.line == 4


def test_parse_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_polytope("dim 3\nconvention fan\nvertex 1 0\n")


def test_parse_requires_headers():
    with pytest.raises(ParseError):
        parse_polytope("convention fan\nvertex 1 0\nvertex 0 1\nvertex -1 -1\n")
    with pytest.raises(ParseError):
        parse_polytope("dim 2\nvertex 1 0\nvertex 0 1\nvertex -1 -1\n")


def test_load_moment_convention(d6):
    p = load_polytope(parse_polytope(D6_MOMENT_FILE))
    assert set(p.vertices) == set(d6.vertices)


def test_load_fan_convention_dualizes(d6):
    p = load_polytope(parse_polytope(D6_FAN_FILE))
    assert set(p.vertices) == set(d6.vertices)


def test_load_fan_convention_rejects_non_reflexive():
    text = "dim 2\nconvention fan\nvertex 1 2\nvertex 1 -2\nvertex -1 2\nvertex -1 -2\n"
    with pytest.raises(NotReflexive):
        load_polytope(parse_polytope(text))


def test_catalog_counts():
    assert len(catalog_entries(2)) == 5
    assert len(catalog_entries(3)) == 18


def test_catalog_entries_are_fano():
    for dim in (2, 3):
        for entry in catalog_entries(dim):
            assert is_fano_polytope(entry.polytope), entry.id


def test_catalog_dual_involution():
    for entry in catalog_entries(2):
        assert set(dual(dual(entry.polytope)).vertices) == set(entry.polytope.vertices)


def test_catalog_expected_fields_consistent():
    for dim in (2, 3):
        for entry in catalog_entries(dim):
            assert entry.expected_mabuchi is not None
            assert (entry.expected_mabuchi < 1) == (
                entry.expected_verdict is Verdict.UNIFORMLY_POLYSTABLE
            )


def test_missing_dataset():
    with pytest.raises(MissingDataset):
        catalog_entries(2, root=__import__("pathlib").Path("/nonexistent"))


def test_reproduce_table_dim2():
    rows, diff = reproduce_table(2)
    assert diff.clean
    values = sorted(format_rational(r.mabuchi) for r in rows)
    assert values == sorted(m for m, _ in REFERENCE_TABLES[2])
    assert all(r.verdict is Verdict.UNIFORMLY_POLYSTABLE for r in rows)
    by_label = {r.label: r for r in rows if r.label}
    assert format_rational(by_label["Delta2"].mabuchi) == "0"
    assert format_rational(by_label["Delta1xDelta1"].mabuchi) == "0"
    assert format_rational(by_label["S1"].mabuchi) == "5/11"
    assert format_rational(by_label["S2"].mabuchi) == "304/409"
    assert format_rational(by_label["S3"].mabuchi) == "0"


def test_reproduce_table_dim3():
    rows, diff = reproduce_table(3)
    assert diff.clean
    computed = sorted(Fraction(r.mabuchi) for r in rows)
    reference = sorted(Fraction(m) for m, _ in REFERENCE_TABLES[3])
    assert computed == reference
    stable = sum(1 for r in rows if r.verdict is Verdict.UNIFORMLY_POLYSTABLE)
    assert (stable, len(rows) - stable) == EXPECTED_SPLITS[3]
    by_label = {r.label: r for r in rows if r.label}
    assert format_rational(by_label["B1"].mabuchi) == "380/349"
    assert by_label["B1"].verdict is Verdict.UNSTABLE
    assert format_rational(by_label["B2"].mabuchi) == "55/97"
    assert format_rational(by_label["Delta3"].mabuchi) == "0"


def test_match_by_value():
    a = [Fraction(1, 2), Fraction(3), Fraction(0)]
    assert match_by_value(a, list(a))[0]
    assert match_by_value(a, [Fraction(3), Fraction(0), Fraction(1, 2)])[0]
    ok, left, right = match_by_value(a, [Fraction(3), Fraction(0), Fraction(1, 3)])
    assert not ok
    assert left == [Fraction(1, 2)]
    assert right == [Fraction(1, 3)]
    with pytest.raises(ValueError):
        match_by_value(a, [Fraction(1)])


def test_product_polytope_pins_surface_products():
    s2 = surface_moment_polytope("S2")
    s3 = surface_moment_polytope("S3")
    assert mabuchi_constant(product_polytope(s2, s2))[0] == Fraction(608, 409)
    assert mabuchi_constant(product_polytope(s2, s3))[0] == Fraction(304, 409)
    assert mabuchi_constant(product_polytope(s3, s3))[0] == 0


def test_simplex_moment_polytope():
    assert mabuchi_constant(simplex_moment_polytope(4))[0] == 0
    p2 = simplex_moment_polytope(2)
    assert set(p2.vertices) == {(2, -1), (-1, 2), (-1, -1)}


def test_surface_constructions_match_catalog_labels():
    by_label = {e.label: e for e in catalog_entries(2) if e.label}
    for name, entry_label in (("P2", "Delta2"), ("S1", "S1"), ("S2", "S2"), ("S3", "S3")):
        built = surface_moment_polytope(name)
        entry = by_label[entry_label]
        assert classify(built).mabuchi == classify(entry.polytope).mabuchi


def test_env_override_data_root(tmp_path, monkeypatch):
    monkeypatch.setenv("DINGSTAB_DATA", str(tmp_path))
    from dingstab.catalog import data_root

    assert data_root() == tmp_path
    with pytest.raises(MissingDataset):
        catalog_entries(2)
