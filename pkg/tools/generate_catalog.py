#!/usr/bin/env python3
"""Enumerate the smooth Fano fan polytopes in dimensions 2-4 and emit the
catalog data files (fan-convention .poly files plus expected.tsv).

Method: depth-first growth of the boundary complex.  Up to a unimodular
change of basis every such polytope has a facet equal to the standard basis
simplex with the vertex sum in the nonnegative orthant (a "special" facet).
Starting from that facet, each open ridge is completed by an opposite
vertex; unimodularity of the facet bases pins the pivot coefficient of the
old vertex to -1, and exact bounds relative to the special facet keep the
candidate set finite:

  * every vertex v outside the base facet has level l(v) = sum(v) in [-d, 0],
  * the negative levels sum to at least -d,
  * coordinates satisfy l - 1 <= v_i <= l + (d-1)(1-l),
  * at most 3d vertices in total.

Completed complexes are accepted when the vertex sum lies in the orthant,
reduced modulo coordinate permutations, and deduplicated by the facet basis
normal form.  Classification values computed with the library must then
reproduce the reference multiset for the dimension before any files are
written; mismatches abort the run.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from itertools import permutations, product
from math import gcd
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from dingstab.linalg import format_rational, vec
from dingstab.polytope import (
    VPolytope,
    _int_det,
    _int_inverse,
    dual,
    facet_basis_normal_form,
)
from dingstab.stability import classify

from reference_tables import (
    EXPECTED_CLASS_COUNTS,
    PUBLISHED_ERRATA,
    REFERENCE_TABLES,
)


def candidate_pool(d: int) -> list[tuple[int, ...]]:
    """All primitive vectors that can be non-base vertices (special facet bounds)."""
    pool = []
    for level in range(0, -d - 1, -1):
        lo = level - 1
        hi = level + (d - 1) * (1 - level)
        for v in product(range(lo, hi + 1), repeat=d):
            if sum(v) != level:
                continue
            if gcd(*(abs(x) for x in v)) != 1:
                continue
            pool.append(v)
    return sorted(pool)


def _normal_and_inverse(cols: list[tuple[int, ...]]):
    """Facet normal and basis inverse for an ordered vertex set, or None."""
    d = len(cols)
    matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
    det = _int_det(matrix)
    if abs(det) != 1:
        return None, None
    inv = _int_inverse(matrix, det)
    normal = tuple(sum(inv[i][k] for i in range(d)) for k in range(d))
    return normal, inv


class FanPolytopeSearch:
    """DFS over boundary complexes rooted at the standard-basis facet.

    Facets are (ordered vertex tuple, normal).  The normal of the facet
    obtained by pivoting vertex x out of facet F across a ridge is
    u_F + (<u_F, w> - 1) * row_x, where row_x is the dual-basis covector of
    x in F; no matrix inverse is needed per candidate, and the pivot
    coefficient condition <row_x, w> = -1 already forces unimodularity.
    Facet basis inverses are computed lazily (memoized) only when a facet
    comes to own the selected open ridge.
    """

    def __init__(self, d: int):
        self.d = d
        self.pool = candidate_pool(d)
        self.pool_np = np.array(self.pool, dtype=np.int64)
        self.neg_level_ok = {}
        for b in range(d + 1):
            self.neg_level_ok[b] = -self.pool_np.sum(axis=1) <= b
        self.pool_index = {v: i for i, v in enumerate(self.pool)}
        self.max_vertices = 3 * d
        self.results: set[tuple[tuple[int, ...], ...]] = set()
        self.emitted = 0
        self.nodes = 0
        self._inv_memo: dict[tuple, tuple] = {}

    def _facet_inverse(self, ordered):
        cached = self._inv_memo.get(ordered)
        if cached is None:
            d = self.d
            matrix = [[ordered[j][i] for j in range(d)] for i in range(d)]
            det = _int_det(matrix)
            inv = _int_inverse(matrix, det)
            rows_np = [np.array(row, dtype=np.int64) for row in inv]
            cached = (inv, rows_np)
            self._inv_memo[ordered] = cached
        return cached

    def run(self) -> list[tuple[tuple[int, ...], ...]]:
        d = self.d
        base = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        facets = [(tuple(base), (1,) * d)]
        ridges: dict[frozenset, list[int]] = {}
        for drop in range(d):
            ridge = frozenset(base[:drop] + base[drop + 1:])
            ridges[ridge] = [0]
        alive = np.ones(len(self.pool), dtype=bool)
        self._dfs(list(base), facets, ridges, alive, d)
        return sorted(self.results)

    def _dfs(self, vertices, facets, ridges, alive, budget):
        self.nodes += 1
        open_ridges = [r for r, owners in ridges.items() if len(owners) == 1]
        if not open_ridges:
            self._emit(vertices)
            return
        ridge = min(open_ridges, key=sorted)
        ordered, normal = facets[ridges[ridge][0]]
        pos = next(i for i, v in enumerate(ordered) if v not in ridge)
        x = ordered[pos]
        inv, inv_np = self._facet_inverse(ordered)
        row_x = inv[pos]
        candidates = []
        if len(vertices) < self.max_vertices:
            hits = alive & (self.pool_np @ inv_np[pos] == -1)
            hits &= self.neg_level_ok[budget]
            candidates.extend(self.pool[i] for i in np.flatnonzero(hits))
        for v in vertices:
            if v not in ridge and v != x:
                if sum(a * b for a, b in zip(row_x, v)) == -1:
                    candidates.append(v)
        vertex_set = set(vertices)
        for w in sorted(candidates):
            self._extend(
                w, ridge, normal, row_x, vertices, vertex_set, facets, ridges,
                alive, budget,
            )

    def _extend(self, w, ridge, owner_normal, row_x, vertices, vertex_set,
                facets, ridges, alive, budget):
        t = sum(a * b for a, b in zip(owner_normal, w)) - 1
        normal = tuple(u + t * r for u, r in zip(owner_normal, row_x))
        is_new = w not in vertex_set
        for v in vertices:
            if v in ridge or v == w:
                continue
            if sum(a * b for a, b in zip(normal, v)) > 0:
                return
        face_set = ridge | {w}
        new_ordered = tuple(sorted(face_set))
        new_ridges = []
        for drop in new_ordered:
            r = frozenset(face_set - {drop})
            owners = ridges.get(r)
            if owners is not None and len(owners) >= 2:
                return
            new_ridges.append(r)
        child_ridges = {k: v[:] for k, v in ridges.items()}
        facet_index = len(facets)
        for r in new_ridges:
            child_ridges.setdefault(r, []).append(facet_index)
        child_facets = facets + [(new_ordered, normal)]
        child_alive = alive & (self.pool_np @ np.array(normal, dtype=np.int64) <= 0)
        child_vertices = vertices
        child_budget = budget
        if is_new:
            child_vertices = vertices + [w]
            idx = self.pool_index.get(w)
            if idx is not None:
                child_alive[idx] = False
            child_budget = budget - max(0, -sum(w))
            if child_budget < 0:
                return
        self._dfs(child_vertices, child_facets, child_ridges, child_alive, child_budget)

    def _emit(self, vertices):
        if any(s < 0 for s in map(sum, zip(*vertices))):
            return
        self.emitted += 1
        key = min(
            tuple(sorted(tuple(v[p] for p in perm) for v in vertices))
            for perm in permutations(range(self.d))
        )
        self.results.add(key)


def enumerate_fan_polytopes(d: int) -> list[tuple[tuple[int, ...], ...]]:
    """Canonical vertex sets of all smooth Fano fan polytopes of dimension d."""
    search = FanPolytopeSearch(d)
    reps = search.run()
    canon_map: dict[tuple, tuple] = {}
    for rep in reps:
        p = VPolytope(d, tuple(vec(v) for v in rep))
        canon = facet_basis_normal_form(p)
        canon_key = tuple(tuple(int(x) for x in v) for v in canon)
        canon_map.setdefault(canon_key, canon_key)
    classes = sorted(canon_map, key=lambda vs: (len(vs), vs))
    print(
        f"  dim {d}: {search.nodes} nodes, {search.emitted} special embeddings, "
        f"{len(reps)} permutation classes, {len(classes)} lattice classes"
    )
    return classes


def free_sum(a, b):
    """Fan polytope of a product: direct sum of the factor fan polytopes."""
    da, db = len(a[0]), len(b[0])
    out = [v + (0,) * db for v in a] + [(0,) * da + w for w in b]
    return out


DELTA1 = [(1,), (-1,)]
DELTA2 = [(1, 0), (0, 1), (-1, -1)]
DELTA3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
DELTA4 = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)]
S1_FAN = [(1, 0), (0, 1), (-1, -1), (1, 1)]
S2_FAN = [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0)]
S3_FAN = [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0), (0, -1)]
D6_FAN = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (0, 0, 0, -1), (-1, -1, 0, 1), (0, 0, -1, 1),
]
B1_FAN = [(1, 0, 0), (0, 1, 0), (-1, -1, 2), (0, 0, 1), (0, 0, -1)]
B2_FAN = [(1, 0, 0), (0, 1, 0), (-1, -1, 1), (0, 0, 1), (0, 0, -1)]

PINNED_MODELS = {
    2: {
        "Delta2": DELTA2,
        "Delta1xDelta1": free_sum(DELTA1, DELTA1),
        "S1": S1_FAN,
        "S2": S2_FAN,
        "S3": S3_FAN,
    },
    3: {
        "Delta3": DELTA3,
        "B1": B1_FAN,
        "B2": B2_FAN,
    },
    4: {
        "Delta4": DELTA4,
        "D6": D6_FAN,
        "S2xS2": free_sum(S2_FAN, S2_FAN),
        "S2xS3": free_sum(S2_FAN, S3_FAN),
        "S3xS3": free_sum(S3_FAN, S3_FAN),
    },
}

PINNED_VALUES = {
    "Delta2": "0", "Delta1xDelta1": "0", "S1": "5/11", "S2": "304/409", "S3": "0",
    "Delta3": "0", "B1": "380/349", "B2": "55/97",
    "Delta4": "0", "D6": "1818/1973", "S2xS2": "608/409",
    "S2xS3": "304/409", "S3xS3": "0",
}


def build_dimension(d: int, data_root: Path) -> None:
    classes = enumerate_fan_polytopes(d)
    if len(classes) != EXPECTED_CLASS_COUNTS[d]:
        raise SystemExit(
            f"dim {d}: found {len(classes)} classes, "
            f"expected {EXPECTED_CLASS_COUNTS[d]}"
        )
    reports = []
    for vs in classes:
        fan = VPolytope(d, tuple(vec(v) for v in vs))
        reports.append(classify(dual(fan)))
    computed = sorted(r.mabuchi for r in reports)
    reference = sorted(Fraction(m) for m, _ in REFERENCE_TABLES[d])
    if computed != reference:
        leftover = list(reference)
        only_computed = []
        for m in computed:
            if m in leftover:
                leftover.remove(m)
            else:
                only_computed.append(m)
        errata = PUBLISHED_ERRATA.get(d, ())
        allowed_printed = sorted(Fraction(p) for p, _ in errata)
        allowed_corrected = sorted(Fraction(c) for _, c in errata)
        if sorted(leftover) != allowed_printed or sorted(only_computed) != allowed_corrected:
            raise SystemExit(
                f"dim {d}: Mabuchi multiset mismatch beyond the known errata\n"
                f"  computed-only: {only_computed}\n  reference-only: {leftover}"
            )
        print(
            f"  dim {d}: reproduced {len(computed) - len(only_computed)} published "
            f"values; wrote corrected values for the {len(only_computed)} known misprints"
        )

    labels = {}
    for label, model in PINNED_MODELS[d].items():
        p = VPolytope(d, tuple(vec(v) for v in model))
        canon = facet_basis_normal_form(p)
        key = tuple(tuple(int(x) for x in v) for v in canon)
        idx = classes.index(key)
        labels[idx] = label
        got = format_rational(reports[idx].mabuchi)
        if got != PINNED_VALUES[label]:
            raise SystemExit(f"{label}: computed {got}, expected {PINNED_VALUES[label]}")

    out_dir = data_root / f"dim{d}"
    out_dir.mkdir(parents=True, exist_ok=True)
    expected_rows = []
    for i, (vs, report) in enumerate(zip(classes, reports), start=1):
        stem = f"{i:03d}"
        lines = [f"dim {d}", "convention fan"]
        if i - 1 in labels:
            lines.append(f"label {labels[i - 1]}")
        for v in vs:
            lines.append("vertex " + " ".join(str(x) for x in v))
        (out_dir / f"{stem}.poly").write_text("\n".join(lines) + "\n")
        expected_rows.append(
            f"dim{d}/{stem}\t{format_rational(report.mabuchi)}\t{report.verdict.value}"
        )
    (out_dir / "expected.tsv").write_text("\n".join(expected_rows) + "\n")
    stable = sum(1 for r in reports if r.mabuchi < 1)
    print(
        f"  dim {d}: wrote {len(classes)} entries "
        f"({stable} stable / {len(classes) - stable} unstable), "
        f"labels: {sorted(labels.values())}"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", type=int, nargs="*", default=[2, 3, 4])
    parser.add_argument(
        "--data-root", type=Path, default=REPO / "src" / "dingstab" / "data"
    )
    args = parser.parse_args()
    for d in args.dims:
        start = time.time()
        build_dimension(d, args.data_root)
        print(f"  dim {d}: {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
