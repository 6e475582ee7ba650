"""Rational polytopes: vertex/facet representations, duality, lattice checks.

Vertices are tuples of Fractions.  Facets are pairs ``(normal, offset)``
encoding ``normal . x <= offset`` with a primitive integer normal.  Facet
enumeration is an exhaustive scan over vertex n-subsets with exact support
verification, which is fast at the scale of this package (dimension <= 5,
a few dozen vertices) and trivially correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd, lcm

from .linalg import (
    RatMat,
    RatVec,
    determinant,
    dot,
    mat_vec,
    rank,
    rat,
    solve_linear,
    vec,
    vec_sub,
)
from .lp import LPProblem, LPStatus, lp_minimize


class DegeneratePolytope(ValueError):
    """Raised when a point set does not span the ambient dimension."""


class OriginNotInterior(ValueError):
    """Raised when an operation needs the origin strictly inside the polytope."""


class NotUnimodular(ValueError):
    """Raised when a lattice transform is not in GL(n, Z)."""


@dataclass(frozen=True)
class VPolytope:
    """Full-dimensional polytope given by its irredundant vertex list."""

    dim: int
    vertices: tuple[RatVec, ...]


@dataclass(frozen=True)
class HPolytope:
    """Full-dimensional polytope given by its irredundant facet inequalities."""

    dim: int
    facets: tuple[tuple[RatVec, Fraction], ...]


@dataclass(frozen=True)
class Simplex:
    """n+1 affinely independent points in dimension n."""

    dim: int
    vertices: tuple[RatVec, ...]

    def __post_init__(self):
        if len(self.vertices) != self.dim + 1:
            raise ValueError("simplex needs dim + 1 vertices")
        edges = [vec_sub(v, self.vertices[0]) for v in self.vertices[1:]]
        if _int_det(_scale_to_int(edges)[0]) == 0:
            raise ValueError("degenerate simplex: edge vectors are dependent")


_FACET_CACHE: dict[VPolytope, HPolytope] = {}


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss determinant of a small integer matrix."""
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - mik * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _scale_to_int(points) -> tuple[list[list[int]], int]:
    """Clear denominators uniformly; returns integer points and the scale."""
    mult = 1
    for p in points:
        for x in p:
            mult = lcm(mult, rat(x).denominator)
    return [[int(rat(x) * mult) for x in p] for p in points], mult


def _cross(diffs: list[list[int]], n: int) -> list[int]:
    """Integer normal to the span of n-1 difference vectors (0 if dependent)."""
    normal = []
    for k in range(n):
        minor = [row[:k] + row[k + 1:] for row in diffs]
        normal.append((-1) ** k * _int_det(minor))
    return normal


def _enumerate_facets(points) -> list[tuple[tuple[int, ...], Fraction]]:
    """All supporting facet hyperplanes of conv(points), exactly."""
    ipts, mult = _scale_to_int(points)
    n = len(ipts[0])
    seen: set[tuple] = set()
    found: set[tuple[tuple[int, ...], Fraction]] = set()
    for subset in combinations(range(len(ipts)), n):
        base = ipts[subset[0]]
        diffs = [[ipts[i][j] - base[j] for j in range(n)] for i in subset[1:]]
        normal = _cross(diffs, n)
        if not any(normal):
            continue
        offset = sum(a * b for a, b in zip(normal, base))
        g = gcd(*(abs(x) for x in normal), abs(offset))
        normal = [x // g for x in normal]
        offset //= g
        key_sign = next(x for x in normal if x)
        key = (tuple(normal), offset) if key_sign > 0 else (tuple(-x for x in normal), -offset)
        if key in seen:
            continue
        seen.add(key)
        above = below = False
        for p in ipts:
            s = sum(a * b for a, b in zip(normal, p)) - offset
            if s > 0:
                above = True
            elif s < 0:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            normal, offset = [-x for x in normal], -offset
        ng = gcd(*(abs(x) for x in normal))
        found.add((tuple(x // ng for x in normal), Fraction(offset, ng * mult)))
    return sorted(found)


def from_vertices(points) -> VPolytope:
    """Build a VPolytope, dropping points inside the hull of the others.

    Membership in the hull is decided by exact LP feasibility of the convex
    combination system.
    """
    pts = []
    for p in points:
        p = vec(p)
        if p not in pts:
            pts.append(p)
    if not pts:
        raise DegeneratePolytope("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have inconsistent dimensions")
    diffs = [vec_sub(p, pts[0]) for p in pts[1:]]
    if len(pts) < n + 1 or rank(diffs) < n:
        raise DegeneratePolytope("points do not span the ambient dimension")
    keep = list(pts)
    i = 0
    while i < len(keep):
        if _in_hull(keep[i], keep[:i] + keep[i + 1:]):
            del keep[i]
        else:
            i += 1
    return VPolytope(n, tuple(keep))


def _in_hull(point: RatVec, others: list[RatVec]) -> bool:
    """Exact LP feasibility of point = convex combination of others."""
    k = len(others)
    if k == 0:
        return False
    n = len(point)
    constraints = []
    for j in range(k):
        row = [Fraction(0)] * k
        row[j] = Fraction(-1)
        constraints.append((row, Fraction(0)))
    ones = [Fraction(1)] * k
    constraints.append((ones, Fraction(1)))
    constraints.append(([-x for x in ones], Fraction(-1)))
    for i in range(n):
        row = [rat(p[i]) for p in others]
        constraints.append((row, rat(point[i])))
        constraints.append(([-x for x in row], -rat(point[i])))
    problem = LPProblem.of([Fraction(0)] * k, constraints, k)
    return lp_minimize(problem).status is LPStatus.OPTIMAL


def facets(p: VPolytope) -> HPolytope:
    """Exact irredundant facet list of a full-dimensional VPolytope."""
    cached = _FACET_CACHE.get(p)
    if cached is None:
        rows = tuple((vec(u), b) for u, b in _enumerate_facets(p.vertices))
        cached = HPolytope(p.dim, rows)
        _FACET_CACHE[p] = cached
    return cached


def contains_origin_interior(p: VPolytope) -> bool:
    """True iff every facet inequality is strict at the origin."""
    return all(b > 0 for _, b in facets(p).facets)


def dual(p: VPolytope) -> VPolytope:
    """Polar dual: the set of y with <x, y> >= -1 for all x in P."""
    if not contains_origin_interior(p):
        raise OriginNotInterior("dual needs the origin strictly inside")
    hp = facets(p)
    dual_vertices = tuple(tuple(-u_i / b for u_i in u) for u, b in hp.facets)
    q = VPolytope(p.dim, dual_vertices)
    # Each vertex v of P supports the facet <-v, y> <= 1 of the dual.
    rows = []
    for v in p.vertices:
        g = _joint_gcd(v)
        rows.append((tuple(-x / g for x in v), 1 / g))
    _FACET_CACHE.setdefault(q, HPolytope(p.dim, tuple(rows)))
    return q


def _joint_gcd(v: RatVec) -> Fraction:
    """Positive rational g such that v/g is a primitive integer vector."""
    nums = [rat(x) for x in v]
    mult = lcm(*(x.denominator for x in nums))
    ints = [int(x * mult) for x in nums]
    return Fraction(gcd(*(abs(i) for i in ints)), mult)


def is_integral(p: VPolytope) -> bool:
    return all(x.denominator == 1 for v in p.vertices for x in v)


def is_reflexive(p: VPolytope) -> bool:
    """True iff the dual polytope has integer vertices."""
    if not is_integral(p):
        raise ValueError("reflexivity is defined for integral polytopes")
    return is_integral(dual(p))


def _int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        for i in range(r + 1, len(rows)):
            mik = rows[i][col]
            if mik:
                for j in range(col, ncols):
                    rows[i][j] = (rows[i][j] * pivot - mik * rows[r][j]) // prev
        prev = pivot
        r += 1
        if r == len(rows):
            break
    return r


def edges(p: VPolytope) -> list[tuple[int, int]]:
    """Vertex index pairs spanning the 1-faces, via facet incidence rank."""
    hp = facets(p)
    normals_int, _ = _scale_to_int([u for u, _ in hp.facets])
    tight = [
        [i for i, (u, b) in enumerate(hp.facets) if dot(u, v) == b]
        for v in p.vertices
    ]
    tight_sets = [set(t) for t in tight]
    out = []
    for i, j in combinations(range(len(p.vertices)), 2):
        common = [normals_int[k] for k in tight[i] if k in tight_sets[j]]
        if len(common) >= p.dim - 1 and _int_rank(common) == p.dim - 1:
            out.append((i, j))
    return out


def is_delzant(p: VPolytope) -> bool:
    """True iff every vertex is simple with a unimodular primitive edge basis."""
    if not is_integral(p):
        raise ValueError("the Delzant condition is defined for integral polytopes")
    adjacency: dict[int, list[int]] = {i: [] for i in range(len(p.vertices))}
    for i, j in edges(p):
        adjacency[i].append(j)
        adjacency[j].append(i)
    for i, nbrs in adjacency.items():
        if len(nbrs) != p.dim:
            return False
        prim = []
        for j in nbrs:
            d = [int(x) for x in vec_sub(p.vertices[j], p.vertices[i])]
            g = gcd(*(abs(x) for x in d))
            prim.append([x // g for x in d])
        if abs(_int_det(prim)) != 1:
            return False
    return True


def is_fano_polytope(p: VPolytope) -> bool:
    """Integral vertices, interior origin, reflexive and Delzant."""
    if not is_integral(p):
        return False
    if not contains_origin_interior(p):
        return False
    return is_reflexive(p) and is_delzant(p)


def transform(p: VPolytope, u: RatMat) -> VPolytope:
    """Apply a GL(n, Z) matrix to the vertex set (columns convention)."""
    if any(rat(x).denominator != 1 for row in u for x in row):
        raise NotUnimodular("transform matrix must be integral")
    if abs(determinant(u)) != 1:
        raise NotUnimodular("transform matrix must have determinant +-1")
    new_vertices = tuple(mat_vec(u, v) for v in p.vertices)
    q = VPolytope(p.dim, new_vertices)
    if p in _FACET_CACHE and q not in _FACET_CACHE:
        n = p.dim
        inv_cols = [solve_linear(u, [Fraction(i == j) for i in range(n)]) for j in range(n)]
        rows = []
        for normal, b in _FACET_CACHE[p].facets:
            moved = tuple(dot(normal, inv_cols[i]) for i in range(n))
            # A unimodular change of basis preserves primitivity of the normal.
            rows.append((moved, b))
        _FACET_CACHE[q] = HPolytope(n, tuple(rows))
    return q


def intersect_halfspace(p: VPolytope, normal, offset) -> VPolytope | None:
    """Exact intersection with ``normal . x <= offset``.

    Returns None when the intersection has empty interior.  New vertices are
    the surviving old ones plus the crossing points of cut edges.
    """
    normal, offset = vec(normal), rat(offset)
    gaps = [dot(normal, v) - offset for v in p.vertices]
    if all(g <= 0 for g in gaps):
        return p
    if not any(g < 0 for g in gaps):
        return None
    new_pts: list[RatVec] = [v for v, g in zip(p.vertices, gaps) if g <= 0]
    for i, j in edges(p):
        gi, gj = gaps[i], gaps[j]
        if (gi < 0 < gj) or (gj < 0 < gi):
            t = gi / (gi - gj)
            vi, vj = p.vertices[i], p.vertices[j]
            cut = tuple(a + t * (b - a) for a, b in zip(vi, vj))
            if cut not in new_pts:
                new_pts.append(cut)
    q = VPolytope(p.dim, tuple(new_pts))
    rows = []
    for u, b in facets(p).facets:
        tight = [v for v in new_pts if dot(u, v) == b]
        if len(tight) >= p.dim and _affine_rank(tight) == p.dim - 1:
            rows.append((u, b))
    g = _joint_gcd(normal)
    cut_row = (tuple(x / g for x in normal), offset / g)
    tight = [v for v in new_pts if dot(cut_row[0], v) == cut_row[1]]
    if len(tight) >= p.dim and _affine_rank(tight) == p.dim - 1:
        rows.append(cut_row)
    _FACET_CACHE.setdefault(q, HPolytope(p.dim, tuple(sorted(rows))))
    return q


def _affine_rank(points) -> int:
    if len(points) < 2:
        return 0
    return rank([vec_sub(q, points[0]) for q in points[1:]])


def triangulate(p: VPolytope, vertex_order=None) -> tuple[Simplex, ...]:
    """Decompose P into simplices with disjoint interiors covering P.

    Cones over the origin when it is strictly interior (the Fano case),
    otherwise over the first vertex; each facet is triangulated recursively
    from its lexicographically least vertex.  The output is deterministic
    for a given vertex ordering, and ``vertex_order`` permutes that ordering
    so independence of the decomposition can be tested.
    """
    verts = list(p.vertices)
    if vertex_order is not None:
        verts = [verts[i] for i in vertex_order]
    n = p.dim
    hp = facets(p)
    if contains_origin_interior(p):
        apex: RatVec = tuple(Fraction(0) for _ in range(n))
    else:
        apex = verts[0]
    out = []
    for u, b in hp.facets:
        if dot(u, apex) == b:
            continue
        face_pts = [v for v in verts if dot(u, v) == b]
        for cell in _triangulate_face(face_pts, n - 1):
            out.append(Simplex(n, (apex,) + cell))
    return tuple(out)


def _triangulate_face(pts: list[RatVec], face_dim: int) -> list[tuple[RatVec, ...]]:
    """Triangulate a vertex set spanning an affine space of dimension face_dim."""
    if len(pts) == face_dim + 1:
        return [tuple(pts)]
    cols = _independent_columns(pts, face_dim)
    proj = [tuple(pt[c] for c in cols) for pt in pts]
    apex_i = min(range(len(pts)), key=lambda i: proj[i])
    out = []
    for normal, b in _enumerate_facets(proj):
        if dot(normal, proj[apex_i]) == b:
            continue
        sub_idx = [i for i, q in enumerate(proj) if dot(normal, q) == b]
        sub_cells = _triangulate_face([pts[i] for i in sub_idx], face_dim - 1)
        for cell in sub_cells:
            out.append((pts[apex_i],) + cell)
    return out


def _independent_columns(pts: list[RatVec], target: int) -> list[int]:
    """Coordinate subset on which the point set stays affinely independent."""
    diffs = [list(vec_sub(q, pts[0])) for q in pts[1:]]
    cols: list[int] = []
    for c in range(len(pts[0])):
        if len(cols) == target:
            break
        trial = [[row[k] for k in cols + [c]] for row in diffs]
        if rank(trial) == len(cols) + 1:
            cols.append(c)
    if len(cols) != target:
        raise DegeneratePolytope("face does not span the requested dimension")
    return cols


def facet_basis_normal_form(p: VPolytope) -> tuple:
    """Canonical labelled form of a polytope whose facets are unimodular simplices.

    Rewrites the vertex set in the lattice basis of every (facet, vertex
    ordering) choice and returns the lexicographically least sorted image.
    Two such polytopes are GL(n, Z)-equivalent iff their forms coincide.
    """
    if not is_integral(p):
        raise ValueError("normal form is defined for lattice polytopes")
    n = p.dim
    verts = [[int(x) for x in v] for v in p.vertices]
    hp = facets(p)
    best = None
    for u, b in hp.facets:
        tight = [v for v in verts if sum(a * x for a, x in zip(u, v)) == b]
        if len(tight) != n:
            raise ValueError("normal form needs simplicial facets")
        for perm in permutations(tight):
            basis = [list(col) for col in zip(*perm)]
            det = _int_det(basis)
            if abs(det) != 1:
                raise ValueError("normal form needs unimodular facets")
            inv = _int_inverse(basis, det)
            image = sorted(
                tuple(sum(inv[i][j] * v[j] for j in range(n)) for i in range(n))
                for v in verts
            )
            key = tuple(image)
            if best is None or key < best:
                best = key
    return best


def _int_inverse(m: list[list[int]], det: int) -> list[list[int]]:
    """Inverse of an integer matrix with determinant +-1, via cofactors."""
    n = len(m)
    adj = [
        [
            (-1) ** (i + j)
            * _int_det([row[:i] + row[i + 1:] for k, row in enumerate(m) if k != j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return [[x // det for x in row] for row in adj]
