"""Exact integration over polytopes: volume, first and second moments.

Everything reduces to closed-form moments of simplices summed over a
triangulation.  For a simplex with vertices v_0 .. v_n and edge determinant
T the identities are

    vol           = |T| / n!
    int x_i       = vol * (sum_k v_ki) / (n + 1)
    int x_i x_j   = vol * (sum_k v_ki v_kj + sum_k v_ki * sum_k v_kj)
                    / ((n + 1)(n + 2))

with k running over all n+1 vertices.  The second-moment identity is
validated against an independent iterated-integration oracle in the test
suite before anything downstream relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .functions import AffineFunction, PLConvexFunction
from .linalg import RatMat, RatVec, dot, rat
from .polytope import (
    HPolytope,
    Simplex,
    VPolytope,
    _FACET_CACHE,
    _int_det,
    _scale_to_int,
    facets,
    intersect_halfspace,
    triangulate,
)


@dataclass(frozen=True)
class MomentData:
    """Volume, first moments and second moments of a polytope."""

    vol: Fraction
    m1: RatVec
    m2: RatMat


def simplex_volume(s: Simplex) -> Fraction:
    ipts, mult = _scale_to_int(s.vertices)
    base = ipts[0]
    rows = [[v[j] - base[j] for j in range(s.dim)] for v in ipts[1:]]
    return Fraction(abs(_int_det(rows)), factorial(s.dim) * mult**s.dim)


def simplex_moment1(s: Simplex, i: int) -> Fraction:
    """Exact integral of x_i over the simplex (volume times centroid)."""
    total = sum(rat(v[i]) for v in s.vertices)
    return simplex_volume(s) * total / (s.dim + 1)


def simplex_moment2(s: Simplex, i: int, j: int) -> Fraction:
    """Exact integral of x_i x_j over the simplex."""
    si = sum(rat(v[i]) for v in s.vertices)
    sj = sum(rat(v[j]) for v in s.vertices)
    sij = sum(rat(v[i]) * rat(v[j]) for v in s.vertices)
    return simplex_volume(s) * (sij + si * sj) / ((s.dim + 1) * (s.dim + 2))


def moment_data(p: VPolytope, vertex_order=None) -> MomentData:
    """Volume and degree <= 2 moments of P, by triangulation.

    The result is independent of the triangulation; passing a
    ``vertex_order`` recomputes along a different decomposition, which the
    property tests use to confirm that independence.
    """
    if vertex_order is None:
        return _moment_data_default(p)
    return _moment_accumulate(p, vertex_order)


@cache
def _moment_data_default(p: VPolytope) -> MomentData:
    return _moment_accumulate(p, None)


def _moment_accumulate(p: VPolytope, vertex_order) -> MomentData:
    n = p.dim
    ipts, mult = _scale_to_int(p.vertices)
    scaled = VPolytope(n, tuple(tuple(Fraction(x) for x in v) for v in ipts))
    if scaled not in _FACET_CACHE:
        rows = tuple((u, b * mult) for u, b in facets(p).facets)
        _FACET_CACHE[scaled] = HPolytope(n, rows)
    vol_acc = 0
    m1_acc = [0] * n
    m2_acc = [[0] * n for _ in range(n)]
    for simplex in triangulate(scaled, vertex_order):
        verts = [[int(x) for x in v] for v in simplex.vertices]
        base = verts[0]
        t = abs(_int_det([[v[j] - base[j] for j in range(n)] for v in verts[1:]]))
        if t == 0:
            continue
        vol_acc += t
        sums = [sum(v[i] for v in verts) for i in range(n)]
        for i in range(n):
            m1_acc[i] += t * sums[i]
            for j in range(i, n):
                m2_acc[i][j] += t * (
                    sum(v[i] * v[j] for v in verts) + sums[i] * sums[j]
                )
    nfact = factorial(n)
    vol = Fraction(vol_acc, nfact * mult**n)
    m1 = tuple(
        Fraction(m1_acc[i], nfact * (n + 1) * mult ** (n + 1)) for i in range(n)
    )
    denom2 = nfact * (n + 1) * (n + 2) * mult ** (n + 2)
    m2 = tuple(
        tuple(Fraction(m2_acc[min(i, j)][max(i, j)], denom2) for j in range(n))
        for i in range(n)
    )
    return MomentData(vol, m1, m2)


def integrate_affine(p: VPolytope, ell: AffineFunction) -> Fraction:
    """Exact integral of an affine function over P."""
    md = moment_data(p)
    return dot(ell.a, md.m1) + ell.c * md.vol


@cache
def pl_subdivision(
    p: VPolytope, f: PLConvexFunction
) -> tuple[tuple[VPolytope, int], ...]:
    """Cells on which one piece of f dominates, with the active piece index.

    Cells with empty interior are dropped; a piece that duplicates an
    earlier one yields no cell (lowest index wins).  The surviving cells
    tile P.
    """
    cells: list[tuple[VPolytope, int]] = []
    for k, piece in enumerate(f.pieces):
        if any(f.pieces[j] == piece for j in range(k)):
            continue
        cell: VPolytope | None = p
        for j, other in enumerate(f.pieces):
            if j == k:
                continue
            # keep the region where piece >= other
            diff = other - piece
            cell = intersect_halfspace(cell, diff.a, -diff.c)
            if cell is None:
                break
        if cell is not None:
            cells.append((cell, k))
    return cells


def integrate_pl(p: VPolytope, f: PLConvexFunction) -> Fraction:
    """Exact integral of a PL convex function over P."""
    return sum(
        (integrate_affine(cell, f.pieces[k]) for cell, k in pl_subdivision(p, f)),
        Fraction(0),
    )


def integrate_pl_times_affine(
    p: VPolytope, f: PLConvexFunction, g: AffineFunction
) -> Fraction:
    """Exact integral of f(x) * g(x) over P for PL convex f and affine g."""
    total = Fraction(0)
    for cell, k in pl_subdivision(p, f):
        piece = f.pieces[k]
        md = moment_data(cell)
        quad = sum(
            piece.a[i] * g.a[j] * md.m2[i][j]
            for i in range(p.dim)
            for j in range(p.dim)
        )
        linear = sum(
            (piece.a[i] * g.c + g.a[i] * piece.c) * md.m1[i] for i in range(p.dim)
        )
        total += quad + linear + piece.c * g.c * md.vol
    return total
