"""Uniform relative Ding stability of toric Fano polytopes.

The extremal affine function theta of a full-dimensional polytope P is the
unique affine function with

    int_P theta dx = 0,    int_P x_i theta dx = int_P x_i dx,

i.e. the solution of the bordered Gram system of the moments of P.  Its
maximum over P decides stability: below 1 the polytope is uniformly
relatively Ding polystable, above 1 it is unstable, and the two-piece
function max{0, (1 - theta)/vol} then has a strictly negative relative
Ding invariant, which certifies the instability constructively.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .functions import AffineFunction, PLConvexFunction
from .linalg import RatVec, dot, rat, solve_linear, vec
from .moments import (
    integrate_affine,
    integrate_pl,
    integrate_pl_times_affine,
    moment_data,
    pl_subdivision,
)
from .lp import LPProblem, LPStatus, lp_minimize
from .polytope import (
    VPolytope,
    contains_origin_interior,
    facets,
    from_vertices,
    is_fano_polytope,
    is_integral,
    is_reflexive,
)


class NotFano(ValueError):
    """Raised when classification is asked of a non-Fano polytope."""


class NotUnstable(ValueError):
    """Raised when a destabilizer is requested but none exists."""


class NotNormalized(ValueError):
    """Raised when a function violates min_P f = f(0) = 0."""


class RTooSmall(ValueError):
    """Raised when the lifting height does not clear max_P f."""


class Verdict(Enum):
    UNIFORMLY_POLYSTABLE = "uniformly_polystable"
    BOUNDARY = "boundary"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityReport:
    theta: AffineFunction
    mabuchi: Fraction
    verdict: Verdict
    witness_vertex: RatVec
    destabilizer: PLConvexFunction | None = None


def extremal_affine(p: VPolytope) -> AffineFunction:
    """The unique affine theta with zero mean and x_i-moments of one.

    Solves the bordered Gram system [[m2, m1], [m1^T, vol]] (a, c) = (m1, 0),
    which is positive definite, then re-checks both defining conditions
    exactly.
    """
    md = moment_data(p)
    n = p.dim
    rows = [list(md.m2[i]) + [md.m1[i]] for i in range(n)]
    rows.append(list(md.m1) + [md.vol])
    rhs = list(md.m1) + [Fraction(0)]
    solution = solve_linear(rows, rhs)
    theta = AffineFunction(solution[:n], solution[n])
    if integrate_affine(p, theta) != 0:
        raise AssertionError("extremal function failed the zero-mean condition")
    for i in range(n):
        moment = dot(theta.a, md.m2[i]) + theta.c * md.m1[i]
        if moment != md.m1[i]:
            raise AssertionError("extremal function failed a moment condition")
    return theta


def mabuchi_constant(p: VPolytope) -> tuple[Fraction, RatVec]:
    """max of theta over P with an attaining vertex (lexicographic ties)."""
    theta = extremal_affine(p)
    best = max(theta(v) for v in p.vertices)
    witness = min(v for v in p.vertices if theta(v) == best)
    return best, witness


def relative_ding_invariant(p: VPolytope, f: PLConvexFunction) -> Fraction:
    """-f(0) + (1/vol) int_P f (1 - theta), exactly."""
    theta = extremal_affine(p)
    md = moment_data(p)
    origin = (Fraction(0),) * p.dim
    integral = integrate_pl(p, f) - integrate_pl_times_affine(p, f, theta)
    return -f(origin) + integral / md.vol


def _subdivision_vertices(p: VPolytope, f: PLConvexFunction) -> list[RatVec]:
    seen: list[RatVec] = []
    for cell, _ in pl_subdivision(p, f):
        for v in cell.vertices:
            if v not in seen:
                seen.append(v)
    return seen


def reduced_j_norm(p: VPolytope, f: PLConvexFunction) -> Fraction:
    """inf over affine ell of mean(f + ell) - min(f + ell), exactly.

    The constant of ell cancels, and for a fixed linear part the minimum of
    f + a.x over P is attained on a vertex of the subdivision induced by f,
    so the infimum is a finite linear program over (a, t).
    """
    md = moment_data(p)
    n = p.dim
    cellverts = _subdivision_vertices(p, f)
    mean_obj = [mi / md.vol for mi in md.m1] + [Fraction(1)]
    constraints = []
    for v in cellverts:
        row = [-rat(x) for x in v] + [Fraction(-1)]
        constraints.append((row, f(v)))
    result = lp_minimize(LPProblem.of(mean_obj, constraints, n + 1))
    if result.status is not LPStatus.OPTIMAL:
        raise AssertionError("the J-norm program is bounded and feasible")
    return integrate_pl(p, f) / md.vol + result.value


def _min_over(p: VPolytope, f: PLConvexFunction) -> Fraction:
    return min(f(v) for v in _subdivision_vertices(p, f))


def _is_normalized(p: VPolytope, f: PLConvexFunction) -> bool:
    origin = (Fraction(0),) * p.dim
    return f(origin) == 0 and _min_over(p, f) == 0


def normalize(p: VPolytope, f: PLConvexFunction) -> PLConvexFunction:
    """Subtract the active piece at 0 (lowest index) so min_P g = g(0) = 0."""
    if any(dot(u, (0,) * p.dim) > b for u, b in facets(p).facets):
        raise ValueError("normalization needs the origin inside P")
    origin = (Fraction(0),) * p.dim
    value = f(origin)
    base = next(piece for piece in f.pieces if piece(origin) == value)
    g = PLConvexFunction(tuple(piece - base for piece in f.pieces))
    if g(origin) != 0 or _min_over(p, g) != 0:
        raise AssertionError("normalization failed to reach min_P g = g(0) = 0")
    return g


def build_destabilizer(p: VPolytope) -> PLConvexFunction:
    """max{0, (1 - theta)/vol}: its Ding invariant is negative when max theta > 1."""
    m, _ = mabuchi_constant(p)
    if m <= 1:
        raise NotUnstable("destabilizers exist only when max theta exceeds 1")
    theta = extremal_affine(p)
    vol = moment_data(p).vol
    ell = AffineFunction(
        tuple(-x / vol for x in theta.a), (1 - theta.c) / vol
    )
    zero = AffineFunction((Fraction(0),) * p.dim, Fraction(0))
    return PLConvexFunction((zero, ell))


def classify(p: VPolytope, orbifold: bool = False) -> StabilityReport:
    """Stability verdict from the sign of 1 - max theta.

    With ``orbifold=True`` reflexive but non-Delzant polytopes are accepted
    with a warning; everything else still raises NotFano.
    """
    if not is_fano_polytope(p):
        acceptable = (
            orbifold
            and is_integral(p)
            and contains_origin_interior(p)
            and is_reflexive(p)
        )
        if not acceptable:
            raise NotFano("input is not a Fano (reflexive Delzant) polytope")
        warnings.warn("classifying a reflexive non-Delzant polytope", stacklevel=2)
    theta = extremal_affine(p)
    m, witness = mabuchi_constant(p)
    if m < 1:
        verdict = Verdict.UNIFORMLY_POLYSTABLE
    elif m == 1:
        verdict = Verdict.BOUNDARY
    else:
        verdict = Verdict.UNSTABLE
    destabilizer = None
    if verdict is Verdict.UNSTABLE:
        destabilizer = build_destabilizer(p)
        if relative_ding_invariant(p, destabilizer) >= 0:
            raise AssertionError("destabilizer failed its negativity contract")
    return StabilityReport(theta, m, verdict, witness, destabilizer)


def uniform_bound_check(p: VPolytope, f: PLConvexFunction) -> bool:
    """Exact check of I(f) >= ((1 - max theta)/vol) int_P f for normalized f."""
    m, _ = mabuchi_constant(p)
    if m >= 1:
        raise ValueError("the uniform bound applies below the threshold only")
    if not _is_normalized(p, f):
        raise NotNormalized("f must satisfy min_P f = f(0) = 0")
    vol = moment_data(p).vol
    lhs = relative_ding_invariant(p, f)
    rhs = (1 - m) / vol * integrate_pl(p, f)
    return lhs >= rhs


def test_config_polytope(
    p: VPolytope, f: PLConvexFunction, r=None
) -> VPolytope:
    """The lifted polytope {(x, y) : x in P, 0 <= y <= R - f(x)}.

    R defaults to max_P f + 1; the vertices sit over the subdivision of P.
    """
    fmax = max(f(v) for v in p.vertices)
    r = fmax + 1 if r is None else rat(r)
    if r <= fmax:
        raise RTooSmall("the lifting height must exceed max_P f")
    points = [tuple(v) + (Fraction(0),) for v in p.vertices]
    for w in _subdivision_vertices(p, f):
        points.append(tuple(w) + (r - f(w),))
    return from_vertices(points)
