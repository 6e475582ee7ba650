"""Exact simplex solver for rational linear programs.

Canonical form is ``minimize c.z subject to A z <= b`` with free variables.
Free variables are split into nonnegative pairs internally, feasibility is
established by a phase-one auxiliary program, and pivoting follows Bland's
rule throughout so the method terminates under degeneracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .linalg import RatVec, dot, rat, vec


class LPStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPProblem:
    """minimize ``objective . z`` subject to ``row . z <= bound`` per constraint."""

    objective: RatVec
    constraints: tuple[tuple[RatVec, Fraction], ...]
    nvars: int

    @staticmethod
    def of(objective, constraints, nvars: int) -> "LPProblem":
        obj = vec(objective)
        rows = tuple((vec(r), rat(b)) for r, b in constraints)
        if len(obj) != nvars or any(len(r) != nvars for r, _ in rows):
            raise ValueError("constraint rows and objective must have length nvars")
        return LPProblem(obj, rows, nvars)


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: Fraction | None = None
    argmin: RatVec | None = None


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _pivot(tableau: list[list[Fraction]], obj: list[Fraction], basis: list[int],
           row: int, col: int) -> None:
    prow = tableau[row]
    inv = _ONE / prow[col]
    tableau[row] = prow = [x * inv for x in prow]
    for i, trow in enumerate(tableau):
        if i == row:
            continue
        f = trow[col]
        if f:
            tableau[i] = [a - f * b if b else a for a, b in zip(trow, prow)]
    f = obj[col]
    if f:
        obj[:] = [a - f * b if b else a for a, b in zip(obj, prow)]
    basis[row] = col


def _bland_step(tableau: list[list[Fraction]], obj: list[Fraction],
                basis: list[int], ncols: int) -> str:
    """One Bland-rule pivot; returns "optimal", "unbounded" or "pivoted"."""
    enter = next((j for j in range(ncols) if obj[j] < 0), None)
    if enter is None:
        return "optimal"
    leave = None
    best: Fraction | None = None
    for i, trow in enumerate(tableau):
        coef = trow[enter]
        if coef > 0:
            ratio = trow[-1] / coef
            if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                best, leave = ratio, i
    if leave is None:
        return "unbounded"
    _pivot(tableau, obj, basis, leave, enter)
    return "pivoted"


def lp_minimize(problem: LPProblem) -> LPResult:
    """Solve the program exactly; distinguishes optimal, unbounded, infeasible."""
    n = problem.nvars
    m = len(problem.constraints)
    # Columns: u_0..u_{n-1}, w_0..w_{n-1} (z = u - w), s_0..s_{m-1}, artificials.
    nstruct = 2 * n + m
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    for i, (crow, bound) in enumerate(problem.constraints):
        sign = _ONE if bound >= 0 else -_ONE
        row = [sign * c for c in crow] + [-sign * c for c in crow]
        row += [_ZERO] * m
        row[2 * n + i] = sign
        rows.append(row)
        if bound >= 0:
            basis.append(2 * n + i)
        else:
            art_cols.append(nstruct + len(art_cols))
            basis.append(art_cols[-1])
        rows[-1].append(sign * bound)

    ncols = nstruct + len(art_cols)
    for row in rows:
        rhs = row.pop()
        row.extend(_ZERO for _ in range(len(art_cols)))
        row.append(rhs)
    for r, b in zip(rows, basis):
        if b >= nstruct:
            r[b] = _ONE

    if art_cols:
        obj = [_ZERO] * ncols + [_ZERO]
        for j in art_cols:
            obj[j] = _ONE
        for r, b in zip(rows, basis):
            if b >= nstruct:
                obj = [a - x for a, x in zip(obj, r)]
        while (state := _bland_step(rows, obj, basis, ncols)) == "pivoted":
            pass
        if state != "optimal" or -obj[-1] != 0:
            return LPResult(LPStatus.INFEASIBLE)
        # Drive leftover zero-valued artificials out of the basis.
        for i in range(len(rows) - 1, -1, -1):
            if basis[i] >= nstruct:
                col = next((j for j in range(nstruct) if rows[i][j] != 0), None)
                if col is None:
                    del rows[i], basis[i]
                else:
                    _pivot(rows, obj, basis, i, col)
        for r in rows:
            del r[nstruct:-1]
        ncols = nstruct

    obj = [_ZERO] * ncols + [_ZERO]
    for j, c in enumerate(problem.objective):
        obj[j] = c
        obj[n + j] = -c
    for r, b in zip(rows, basis):
        if obj[b]:
            f = obj[b]
            obj = [a - f * x for a, x in zip(obj, r)]
    while (state := _bland_step(rows, obj, basis, ncols)) == "pivoted":
        pass
    if state == "unbounded":
        return LPResult(LPStatus.UNBOUNDED)

    values = {b: row[-1] for b, row in zip(basis, rows)}
    z = tuple(values.get(j, _ZERO) - values.get(n + j, _ZERO) for j in range(n))
    for crow, bound in problem.constraints:
        if dot(crow, z) > bound:
            raise AssertionError("simplex returned an infeasible point")
    return LPResult(LPStatus.OPTIMAL, dot(problem.objective, z), z)
