"""Exact rational scalars, vectors and dense linear algebra.

Every quantity in this package is a ``fractions.Fraction`` (arbitrary
precision, always reduced, positive denominator).  Vectors are tuples of
Fractions, matrices are tuples of row tuples.  Elimination is fraction-free
(Bareiss) on integer-scaled rows to keep intermediate entries small.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction
RatVec = tuple[Fraction, ...]
RatMat = tuple[RatVec, ...]


class SingularMatrix(ValueError):
    """Raised when a linear solve meets a rank-deficient matrix."""


def rat(x) -> Fraction:
    """Coerce an int, string or Fraction to an exact Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries: Iterable) -> RatVec:
    return tuple(rat(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> RatMat:
    return tuple(vec(r) for r in rows)


def format_rational(x) -> str:
    """Render a rational in the reduced ``p/q`` contract (``p`` when q = 1)."""
    return str(rat(x))


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with an optional sign on the numerator."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((rat(a) * rat(b) for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence, v: Sequence) -> RatVec:
    return tuple(rat(a) + rat(b) for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> RatVec:
    return tuple(rat(a) - rat(b) for a, b in zip(u, v))


def vec_scale(s, v: Sequence) -> RatVec:
    s = rat(s)
    return tuple(s * rat(b) for b in v)


def mat_vec(a: Sequence[Sequence], x: Sequence) -> RatVec:
    return tuple(dot(row, x) for row in a)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> RatMat:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity(n: int) -> RatMat:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def _integer_rows(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[Fraction]]:
    """Scale each row by the lcm of its denominators; return rows and scales."""
    out, scales = [], []
    for row in rows:
        row = [rat(x) for x in row]
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
        scales.append(Fraction(mult))
    return out, scales


def _bareiss_eliminate(m: list[list[int]], ncols: int) -> int:
    """Fraction-free forward elimination in place.

    Returns the sign of the row permutation used, or 0 if a structurally
    zero pivot column was found (rank deficiency within the first
    ``len(m)`` columns).
    """
    n = len(m)
    sign = 1
    prev = 1
    for k in range(min(n, ncols)):
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
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, ncols):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign


def determinant(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss elimination)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(a)
    sign = _bareiss_eliminate(rows, n)
    if sign == 0:
        return Fraction(0)
    det_scaled = Fraction(sign * rows[n - 1][n - 1])
    for s in scales:
        det_scaled /= s
    return det_scaled


def solve_linear(a: Sequence[Sequence], b: Sequence) -> RatVec:
    """Solve ``A x = b`` exactly for square A.

    Fraction-free elimination on the integer-scaled augmented matrix,
    followed by exact back-substitution.  The residual is re-checked
    against the original system; ``SingularMatrix`` is raised on rank
    deficiency.
    """
    n = len(a)
    if n == 0:
        return ()
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_linear requires square A and matching b")
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, _ = _integer_rows(aug)
    if _bareiss_eliminate(rows, n + 1) == 0:
        raise SingularMatrix("matrix is rank deficient")
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        if rows[i][i] == 0:
            raise SingularMatrix("matrix is rank deficient")
        x[i] = acc / rows[i][i]
    solution = tuple(x)
    for row, bi in zip(a, b):
        if dot(row, solution) != rat(bi):
            raise SingularMatrix("inconsistent system: residual is nonzero")
    return solution


def rank(a: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free elimination with column pivoting."""
    rows, _ = _integer_rows(a)
    rows = [r for r in rows if any(r)]
    ncols = len(a[0]) if a else 0
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
            for j in range(col, ncols):
                rows[i][j] = (rows[i][j] * pivot - mik * rows[r][j]) // prev
        prev = pivot
        r += 1
        if r == len(rows):
            break
    return r
