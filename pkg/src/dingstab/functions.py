"""Affine and piecewise-linear convex functions with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import RatVec, dot, rat, vec


@dataclass(frozen=True)
class AffineFunction:
    """x -> a . x + c."""

    a: RatVec
    c: Fraction

    @staticmethod
    def of(a, c) -> "AffineFunction":
        return AffineFunction(vec(a), rat(c))

    @property
    def dim(self) -> int:
        return len(self.a)

    def __call__(self, x) -> Fraction:
        return dot(self.a, x) + self.c

    def __sub__(self, other: "AffineFunction") -> "AffineFunction":
        return AffineFunction(
            tuple(p - q for p, q in zip(self.a, other.a)), self.c - other.c
        )

    def scale(self, s) -> "AffineFunction":
        s = rat(s)
        return AffineFunction(tuple(s * x for x in self.a), s * self.c)


@dataclass(frozen=True)
class PLConvexFunction:
    """x -> max over finitely many affine pieces (convex by construction)."""

    pieces: tuple[AffineFunction, ...]

    @staticmethod
    def of(pieces) -> "PLConvexFunction":
        pieces = tuple(
            p if isinstance(p, AffineFunction) else AffineFunction.of(*p)
            for p in pieces
        )
        if not pieces:
            raise ValueError("a PL convex function needs at least one piece")
        if len({p.dim for p in pieces}) != 1:
            raise ValueError("pieces must share one ambient dimension")
        return PLConvexFunction(pieces)

    @property
    def dim(self) -> int:
        return self.pieces[0].dim

    def __call__(self, x) -> Fraction:
        return max(p(x) for p in self.pieces)

    def shift_by_affine(self, ell: AffineFunction) -> "PLConvexFunction":
        """The function x -> f(x) + ell(x), piece by piece."""
        return PLConvexFunction(
            tuple(
                AffineFunction(
                    tuple(p + q for p, q in zip(piece.a, ell.a)), piece.c + ell.c
                )
                for piece in self.pieces
            )
        )


def constant_zero(dim: int) -> PLConvexFunction:
    return PLConvexFunction.of([((0,) * dim, 0)])
