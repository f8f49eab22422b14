"""Exact rational matrices and the linear algebra used everywhere else.

A RationalMatrix stores one integer numerator array (int64 fast path, Python
object fallback) plus a single positive denominator, normalized so that the
gcd of all numerators and the denominator is 1.  That canonical form makes
value equality structural equality and keeps results bit-reproducible.  No
floating point is used anywhere.

rref and kernel_basis are textbook Gauss-Jordan over Fractions with a fixed
pivot rule (leftmost column first, topmost eligible row, full reduction), so
their output is deterministic.  rank and min_poly run on the integer echelon
engine, which is exact and much faster on large matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._intops import (
    content,
    demote,
    exact_add,
    exact_matmul,
    exact_mul_elementwise,
    exact_scale,
    exact_sub,
)
from .echelon import EchelonSpan
from .polys import RationalPoly


class RationalMatrix:
    """Immutable exact matrix over the rationals."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1, *, _canonical: bool = False):
        if isinstance(num, np.ndarray):
            if num.dtype == object or num.dtype.kind == "i":
                arr = num if _canonical else np.array(num, dtype=num.dtype)
            elif num.dtype.kind == "u":
                arr = num.astype(object)
            else:
                raise TypeError(f"integer numerators expected, got dtype {num.dtype}")
        else:
            arr = np.array(num, dtype=object)
            if arr.size and not isinstance(arr.flat[0], (int, np.integer)):
                raise TypeError("integer numerators expected; use from_rows for Fractions")
        if arr.ndim != 2:
            raise ValueError(f"2-dimensional array expected, got shape {arr.shape}")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        if not _canonical:
            if den < 0:
                arr, den = -arr, -den
            g = gcd(content(arr), den)
            if g > 1:
                arr = arr // g
                den //= g
            arr = demote(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "num", arr)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(np.eye(n, dtype=np.int64), 1, _canonical=True)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(np.zeros((nrows, ncols), dtype=np.int64), 1, _canonical=True)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(np.ones((nrows, ncols), dtype=np.int64), 1, _canonical=True)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "RationalMatrix":
        """Build from nested Fractions or ints, clearing denominators."""
        data = [[Fraction(v) for v in row] for row in rows]
        if not data:
            raise ValueError("at least one row expected")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        den = 1
        for row in data:
            for v in row:
                den = lcm(den, v.denominator)
        num = [[int(v * den) for v in row] for row in data]
        return cls(np.array(num, dtype=object), den)

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int]) -> "RationalMatrix":
        vals = [Fraction(v) for v in values]
        den = 1
        for v in vals:
            den = lcm(den, v.denominator)
        n = len(vals)
        arr = np.zeros((n, n), dtype=object)
        for i, v in enumerate(vals):
            arr[i, i] = int(v * den)
        return cls(arr, den)

    @classmethod
    def from_entries(
        cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Fraction | int]
    ) -> "RationalMatrix":
        den = 1
        vals = {k: Fraction(v) for k, v in entries.items()}
        for v in vals.values():
            den = lcm(den, v.denominator)
        arr = np.zeros((nrows, ncols), dtype=object)
        for (i, j), v in vals.items():
            arr[i, j] = int(v * den)
        return cls(arr, den)

    # -- views -------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return self.num.shape[0]

    @property
    def ncols(self) -> int:
        return self.num.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return Fraction(int(self.num[i, j]), self.den)

    def entries(self) -> dict[tuple[int, int], Fraction]:
        """Sparse view: nonzero entries in row-major order."""
        out = {}
        for i, j in zip(*np.nonzero(self.num)):
            out[(int(i), int(j))] = Fraction(int(self.num[i, j]), self.den)
        return out

    def dense_rows(self) -> list[list[Fraction]]:
        d = self.den
        return [[Fraction(int(v), d) for v in row] for row in self.num]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self.den) for v in self.num[i])

    def is_zero(self) -> bool:
        return not np.any(self.num)

    def transpose(self) -> "RationalMatrix":
        arr = self.num.T.copy()
        return RationalMatrix(arr, self.den, _canonical=True)

    def trace(self) -> Fraction:
        total = sum(int(v) for v in self.num.diagonal())
        return Fraction(total, self.den)

    # -- arithmetic --------------------------------------------------------

    def _require_same_shape(self, other: "RationalMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other)
        d = lcm(self.den, other.den)
        a = exact_scale(self.num, d // self.den)
        b = exact_scale(other.num, d // other.den)
        return RationalMatrix(exact_add(a, b), d)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other)
        d = lcm(self.den, other.den)
        a = exact_scale(self.num, d // self.den)
        b = exact_scale(other.num, d // other.den)
        return RationalMatrix(exact_sub(a, b), d)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self.num, self.den, _canonical=True)

    def __mul__(self, scalar) -> "RationalMatrix":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        scalar = Fraction(scalar)
        return RationalMatrix(
            exact_scale(self.num, scalar.numerator), self.den * scalar.denominator
        )

    __rmul__ = __mul__

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch for product: {self.shape} @ {other.shape}")
        return RationalMatrix(exact_matmul(self.num, other.num), self.den * other.den)

    def hadamard(self, other: "RationalMatrix") -> "RationalMatrix":
        """Entrywise product."""
        self._require_same_shape(other)
        return RationalMatrix(
            exact_mul_elementwise(self.num, other.num), self.den * other.den
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self.den == other.den
            and bool(np.array_equal(self.num, other.num))
        )

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols}, den={self.den})"


# -- free functions --------------------------------------------------------


def rref(m: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row echelon form with the fixed textbook pivot rule.

    Returns:
        (rref matrix, pivot column indices).
    """
    rows = m.dense_rows()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return RationalMatrix.from_rows(rows), tuple(pivots)


def rank(m: RationalMatrix) -> int:
    """Exact rank (denominator is irrelevant)."""
    span = EchelonSpan(m.ncols)
    for i in range(m.nrows):
        span.add(m.num[i])
    return span.dim


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Deterministic basis of the right kernel.

    One vector per free column (ascending), with the free coordinate set to 1
    and the whole vector rescaled so its first nonzero entry is positive.
    """
    reduced, pivots = rref(m)
    rows = reduced.dense_rows()
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r_idx, p_col in enumerate(pivots):
            v[p_col] = -rows[r_idx][f]
        for entry in v:
            if entry != 0:
                if entry < 0:
                    v = [-x for x in v]
                break
        basis.append(tuple(v))
    return basis


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a small square matrix via Gauss-Jordan."""
    if m.nrows != m.ncols:
        raise ValueError("square matrix expected")
    n = m.nrows
    left = m.dense_rows()
    aug = [left[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    reduced, pivots = rref(RationalMatrix.from_rows(aug))
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    rows = reduced.dense_rows()
    return RationalMatrix.from_rows([row[n:] for row in rows])


def min_poly(m: RationalMatrix, identity: RationalMatrix | None = None) -> RationalPoly:
    """Monic minimal polynomial, found at the first linear dependency.

    Powers identity, m, m**2, ... are vectorized and fed to the tracked
    echelon engine; the first dependency yields the coefficients exactly.
    With the identity argument this computes the minimal polynomial of m
    relative to a different algebra unit (used for compressed subalgebras);
    the default is the ordinary minimal polynomial.

    Returns:
        Monic RationalPoly p of least degree with p(m) == 0, where the
        constant term multiplies the given identity.
    """
    if m.nrows != m.ncols:
        raise ValueError("square matrix expected")
    n = m.nrows
    ident = RationalMatrix.identity(n) if identity is None else identity
    if ident.is_zero():
        raise ValueError("zero identity element")
    span = EchelonSpan(n * n, track=True)
    power = ident
    dens: list[int] = []
    for t in range(n + 2):
        dens.append(power.den)
        idx, expr = span.add_tracked(power.num.ravel())
        if idx is None:
            # sum_j expr[j] * num_j == 0 with num_j == dens[j] * m**j.
            coeffs = [Fraction(0)] * (t + 1)
            for j, f in expr.items():
                coeffs[j] = f * dens[j]
            lead = coeffs[t]
            return RationalPoly([c / lead for c in coeffs])
        power = power @ m
    raise ArithmeticError("no dependency found; matrix powers misbehaved")


def poly_eval_matrix(p: RationalPoly, m: RationalMatrix) -> RationalMatrix:
    """Exact Horner evaluation of p at a square matrix."""
    if m.nrows != m.ncols:
        raise ValueError("square matrix expected")
    n = m.nrows
    if p.is_zero():
        return RationalMatrix.zeros(n, n)
    ident = RationalMatrix.identity(n)
    acc = ident * p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc @ m + ident * c
    return acc
