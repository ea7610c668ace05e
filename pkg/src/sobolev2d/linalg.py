"""Dense exact matrices over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantViolation


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        data = tuple(tuple(Fraction(a) for a in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls(n, n, tuple(tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(n))
                               for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ot = other.T.entries
        return RationalMatrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ot)
            for r in self.entries))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def scale(self, s) -> "RationalMatrix":
        s = Fraction(s)
        return RationalMatrix(self.rows, self.cols, tuple(tuple(a * s for a in r) for r in self.entries))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(len(row_idx), len(col_idx),
                              tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def is_diagonal(self) -> bool:
        return all(a == 0 for i, r in enumerate(self.entries) for j, a in enumerate(r) if i != j)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, {[[str(a) for a in r] for r in self.entries]})"


def _eliminate(a: list[list[Fraction]], b: list[list[Fraction]]) -> None:
    """Gauss-Jordan on ``[a | b]`` in place; first nonzero entry in a column is the pivot."""
    n = len(a)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise InvariantViolation(f"singular matrix: no pivot in column {col}")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        b[col] = [v / p for v in b[col]]
        for r in range(n):
            f = a[r][col]
            if r != col and f != 0:
                a[r] = [u - f * v for u, v in zip(a[r], a[col])]
                b[r] = [u - f * v for u, v in zip(b[r], b[col])]


def solve(m: RationalMatrix, rhs: RationalMatrix) -> RationalMatrix:
    """Exact solution ``X`` of ``m @ X = rhs``; raises on a singular ``m``."""
    if m.rows != m.cols or rhs.rows != m.rows:
        raise ValueError(f"cannot solve {m.shape} system with right-hand side {rhs.shape}")
    a = m.to_lists()
    b = rhs.to_lists()
    _eliminate(a, b)
    return RationalMatrix.from_rows(b, rhs.cols)


def inverse(m: RationalMatrix) -> RationalMatrix:
    return solve(m, RationalMatrix.identity(m.rows))


def leading_minors(m: RationalMatrix) -> list[Fraction]:
    """Leading principal minors ``det(m[:k, :k])`` for ``k = 1..n`` (fraction-free pivots)."""
    n = m.rows
    a = m.to_lists()
    minors = []
    det = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # a zero leading pivot means the k-th minor vanishes; later ones need pivoting
            minors.append(Fraction(0))
            minors.extend(_det(m.submatrix(range(j), range(j))) for j in range(k + 2, n + 1))
            return minors
        det *= a[k][k]
        minors.append(det)
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            if f:
                a[r] = [u - f * v for u, v in zip(a[r], a[k])]
    return minors


def _det(m: RationalMatrix) -> Fraction:
    a = m.to_lists()
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [u - f * v for u, v in zip(a[r], a[col])]
    return det


def is_positive_definite(m: RationalMatrix) -> bool:
    return m.is_symmetric() and all(d > 0 for d in leading_minors(m))
