"""Product polynomials on the square/quadrant and their gradient Gram entries.

Index convention: ``P_k^n = p_{n-k}(w1; x) p_k(w2; y)`` and likewise
``Q_k^n = q_{n-k}(w1; x) q_k(w2; y)``, so ``k`` counts the power of ``y``.
Norms ``h_k^n`` with an index outside ``0 <= k <= n`` are zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import ParameterDomainError
from .linalg import RationalMatrix
from .poly import BiPoly
from .univariate import (
    GEGENBAUER,
    LAGUERRE,
    WeightFamily,
    b_coefficient,
    monic_sequence,
    q_sequence,
    squared_norm,
)

GEGENBAUER_CORNERS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class ProductWeight:
    family1: WeightFamily
    family2: WeightFamily
    corner: tuple[Fraction, Fraction] = field(default=None)

    def __post_init__(self):
        if self.family1.kind != self.family2.kind:
            raise ParameterDomainError(
                f"mixed product weights are not supported: {self.family1.kind} x {self.family2.kind}")
        if self.corner is None:
            corner = (0, 0) if self.kind == LAGUERRE else (1, 1)
        else:
            corner = self.corner
        corner = (Fraction(corner[0]), Fraction(corner[1]))
        if self.kind == LAGUERRE and corner != (0, 0):
            raise ParameterDomainError(f"the Laguerre quadrant has the single corner (0, 0), got {corner}")
        if self.kind == GEGENBAUER and corner not in GEGENBAUER_CORNERS:
            raise ParameterDomainError(f"Gegenbauer corner must be one of (+-1, +-1), got {corner}")
        object.__setattr__(self, "corner", corner)

    @classmethod
    def laguerre(cls, alpha, beta) -> "ProductWeight":
        return cls(WeightFamily.laguerre(alpha), WeightFamily.laguerre(beta))

    @classmethod
    def gegenbauer(cls, alpha, beta, corner=(1, 1)) -> "ProductWeight":
        return cls(WeightFamily.gegenbauer(alpha), WeightFamily.gegenbauer(beta), corner)

    @property
    def kind(self) -> str:
        return self.family1.kind

    @property
    def alpha(self) -> Fraction:
        return self.family1.param

    @property
    def beta(self) -> Fraction:
        return self.family2.param


def _check_index(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ParameterDomainError(f"index out of range: need 0 <= k <= n, got n={n}, k={k}")


def product_P(pw: ProductWeight, n: int, k: int) -> BiPoly:
    _check_index(n, k)
    return BiPoly.outer(monic_sequence(pw.family1, n - k)[-1], monic_sequence(pw.family2, k)[-1])


def product_Q(pw: ProductWeight, n: int, k: int) -> BiPoly:
    _check_index(n, k)
    return BiPoly.outer(q_sequence(pw.family1, n - k)[-1], q_sequence(pw.family2, k)[-1])


def product_Q_vector(pw: ProductWeight, n: int) -> list[BiPoly]:
    """``[Q_0^n, ..., Q_n^n]`` sharing one pass over the univariate sequences."""
    q1 = q_sequence(pw.family1, n)
    q2 = q_sequence(pw.family2, n)
    return [BiPoly.outer(q1[n - k], q2[k]) for k in range(n + 1)]


def product_norm(pw: ProductWeight, n: int, k: int) -> Fraction:
    _check_index(n, k)
    return _h(pw, k, n)


def _h(pw: ProductWeight, k: int, n: int) -> Fraction:
    """``h_k^n``, zero outside the index triangle."""
    if n < 0 or not 0 <= k <= n:
        return Fraction(0)
    return squared_norm(pw.family1, n - k) * squared_norm(pw.family2, k)


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def grad_gram_entry(pw: ProductWeight, n: int, i: int, m: int, l: int) -> Fraction:
    """``<Q_i^n, Q_l^m>_grad`` from the closed-form Kronecker-delta expressions."""
    _check_index(n, i)
    _check_index(m, l)
    if pw.kind == LAGUERRE:
        return _laguerre_entry(pw, n, i, m, l)
    return _gegenbauer_entry(pw, n, i, m, l)


def _laguerre_entry(pw, n, i, m, l) -> Fraction:
    h = lambda k, j: _h(pw, k, j)  # noqa: E731
    if n == m - 1:
        return (l * (m - l) ** 2 * h(l - 1, m - 2) * _delta(i, l - 1)
                + l * l * (m - l) * h(l - 1, m - 2) * _delta(i, l))
    if n == m:
        return _delta(i, l) * ((m - l) ** 2 * h(l, m - 1)
                               + 2 * l * l * (m - l) ** 2 * h(l - 1, m - 2)
                               + l * l * h(l - 1, m - 1))
    if n == m + 1:
        return ((l + 1) * (m - l) ** 2 * h(l, m - 1) * _delta(i - 1, l)
                + l * l * (m + 1 - l) * h(l - 1, m - 1) * _delta(i, l))
    return Fraction(0)


def _gegenbauer_entry(pw, n, i, m, l) -> Fraction:
    h = lambda k, j: _h(pw, k, j)  # noqa: E731
    ba = lambda j: b_coefficient(pw.family1, j)  # noqa: E731
    bb = lambda j: b_coefficient(pw.family2, j)  # noqa: E731
    if n == m + 2:
        return ((m - l) ** 2 * (l + 2) * bb(l + 1) * h(l, m - 1) * _delta(i, l + 2)
                + l * l * (m - l + 2) * ba(m - l + 1) * h(l - 1, m - 1) * _delta(i, l))
    if n == m:
        return _delta(i, l) * ((m - l) ** 2 * h(l, m - 1)
                               + l * l * (m - l) ** 2 * bb(l - 1) ** 2 * h(l - 2, m - 3)
                               + l * l * h(l - 1, m - 1)
                               + l * l * (m - l) ** 2 * ba(m - l - 1) ** 2 * h(l - 1, m - 3))
    if n == m - 2:
        return (l * (m - l) ** 2 * bb(l - 1) * h(l - 2, m - 3) * _delta(i, l - 2)
                + l * l * (m - l) * ba(m - l - 1) * h(l - 1, m - 3) * _delta(i, l))
    return Fraction(0)


class DCMatrices(NamedTuple):
    D: RationalMatrix
    C: RationalMatrix
    D_hat: RationalMatrix
    C_hat: RationalMatrix


def d_entry(pw: ProductWeight, n: int, j: int) -> Fraction:
    h = lambda k, m: _h(pw, k, m)  # noqa: E731
    if pw.kind == LAGUERRE:
        return (n - j) ** 2 * h(j, n - 1) + j * j * h(j - 1, n - 1) + 2 * j * j * (n - j) ** 2 * h(j - 1, n - 2)
    ba = b_coefficient(pw.family1, n - j - 1)
    bb = b_coefficient(pw.family2, j - 1)
    return ((n - j) ** 2 * h(j, n - 1) + j * j * (n - j) ** 2 * bb * bb * h(j - 2, n - 3)
            + j * j * h(j - 1, n - 1) + j * j * (n - j) ** 2 * ba * ba * h(j - 1, n - 3))


def c_matrix(pw: ProductWeight, n: int) -> RationalMatrix:
    """``<Q_{n+s}, Q_n^T>_grad`` with ``s = 1`` (Laguerre) or ``s = 2`` (Gegenbauer)."""
    h = lambda k, m: _h(pw, k, m)  # noqa: E731
    if pw.kind == LAGUERRE:
        rows = [[Fraction(0)] * (n + 1) for _ in range(n + 2)]
        for i in range(1, n + 1):
            rows[i][i] = Fraction(i * i * (n - i + 1)) * h(i - 1, n - 1)
        for i in range(n):
            rows[i + 1][i] = Fraction((i + 1) * (n - i) ** 2) * h(i, n - 1)
        return RationalMatrix.from_rows(rows, n + 1)
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 3)]
    for l in range(n + 1):
        rows[l][l] += l * l * (n - l + 2) * b_coefficient(pw.family1, n - l + 1) * h(l - 1, n - 1)
        rows[l + 2][l] += (l + 2) * (n - l) ** 2 * b_coefficient(pw.family2, l + 1) * h(l, n - 1)
    return RationalMatrix.from_rows(rows, n + 1)


def matrices_DC(pw: ProductWeight, n: int) -> DCMatrices:
    """``D_n``, ``C_n`` and the interior blocks used by the reduced iteration.

    ``D_hat`` is ``(n-1) x (n-1)``; ``C_hat`` is ``n x (n-1)`` for Laguerre and
    ``(n+1) x (n-1)`` for Gegenbauer.
    """
    if n < 1:
        raise ParameterDomainError(f"matrices_DC needs n >= 1, got {n}")
    d = [d_entry(pw, n, j) for j in range(n + 1)]
    D = RationalMatrix.diag(d)
    C = c_matrix(pw, n)
    inner = d[1:n]
    if pw.kind == LAGUERRE:
        if n >= 2:
            inner[0] -= d_entry(pw, n - 1, 0)
            inner[n - 2] -= d_entry(pw, n - 1, n - 1)
        C_hat = C.submatrix(range(1, n + 1), range(1, n))
    else:
        if n >= 3:
            inner[1] -= 4 * b_coefficient(pw.family2, 1) ** 2 * d_entry(pw, n - 2, 0)
            inner[n - 3] -= 4 * b_coefficient(pw.family1, 1) ** 2 * d_entry(pw, n - 2, n - 2)
        C_hat = C.submatrix(range(1, n + 2), range(1, n))
    return DCMatrices(D, C, RationalMatrix.diag(inner), C_hat)
