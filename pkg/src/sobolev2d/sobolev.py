"""Monic Sobolev orthogonal bases on product domains.

The gradient form ``<f, g>_grad = <f_x, g_x>_W + <f_y, g_y>_W`` determines the
monic orthogonal polynomials ``S_k^n`` only up to an additive constant; the
Sobolev inner product ``<f, g>_S = <f, g>_grad + lam f(c) g(c)`` is handled by
shifting each ``S_k^n`` so that it vanishes at the corner ``c``.

Only the interior polynomials ``S_1^n .. S_{n-1}^n`` need work, since
``S_0^n`` and ``S_n^n`` coincide with ``Q_0^n`` and ``Q_n^n`` up to a
constant. Their Gram matrix ``H_hat`` and the coupling matrix (``A_hat`` for
Laguerre, ``B_hat`` for Gegenbauer) follow a short exact recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import InvariantViolation, ParameterDomainError
from .linalg import RationalMatrix, inverse, is_positive_definite, solve
from .poly import BiPoly, linear_combination
from .product_basis import LAGUERRE, ProductWeight, matrices_DC, product_Q_vector
from .univariate import b_coefficient


@dataclass(frozen=True)
class DegreeBlock:
    degree: int
    H_hat: RationalMatrix
    coupling: RationalMatrix
    D: RationalMatrix
    C: RationalMatrix
    basis: tuple[BiPoly, ...] = ()

    @property
    def H(self) -> RationalMatrix:
        """Full gradient Gram matrix ``diag(d_0, H_hat, d_n)`` of the degree block."""
        n = self.degree
        rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        rows[0][0] = self.D[0, 0]
        rows[n][n] = self.D[n, n]
        for i in range(n - 1):
            for j in range(n - 1):
                rows[i + 1][j + 1] = self.H_hat[i, j]
        return RationalMatrix.from_rows(rows, n + 1)


@dataclass(frozen=True)
class SobolevBasis:
    pw: ProductWeight
    lam: Fraction
    max_degree: int
    blocks: tuple[DegreeBlock, ...]
    shifted: dict[tuple[int, int], BiPoly] = field(repr=False)

    def __getitem__(self, nk: tuple[int, int]) -> BiPoly:
        return self.shifted[nk]

    def canonical(self, n: int, k: int) -> BiPoly:
        if n == 0:
            return BiPoly.constant(1)
        return self.blocks[n - 1].basis[k]

    def block(self, n: int) -> DegreeBlock:
        return self.blocks[n - 1]


def _step(pw: ProductWeight) -> int:
    return 1 if pw.kind == LAGUERRE else 2


def iterate(pw: ProductWeight, N: int) -> list[DegreeBlock]:
    """Blocks ``n = 1..N`` with ``H_hat_n``, the coupling matrix, ``D_n`` and ``C_n``.

    ``H_hat_n = D_hat_n - C_hat_{n-s} X_{n-s}^T`` and ``X_n = C_hat_n H_hat_n^{-1}``,
    where ``s`` is 1 and ``X = A_hat`` for Laguerre, ``s`` is 2 and ``X = B_hat``
    for Gegenbauer. The recursion starts from empty interior blocks at ``n = 1``
    (and at ``n = 2`` for Gegenbauer, where ``H_2 = D_2``).
    """
    if N < 1:
        raise ParameterDomainError(f"max degree must be >= 1, got {N}")
    s = _step(pw)
    dcs = {}
    blocks: list[DegreeBlock] = []
    for n in range(1, N + 1):
        dc = dcs[n] = matrices_DC(pw, n)
        if n <= s:
            H_hat = dc.D_hat
        else:
            H_hat = dc.D_hat - dcs[n - s].C_hat @ blocks[n - s - 1].coupling.T
        if n == 1:
            coupling = RationalMatrix.zeros(dc.C_hat.rows, 0)
        else:
            if not is_positive_definite(H_hat):
                raise InvariantViolation(f"H_hat_{n} is not symmetric positive definite for {pw}")
            coupling = dc.C_hat @ inverse(H_hat)
        blocks.append(DegreeBlock(n, H_hat, coupling, dc.D, dc.C))
    return blocks


def assemble(pw: ProductWeight, blocks: list[DegreeBlock]) -> list[tuple[BiPoly, ...]]:
    """Canonical ``(S_0^n, ..., S_n^n)`` for each block.

    ``S_0^n = Q_0^n`` and ``S_n^n = Q_n^n``; the interior vector is
    ``Q_hat_n`` minus the edge corrections minus ``X_{n-s} S_hat_{n-s}``, with
    no constant adjustment.
    """
    s = _step(pw)
    out: list[tuple[BiPoly, ...]] = []
    for blk in blocks:
        n = blk.degree
        Q = product_Q_vector(pw, n)
        interior = []
        if n >= s + 1:
            Qp = product_Q_vector(pw, n - s)
            X = blocks[n - s - 1].coupling
            prev_hat = out[n - s - 1][1:-1]
            # both edge rows coincide for small n, so corrections accumulate
            edges: dict[int, list] = {}
            if pw.kind == LAGUERRE:
                edges.setdefault(0, []).append((1, Qp[0]))
                edges.setdefault(n - 2, []).append((1, Qp[n - 1]))
            else:
                edges.setdefault(1, []).append((2 * b_coefficient(pw.family2, 1), Qp[0]))
                edges.setdefault(n - 3, []).append((2 * b_coefficient(pw.family1, 1), Qp[n - 2]))
            for r in range(n - 1):
                terms = [(1, Q[r + 1])]
                terms += [(-c, p) for c, p in edges.get(r, [])]
                terms += [(-X[r, j], prev_hat[j]) for j in range(X.cols)]
                interior.append(linear_combination(terms))
        else:
            interior = Q[1:n]
        basis = (Q[0], *interior, Q[n]) if n >= 1 else (Q[0],)
        out.append(basis)
    return out


def corner_shift(pw: ProductWeight, blocks: list[DegreeBlock], lam) -> SobolevBasis:
    """Subtract ``S_k^n(c)`` from each assembled polynomial; ``S^0_0 = 1``.

    The result does not depend on ``lam``; it is recorded for verification.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ParameterDomainError(f"lambda must be positive, got {lam}")
    c1, c2 = pw.corner
    shifted = {(0, 0): BiPoly.constant(1)}
    for blk in blocks:
        if len(blk.basis) != blk.degree + 1:
            raise ValueError(f"block {blk.degree} has not been assembled")
        for k, p in enumerate(blk.basis):
            shifted[(blk.degree, k)] = p - BiPoly.constant(p(c1, c2))
    return SobolevBasis(pw, lam, len(blocks), tuple(blocks), shifted)


def build_basis(pw: ProductWeight, N: int, lam=1) -> SobolevBasis:
    """iterate -> assemble -> corner_shift in one call."""
    blocks = iterate(pw, N)
    bases = assemble(pw, blocks)
    blocks = [replace(b, basis=s) for b, s in zip(blocks, bases)]
    return corner_shift(pw, blocks, lam)


def lattice_coefficients(pw: ProductWeight, n: int, k: int) -> dict[tuple[int, int], Fraction]:
    """Solve the five-point lattice system for ``{(l, m): a_l^m}``, ``1 <= m <= n-1``.

    The coefficients expand ``S_k^n`` as ``Q_k^n + sum a_l^m Q_l^m`` modulo
    constants. Interior lattice points use the five-point relation; the edges
    ``l = 0`` and ``l = m`` use the two-term boundary relations.
    """
    if pw.kind != LAGUERRE:
        raise ParameterDomainError("the lattice system is only derived for the Laguerre product weight")
    if not 1 <= k <= n - 1:
        raise ParameterDomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    a, b = pw.alpha, pw.beta
    unknowns = [(l, m) for m in range(1, n) for l in range(m + 1)]
    col = {u: idx for idx, u in enumerate(unknowns)}
    size = len(unknowns)
    rows, rhs = [], []

    def put(row, l, m, v):
        if (l, m) in col and v:
            row[col[(l, m)]] += v

    for (l, m) in unknowns:
        row = [Fraction(0)] * size
        top = 1 if m == n - 1 else 0
        if l == 0:
            put(row, 0, m, 1)
            put(row, 1, m + 1, 1)
            r = -top * (1 if k == 1 else 0)
        elif l == m:
            put(row, m, m, 1)
            put(row, m, m + 1, 1)
            r = -top * (1 if k == m else 0)
        else:
            put(row, l - 1, m - 1, m - l)
            put(row, l, m - 1, l)
            put(row, l, m, l * a + (m - l) * b + 4 * l * (m - l))
            put(row, l, m + 1, l * (m - l + 1) * (a + m - l))
            put(row, l + 1, m + 1, (l + 1) * (m - l) * (b + l))
            r = -top * ((l + 1) * (m - l) * (b + l) * (1 if k == l + 1 else 0)
                        + l * (m + 1 - l) * (a + m - l) * (1 if k == l else 0))
        rows.append(row)
        rhs.append([Fraction(r)])
    sol = solve(RationalMatrix.from_rows(rows, size), RationalMatrix.from_rows(rhs, 1))
    return {u: sol[idx, 0] for u, idx in col.items()}


def laguerre_linear_solve(pw: ProductWeight, n: int, k: int) -> BiPoly:
    """``S_k^n`` (up to a constant) from the lattice system instead of the matrix recursion."""
    coeffs = lattice_coefficients(pw, n, k)
    Qs = {m: product_Q_vector(pw, m) for m in range(1, n + 1)}
    return linear_combination([(1, Qs[n][k])] + [(v, Qs[m][l]) for (l, m), v in coeffs.items()])
