"""Brute-force ground truth from exact moments.

Nothing here uses the recurrences or closed-form Gram entries: inner products
are evaluated by expanding into monomials and summing products of normalized
moments, and the Sobolev basis is rebuilt by Gram-Schmidt over monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, ParameterDomainError
from .poly import BiPoly, UniPoly
from .product_basis import ProductWeight
from .univariate import LAGUERRE, WeightFamily


def normalized_moment(family: WeightFamily, k: int) -> Fraction:
    """``<x**k, 1>`` under the normalized weight.

    Laguerre: ``(a+1)_k``. Gegenbauer: ``(1/2)_j / (a+1)_j`` for ``k = 2j``, 0 for odd ``k``.
    """
    if k < 0:
        raise ParameterDomainError(f"moment order must be nonnegative, got {k}")
    a = family.param
    m = Fraction(1)
    if family.kind == LAGUERRE:
        for t in range(k):
            m *= a + 1 + t
        return m
    if k % 2:
        return Fraction(0)
    for t in range(k // 2):
        m *= (Fraction(1, 2) + t) / (a + 1 + t)
    return m


@dataclass(frozen=True)
class MomentTable:
    family: WeightFamily
    values: tuple[Fraction, ...]

    @classmethod
    def build(cls, family: WeightFamily, k_max: int) -> "MomentTable":
        return cls(family, tuple(normalized_moment(family, k) for k in range(k_max + 1)))

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


class Oracle:
    """Exact inner products for one product weight, with moments precomputed to ``2 * max_degree``."""

    def __init__(self, pw: ProductWeight, max_degree: int = 12):
        self.pw = pw
        self.max_degree = max_degree
        self.m1 = MomentTable.build(pw.family1, 2 * max_degree)
        self.m2 = MomentTable.build(pw.family2, 2 * max_degree)

    def inner_W(self, f: BiPoly, g: BiPoly) -> Fraction:
        if max(f.degree, g.degree) > self.max_degree:
            raise ParameterDomainError(f"degree exceeds oracle moment table ({self.max_degree})")
        m1, m2 = self.m1.values, self.m2.values
        total = Fraction(0)
        for (i, j), a in f.items():
            for (k, l), b in g.items():
                total += a * b * m1[i + k] * m2[j + l]
        return total

    def inner_nabla(self, f: BiPoly, g: BiPoly) -> Fraction:
        return self.inner_W(f.dx(), g.dx()) + self.inner_W(f.dy(), g.dy())

    def inner_S(self, lam, f: BiPoly, g: BiPoly) -> Fraction:
        lam = Fraction(lam)
        if lam <= 0:
            raise ParameterDomainError(f"lambda must be positive, got {lam}")
        c1, c2 = self.pw.corner
        return self.inner_nabla(f, g) + lam * f(c1, c2) * g(c1, c2)

    def inner_uni(self, which: int, p: UniPoly, q: UniPoly) -> Fraction:
        """``<p, q>`` under the single-variable weight ``which`` (1 or 2)."""
        m = (self.m1 if which == 1 else self.m2).values
        return sum((a * b * m[i + j] for i, a in enumerate(p.coeffs) for j, b in enumerate(q.coeffs)),
                   Fraction(0))


def inner_W(pw: ProductWeight, f: BiPoly, g: BiPoly) -> Fraction:
    return Oracle(pw, max(f.degree, g.degree, 0)).inner_W(f, g)


def inner_nabla(pw: ProductWeight, f: BiPoly, g: BiPoly) -> Fraction:
    return Oracle(pw, max(f.degree, g.degree, 0)).inner_nabla(f, g)


def inner_S(pw: ProductWeight, lam, f: BiPoly, g: BiPoly) -> Fraction:
    return Oracle(pw, max(f.degree, g.degree, 0)).inner_S(lam, f, g)


def gram_schmidt_1d(family: WeightFamily, n_max: int) -> list[UniPoly]:
    """Monic orthogonal polynomials by classical Gram-Schmidt on ``1, x, x**2, ...``."""
    m = MomentTable.build(family, 2 * n_max).values

    def ip(p: UniPoly, q: UniPoly) -> Fraction:
        return sum((a * b * m[i + j] for i, a in enumerate(p.coeffs) for j, b in enumerate(q.coeffs)),
                   Fraction(0))

    out: list[UniPoly] = []
    for n in range(n_max + 1):
        mono = UniPoly([0] * n + [1])
        p = mono
        for u in out:
            p = p - u.scale(ip(mono, u) / ip(u, u))
        out.append(p)
    return out


def gram_schmidt_sobolev(pw: ProductWeight, lam, N: int) -> dict[tuple[int, int], BiPoly]:
    """Monic Sobolev polynomials by Gram-Schmidt over monomials ``x**(n-k) y**k``.

    Each monic member is the monomial minus its projection onto all polynomials of
    lower total degree. Projections use an auxiliary mutually orthogonal basis built
    in ``(n, k)`` order, so same-degree monic members need not be orthogonal to each
    other (their Gram block is the within-degree ``H_n``).
    """
    lam = Fraction(lam)
    orc = Oracle(pw, N)
    ortho: list[tuple[BiPoly, Fraction]] = []
    monic: dict[tuple[int, int], BiPoly] = {}
    for n in range(N + 1):
        lower = list(ortho)
        for k in range(n + 1):
            mono = BiPoly.monomial(n - k, k)
            p = mono
            for u, uu in lower:
                p = p - u.scale(orc.inner_S(lam, mono, u) / uu)
            monic[(n, k)] = p
            v = p
            for u, uu in ortho[len(lower):]:
                v = v - u.scale(orc.inner_S(lam, p, u) / uu)
            vv = orc.inner_S(lam, v, v)
            if vv <= 0:
                raise InvariantViolation(f"nonpositive Sobolev norm at (n, k) = ({n}, {k})")
            ortho.append((v, vv))
    return monic


def equal_up_to_constant(f: BiPoly, g: BiPoly) -> bool:
    return (f - g).is_constant()
