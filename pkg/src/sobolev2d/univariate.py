"""Monic Laguerre and Gegenbauer polynomials and their coherent companions.

Weights are normalized so that ``<1, 1> = 1``:

* Laguerre(a):   x**a * exp(-x) on [0, inf),       a > -1
* Gegenbauer(a): (1 - x**2)**(a - 1/2) on [-1, 1],  a > -1/2, a != 0

Every quantity is an exact rational function of the parameter, so rational
parameters give rational coefficients and norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterDomainError, SingularParameterError
from .poly import UniPoly

LAGUERRE = "laguerre"
GEGENBAUER = "gegenbauer"
KINDS = (LAGUERRE, GEGENBAUER)


@dataclass(frozen=True)
class WeightFamily:
    kind: str
    param: Fraction

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterDomainError(f"unknown weight family {self.kind!r}; expected one of {KINDS}")
        a = Fraction(self.param)
        object.__setattr__(self, "param", a)
        if self.kind == LAGUERRE and a <= -1:
            raise ParameterDomainError(f"Laguerre parameter must satisfy alpha > -1, got {a}")
        if self.kind == GEGENBAUER:
            if a <= Fraction(-1, 2):
                raise ParameterDomainError(f"Gegenbauer parameter must satisfy alpha > -1/2, got {a}")
            if a == 0:
                raise SingularParameterError(
                    "Gegenbauer alpha = 0 is singular: the coherence coefficient "
                    "b_1(alpha) = -1/(4 alpha (alpha + 1)) has a zero denominator"
                )

    @classmethod
    def laguerre(cls, alpha) -> "WeightFamily":
        return cls(LAGUERRE, Fraction(alpha))

    @classmethod
    def gegenbauer(cls, alpha) -> "WeightFamily":
        return cls(GEGENBAUER, Fraction(alpha))

    def __str__(self) -> str:
        return f"{self.kind}({self.param})"


def recurrence_coefficients(family: WeightFamily, n: int) -> tuple[Fraction, Fraction]:
    """``(shift, gamma)`` in ``p_{n+1} = (x - shift) p_n - gamma p_{n-1}``."""
    a = family.param
    if family.kind == LAGUERRE:
        return Fraction(2 * n + 1) + a, n * (n + a)
    if n == 0:
        return Fraction(0), Fraction(0)
    if n == 1:
        # n(n+2a-1)/(4(n+a)(n+a-1)) with the common factor 2a cancelled
        return Fraction(0), 1 / (2 * (a + 1))
    return Fraction(0), n * (n + 2 * a - 1) / (4 * (n + a) * (n + a - 1))


def monic_sequence(family: WeightFamily, n_max: int) -> list[UniPoly]:
    """``[p_0, ..., p_{n_max}]``, the monic orthogonal polynomials of ``family``."""
    if n_max < 0:
        raise ParameterDomainError(f"n_max must be nonnegative, got {n_max}")
    x = UniPoly.x()
    seq = [UniPoly((1,))]
    prev = UniPoly()
    for n in range(n_max):
        shift, gamma = recurrence_coefficients(family, n)
        nxt = (x - UniPoly((shift,))) * seq[-1] - prev.scale(gamma)
        prev = seq[-1]
        seq.append(nxt)
    return seq


def squared_norm(family: WeightFamily, n: int) -> Fraction:
    """``h_n = <p_n, p_n>`` under the normalized weight, via ``h_n = gamma_n h_{n-1}``."""
    if n < 0:
        raise ParameterDomainError(f"degree must be nonnegative, got {n}")
    h = Fraction(1)
    for j in range(1, n + 1):
        h *= recurrence_coefficients(family, j)[1]
    return h


def squared_norms(family: WeightFamily, n_max: int) -> list[Fraction]:
    out = [Fraction(1)]
    for j in range(1, n_max + 1):
        out.append(out[-1] * recurrence_coefficients(family, j)[1])
    return out


def b_coefficient(family: WeightFamily, j: int) -> Fraction:
    """Symmetric coherence coefficient ``b_j``; zero for ``j <= 0`` and for Laguerre."""
    if family.kind == LAGUERRE or j <= 0:
        return Fraction(0)
    a = family.param
    den = 4 * (j + a) * (j + a - 1)
    if den == 0:
        raise SingularParameterError(f"b_{j}({a}) has a zero denominator")
    return Fraction(-j) / den


def a_coefficient(family: WeightFamily, j: int) -> Fraction:
    """Coherence coefficient ``a_j`` multiplying ``p_j'``; 1 for Laguerre, 0 for Gegenbauer."""
    if j < 0:
        return Fraction(0)
    return Fraction(1) if family.kind == LAGUERRE else Fraction(0)


def coherence_coefficient(family: WeightFamily, n: int) -> tuple[Fraction, Fraction]:
    """``(a_{n-1}, b_{n-1})``, the coefficients entering ``q_n``."""
    if n < 1:
        raise ParameterDomainError(f"coherence coefficients need n >= 1, got {n}")
    return a_coefficient(family, n - 1), b_coefficient(family, n - 1)


def q_sequence(family: WeightFamily, n_max: int) -> list[UniPoly]:
    """``[q_0, ..., q_{n_max}]`` with ``q_n = p_n + n a_{n-1} p_{n-1} + n b_{n-1} p_{n-2}``.

    Each ``q_n`` is monic and satisfies ``q_n' = n p_{n-1}``.
    """
    p = monic_sequence(family, n_max)
    q = [p[0]]
    for n in range(1, n_max + 1):
        a, b = coherence_coefficient(family, n)
        qn = p[n] + p[n - 1].scale(n * a)
        if n >= 2:
            qn = qn + p[n - 2].scale(n * b)
        q.append(qn)
    return q
