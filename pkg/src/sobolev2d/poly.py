"""Dense univariate and bivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Number = int | Fraction


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class UniPoly:
    """Polynomial in one variable; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped on construction, so ``degree`` is exact.
    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "UniPoly":
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, s: Number) -> "UniPoly":
        s = _frac(s)
        return UniPoly(a * s for a in self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(a) for a in self.coeffs]})"


class BiPoly:
    """Polynomial in ``x, y`` stored as ``{(i, j): coeff}`` for ``x**i * y**j``.

    Only nonzero coefficients are kept. Instances are treated as immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Number] | None = None):
        self._c: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (i, j), a in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i}, {j})")
                a = _frac(a)
                if a:
                    self._c[(i, j)] = a

    @classmethod
    def _raw(cls, c: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def constant(cls, a: Number) -> "BiPoly":
        return cls({(0, 0): a})

    @classmethod
    def monomial(cls, i: int, j: int, a: Number = 1) -> "BiPoly":
        return cls({(i, j): a})

    @classmethod
    def outer(cls, px: UniPoly, qy: UniPoly) -> "BiPoly":
        """The product ``px(x) * qy(y)``."""
        return cls._raw(
            {(i, j): a * b for i, a in enumerate(px.coeffs) if a for j, b in enumerate(qy.coeffs) if b}
        )

    def items(self):
        return self._c.items()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._c.get((i, j), Fraction(0))

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._c), default=-1)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._c)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        c = dict(self._c)
        for k, a in other._c.items():
            s = c.get(k, 0) + a
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return BiPoly._raw(c)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "BiPoly":
        return self.scale(-1)

    def scale(self, s: Number) -> "BiPoly":
        s = _frac(s)
        if not s:
            return BiPoly()
        return BiPoly._raw({k: a * s for k, a in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return self.scale(other)
        c: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self._c.items():
            for (i2, j2), b in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, 0) + a * b
        return BiPoly(c)

    __rmul__ = __mul__

    def dx(self) -> "BiPoly":
        return BiPoly._raw({(i - 1, j): i * a for (i, j), a in self._c.items() if i})

    def dy(self) -> "BiPoly":
        return BiPoly._raw({(i, j - 1): j * a for (i, j), a in self._c.items() if j})

    def swap(self) -> "BiPoly":
        """``f(y, x)``."""
        return BiPoly._raw({(j, i): a for (i, j), a in self._c.items()})

    def __call__(self, x: Number, y: Number) -> Fraction:
        x, y = _frac(x), _frac(y)
        return sum((a * x**i * y**j for (i, j), a in self._c.items()), Fraction(0))

    def is_monic(self, n: int, k: int) -> bool:
        """Leading part is exactly ``x**(n-k) * y**k`` with total degree ``n``."""
        top = {key: a for key, a in self._c.items() if sum(key) >= n}
        return top == {(n - k, k): 1}

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "BiPoly(0)"
        terms = []
        for (i, j), a in sorted(self._c.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(s for s in (f"x^{i}" if i > 1 else "x" if i else "",
                                        f"y^{j}" if j > 1 else "y" if j else "") if s)
            terms.append(f"{a}*{mono}" if mono else str(a))
        return "BiPoly(" + " + ".join(terms) + ")"


def linear_combination(terms: Iterable[tuple[Number, BiPoly]]) -> BiPoly:
    c: dict[tuple[int, int], Fraction] = {}
    for s, p in terms:
        if not s:
            continue
        for k, a in p.items():
            c[k] = c.get(k, 0) + s * a
    return BiPoly(c)
