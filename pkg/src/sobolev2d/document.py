"""JSON persistence of a computed basis. Rationals are stored as ``"p/q"`` strings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import __version__
from .linalg import RationalMatrix
from .poly import BiPoly
from .product_basis import LAGUERRE, ProductWeight
from .sobolev import SobolevBasis
from .univariate import WeightFamily


def rat(s: str) -> Fraction:
    return Fraction(s)


def rat_str(a: Fraction) -> str:
    return str(Fraction(a))


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[rat_str(a) for a in row] for row in m.entries]


def matrix_from_json(rows: list[list[str]]) -> RationalMatrix:
    cols = len(rows[0]) if rows else 0
    return RationalMatrix.from_rows([[rat(a) for a in r] for r in rows], cols)


def poly_to_json(p: BiPoly) -> list[dict[str, Any]]:
    return [{"i": i, "j": j, "coeff": rat_str(a)} for (i, j), a in sorted(p.items())]


def poly_from_json(terms: list[dict[str, Any]]) -> BiPoly:
    c = {}
    for t in terms:
        key = (int(t["i"]), int(t["j"]))
        if key in c:
            raise ValueError(f"duplicate monomial {key}")
        c[key] = rat(t["coeff"])
    return BiPoly(c)


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    H_hat: RationalMatrix
    coupling: RationalMatrix
    D: RationalMatrix
    C: RationalMatrix
    canonical: tuple[BiPoly, ...]
    shifted: tuple[BiPoly, ...]


@dataclass(frozen=True)
class BasisDocument:
    family: str
    alpha: Fraction
    beta: Fraction
    corner: tuple[Fraction, Fraction]
    lam: Fraction
    max_degree: int
    version: str
    degrees: tuple[DegreeRecord, ...]

    @property
    def pw(self) -> ProductWeight:
        return ProductWeight(WeightFamily(self.family, self.alpha), WeightFamily(self.family, self.beta),
                             self.corner)

    @property
    def coupling_name(self) -> str:
        return "A_hat" if self.family == LAGUERRE else "B_hat"

    def record(self, n: int) -> DegreeRecord:
        return self.degrees[n - 1]

    def shifted(self, n: int, k: int) -> BiPoly:
        if n == 0 and k == 0:
            return BiPoly.constant(1)
        return self.record(n).shifted[k]

    def canonical(self, n: int, k: int) -> BiPoly:
        if n == 0 and k == 0:
            return BiPoly.constant(1)
        return self.record(n).canonical[k]

    @classmethod
    def from_basis(cls, basis: SobolevBasis) -> "BasisDocument":
        pw = basis.pw
        recs = tuple(
            DegreeRecord(b.degree, b.H_hat, b.coupling, b.D, b.C, tuple(b.basis),
                         tuple(basis[(b.degree, k)] for k in range(b.degree + 1)))
            for b in basis.blocks)
        return cls(pw.kind, pw.alpha, pw.beta, pw.corner, basis.lam, basis.max_degree, __version__, recs)

    def to_json(self) -> dict[str, Any]:
        return {
            "metadata": {
                "family": self.family,
                "alpha": rat_str(self.alpha),
                "beta": rat_str(self.beta),
                "corner": [rat_str(c) for c in self.corner],
                "lambda": rat_str(self.lam),
                "max_degree": self.max_degree,
                "coupling": self.coupling_name,
                "version": self.version,
            },
            "degrees": [
                {
                    "degree": r.degree,
                    "H_hat": matrix_to_json(r.H_hat),
                    "coupling": matrix_to_json(r.coupling),
                    "D": matrix_to_json(r.D),
                    "C": matrix_to_json(r.C),
                    "canonical": [poly_to_json(p) for p in r.canonical],
                    "shifted": [poly_to_json(p) for p in r.shifted],
                }
                for r in self.degrees
            ],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "BasisDocument":
        md = data["metadata"]
        recs = tuple(
            DegreeRecord(
                int(d["degree"]),
                matrix_from_json(d["H_hat"]),
                matrix_from_json(d["coupling"]),
                matrix_from_json(d["D"]),
                matrix_from_json(d["C"]),
                tuple(poly_from_json(p) for p in d["canonical"]),
                tuple(poly_from_json(p) for p in d["shifted"]),
            )
            for d in data["degrees"]
        )
        corner = tuple(rat(c) for c in md["corner"])
        if len(corner) != 2:
            raise ValueError("corner must have two coordinates")
        return cls(md["family"], rat(md["alpha"]), rat(md["beta"]), corner, rat(md["lambda"]),
                   int(md["max_degree"]), md["version"], recs)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def loads(cls, text: str) -> "BasisDocument":
        return cls.from_json(json.loads(text))
