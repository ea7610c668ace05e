"""
A second route for Laguerre: the lattice system
===============================================

Each interior polynomial can also be found by solving one sparse linear system
in the coefficients a_l^m.
"""

from fractions import Fraction

from sobolev2d import ProductWeight, build_basis, laguerre_linear_solve
from sobolev2d.sobolev import lattice_coefficients

pw = ProductWeight.laguerre(Fraction(1, 2), Fraction(3, 2))
basis = build_basis(pw, 5)

print(lattice_coefficients(pw, 3, 1))
for k in range(1, 5):
    diff = laguerre_linear_solve(pw, 5, k) - basis.canonical(5, k)
    print(k, "differs by a constant:", diff.is_constant())
