"""
Gegenbauer product weight and the choice of corner
==================================================

On the square the gradient form only fixes each polynomial up to a constant.
The point evaluation at a corner removes that freedom.
"""

from fractions import Fraction

from sobolev2d import ProductWeight, build_basis

for corner in [(1, 1), (-1, 1)]:
    pw = ProductWeight.gegenbauer(1, 1, corner)
    basis = build_basis(pw, 4)
    print(f"corner {corner}: S_2^4 =", basis[(4, 2)])

# Half-integer parameters work the same way, all in exact rationals
pw = ProductWeight.gegenbauer(Fraction(3, 2), Fraction(1, 2))
basis = build_basis(pw, 3)
print([[str(a) for a in row] for row in basis.block(3).H_hat.to_lists()])
