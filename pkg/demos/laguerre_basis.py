"""
Sobolev orthogonal polynomials for the product Laguerre weight
=============================================================

Build the monic basis for alpha = beta = 0 and look at the small matrices
produced by the recursion.
"""

from sobolev2d import ProductWeight, build_basis

pw = ProductWeight.laguerre(0, 0)
basis = build_basis(pw, 4)

# The interior Gram blocks and the coupling matrices
for n in range(2, 5):
    blk = basis.block(n)
    print(f"n = {n}")
    print("  H_hat =", [[str(a) for a in row] for row in blk.H_hat.to_lists()])
    print("  A_hat =", [[str(a) for a in row] for row in blk.coupling.to_lists()])

# For alpha = beta = 0 the polynomials vanish at the origin without any shift
for n in range(1, 4):
    for k in range(n + 1):
        print(f"S_{k}^{n} =", basis[(n, k)])
