"""
Checking the recursion against brute force
==========================================

Gram-Schmidt over monomials with exact moments gives the same basis; its cost
grows much faster with the degree.
"""

import time

from sobolev2d import ProductWeight, build_basis
from sobolev2d.oracle import Oracle, gram_schmidt_sobolev

pw = ProductWeight.laguerre(0, 0)
N = 5

t = time.perf_counter()
basis = build_basis(pw, N)
print(f"recursion:     {time.perf_counter() - t:.3f} s")

t = time.perf_counter()
gs = gram_schmidt_sobolev(pw, 1, N)
print(f"gram-schmidt:  {time.perf_counter() - t:.3f} s")
print("identical:", all(gs[nk] == basis[nk] for nk in gs))

# Polynomials of different degree are orthogonal, same-degree ones are not
orc = Oracle(pw, N)
print(orc.inner_S(1, basis[(4, 1)], basis[(3, 2)]))
print(orc.inner_S(1, basis[(4, 1)], basis[(4, 2)]))
