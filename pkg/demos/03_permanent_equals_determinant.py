"""
Permanents as determinants
==========================

Negating the subdiagonal turns the permanent of these tridiagonal matrices
into a determinant, which fraction-free elimination computes in polynomial
time.
"""

from permseq import (
    build_B,
    build_H,
    build_K,
    build_S,
    determinant_bareiss,
    hadamard,
    permanent_ryser,
)

print(" n   per(H_n)   det(H_n o S)   per(K_n)   det(B_n)")
for n in range(1, 13):
    per_H = permanent_ryser(build_H(n))
    det_A = determinant_bareiss(hadamard(build_H(n), build_S(n)))
    per_K = permanent_ryser(build_K(n))
    det_B = determinant_bareiss(build_B(n))
    print(f"{n:2d} {per_H:10d} {det_A:14d} {per_K:10d} {det_B:10d}")
