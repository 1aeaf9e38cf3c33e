"""
Jacobsthal numbers and the banded matrix families
=================================================

The two sequences share one recurrence and differ only in their seeds.
"""

from permseq import SequenceKind, build_A, build_H, build_K, build_S, term_range

# The first terms of each sequence, n = 0..10
print("J:", term_range(SequenceKind.JACOBSTHAL, 0, 10))
print("j:", term_range(SequenceKind.JACOBSTHAL_LUCAS, 0, 10))

###############################################################################
# H_n is tridiagonal with 1s below, 2s above and a 3 in the corner.
# K_n moves the 3 to the second diagonal position.
print("\nH_5 =")
print(build_H(5))
print("\nK_5 =")
print(build_K(5))

###############################################################################
# S flips the sign of the subdiagonal; A_n is the entrywise product H_n o S.
print("\nS_4 =")
print(build_S(4))
print("\nA_4 =")
print(build_A(4))
