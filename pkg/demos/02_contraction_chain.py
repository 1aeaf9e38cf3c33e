"""
Computing a permanent by contraction
====================================

Column 1 of H_n holds exactly two nonzeros, so it can be merged into a single
row without changing the permanent.  Repeating this walks H_n down to a 2x2
block whose first row carries consecutive Jacobsthal numbers.
"""

from permseq import SequenceKind, build_H, build_K, contraction_chain, term

trace = contraction_chain(build_H(8))
for r, step in enumerate(trace.steps, start=1):
    print(f"step {r}: pivot column {step.pivot_column}, rows {step.merged_rows}, "
          f"first row starts {step.leading_pair}")

print("\nterminal block:")
print(trace.terminal)
print("permanent:", trace.value, "  J_10 =", term(SequenceKind.JACOBSTHAL, 10))

###############################################################################
# The K family behaves the same way, landing on Jacobsthal-Lucas numbers.
trace = contraction_chain(build_K(8))
print("\nK_8 leading pairs:", [s.leading_pair for s in trace.steps])
print("permanent:", trace.value, "  j_8 =", term(SequenceKind.JACOBSTHAL_LUCAS, 8))

###############################################################################
# The chain takes n - 2 cheap steps, so large orders are no problem.
value = contraction_chain(build_H(300)).value
print("\nper(H_300) has", len(str(value)), "digits;",
      "matches J_302:", value == term(SequenceKind.JACOBSTHAL, 302))
