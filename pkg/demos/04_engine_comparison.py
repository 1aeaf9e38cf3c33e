"""
Exponential versus structured permanent engines
===============================================

Ryser's formula costs about 2^n n operations on any matrix; the contraction
chain exploits the band structure and is linear in the number of steps.
"""

import time

from permseq import build_H, permanent_contraction, permanent_ryser


def timed(fn, X, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(X)
        best = min(best, time.perf_counter() - t0)
    return value, best


print(" n    ryser (s)   contraction (s)   agree")
for n in (4, 8, 12, 16, 18):
    H = build_H(n)
    v_r, t_r = timed(permanent_ryser, H)
    v_c, t_c = timed(permanent_contraction, H)
    print(f"{n:2d} {t_r:12.5f} {t_c:17.6f}   {v_r == v_c}")
