"""
Cost of evaluation
==================

For gamma = 1 the weights do not depend on x and evaluation is O(n) per
point. For gamma > 1 the weights are rebuilt at every point, O(n d^2).
"""

from gfhinterp.analysis import timing_bench

print("   d  classical[s]  general[s]  general/(m n d^2)")
for d in (4, 8, 16, 32):
    rec = timing_bench(1024, d, 3, 1000, repeats=3)
    print(f"{d:4d}  {rec.classical_s:12.4f}  {rec.general_s:10.4f}  {rec.general_per_mnd2:.3e}")
