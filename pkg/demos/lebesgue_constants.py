"""
Lebesgue constants
==================

gamma = 1 grows like log n; gamma >= 2 stays bounded as n grows. In d all
of them grow roughly like 2**d.
"""

import numpy as np

from gfhinterp.analysis import GridSpec, lebesgue_study

ns = [2 ** k for k in range(4, 11)]
ds = [1, 2, 3, 5, 8]
for gamma in (1, 2, 3):
    t = lebesgue_study(ds, ns, gamma, GridSpec(10))
    print(f"\ngamma={gamma}")
    print("  d \\ n " + "".join(f"{n:>9d}" for n in ns))
    for d, row in zip(ds, t.constants):
        print(f"  {d:5d} " + "".join(f"{c:9.3f}" for c in row))

big = list(range(10, 51, 10))
for gamma in (1, 2, 3):
    c = lebesgue_study(big, [1024], gamma, GridSpec(10)).constants[:, 0]
    slope = np.polyfit(big, np.log2(c), 1)[0]
    print(f"gamma={gamma}: log2(constant) grows {slope:.2f} per unit of d")
