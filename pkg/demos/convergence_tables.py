"""
Convergence on equispaced nodes
===============================

Errors for n = 2**k and the observed rate log2(E(n/2) / E(n)).
Rough functions converge at their Hoelder exponent for every gamma;
smooth ones at d + 1.
"""

from gfhinterp.analysis import GridSpec, convergence_study
from gfhinterp.testfns import catalog_lookup

grid = GridSpec(20)

for name, d in [("sqrt_abs", 2), ("abs", 1), ("gauss", 2), ("runge", 2)]:
    f = catalog_lookup(name)
    print(f"\n{name} ({f.smoothness}), d={d}, expected rate {f.expected_rate(d, 1):g}")
    table = convergence_study(f, d, [1, 2, 3], range(4, 11), grid)
    print("   n  " + "".join(f"     gamma={g} (rate)" for g in table))
    for rows in zip(*table.values()):
        print(f"{rows[0].n:5d} " + "".join(f"  {r.error:9.2e} ({r.rate:5.2f})" for r in rows))

# The singularity of |x| sits on a node when n is even. With an even node
# count it sits mid-gap instead, and the gamma ordering flips.
for count in ("gaps", "points"):
    t = convergence_study(catalog_lookup("abs"), 1, [1, 5], [10], grid, count=count)
    print(f"\n|x|, 2**10 {count}: E(gamma=5) / E(gamma=1) = {t[5][0].error / t[1][0].error:.3f}")
