"""
Blending local polynomials on equispaced nodes
==============================================

A single degree-n polynomial through equispaced samples of the Runge
function oscillates wildly near the ends. Blending many local quadratics
does not, and the blending exponent gamma trades accuracy for locality.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gfhinterp import build, make_equidistant, make_frame
from gfhinterp.analysis import lebesgue_function
from gfhinterp.testfns import catalog_lookup

runge = catalog_lookup("runge")
nodes = make_equidistant(-1, 1, 20)
x = np.linspace(-1, 1, 2001)

# d = n is one global polynomial: the classic failure
fig, (top, bottom) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
top.plot(x, runge(x), "k", lw=2, label="f")
for d, gamma in [(20, 1), (2, 1), (2, 3)]:
    r = build(make_frame(nodes, d, gamma), runge(nodes.xs))
    y = r(x)
    print(f"d={d:2d} gamma={gamma}: max error {np.max(np.abs(y - runge(x))):.3e}")
    top.plot(x, y, label=f"d={d}, gamma={gamma}")
top.plot(nodes.xs, runge(nodes.xs), "o", ms=3, color="gray")
top.set_ylim(-0.5, 1.5)
top.legend()

# The Lebesgue function shows why: larger gamma keeps it flat and small.
for gamma in (1, 2, 3, 4):
    bottom.plot(x, lebesgue_function(make_frame(nodes, 2, gamma), x), label=f"gamma={gamma}")
bottom.set_ylabel("Lebesgue function")
bottom.legend()

fig.savefig("runge_blending.png", dpi=120)
print("wrote runge_blending.png")
