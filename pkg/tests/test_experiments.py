"""Convergence experiments with 2**k nodes (rather than 2**k gaps).

With an even number of nodes on [-1, 1] the singularity of |x|**alpha at 0
sits mid-gap. In that layout the gamma=5/gamma=1 error ratios come out near
1.08 and 1.55. With 2**k gaps the origin is a node and the ratios differ
(see the acceptance suite).
"""

import math

import pytest

from gfhinterp.analysis import GridSpec, convergence_study
from gfhinterp.testfns import catalog_lookup


@pytest.mark.parametrize("name,d,factor,ratio,tol", [
    ("sqrt_abs", 2, math.sqrt(2), 1.08, 0.1),
    ("abs", 1, 2.0, 1.55, 0.35),
])
def test_point_count_layout(name, d, factor, ratio, tol):
    tab = convergence_study(catalog_lookup(name), d, range(1, 6), range(2, 11), GridSpec(20),
                            count="points")
    for rows in tab.values():
        assert rows[-1].n == 1023
        assert 2 ** rows[-1].rate == pytest.approx(factor, rel=0.15)
    assert tab[5][-1].error / tab[1][-1].error == pytest.approx(ratio, abs=tol)
    # the curves for larger gamma lie above those for gamma = 1
    assert all(tab[g][-1].error > tab[1][-1].error for g in (2, 3, 4, 5))


def test_origin_as_node_favours_large_gamma():
    # with 2**k gaps x = 0 is a node, and larger gamma localises better there
    tab = convergence_study(catalog_lookup("abs"), 1, [1, 5], [10], GridSpec(20))
    assert tab[5][0].error < tab[1][0].error
