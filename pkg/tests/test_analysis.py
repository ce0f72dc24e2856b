import math

import numpy as np
import pytest

from gfhinterp import build, from_values, make_equidistant, make_frame, make_perturbed
from gfhinterp.analysis import (GridSpec, convergence_study, doubling_rate, grid_points,
                                lebesgue_constant, lebesgue_function, lebesgue_study, max_error,
                                max_weighted_moment_sum, timing_bench, weighted_moment_sum)
from gfhinterp.testfns import Smoothness, TestFunction, catalog_lookup

TINY = make_frame(from_values([0.0, 1.0, 2.0]), 1, 2)


def test_grid_layout():
    ns = from_values([0.0, 1.0, 3.0])
    np.testing.assert_allclose(grid_points(ns, GridSpec(1)), [0.5, 2.0])
    assert len(grid_points(ns, GridSpec(3, include_midpoints=True))) == 8
    with pytest.raises(ValueError):
        GridSpec(0)


def test_grids_nest():
    ns = make_perturbed(-1, 1, 9, 0.4, 2)
    coarse, fine = grid_points(ns, GridSpec(4)), grid_points(ns, GridSpec(9))
    assert np.all(np.min(np.abs(coarse[:, None] - fine[None, :]), axis=1) < 1e-15)


def test_lebesgue_function_values():
    assert lebesgue_function(TINY, 0.5) == pytest.approx(1.1)
    np.testing.assert_allclose(lebesgue_function(TINY, [0.0, 1.0, 2.0]), 1.0)


def test_two_point_lebesgue_is_one():
    fr = make_frame(from_values([0.0, 1.0]), 1, 1)
    np.testing.assert_allclose(lebesgue_function(fr, np.linspace(0.01, 0.99, 9)), 1.0)


def test_lebesgue_bound_gamma1():
    rep = lebesgue_constant(make_frame(make_equidistant(-1, 1, 16), 3, 1), GridSpec(20))
    assert rep.constant_estimate <= 2 ** 3 * (1 + math.log(16))
    assert -1 <= rep.argmax_x <= 1 and (rep.n, rep.d, rep.gamma) == (16, 3, 1)


def test_lebesgue_flat_gamma2():
    tab = lebesgue_study([5], [64, 1024], 2, GridSpec(10))
    c64, c1024 = tab.constants[0]
    assert abs(c1024 / c64 - 1) <= 0.2
    assert len(list(tab.rows())) == 2


def test_lebesgue_study_skips_d_above_n():
    tab = lebesgue_study([1, 8], [4, 8], 1, GridSpec(3))
    assert math.isnan(tab.constants[1, 0])
    assert [(d, n) for d, n, *_ in tab.rows()] == [(1, 4), (1, 8), (8, 8)]


@pytest.mark.parametrize("p", [2, 5])
def test_finer_grid_never_lowers_estimate(p):
    fr = make_frame(make_perturbed(-1, 1, 20, 0.5, 4), 3, 3)
    coarse = lebesgue_constant(fr, GridSpec(p)).constant_estimate
    fine = lebesgue_constant(fr, GridSpec(2 * p + 1)).constant_estimate
    assert fine >= coarse


def test_weighted_moment_sum_values():
    assert weighted_moment_sum(TINY, 1.0, 0.5) == pytest.approx(0.6)
    assert weighted_moment_sum(TINY, 2.0, 1.0) == 0.0
    with pytest.raises(ValueError):
        weighted_moment_sum(TINY, 0.0, 0.5)
    assert max_weighted_moment_sum(TINY, 1.0, GridSpec(7)) > 0


def test_max_error_polynomial_and_constant():
    ns = make_perturbed(-1, 1, 30, 0.3, 9)
    cube = TestFunction("cube", lambda x: x ** 3 - x, Smoothness("analytic"))
    assert max_error(build(make_frame(ns, 3, 2), cube(ns.xs)), cube) <= 1e-9
    one = TestFunction("one", np.ones_like, Smoothness("analytic"))
    assert max_error(build(make_frame(ns, 2, 4), one(ns.xs)), one) <= 1e-14


def test_max_error_rejects_foreign_samples():
    ns = make_equidistant(-1, 1, 8)
    with pytest.raises(ValueError, match="do not match"):
        max_error(build(make_frame(ns, 2, 1), np.zeros(9)), catalog_lookup("gauss"))


def test_doubling_rate():
    assert doubling_rate(4.0, 1.0) == 2.0
    assert math.isnan(doubling_rate(0.0, 1.0))


def test_convergence_table_shape():
    tab = convergence_study(catalog_lookup("gauss"), 2, [1, 3], range(2, 6), GridSpec(5))
    assert set(tab) == {1, 3}
    rows = tab[3]
    assert [r.n for r in rows] == [4, 8, 16, 32] and math.isnan(rows[0].rate)
    assert rows[-1].error < rows[0].error
    pts = convergence_study(catalog_lookup("gauss"), 2, [1], [3], GridSpec(5), count="points")
    assert pts[1][0].n == 7
    with pytest.raises(ValueError):
        convergence_study(catalog_lookup("gauss"), 5, [1], [1], GridSpec(5))


def test_jump_local_rate_away_from_jump():
    # Away from the discontinuity the smooth part is recovered at rate d + 1.
    f = catalog_lookup("jump")
    tab = convergence_study(f, 2, [3], range(6, 10), GridSpec(10), window=(0.5, 1.0))
    assert f.local_smoothness.order == math.inf
    assert tab[3][-1].rate == pytest.approx(3, abs=0.4)
    full = convergence_study(f, 2, [3], [8], GridSpec(10))
    assert full[3][0].error > 0.5


def test_timing_record():
    rec = timing_bench(64, 3, 2, 200, repeats=2)
    assert rec.general_s > 0 and rec.classical_s > 0 and rec.weights_s > 0
    assert rec.general_per_mnd2 == rec.general_s / (200 * 64 * 9)
    with pytest.raises(ValueError):
        timing_bench(0, 3, 2, 10)
