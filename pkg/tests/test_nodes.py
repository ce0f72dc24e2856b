import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfhinterp.nodes import from_values, make_equidistant, make_perturbed, read_node_file

EPS = np.finfo(float).eps


def test_equidistant_small():
    ns = make_equidistant(-1, 1, 2)
    assert list(ns.xs) == [-1.0, 0.0, 1.0]
    assert ns.h == ns.hstar == 1.0
    assert ns.n == 2 and len(ns) == 3


def test_equidistant_1024():
    ns = make_equidistant(-1, 1, 1024)
    assert len(ns.xs) == 1025
    assert ns.h == pytest.approx(2 / 1024, rel=2 * EPS)
    assert ns.hstar == pytest.approx(2 / 1024, rel=2 * EPS)


def test_equidistant_endpoints_only():
    assert list(make_equidistant(0, 1, 1).xs) == [0.0, 1.0]


@pytest.mark.parametrize("a,b,n", [(np.nan, 1, 3), (0, np.inf, 3), (1, 1, 3), (2, 1, 3), (0, 1, 0)])
def test_equidistant_rejects(a, b, n):
    with pytest.raises(ValueError):
        make_equidistant(a, b, n)


@pytest.mark.parametrize("a,b", [(-1, 1), (0, 1), (-3, 0.5), (2.0, 7.25), (-0.1, 0.3)])
@pytest.mark.parametrize("n", [1, 2, 3, 7, 10, 64])
def test_equidistant_exact_endpoints_and_gaps(a, b, n):
    ns = make_equidistant(a, b, n)
    assert ns.xs[0] == a and ns.xs[-1] == b
    h0 = (b - a) / n
    # roundoff in a + k h0 is relative to the node magnitude, not to the gap
    scale = max(abs(a), abs(b)) / h0
    assert abs(ns.h - h0) <= 2 * EPS * h0 * max(1.0, scale)
    assert ns.mesh_ratio <= 1 + 8 * EPS * max(1.0, scale)


@pytest.mark.parametrize("n", [2, 4, 16, 256, 1024])
def test_equidistant_dyadic_mesh_ratio_exact(n):
    assert make_equidistant(-1, 1, n).mesh_ratio <= 1 + 8 * EPS


def test_perturbed_zero_beta_matches_equidistant():
    np.testing.assert_array_equal(make_perturbed(-1, 1, 8, 0.0, 123).xs,
                                  make_equidistant(-1, 1, 8).xs)


def test_perturbed_deterministic():
    a = make_perturbed(-1, 1, 64, 0.5, 42)
    b = make_perturbed(-1, 1, 64, 0.5, 42)
    assert a.xs.tobytes() == b.xs.tobytes()
    assert make_perturbed(-1, 1, 64, 0.5, 43).xs.tobytes() != a.xs.tobytes()


def test_perturbed_mesh_ratio_bound():
    ns = make_perturbed(-1, 1, 64, 0.5, 42)
    gaps = np.diff(ns.xs)
    assert gaps.max() / gaps.min() <= 3.0
    assert ns.mesh_ratio == gaps.max() / gaps.min()
    assert ns.xs[0] == -1 and ns.xs[-1] == 1


@pytest.mark.parametrize("beta", [-0.1, 1.0, 1.5])
def test_perturbed_rejects_beta(beta):
    with pytest.raises(ValueError):
        make_perturbed(-1, 1, 8, beta, 0)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 300), beta=st.floats(0, 0.95), seed=st.integers(0, 2**32 - 1))
def test_perturbed_ordering_and_bound(n, beta, seed):
    ns = make_perturbed(-2, 3, n, beta, seed)
    gaps = np.diff(ns.xs)
    assert np.all(gaps > 0)
    assert gaps.max() / gaps.min() <= (1 + beta) / (1 - beta) * (1 + 1e-12)


def test_from_values():
    ns = from_values([0, 1, 2])
    assert ns.h == ns.hstar == 1
    ns = from_values([0, 0.5, 2])
    assert (ns.h, ns.hstar, ns.mesh_ratio) == (1.5, 0.5, 3.0)
    assert (ns.a, ns.b) == (0.0, 2.0)


@pytest.mark.parametrize("bad", [[0, 1, 1], [0, 2, 1], [1.0], [], [0, np.nan, 1], [0, 1, np.inf]])
def test_from_values_rejects(bad):
    with pytest.raises(ValueError):
        from_values(bad)


@pytest.mark.parametrize("a,b,n", [(-1, 1, 7), (0.3, 2.9, 33), (-5, -4, 100)])
def test_from_values_roundtrip(a, b, n):
    eq = make_equidistant(a, b, n)
    again = from_values(eq.xs)
    assert again.h == eq.h and again.hstar == eq.hstar


def test_nodes_are_read_only():
    ns = make_equidistant(0, 1, 4)
    with pytest.raises(ValueError):
        ns.xs[1] = 0.3


def test_node_file(tmp_path):
    p = tmp_path / "nodes.txt"
    p.write_text("# comment\n-1\n-0.25\n\n0.1000000000000000055511151231257827\n1\n")
    ns = read_node_file(p)
    assert list(ns.xs) == [-1.0, -0.25, 0.1, 1.0]
    p.write_text("0\nabc\n")
    with pytest.raises(ValueError, match="not a number"):
        read_node_file(p)
