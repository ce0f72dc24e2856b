"""Lebesgue constants, error measurement, convergence and timing studies.

Suprema over ``[a, b]`` are taken over the nodes plus a uniform grid inside
every node gap (:class:`GridSpec`), so every reported maximum is a lower
bound of the true supremum.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .interpolant import (Frame, Interpolant, basis, build, classical_weights, eval_barycentric,
                          eval_classical, evaluate, make_frame)
from .nodes import NodeSet, make_equidistant
from .testfns import TestFunction

__all__ = [
    "GridSpec",
    "LebesgueReport",
    "LebesgueTable",
    "ConvergenceRow",
    "TimingRecord",
    "grid_points",
    "lebesgue_function",
    "lebesgue_constant",
    "weighted_moment_sum",
    "max_weighted_moment_sum",
    "max_error",
    "convergence_study",
    "lebesgue_study",
    "timing_bench",
    "doubling_rate",
]


@dataclass(frozen=True)
class GridSpec:
    """``per_interval`` equispaced interior points in every node gap.

    Gap ``[x_k, x_{k+1}]`` receives ``x_k + j (x_{k+1} - x_k) / (per_interval + 1)``
    for ``j = 1..per_interval``; ``include_midpoints`` adds each gap midpoint.
    Grids for ``p`` and ``2p + 1`` are nested.
    """

    per_interval: int = 20
    include_midpoints: bool = False

    def __post_init__(self):
        if self.per_interval < 1:
            raise ValueError(f"per_interval must be >= 1, got {self.per_interval}")


def grid_points(nodes: NodeSet, grid: GridSpec) -> np.ndarray:
    xs = nodes.xs
    gap = np.diff(xs)
    t = np.arange(1, grid.per_interval + 1) / (grid.per_interval + 1)
    if grid.include_midpoints:
        t = np.append(t, 0.5)
    pts = xs[:-1, None] + gap[:, None] * t[None, :]
    return pts.ravel()


def _abs_basis_reduce(frame: Frame, x: np.ndarray, weight=None) -> np.ndarray:
    # sum_k weight_k(x) |b_k(x)| in chunks, without materialising the full basis
    out = np.empty(len(x))
    step = max(1, (1 << 20) // len(frame.xs))
    for start in range(0, len(x), step):
        xc = x[start:start + step]
        b = np.abs(basis(frame, xc))
        if weight is not None:
            b *= weight(xc)
        out[start:start + step] = b.sum(axis=1)
    return out


def lebesgue_function(frame: Frame, x):
    """``Lambda(x) = sum_k |b_k(x)|``; exactly 1 at the nodes."""
    xa = np.asarray(x, dtype=float)
    out = _abs_basis_reduce(frame, np.atleast_1d(xa).ravel())
    return float(out[0]) if xa.ndim == 0 else out.reshape(xa.shape)


@dataclass(frozen=True)
class LebesgueReport:
    constant_estimate: float
    argmax_x: float
    grid: GridSpec
    n: int
    d: int
    gamma: int


def lebesgue_constant(frame: Frame, grid: GridSpec = GridSpec()) -> LebesgueReport:
    """Largest Lebesgue-function value over the nodes and the grid (a lower bound)."""
    x = grid_points(frame.nodes, grid)
    lam = lebesgue_function(frame, x)
    k = int(np.argmax(lam))
    best, arg = float(lam[k]), float(x[k])
    if best < 1.0:
        best, arg = 1.0, float(frame.xs[0])
    return LebesgueReport(best, arg, grid, frame.n, frame.d, frame.gamma)


def weighted_moment_sum(frame: Frame, alpha: float, x):
    """``Sigma(x) = sum_k |x - x_k|**alpha |b_k(x)|``; zero at the nodes."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    xs = frame.xs
    xa = np.asarray(x, dtype=float)
    out = _abs_basis_reduce(frame, np.atleast_1d(xa).ravel(),
                            weight=lambda xc: np.abs(xc[:, None] - xs[None, :]) ** alpha)
    return float(out[0]) if xa.ndim == 0 else out.reshape(xa.shape)


def max_weighted_moment_sum(frame: Frame, alpha: float, grid: GridSpec = GridSpec()) -> float:
    return float(np.max(weighted_moment_sum(frame, alpha, grid_points(frame.nodes, grid))))


def max_error(interp: Interpolant, f: TestFunction, grid: GridSpec = GridSpec(),
              engine: str = "naive", window: tuple[float, float] | None = None) -> float:
    """``max |f(x) - r(x)|`` over the grid and the nodes.

    ``window`` restricts the maximum to points inside ``[lo, hi]``.
    """
    xs = interp.nodes.xs
    fx = np.asarray(f(xs), dtype=float)
    if np.any(np.abs(fx - interp.samples) > 1e-14 * (1 + np.abs(fx))):
        raise ValueError(f"samples do not match {getattr(f, 'name', 'f')} at the nodes")
    x = grid_points(interp.nodes, grid)
    if window is not None:
        x = x[(x >= window[0]) & (x <= window[1])]
    err = np.abs(f(x) - evaluate(interp, x, engine))
    return float(err.max()) if len(err) else 0.0


def doubling_rate(e_coarse: float, e_fine: float) -> float:
    """``log2(E(n/2) / E(n))``; nan when either error is zero."""
    if e_coarse <= 0 or e_fine <= 0:
        return math.nan
    return math.log2(e_coarse / e_fine)


@dataclass(frozen=True)
class ConvergenceRow:
    gamma: int
    k: int
    n: int
    error: float
    rate: float  # nan on the first row


def convergence_study(f: TestFunction, d: int, gammas, ks, grid: GridSpec = GridSpec(),
                      interval: tuple[float, float] = (-1.0, 1.0),
                      window: tuple[float, float] | None = None,
                      count: str = "gaps") -> dict[int, list[ConvergenceRow]]:
    """Max errors on equidistant nodes for ``k`` in ``ks``, for each ``gamma``.

    With ``count="gaps"`` the node set has ``n = 2**k`` gaps (``2**k + 1``
    nodes); with ``count="points"`` it has ``2**k`` nodes, so for even
    intervals centred at 0 the origin is not a node. Rows are ordered by
    ``k``; ``rate`` compares each row with the previous one.
    """
    ks = sorted(int(k) for k in ks)
    if not ks:
        raise ValueError("ks must not be empty")
    if count not in ("gaps", "points"):
        raise ValueError(f"count must be 'gaps' or 'points', got {count!r}")
    offset = 0 if count == "gaps" else -1
    n_min = 2 ** ks[0] + offset
    if n_min < max(d, 1):
        raise ValueError(f"d={d} exceeds the smallest n={n_min}")
    a, b = interval
    table: dict[int, list[ConvergenceRow]] = {}
    for g in gammas:
        rows = []
        prev = None
        for k in ks:
            nodes = make_equidistant(a, b, 2 ** k + offset)
            interp = build(make_frame(nodes, d, g), f(nodes.xs))
            e = max_error(interp, f, grid, window=window)
            rate = doubling_rate(prev, e) if prev is not None else math.nan
            rows.append(ConvergenceRow(int(g), k, nodes.n, e, rate))
            prev = e
        table[int(g)] = rows
    return table


@dataclass
class LebesgueTable:
    """Lebesgue constants for one ``gamma`` on a ``(d, n)`` grid of cells.

    ``constants[i, j]`` belongs to ``ds[i]`` and ``ns[j]``; cells with
    ``d > n`` hold nan.
    """

    gamma: int
    ds: list[int]
    ns: list[int]
    constants: np.ndarray
    argmax: np.ndarray
    grid: GridSpec = field(default_factory=GridSpec)

    def rows(self):
        for i, d in enumerate(self.ds):
            for j, n in enumerate(self.ns):
                if d <= n:
                    yield d, n, self.gamma, float(self.constants[i, j]), float(self.argmax[i, j])


def lebesgue_study(ds, ns, gamma: int, grid: GridSpec = GridSpec(),
                   interval: tuple[float, float] = (-1.0, 1.0)) -> LebesgueTable:
    ds, ns = [int(d) for d in ds], [int(n) for n in ns]
    const = np.full((len(ds), len(ns)), np.nan)
    arg = np.full((len(ds), len(ns)), np.nan)
    for j, n in enumerate(ns):
        nodes = make_equidistant(interval[0], interval[1], n)
        for i, d in enumerate(ds):
            if d > n:
                continue
            rep = lebesgue_constant(make_frame(nodes, d, gamma), grid)
            const[i, j] = rep.constant_estimate
            arg[i, j] = rep.argmax_x
    return LebesgueTable(int(gamma), ds, ns, const, arg, grid)


@dataclass(frozen=True)
class TimingRecord:
    """Median wall times in seconds, plus times divided by the cost model.

    ``weights_s`` covers the ``O(n d^2)`` classical weight computation,
    ``classical_s`` the ``O(m n)`` classical evaluation and ``general_s`` the
    ``O(m n d^2)`` barycentric-type evaluation for the requested ``gamma``.
    """

    n: int
    d: int
    gamma: int
    m: int
    repeats: int
    weights_s: float
    classical_s: float
    general_s: float

    @property
    def weights_per_nd2(self) -> float:
        return self.weights_s / (self.n * max(self.d, 1) ** 2)

    @property
    def classical_per_mn(self) -> float:
        return self.classical_s / (self.m * self.n)

    @property
    def general_per_mnd2(self) -> float:
        return self.general_s / (self.m * self.n * max(self.d, 1) ** 2)


def _median_time(fn, repeats: int) -> float:
    fn()  # warm-up, discarded
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def timing_bench(n: int, d: int, gamma: int, m: int, repeats: int = 5,
                 interval: tuple[float, float] = (-1.0, 1.0), seed: int = 0) -> TimingRecord:
    """Time classical weights, classical evaluation and general evaluation."""
    if min(n, gamma, m, repeats) < 1 or d < 0:
        raise ValueError("n, gamma, m and repeats must be positive and d non-negative")
    nodes = make_equidistant(interval[0], interval[1], n)
    f = np.cos(3 * nodes.xs)
    frame1 = make_frame(nodes, d, 1)
    interp1 = build(frame1, f)
    interp = build(make_frame(nodes, d, gamma), f)
    rng = np.random.default_rng(seed)
    x = rng.uniform(interval[0], interval[1], size=m)
    return TimingRecord(
        n, d, gamma, m, repeats,
        weights_s=_median_time(lambda: classical_weights(frame1), repeats),
        classical_s=_median_time(lambda: eval_classical(interp1, x), repeats),
        general_s=_median_time(lambda: eval_barycentric(interp, x), repeats),
    )
