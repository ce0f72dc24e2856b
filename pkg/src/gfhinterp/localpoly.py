"""Local polynomial interpolants on sliding windows of ``d + 1`` nodes.

Window ``i`` covers ``x_i, ..., x_{i+d}``; its interpolant ``p_i`` is evaluated
with the second (true) barycentric Lagrange formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .nodes import NodeSet

__all__ = ["Window", "window_log_weights", "window_scaled_lagrange", "eval_local", "eval_windows"]


@dataclass(frozen=True)
class Window:
    i: int
    d: int

    def check(self, n: int) -> None:
        if self.d < 0 or self.d > n:
            raise ValueError(f"window degree d={self.d} outside [0, {n}]")
        if not 0 <= self.i <= n - self.d:
            raise ValueError(f"window index i={self.i} outside [0, {n - self.d}]")

    @property
    def indices(self) -> range:
        return range(self.i, self.i + self.d + 1)


def window_log_weights(xs: np.ndarray, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Lagrange weights of every window, as log-magnitudes and signs.

    Returns ``(logmag, sign)`` where ``logmag[i, j] = -sum_{s != j} log|x_{i+j} - x_{i+s}|``
    has shape ``(n - d + 1, d + 1)`` and ``sign[j] = (-1)**(d - j)`` is the same
    for all windows because the nodes are increasing.
    """
    xs = np.asarray(xs, dtype=float)
    nw = len(xs) - d
    logmag = np.zeros((nw, d + 1))
    for j in range(d + 1):
        xk = xs[j:j + nw]
        for s in range(d + 1):
            if s != j:
                logmag[:, j] -= np.log(np.abs(xk - xs[s:s + nw]))
    sign = np.where((d - np.arange(d + 1)) % 2 == 0, 1.0, -1.0)
    return logmag, sign


def _scaled_weights(logmag: np.ndarray, sign: np.ndarray) -> np.ndarray:
    # the second barycentric form is invariant to a per-window scale
    return sign * np.exp(logmag - logmag.max(axis=-1, keepdims=True))


def eval_local(nodes: NodeSet, samples, w: Window, x):
    """Evaluate the degree-``<= d`` interpolant of ``samples`` on window ``w`` at ``x``.

    ``x`` may be a scalar or an array. Points that coincide with a window node
    return the corresponding sample exactly.
    """
    samples = np.asarray(samples, dtype=float)
    if len(samples) != len(nodes):
        raise ValueError(f"got {len(samples)} samples for {len(nodes)} nodes")
    w.check(nodes.n)
    xw = nodes.xs[w.i:w.i + w.d + 1]
    fw = samples[w.i:w.i + w.d + 1]
    logmag, sign = window_log_weights(xw, w.d)
    v = _scaled_weights(logmag[0], sign)

    xa = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xa).ravel()
    diff = flat[:, None] - xw[None, :]
    hit = diff == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        t = v / diff
        out = (t @ fw) / t.sum(axis=1)
    rows, cols = np.nonzero(hit)
    out[rows] = fw[cols]
    out = out.reshape(xa.shape)
    return float(out) if out.ndim == 0 else out


def window_scaled_lagrange(xs: np.ndarray, d: int, scale: float) -> np.ndarray:
    """``prod_{s != j} scale / (x_{i+j} - x_{i+s})`` for every window ``i`` and position ``j``.

    Plain products of O(1) ratios when ``scale`` is a typical gap, so each
    entry carries only ``d`` roundings.
    """
    nw = len(xs) - d
    v = np.ones((nw, d + 1))
    for j in range(d + 1):
        for s in range(d + 1):
            if s != j:
                v[:, j] *= scale / (xs[j:j + nw] - xs[s:s + nw])
    return v


def eval_windows(xs: np.ndarray, samples: np.ndarray, d: int, x: np.ndarray,
                 vhat: np.ndarray | None = None, scale: float | None = None) -> np.ndarray:
    """Values ``p_i(x)`` for every window ``i`` at every point of ``x``.

    Uses the Lagrange form ``sum_j f_{i+j} prod_{s != j} (x - x_{i+s}) / (x_{i+j} - x_{i+s})``
    with prefix and suffix products, which is backward stable also where a
    window extrapolates. ``vhat`` comes from :func:`window_scaled_lagrange`
    with the same ``scale``. The result has shape ``(len(x), n - d + 1)``; the
    work is ``O(len(x) * n * d)``.
    """
    nw = len(xs) - d
    if scale is None:
        scale = (xs[-1] - xs[0]) / (len(xs) - 1)
    if vhat is None:
        vhat = window_scaled_lagrange(xs, d, scale)
    t = (x[:, None] - xs[None, :]) / scale
    # suffix[j] = prod_{s > j} t_{i+s}
    suffix = [None] * (d + 1)
    acc = np.ones((len(x), nw))
    for j in range(d, -1, -1):
        suffix[j] = acc
        acc = acc * t[:, j:j + nw]
    out = np.zeros((len(x), nw))
    prefix = np.ones((len(x), nw))
    for j in range(d + 1):
        out += (vhat[:, j] * samples[j:j + nw]) * (prefix * suffix[j])
        prefix = prefix * t[:, j:j + nw]
    return out
