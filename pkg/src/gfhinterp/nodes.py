"""Interpolation node sets on a compact interval.

A :class:`NodeSet` holds strictly increasing abscissas ``a = x_0 < ... < x_n = b``
together with the largest and smallest consecutive gaps, which drive the
Lebesgue-constant behaviour of the interpolants.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NodeSet",
    "make_equidistant",
    "make_perturbed",
    "from_values",
    "read_node_file",
]


@dataclass(frozen=True, eq=False)
class NodeSet:
    """Strictly increasing nodes on ``[a, b]``.

    Use the module-level constructors rather than building this directly;
    they validate the data and compute the gap extremes.

    Attributes
    ----------
    a, b : float
        Interval end points (``xs[0]`` and ``xs[-1]``).
    xs : ndarray
        The ``n + 1`` nodes, read-only.
    h, hstar : float
        Maximum and minimum consecutive gap.
    """

    a: float
    b: float
    xs: np.ndarray
    h: float
    hstar: float

    @property
    def n(self) -> int:
        """Number of gaps (one less than the number of nodes)."""
        return len(self.xs) - 1

    @property
    def mesh_ratio(self) -> float:
        return self.h / self.hstar

    def __len__(self) -> int:
        return len(self.xs)

    def __repr__(self) -> str:
        return (f"NodeSet(n={self.n}, a={self.a!r}, b={self.b!r}, "
                f"h={self.h:.6g}, hstar={self.hstar:.6g})")


def _finalize(xs: np.ndarray) -> NodeSet:
    gaps = np.diff(xs)
    if np.any(gaps <= 0):
        k = int(np.argmax(gaps <= 0))
        raise ValueError(
            f"nodes must be strictly increasing (x[{k}]={xs[k]!r}, x[{k + 1}]={xs[k + 1]!r})")
    xs = np.array(xs, dtype=float)
    xs.flags.writeable = False
    return NodeSet(a=float(xs[0]), b=float(xs[-1]), xs=xs,
                   h=float(gaps.max()), hstar=float(gaps.min()))


def _check_interval(a: float, b: float, n: int) -> None:
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"interval end points must be finite, got ({a!r}, {b!r})")
    if not a < b:
        raise ValueError(f"need a < b, got ({a!r}, {b!r})")
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def make_equidistant(a: float, b: float, n: int) -> NodeSet:
    """Equidistant nodes ``x_k = a + k (b - a) / n`` for ``k = 0..n``."""
    _check_interval(a, b, n)
    n = int(n)
    k = np.arange(n + 1, dtype=float)
    xs = a + k * ((b - a) / n)
    xs[0], xs[-1] = a, b
    return _finalize(xs)


def make_perturbed(a: float, b: float, n: int, beta: float, seed: int) -> NodeSet:
    """Quasi-equidistant nodes obtained by jittering interior equidistant nodes.

    Interior node ``k`` moves by ``u_k * beta * (b - a) / (2 n)`` with ``u_k``
    uniform on ``[-1, 1]``; the end points stay fixed. Since each move is less
    than half a gap, ordering is preserved and the mesh ratio is at most
    ``(1 + beta) / (1 - beta)``.
    """
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"beta must lie in [0, 1), got {beta!r}")
    base = make_equidistant(a, b, n)
    if beta == 0.0 or base.n < 2:
        return base
    rng = np.random.default_rng(seed)
    u = rng.uniform(-1.0, 1.0, size=base.n - 1)
    xs = np.array(base.xs)
    xs[1:-1] += u * (beta * (b - a) / (2 * base.n))
    return _finalize(xs)


def from_values(values) -> NodeSet:
    """Validate arbitrary node values and wrap them in a :class:`NodeSet`."""
    xs = np.asarray(values, dtype=float)
    if xs.ndim != 1:
        raise ValueError("node values must be one-dimensional")
    if len(xs) < 2:
        raise ValueError(f"need at least 2 nodes, got {len(xs)}")
    if not np.all(np.isfinite(xs)):
        raise ValueError("node values must be finite")
    return _finalize(xs)


def read_values_file(path: str | os.PathLike) -> list[float]:
    """Read one decimal value per line; blank lines and ``#`` comments are skipped."""
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)  # empty files are rejected downstream
            values = np.loadtxt(path, dtype=float, comments="#", ndmin=1)
    except ValueError as exc:
        raise ValueError(f"{path}: not a number ({exc})") from None
    if values.ndim != 1:
        raise ValueError(f"{path}: expected one value per line")
    return values.tolist()


def read_node_file(path: str | os.PathLike) -> NodeSet:
    return from_values(read_values_file(path))
