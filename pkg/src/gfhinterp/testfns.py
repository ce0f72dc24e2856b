"""Test functions for the convergence experiments, tagged with their smoothness.

The smoothness tag ``(s, alpha)`` means ``f`` is ``s`` times differentiable
with a Hoelder-``alpha`` top derivative (``alpha = 0`` meaning plain ``C^s``);
analytic functions use ``s = inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["Smoothness", "TestFunction", "CATALOG", "catalog_lookup"]


@dataclass(frozen=True)
class Smoothness:
    kind: str  # "lip", "cs", "csa", "analytic" or "jump"
    s: float = 0
    alpha: float = 0.0

    @property
    def order(self) -> float:
        if self.kind == "analytic":
            return math.inf
        if self.kind == "jump":
            return 0.0
        return self.s + self.alpha

    def __str__(self) -> str:
        if self.kind == "lip":
            return f"Lip({self.alpha:g})"
        if self.kind == "cs":
            return f"C^{self.s:g}"
        if self.kind == "csa":
            return f"C^({self.s:g},{self.alpha:g})"
        return self.kind


@dataclass(frozen=True)
class TestFunction:
    """A named test function; call it like ``f(x)`` on scalars or arrays."""

    __test__ = False  # keep pytest from collecting this class

    name: str
    func: Callable[[np.ndarray], np.ndarray]
    smoothness: Smoothness
    description: str = ""
    # smoothness away from the singular point, for local-rate checks
    local_smoothness: Smoothness | None = None

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))

    def expected_rate(self, d: int, gamma: int) -> float:
        """Observed error exponent ``min(s + alpha, d + 1)`` for equispaced nodes.

        It is guaranteed for ``gamma > s + alpha + 1`` and observed for smaller
        ``gamma`` too, ``gamma = 1`` included, so it does not depend on ``gamma``.
        """
        return min(self.smoothness.order, d + 1)

    def proven_rate(self, d: int, gamma: int) -> float | None:
        """Exponent guaranteed by the error bounds, or None when they give none.

        For ``1 < gamma < s + alpha + 1`` the bound degrades to ``gamma - 1``;
        at equality a ``log n`` factor appears, which is ignored here.
        ``gamma = 1`` is not covered.
        """
        if gamma < 2:
            return None
        order = min(self.smoothness.order, d + 1)
        return order if gamma >= order + 1 else float(gamma - 1)


def _sqrt_abs(x):
    return np.sqrt(np.abs(x))


def _runge(x):
    return 1.0 / (1.0 + 25.0 * x * x)


def _jump(x):
    return np.sign(x) + _runge(x)


CATALOG: dict[str, TestFunction] = {
    f.name: f
    for f in [
        TestFunction("sqrt_abs", _sqrt_abs, Smoothness("lip", 0, 0.5), "|x|^0.5"),
        TestFunction("abs", np.abs, Smoothness("lip", 0, 1.0), "|x|"),
        TestFunction("gauss", lambda x: np.exp(-x * x), Smoothness("analytic"), "exp(-x^2)"),
        TestFunction("runge", _runge, Smoothness("analytic"), "1/(1+25x^2)"),
        TestFunction("jump", _jump, Smoothness("jump"), "sign(x) + 1/(1+25x^2)",
                     local_smoothness=Smoothness("analytic")),
    ]
}


def catalog_lookup(name: str) -> TestFunction:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown test function {name!r}; known: {', '.join(CATALOG)}") from None
