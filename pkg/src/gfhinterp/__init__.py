"""Generalized Floater-Hormann rational interpolation on arbitrary nodes."""

from .interpolant import (ENGINES, Frame, GfhConfig, Interpolant, SignedLogValue, basis, build,
                          classical_weights, denominator_Q, eval_barycentric, eval_classical,
                          eval_naive, evaluate, lambda_tilde, make_frame, mu_tilde, weights_at)
from .localpoly import Window, eval_local
from .nodes import NodeSet, from_values, make_equidistant, make_perturbed, read_node_file
from .testfns import CATALOG, TestFunction, catalog_lookup

__version__ = "0.1.0"

__all__ = [
    "ENGINES", "Frame", "GfhConfig", "Interpolant", "SignedLogValue", "basis", "build",
    "classical_weights", "denominator_Q", "eval_barycentric", "eval_classical", "eval_naive",
    "evaluate", "lambda_tilde", "make_frame", "mu_tilde", "weights_at", "Window", "eval_local",
    "NodeSet", "from_values", "make_equidistant", "make_perturbed", "read_node_file", "CATALOG",
    "TestFunction", "catalog_lookup",
]
