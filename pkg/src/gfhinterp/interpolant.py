"""Generalized Floater-Hormann rational interpolants.

For nodes ``x_0 < ... < x_n``, a local degree ``0 <= d <= n`` and an integer
blending exponent ``gamma >= 1`` the interpolant is

    r(x) = sum_i lam_i(x) p_i(x) / sum_i lam_i(x),
    lam_i(x) = (-1)**(i*gamma) / prod_{s=i}^{i+d} (x - x_s)**gamma,

where ``p_i`` interpolates the samples on ``x_i..x_{i+d}``. ``gamma = 1`` is
the classical Floater-Hormann family.

Three evaluation routes are provided and are meant to agree:

* :func:`eval_naive` blends the local polynomials directly, ``O(m n d)``.
* :func:`eval_barycentric` uses the x-dependent weights ``w_k(x)`` of
  :func:`weights_at`, built term by term in ``O(m n d^2)``.
* :func:`eval_classical` uses precomputed x-independent weights, ``gamma = 1`` only.

Products of ``(d + 1) * gamma`` distance factors are carried as log-magnitudes
and signs and shifted by their maximum before exponentiation, so large
``d * gamma`` neither overflows nor underflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.special import logsumexp

from .localpoly import eval_windows, window_log_weights, window_scaled_lagrange
from .nodes import NodeSet

__all__ = [
    "SignedLogValue",
    "GfhConfig",
    "Frame",
    "Interpolant",
    "make_frame",
    "build",
    "lambda_tilde",
    "mu_tilde",
    "denominator_Q",
    "classical_weights",
    "weights_at",
    "eval_naive",
    "eval_barycentric",
    "eval_classical",
    "evaluate",
    "basis",
    "snap_index",
    "ENGINES",
]

ENGINES = ("naive", "barycentric", "classical")

# points per evaluation chunk times (n + 1). Temporaries stay well under
# glibc's 128 KiB mmap/trim thresholds; larger chunks make run time depend
# on allocator state (page faults on every chunk in some processes).
_CHUNK_ELEMS = 1 << 12


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as ``sign * exp(logmag)``.

    ``sign`` is -1, 0 or +1. ``logmag`` only matters when ``sign != 0``; the
    value of :func:`lambda_tilde` at a pole uses ``sign=0, logmag=inf``.
    """

    sign: int
    logmag: float

    @classmethod
    def from_float(cls, v: float) -> "SignedLogValue":
        if v == 0:
            return cls(0, -math.inf)
        return cls(1 if v > 0 else -1, math.log(abs(v)))

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        return SignedLogValue(self.sign * other.sign, self.logmag + other.logmag)

    def __truediv__(self, other: "SignedLogValue") -> "SignedLogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogValue")
        return SignedLogValue(self.sign * other.sign, self.logmag - other.logmag)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.logmag)

    @property
    def is_pole(self) -> bool:
        return self.sign == 0 and self.logmag == math.inf


@dataclass(frozen=True)
class GfhConfig:
    d: int
    gamma: int

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 0:
            raise ValueError(f"d must be a non-negative integer, got {self.d!r}")
        if int(self.gamma) != self.gamma or self.gamma < 1:
            raise ValueError(f"gamma must be an integer >= 1, got {self.gamma!r}")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "gamma", int(self.gamma))


@dataclass(frozen=True, eq=False)
class Frame:
    """Nodes plus ``(d, gamma)``: everything the basis functions depend on."""

    nodes: NodeSet
    config: GfhConfig

    def __post_init__(self):
        if self.config.d > self.nodes.n:
            raise ValueError(f"d={self.config.d} exceeds n={self.nodes.n}")

    @property
    def xs(self) -> np.ndarray:
        return self.nodes.xs

    @property
    def n(self) -> int:
        return self.nodes.n

    @property
    def d(self) -> int:
        return self.config.d

    @property
    def gamma(self) -> int:
        return self.config.gamma

    @property
    def n_windows(self) -> int:
        return self.n - self.d + 1

    @property
    def snap_tol(self) -> float:
        return 16 * np.finfo(float).eps * max(abs(self.nodes.a), abs(self.nodes.b), 1.0)

    @cached_property
    def _window_log_weights(self):
        return window_log_weights(self.xs, self.d)

    @property
    def _gap_scale(self) -> float:
        return (self.xs[-1] - self.xs[0]) / self.n

    @cached_property
    def _window_lagrange(self) -> np.ndarray:
        return window_scaled_lagrange(self.xs, self.d, self._gap_scale)

    @cached_property
    def _window_parity(self) -> np.ndarray:
        # (-1)**(i*gamma) for each window
        i = np.arange(self.n_windows)
        return np.where((i * self.gamma) % 2 == 0, 1.0, -1.0)

    def __repr__(self) -> str:
        return f"Frame(n={self.n}, d={self.d}, gamma={self.gamma})"


def make_frame(nodes: NodeSet, d: int, gamma: int) -> Frame:
    return Frame(nodes, GfhConfig(d, gamma))


@dataclass(frozen=True, eq=False)
class Interpolant:
    """Frame plus samples ``f(x_k)``; immutable once built (see :func:`build`)."""

    frame: Frame
    samples: np.ndarray
    classical_weights: np.ndarray | None = None

    def __call__(self, x, engine: str = "naive"):
        return evaluate(self, x, engine)

    @property
    def nodes(self) -> NodeSet:
        return self.frame.nodes


def build(frame: Frame, samples) -> Interpolant:
    """Attach samples to a frame; precomputes classical weights when ``gamma == 1``."""
    f = np.array(samples, dtype=float)
    if f.ndim != 1 or len(f) != len(frame.nodes):
        raise ValueError(f"expected {len(frame.nodes)} samples, got shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("samples must be finite")
    f.flags.writeable = False
    w = None
    if frame.gamma == 1:
        w = classical_weights(frame)
        w.flags.writeable = False
    return Interpolant(frame, f, w)


# ---------------------------------------------------------------------------
# blending functions and the polynomial form


def lambda_tilde(frame: Frame, i: int, x: float) -> SignedLogValue:
    """Blending function of window ``i`` at a scalar ``x``, in signed-log form."""
    if not 0 <= i <= frame.n - frame.d:
        raise ValueError(f"window index {i} outside [0, {frame.n - frame.d}]")
    diff = x - frame.xs[i:i + frame.d + 1]
    if np.any(diff == 0):
        return SignedLogValue(0, math.inf)
    g = frame.gamma
    negatives = int(np.count_nonzero(diff < 0))
    sign = (-1) ** ((i * g + negatives * g) % 2)
    return SignedLogValue(sign, -g * float(np.sum(np.log(np.abs(diff)))))


def mu_tilde(frame: Frame, i: int, x):
    """``lam_i(x)`` times ``pi(x)``: a polynomial, finite for every real ``x``.

    Computed as a plain product, so it can overflow for large ``n * gamma``;
    use :func:`denominator_Q` with ``log=True`` for robust sign information.
    """
    if not 0 <= i <= frame.n - frame.d:
        raise ValueError(f"window index {i} outside [0, {frame.n - frame.d}]")
    xs, g = frame.xs, frame.gamma
    xa = np.asarray(x, dtype=float)
    left = xs[:i]
    right = xs[i + frame.d + 1:]
    out = (np.prod((xa[..., None] - left) ** g, axis=-1)
           * np.prod((right - xa[..., None]) ** g, axis=-1))
    return float(out) if out.ndim == 0 else out


def denominator_Q(frame: Frame, x, log: bool = False):
    """``Q(x) = sum_i mu_i(x)``, which is positive on the whole real line.

    With ``log=True`` returns ``(sign, logmag)`` arrays computed by a signed
    log-sum-exp, which stays meaningful when ``Q`` itself would overflow.
    """
    xa = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xa).ravel()
    xs, d, g = frame.xs, frame.d, frame.gamma
    nw = frame.n_windows
    sign_out = np.empty(len(flat))
    log_out = np.empty(len(flat))
    i = np.arange(nw)
    for sl in _chunks(len(flat), len(xs)):
        xc = flat[sl]
        with np.errstate(divide="ignore"):
            L = np.log(np.abs(xc[:, None] - xs[None, :]))
        csum = np.cumsum(L, axis=1)
        prefix = np.concatenate([np.zeros((len(xc), 1)), csum[:, :nw - 1]], axis=1)
        rsum = np.cumsum(L[:, ::-1], axis=1)[:, ::-1]
        suffix = np.concatenate([rsum[:, d + 1:], np.zeros((len(xc), 1))], axis=1)
        logmu = g * (prefix + suffix)
        if g % 2 == 0:
            smu = np.ones_like(logmu)
        else:
            below = np.searchsorted(xs, xc, side="left")[:, None]
            flips = np.maximum(0, i[None, :] - below) + np.maximum(0, below - (i[None, :] + d + 1))
            smu = np.where(flips % 2 == 0, 1.0, -1.0)
        s, lm = _signed_logsumexp(smu, logmu)
        sign_out[sl] = s
        log_out[sl] = lm
    if log:
        if xa.ndim == 0:
            return float(sign_out[0]), float(log_out[0])
        return sign_out.reshape(xa.shape), log_out.reshape(xa.shape)
    with np.errstate(over="ignore"):
        q = sign_out * np.exp(log_out)
    return float(q[0]) if xa.ndim == 0 else q.reshape(xa.shape)


def _signed_logsumexp(signs: np.ndarray, logs: np.ndarray):
    with np.errstate(divide="ignore"):
        lm, sign = logsumexp(logs, axis=1, b=signs, return_sign=True)
    return sign, lm


# ---------------------------------------------------------------------------
# point handling


def snap_index(frame: Frame, x) -> np.ndarray:
    """Index of the node each point snaps to, or -1.

    A point snaps to ``x_k`` when ``|x - x_k| <= frame.snap_tol``; of two
    equally near nodes the lower index wins.
    """
    xs = frame.xs
    flat = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    j = np.searchsorted(xs, flat)
    lo = np.clip(j - 1, 0, len(xs) - 1)
    hi = np.clip(j, 0, len(xs) - 1)
    dlo = np.abs(flat - xs[lo])
    dhi = np.abs(flat - xs[hi])
    k = np.where(dlo <= dhi, lo, hi)
    return np.where(np.minimum(dlo, dhi) <= frame.snap_tol, k, -1)


def _chunks(m: int, width: int):
    step = max(1, _CHUNK_ELEMS // max(width, 1))
    for start in range(0, m, step):
        yield slice(start, min(start + step, m))


def _pointwise(frame: Frame, x, core, node_value, trailing: int = 0):
    """Apply ``core`` to off-node points in chunks and ``node_value`` at snapped ones."""
    xa = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xa).ravel()
    k = snap_index(frame, flat)
    shape = (len(flat),) + ((trailing,) if trailing else ())
    out = np.empty(shape)
    on = k >= 0
    if on.any():
        out[on] = node_value(k[on])
    off = np.flatnonzero(~on)
    for sl in _chunks(len(off), len(frame.xs)):
        idx = off[sl]
        out[idx] = core(flat[idx])
    out = out.reshape(xa.shape + shape[1:])
    if xa.ndim == 0 and not trailing:
        return float(out)
    return out


def _blend(frame: Frame, x: np.ndarray):
    """Per-window pieces at off-node points.

    Returns ``(L, S, sgn_pi, loglam, lam_sign, shift)`` where ``L[:, s]`` is
    ``log|x - x_s|``, ``S[:, i]`` sums ``L`` over window ``i``, ``sgn_pi`` is
    the sign of ``prod_{s in window}(x - x_s)``, and ``shift`` is the row-wise
    maximum of ``loglam = -gamma * S``.
    """
    xs, d, g = frame.xs, frame.d, frame.gamma
    nw = frame.n_windows
    L = np.log(np.abs(x[:, None] - xs[None, :]))
    S = L[:, 0:nw].copy()
    for s in range(1, d + 1):
        S += L[:, s:s + nw]
    below = np.searchsorted(xs, x, side="left")[:, None]
    i = np.arange(nw)[None, :]
    above = np.clip(i + d + 1 - below, 0, d + 1)
    sgn_pi = np.where(above % 2 == 0, 1.0, -1.0)
    loglam = -g * S
    lam_sign = frame._window_parity[None, :] * (sgn_pi if g % 2 else 1.0)
    shift = loglam.max(axis=1, keepdims=True)
    return L, S, sgn_pi, loglam, lam_sign, shift


# ---------------------------------------------------------------------------
# engines


def eval_naive(interp: Interpolant, x):
    """Blend the local polynomial interpolants with the blending functions."""
    frame = interp.frame
    f = interp.samples

    def core(xc):
        _, _, _, loglam, lam_sign, shift = _blend(frame, xc)
        lam = lam_sign * np.exp(loglam - shift)
        p = eval_windows(frame.xs, f, frame.d, xc, frame._window_lagrange, frame._gap_scale)
        return np.sum(lam * p, axis=1) / np.sum(lam, axis=1)

    return _pointwise(frame, x, core, lambda k: f[k])


def _weights_core(frame: Frame, xc: np.ndarray) -> np.ndarray:
    # w_k(x) term by term: for every window i and position j (k = i + j) the
    # product over s != j costs d factors, hence O(n d^2) per point.
    xs, d, g = frame.xs, frame.d, frame.gamma
    nw = frame.n_windows
    L, _, sgn_pi, _, _, shift = _blend(frame, xc)
    logv, vsign = frame._window_log_weights
    below = np.searchsorted(xs, xc, side="left")[:, None]
    parity = frame._window_parity[None, :]
    w = np.zeros((len(xc), len(xs)))
    for j in range(d + 1):
        acc = np.zeros((len(xc), nw))
        if g > 1:
            for s in range(d + 1):
                if s != j:
                    acc += L[:, s:s + nw]
        logterm = logv[None, :, j] - (g - 1) * acc
        sign = parity * vsign[j]
        if (g - 1) % 2:
            # sign of prod_{s != j} (x - x_{i+s}) = sign(pi_i) * sign(x - x_{i+j})
            k_above = (np.arange(nw)[None, :] + j) >= below
            sign = sign * sgn_pi * np.where(k_above, -1.0, 1.0)
        w[:, j:j + nw] += sign * np.exp(logterm - shift)
    return w


def weights_at(frame: Frame, x, return_shift: bool = False):
    """The x-dependent barycentric weights ``w_k(x)``.

    The result is scaled by ``exp(-shift)`` with ``shift = max_i log|lam_i(x)|``,
    the same factor :func:`eval_naive` divides out; it cancels in every ratio.
    Points within the snap tolerance of a node are rejected.
    """
    xa = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xa).ravel()
    if np.any(snap_index(frame, flat) >= 0):
        raise ValueError("weights_at is undefined at the nodes; use the node value")
    w = _weights_core(frame, flat)
    out = w[0] if xa.ndim == 0 else w.reshape(xa.shape + (len(frame.xs),))
    if return_shift:
        _, _, _, _, _, shift = _blend(frame, flat)
        sh = float(shift[0, 0]) if xa.ndim == 0 else shift[:, 0].reshape(xa.shape)
        return out, sh
    return out


def eval_barycentric(interp: Interpolant, x):
    """Barycentric-type form ``sum_k w_k(x) f_k / (x - x_k)**gamma`` over the same sum without ``f_k``."""
    frame = interp.frame
    f = interp.samples
    g = frame.gamma

    def core(xc):
        w = _weights_core(frame, xc)
        t = w / (xc[:, None] - frame.xs[None, :]) ** g
        return (t @ f) / t.sum(axis=1)

    return _pointwise(frame, x, core, lambda k: f[k])


def classical_weights(frame: Frame) -> np.ndarray:
    """Floater-Hormann weights ``w_k = sum_{i in J_k} (-1)**i prod_{s != k} 1/(x_k - x_s)``.

    Defined for any frame (they are the ``gamma = 1`` weights of its nodes);
    returned with a common positive scale so that the largest term is O(1).
    """
    d = frame.d
    nw = frame.n_windows
    logv, vsign = window_log_weights(frame.xs, d)
    top = logv.max()
    alt = np.where(np.arange(nw) % 2 == 0, 1.0, -1.0)
    w = np.zeros(len(frame.xs))
    for j in range(d + 1):
        w[j:j + nw] += alt * vsign[j] * np.exp(logv[:, j] - top)
    return w


def eval_classical(interp: Interpolant, x):
    """Classical barycentric evaluation with precomputed weights, ``O(n)`` per point."""
    if interp.classical_weights is None:
        raise ValueError(f"classical engine needs gamma == 1, got gamma={interp.frame.gamma}")
    frame = interp.frame
    f = interp.samples
    w = interp.classical_weights

    def core(xc):
        t = w / (xc[:, None] - frame.xs[None, :])
        return (t @ f) / t.sum(axis=1)

    return _pointwise(frame, x, core, lambda k: f[k])


def evaluate(interp: Interpolant, x, engine: str = "naive"):
    if engine == "naive":
        return eval_naive(interp, x)
    if engine == "barycentric":
        return eval_barycentric(interp, x)
    if engine == "classical":
        return eval_classical(interp, x)
    raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")


# ---------------------------------------------------------------------------
# basis functions


def _basis_core(frame: Frame, xc: np.ndarray) -> np.ndarray:
    # lam_i(x) * l_{i,k}(x) = (-1)**(i g) pi_i(x)**(1-g) v_{ik} / (x - x_k),
    # with pi_i the window product and v_{ik} the window Lagrange weight.
    xs, d, g = frame.xs, frame.d, frame.gamma
    nw = frame.n_windows
    _, S, sgn_pi, loglam, lam_sign, shift = _blend(frame, xc)
    denom = np.sum(lam_sign * np.exp(loglam - shift), axis=1)
    logv, vsign = frame._window_log_weights
    vtop = logv.max(axis=1)
    vt = vsign[None, :] * np.exp(logv - vtop[:, None])
    csign = frame._window_parity[None, :] * (sgn_pi if (g - 1) % 2 else 1.0)
    c = csign * np.exp((1 - g) * S + vtop[None, :] - shift) / denom[:, None]
    b = np.zeros((len(xc), len(xs)))
    for j in range(d + 1):
        b[:, j:j + nw] += c * vt[None, :, j] / (xc[:, None] - xs[None, j:j + nw])
    return b


def basis(frame: Frame, x) -> np.ndarray:
    """Cardinal functions ``b_k(x)``; the last axis of the result indexes ``k``.

    At a node the result is the Kronecker delta. Elsewhere the rows sum to one
    and ``basis(frame, x) @ samples`` equals the interpolant.
    """
    nk = len(frame.xs)

    def node_value(k):
        out = np.zeros((len(k), nk))
        out[np.arange(len(k)), k] = 1.0
        return out

    return _pointwise(frame, x, lambda xc: _basis_core(frame, xc), node_value, trailing=nk)
