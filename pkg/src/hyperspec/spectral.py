"""Adjacency-tensor action and the spectral radius of uniform hypergraphs.

The spectral radius is computed by power iteration on the shifted map
``x -> A(G) x + x^(k-1)``.  For a connected hypergraph this map is weakly
primitive, so the iteration converges to the positive Perron vector from any
positive start, and the Collatz-Wielandt ratios ``(B x)_i / x_i^(k-1)``
bracket ``rho(G) + 1`` at every step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .core import Hypergraph, HypergraphError, is_connected

log = logging.getLogger(__name__)


class NotConnected(HypergraphError):
    pass


class ConvergenceError(RuntimeError):
    """Raised when the bound gap stays above tolerance; ``result`` holds the best bounds."""

    def __init__(self, message: str, result: EigenResult):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class EigenResult:
    rho: float
    lower: float
    upper: float
    x: np.ndarray = field(repr=False)
    iterations: int
    residual: float

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    def certainly_below(self, other: EigenResult) -> bool:
        """True when this interval lies strictly below ``other``'s."""
        return self.upper < other.lower


def _edge_array(G: Hypergraph) -> np.ndarray:
    return np.asarray(G.edges, dtype=np.intp).reshape(G.m, G.k)


def _others_product(vals: np.ndarray) -> np.ndarray:
    # product over each row excluding the column itself, without division
    m, k = vals.shape
    left = np.ones((m, k))
    right = np.ones((m, k))
    left[:, 1:] = np.cumprod(vals[:, :-1], axis=1)
    right[:, :-1] = np.cumprod(vals[:, :0:-1], axis=1)[:, ::-1]
    return left * right


def _check_length(G: Hypergraph, x: np.ndarray) -> None:
    if x.shape != (G.n,):
        raise ValueError(f"vector of shape {x.shape} does not match n={G.n}")


def apply_adjacency(G: Hypergraph, x) -> np.ndarray:
    """``(A(G) x)_i``: sum over edges containing ``i`` of the product of the other entries."""
    x = np.asarray(x, dtype=float)
    _check_length(G, x)
    E = _edge_array(G)
    contrib = _others_product(x[E])
    return np.bincount(E.ravel(), weights=contrib.ravel(), minlength=G.n)


def rayleigh(G: Hypergraph, x) -> float:
    """``x^T (A(G) x) = k * sum_e prod_{v in e} x_v``."""
    x = np.asarray(x, dtype=float)
    _check_length(G, x)
    return float(G.k * np.prod(x[_edge_array(G)], axis=1).sum())


def residual(G: Hypergraph, r: EigenResult) -> float:
    return float(np.max(np.abs(apply_adjacency(G, r.x) - r.rho * r.x ** (G.k - 1))))


def poly_residual(coeffs, value: float) -> float:
    """Horner evaluation, coefficients highest degree first."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    acc = 0.0
    for c in coeffs:
        acc = acc * value + c
    return acc


def _normalize(x: np.ndarray, k: int) -> np.ndarray:
    return x / np.sum(x**k) ** (1.0 / k)


def spectral_radius(G: Hypergraph, tol: float = 1e-10, max_iter: int = 1_000_000) -> EigenResult:
    """Spectral radius and principal eigenvector with certified bounds.

    Stops once ``upper - lower <= tol``.  Raises :class:`NotConnected` for a
    disconnected input and :class:`ConvergenceError` (carrying the best
    bounds seen) if ``max_iter`` is exhausted.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if not is_connected(G):
        raise NotConnected("spectral_radius needs a connected hypergraph")
    k = G.k
    E = _edge_array(G)
    flat = E.ravel()
    x = _normalize(np.ones(G.n), k)
    best = (-np.inf, np.inf)
    it = 0
    while it < max_iter:
        it += 1
        xk1 = x ** (k - 1)
        y = np.bincount(flat, weights=_others_product(x[E]).ravel(), minlength=G.n) + xk1
        ratios = y / xk1
        lo, hi = float(ratios.min()), float(ratios.max())
        best = (max(best[0], lo), min(best[1], hi))
        x = _normalize(y ** (1.0 / (k - 1)), k)
        if best[1] - best[0] <= tol:
            break
    lower, upper = best[0] - 1.0, best[1] - 1.0
    rho = 0.5 * (lower + upper)
    # x was advanced after the last ratio test; re-derive the residual on it
    res = float(np.max(np.abs(apply_adjacency(G, x) - rho * x ** (k - 1))))
    result = EigenResult(rho, lower, upper, x, it, res)
    if upper - lower > tol:
        raise ConvergenceError(
            f"gap {upper - lower:.3e} > tol {tol:.1e} after {it} iterations", result
        )
    log.debug("rho=%.12f gap=%.2e iterations=%d", rho, upper - lower, it)
    return result
