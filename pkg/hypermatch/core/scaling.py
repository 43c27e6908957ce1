"""Scaling positive weights to the unique k-stochastic weight.

The scaled weight is z_S = (prod_{v in S} lambda_v) w_S. Work happens in the
log domain with mu_v = ln lambda_v on a copy of W normalised so that
sum_S w_S = m; the normalising constant is folded back into lambda and zeta.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from ..config import resolve
from .errors import NonConvergenceError, PositivityError, StructuralError
from .hypergraph import edge_array
from .weights import WeightVector

logger = logging.getLogger(__name__)


def marginals(weights: WeightVector) -> Tuple[np.ndarray, float]:
    """Per-vertex sums r_v = sum_{S containing v} w_S, and the total weight."""
    edges = edge_array(weights.spec)
    r = np.bincount(
        edges.ravel(),
        weights=np.repeat(weights.values, weights.spec.k),
        minlength=weights.spec.n,
    )
    return r, weights.total


def is_k_stochastic(weights: WeightVector, tol: float = 1e-9) -> bool:
    r, _ = marginals(weights)
    return bool(np.max(np.abs(1.0 - r)) <= tol)


def balance_ratio(weights: WeightVector) -> float:
    """max_S w_S / min_S w_S of a positive weight."""
    low = float(weights.values.min())
    if low <= 0:
        raise PositivityError("Balance ratio needs a positive weight")
    return float(weights.values.max()) / low


@dataclass(frozen=True)
class ScalingOutcome:
    """Result of scaling W to a k-stochastic weight Z."""

    lam: np.ndarray
    Z: WeightVector
    zeta: float
    residual: float
    iterations: int
    converged: bool
    tol: float
    history: List[Tuple[float, float]] = field(default_factory=list, repr=False)

    @property
    def spec(self):
        return self.Z.spec

    def history_frame(self) -> pd.DataFrame:
        """Per-sweep residual and dual value."""
        frame = pd.DataFrame(self.history, columns=["residual", "dual_value"])
        frame.index.name = "sweep"
        return frame


class StochasticPoint:
    """A k-stochastic weight X, i.e. a point of the polytope of k-stochastic weights."""

    def __init__(self, weights: WeightVector, tol: float = 1e-9):
        """Check that every vertex marginal of weights equals 1 within tol."""
        r, _ = marginals(weights)
        deviation = float(np.max(np.abs(1.0 - r)))
        if deviation > tol:
            raise StructuralError(
                f"Weight is not k-stochastic: marginal deviation {deviation:.3g} > {tol:.3g}"
            )
        self.X = weights

    @property
    def values(self) -> np.ndarray:
        return self.X.values


def relative_entropy(weights: WeightVector, point) -> float:
    """f_W(X) = sum_S x_S ln(x_S / w_S), with 0 ln 0 = 0."""
    x = point.values
    if x.shape != weights.values.shape:
        raise StructuralError("Weight and point live on different hypergraphs")
    mask = x > 0
    if np.any(weights.values[mask] <= 0):
        raise PositivityError("f_W is infinite where w_S = 0 < x_S")
    terms = x[mask] * (np.log(x[mask]) - np.log(weights.values[mask]))
    return math.fsum(terms)


@dataclass(frozen=True)
class DualReport:
    """Residuals of the dual description of the scaling factors."""

    boundary_residual: float
    stationarity_residual: float

    def within(self, tol: float) -> bool:
        return self.boundary_residual <= tol and self.stationarity_residual <= tol


def dual_certificate_check(weights: WeightVector, lam) -> DualReport:
    """Check mu = ln lambda is on the boundary sum_S w_S exp(sum_{v in S} mu_v) = m
    and that the scaled weight has all vertex marginals equal to 1."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise PositivityError("Scaling factors must be positive")
    edges = edge_array(weights.spec)
    z = weights.values * np.exp(np.log(lam)[edges].sum(axis=1))
    r = np.bincount(edges.ravel(), weights=np.repeat(z, weights.spec.k), minlength=weights.spec.n)
    return DualReport(
        boundary_residual=abs(math.fsum(z) - weights.spec.m),
        stationarity_residual=float(np.max(np.abs(1.0 - r))),
    )


def scale_to_k_stochastic(
    weights: WeightVector,
    tol: Optional[float] = None,
    max_sweeps: Optional[int] = None,
    stall_window: Optional[int] = None,
    initial_lambda=None,
) -> ScalingOutcome:
    """Scale a positive weight on a complete hypergraph to the k-stochastic weight.

    Partite: each sweep normalises the parts in turn, lambda_v <- lambda_v / r_v
    for every v of the active part. Uniform: each sweep applies the damped
    simultaneous update lambda_v <- lambda_v * r_v^(-1/k).
    """
    tol = resolve("tol", tol)
    max_sweeps = resolve("max_sweeps", max_sweeps)
    stall_window = resolve("stall_window", stall_window)
    spec = weights.spec
    if not weights.positive:
        raise PositivityError("Scaling needs a positive weight")

    edges = edge_array(spec)
    flat = edges.ravel()
    n, k, m = spec.n, spec.k, spec.m
    log_c = math.log(m) - math.log(weights.total)
    log_w = weights.log_values + log_c
    if initial_lambda is None:
        mu = np.zeros(n)
    else:
        lam0 = np.asarray(initial_lambda, dtype=float)
        if lam0.shape != (n,) or np.any(lam0 <= 0):
            raise PositivityError(f"initial_lambda must hold {n} positive factors")
        mu = np.log(lam0) - log_c / k

    def vertex_sums(z: np.ndarray) -> np.ndarray:
        return np.bincount(flat, weights=np.repeat(z, k), minlength=n)

    def state(mu_now: np.ndarray):
        z = np.exp(log_w + mu_now[edges].sum(axis=1))
        r = vertex_sums(z)
        residual = float(np.max(np.abs(1.0 - r)))
        dual_value = math.fsum(mu_now) - math.fsum(z) + m
        return z, residual, dual_value

    z, residual, dual_value = state(mu)
    history = [(residual, dual_value)]
    best_mu, best_residual, best_sweep = mu.copy(), residual, 0
    logger.debug("scaling %s: initial residual %.3e", spec, residual)

    sweep = 0
    while residual > tol and sweep < max_sweeps:
        sweep += 1
        if spec.is_partite:
            for part in range(k):
                z = np.exp(log_w + mu[edges].sum(axis=1))
                r_part = np.bincount(edges[:, part], weights=z, minlength=n)[
                    part * m : (part + 1) * m
                ]
                mu[part * m : (part + 1) * m] -= np.log(r_part)
        else:
            mu -= np.log(vertex_sums(z)) / k
        z, residual, dual_value = state(mu)
        history.append((residual, dual_value))
        if residual < best_residual:
            best_mu, best_residual, best_sweep = mu.copy(), residual, sweep
        elif sweep - best_sweep >= stall_window:
            logger.warning(
                "scaling %s stalled at residual %.3e after %d sweeps", spec, best_residual, sweep
            )
            break

    converged = residual <= tol
    if not converged:
        mu, residual = best_mu, best_residual
    outcome = _outcome(weights, mu, log_c, residual, sweep, converged, tol, history)
    if not converged:
        raise NonConvergenceError(
            f"Scaling {spec} stopped at residual {residual:.3e} > {tol:.3e} "
            f"after {sweep} sweeps",
            outcome=outcome,
        )
    logger.debug("scaling %s converged in %d sweeps, residual %.3e", spec, sweep, residual)
    return outcome


def _outcome(weights, mu, log_c, residual, sweeps, converged, tol, history) -> ScalingOutcome:
    spec = weights.spec
    log_scale = mu + log_c / spec.k
    edges = edge_array(spec)
    z = WeightVector(spec, np.exp(weights.log_values + log_scale[edges].sum(axis=1)))
    lam = np.exp(log_scale)
    lam.flags.writeable = False
    return ScalingOutcome(
        lam=lam,
        Z=z,
        zeta=math.fsum(log_scale),
        residual=residual,
        iterations=sweeps,
        converged=converged,
        tol=tol,
        history=history,
    )
