"""Closed-form bounds on partition functions of k-stochastic weights.

Everything is computed as a natural log. Some of the constants, e.g.
C(kl, k)^(1-l) with l >= 17, are far below the smallest positive float.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from scipy.special import comb, gammaln

from ..utils.helpers import harmonic_span, log_binom
from .errors import DomainError, StateError
from .hypergraph import HypergraphKind

logger = logging.getLogger(__name__)

GATE_FLOOR = 2.0 + 1e-6
EXACT_PHI_MAX_VERTICES = 20
MAX_LOG_ALPHA = 700.0


def phi_exact(k: int, m: int) -> int:
    """Phi_k(m) = (km)! / ((k!)^m m!) as an exact integer."""
    _check_km(k, m)
    return math.factorial(k * m) // (math.factorial(k) ** m * math.factorial(m))


def log_phi(k: int, m: int, exact: bool = False) -> float:
    """ln Phi_k(m), the log number of perfect matchings of the complete k-uniform
    hypergraph on km vertices. With exact=True and km <= 20 the value is taken
    from the integer."""
    _check_km(k, m)
    if exact and k * m <= EXACT_PHI_MAX_VERTICES:
        return math.log(phi_exact(k, m))
    return float(gammaln(k * m + 1) - m * gammaln(k + 1) - gammaln(m + 1))


def _check_km(k: int, m: int):
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")


def _log_perfect(kind: HypergraphKind, k: int, m: int) -> float:
    if kind is HypergraphKind.PARTITE:
        return (k - 1) * float(gammaln(m + 1))
    return log_phi(k, m)


def _log_degree(kind: HypergraphKind, k: int, m: int) -> float:
    if kind is HypergraphKind.PARTITE:
        return (k - 1) * math.log(m)
    return log_binom(k * m - 1, k - 1)


def gate_alpha(k: int, alpha: float):
    """Raise alpha so that alpha^(k+1) > 2. Returns (alpha_effective, inflated)."""
    if not alpha >= 1.0:
        raise DomainError(f"Balance ratio alpha must be at least 1, got {alpha}")
    if (k + 1) * math.log(alpha) > math.log(2.0):
        return float(alpha), False
    inflated = GATE_FLOOR ** (1.0 / (k + 1))
    logger.debug("alpha %.6g inflated to %.6g for k=%d", alpha, inflated, k)
    return inflated, True


@dataclass(frozen=True)
class SandwichConstants:
    """Explicit constants l, gamma1, gamma2, eps1, eps2 for given (k, alpha)."""

    k: int
    alpha_requested: float
    alpha: float
    inflated: bool
    l: int
    gamma1: float
    gamma2: float
    log_eps1: float
    log_eps2: float


def sandwich_constants(k: int, alpha: float) -> SandwichConstants:
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    effective, inflated = gate_alpha(k, alpha)
    log_alpha = math.log(effective)
    if 3 * (k + 1) * log_alpha + 4 * math.log(k + 1) > MAX_LOG_ALPHA:
        raise DomainError(f"alpha={alpha} is too large for finite constants at k={k}")
    l = math.ceil(effective ** (2 * (k + 1)) * k * k) + 1
    gamma1 = effective ** (3 * (k + 1)) * (k * k + k) ** 2 + (k - 1) ** 2
    gamma2 = k * k * effective ** (k + 1) / 2.0
    log_l = math.log(l)
    log_eps1 = -(k + 1) * l * log_alpha + l * log_l + (1 - l) * log_binom(k * l, k)
    log_eps2 = (k + 1) * l * log_alpha + (l - k * l + k) * log_l
    return SandwichConstants(
        k=k,
        alpha_requested=float(alpha),
        alpha=effective,
        inflated=inflated,
        l=l,
        gamma1=gamma1,
        gamma2=gamma2,
        log_eps1=log_eps1,
        log_eps2=log_eps2,
    )


@dataclass(frozen=True)
class EstimateInterval:
    """Two-sided estimate ln P in [log_lower, log_upper] around log_point.

    literal_log_lower / literal_log_upper are the closed forms
    ln eps1 - gamma1 ln m - m(k-1) - zeta and ln eps2 + gamma2 ln m - m(k-1) - zeta.
    """

    kind: HypergraphKind
    k: int
    m: int
    log_lower: float
    log_point: float
    log_upper: float
    constants: SandwichConstants
    zeta: float
    literal_log_lower: float
    literal_log_upper: float

    @property
    def width(self) -> float:
        return self.log_upper - self.log_lower

    def contains(self, log_value: float, slack: float = 0.0) -> bool:
        return self.log_lower - slack <= log_value <= self.log_upper + slack


def interval_stochastic(
    k: int, m: int, alpha: float, kind: HypergraphKind = HypergraphKind.UNIFORM
) -> EstimateInterval:
    """Bounds on ln P(Z) for an alpha-balanced k-stochastic weight Z.

    The upper and lower bounds unroll the one-vertex-removal recursion
    ln P_j - ln P_{j-1} in [-(k-1) - gamma1/(j-1), -(k-1) + gamma2/(j-1)] down
    to a base size b = min(m, l), where P_b is bounded by the edge count and the
    extreme edge weights of an alpha^(k+1)-balanced stochastic weight. The
    interval is the union of the closed form and the iterated bound.
    """
    kind = HypergraphKind.parse(kind) if not isinstance(kind, HypergraphKind) else kind
    if m <= 1:
        raise DomainError(f"Sandwich bounds need m > 1, got {m}")
    constants = sandwich_constants(k, alpha)
    log_m = math.log(m)
    drift = -m * (k - 1)
    literal_lower = constants.log_eps1 - constants.gamma1 * log_m + drift
    literal_upper = constants.log_eps2 + constants.gamma2 * log_m + drift

    b = min(m, constants.l)
    log_ratio = (k + 1) * math.log(constants.alpha)
    log_count = _log_perfect(kind, k, b)
    log_deg = _log_degree(kind, k, b)
    span = harmonic_span(b, m)
    base_lower = log_count - b * (log_ratio + log_deg)
    base_upper = log_count + b * (log_ratio - log_deg)
    iterated_lower = base_lower - (k - 1) * (m - b) - constants.gamma1 * span
    iterated_upper = base_upper - (k - 1) * (m - b) + constants.gamma2 * span

    return EstimateInterval(
        kind=kind,
        k=k,
        m=m,
        log_lower=min(literal_lower, iterated_lower),
        log_point=float(drift),
        log_upper=max(literal_upper, iterated_upper, float(drift)),
        constants=constants,
        zeta=0.0,
        literal_log_lower=literal_lower,
        literal_log_upper=literal_upper,
    )


def interval_from_scaling(outcome, alpha: float) -> EstimateInterval:
    """Bounds on ln P(W) from a converged scaling of an alpha-balanced W.

    The scaled weight is alpha^(k+1)-balanced, and ln P(W) = ln P(Z) - zeta.
    """
    if not outcome.converged:
        raise StateError(
            f"Estimate needs a converged scaling, residual is {outcome.residual:.3e}"
        )
    spec = outcome.spec
    if not alpha >= 1.0:
        raise DomainError(f"Balance ratio alpha must be at least 1, got {alpha}")
    if (spec.k + 1) * math.log(alpha) > MAX_LOG_ALPHA:
        raise DomainError(f"alpha={alpha} gives alpha^(k+1) beyond float range at k={spec.k}")
    alpha_z = alpha ** (spec.k + 1)
    base = interval_stochastic(spec.k, spec.m, alpha_z, kind=spec.kind)
    shift = -outcome.zeta
    return EstimateInterval(
        kind=base.kind,
        k=base.k,
        m=base.m,
        log_lower=base.log_lower + shift,
        log_point=base.log_point + shift,
        log_upper=base.log_upper + shift,
        constants=base.constants,
        zeta=outcome.zeta,
        literal_log_lower=base.literal_log_lower + shift,
        literal_log_upper=base.literal_log_upper + shift,
    )


def simple_gamma(interval: EstimateInterval) -> float:
    """Smallest gamma with the interval inside log_point +/- gamma ln m."""
    spread = max(interval.log_upper - interval.log_point, interval.log_point - interval.log_lower)
    return spread / math.log(interval.m)


@dataclass(frozen=True)
class RegularBound:
    """Lower bound on the number of size-s matchings of a d-regular hypergraph.

    The bound holds once m exceeds a threshold that depends on (k, alpha) and is
    not known explicitly, so guaranteed is never set for a concrete m.
    """

    k: int
    m: int
    d: int
    s: int
    alpha: float
    log_value: float
    guaranteed: bool = False
    caveat: str = "holds for m >= m0(k, alpha, s/m) with m0 unspecified"

    @property
    def value(self) -> Optional[float]:
        if self.log_value > 709:
            return None
        return math.exp(self.log_value)


def regular_matching_lower_bound(k: int, m: int, d: int, s: int) -> RegularBound:
    """alpha^m Phi_k(m) / Phi_k(m-s) with alpha = d / C(km-1, k-1)."""
    _check_km(k, m)
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}")
    if not 1 <= s <= m:
        raise DomainError(f"Matching size s must lie in [1, {m}], got {s}")
    full_degree = int(comb(k * m - 1, k - 1, exact=True))
    if not 1 <= d <= full_degree:
        raise DomainError(f"Degree d must lie in [1, {full_degree}], got {d}")
    alpha = d / full_degree
    log_value = m * math.log(alpha) + log_phi(k, m) - log_phi(k, m - s)
    return RegularBound(k=k, m=m, d=d, s=s, alpha=alpha, log_value=log_value)


@dataclass(frozen=True)
class NearStochasticBound:
    """Upper bound beta/m on zeta for a nearly stochastic weight with total m."""

    beta: float
    bound: float
    m0: int
    applicable: bool


def near_stochastic_zeta_bound(
    k: int, alpha: float, delta: float, m: int
) -> NearStochasticBound:
    """beta = alpha delta^2 (k+1)^2, valid for m >= m0 = max(1 + ceil(alpha delta k), k)."""
    if not alpha >= 1.0:
        raise DomainError(f"Balance ratio alpha must be at least 1, got {alpha}")
    if not delta > 0:
        raise DomainError(f"delta must be positive, got {delta}")
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}")
    beta = alpha * delta**2 * (k + 1) ** 2
    m0 = max(1 + math.ceil(alpha * delta * k), k)
    return NearStochasticBound(beta=beta, bound=beta / m, m0=m0, applicable=m >= m0)
