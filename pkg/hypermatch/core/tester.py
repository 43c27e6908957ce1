"""Deciding between "many matchings" and "few perfect matchings".

For a k-uniform sublist H on km vertices, delta in (0, 1] and beta in (0, 1),
at least one of the following holds and the tester reports which it can
certify:

  (a) H has a matching with at least beta*m edges;
  (b) H has at most delta^m Phi_k(m) perfect matchings.

Small m is settled by exact enumeration. Otherwise the tester scales the
weight that is 1 on H and eps elsewhere and compares the estimate of its
partition function with delta^m Phi_k(m).
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from .bounds import (
    interval_from_scaling,
    interval_stochastic,
    log_phi,
    sandwich_constants,
    simple_gamma,
)
from .errors import DomainError, StateError, StructuralError
from .exact import count_matchings_by_size, max_matching
from .hypergraph import Edge, EdgeSublist, HypergraphKind
from .scaling import scale_to_k_stochastic
from .weights import WeightVector, sublist_indicator

logger = logging.getLogger(__name__)

THRESHOLD_SLACK = 1e-12
MAX_LOG_FLOAT = 700.0


class Verdict(str, Enum):
    MANY_MATCHINGS = "a"
    FEW_PERFECT_MATCHINGS = "b"
    BOTH = "both"

    @property
    def includes_a(self) -> bool:
        return self is not Verdict.FEW_PERFECT_MATCHINGS

    @property
    def includes_b(self) -> bool:
        return self is not Verdict.MANY_MATCHINGS


class Branch(str, Enum):
    DIRECT = "direct"
    ESTIMATED = "estimated"


@dataclass(frozen=True)
class TestReport:
    """Outcome of test_hypergraph with everything needed to audit the verdict."""

    __test__ = False

    verdict: Verdict
    branch: Branch
    k: int
    m: int
    delta: float
    beta: float
    epsilon: float
    gamma_used: float
    gamma_is_default: bool
    log_threshold: float
    crossover_m: Optional[int]
    log_eta: Optional[float] = None
    log_lower: Optional[float] = None
    log_upper: Optional[float] = None
    max_matching: Optional[int] = None
    witness: List[Edge] = field(default_factory=list)
    perfect_matchings: Optional[int] = None


def epsilon_for(delta: float, beta: float) -> float:
    """eps = delta^(1/(1-beta)) / 2."""
    _check_parameters(delta, beta)
    return 0.5 * delta ** (1.0 / (1.0 - beta))


def _check_parameters(delta: float, beta: float):
    if not 0 < delta <= 1:
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    if not 0 < beta < 1:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")


def build_test_weight(sub: EdgeSublist, epsilon: float) -> WeightVector:
    """Weight on the complete hypergraph: 1 on members of sub, epsilon elsewhere."""
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    return sublist_indicator(sub, inside=1.0, outside=epsilon)


def small_m_gate(m: int, gamma: float, beta: float) -> bool:
    """True when m is too small for the estimate, i.e. m = 1 or
    m / ln m <= 2 gamma / ((1 - beta) ln 2)."""
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}")
    if m == 1:
        return True
    return m / math.log(m) <= 2.0 * gamma / ((1.0 - beta) * math.log(2.0))


def crossover_m(gamma: float, beta: float) -> Optional[int]:
    """Smallest m at which small_m_gate turns false for fixed gamma and beta.

    None when gamma is infinite and the gate never opens.
    """
    if not math.isfinite(gamma):
        return None
    if not small_m_gate(2, gamma, beta):
        return 2
    # m / ln m increases from m = 3 on
    lo, hi = 2, 3
    while small_m_gate(hi, gamma, beta):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if small_m_gate(mid, gamma, beta):
            lo = mid
        else:
            hi = mid
    return hi


def default_gamma(k: int, m: int, epsilon: float) -> float:
    """Exponent gamma with eta m^-gamma <= P(W) <= eta m^gamma for the test weight.

    It is the spread of the interval that interval_from_scaling builds for an
    (1/epsilon)-balanced weight, measured in units of ln m. Raises DomainError
    when the constants behind it overflow a float.
    """
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    log_alpha_z = -(k + 1) * math.log(epsilon)
    if log_alpha_z > MAX_LOG_FLOAT:
        raise DomainError(f"(1/eps)^(k+1) overflows a float for eps={epsilon:.3e}, k={k}")
    alpha_z = (1.0 / epsilon) ** (k + 1)
    if m == 1:
        constants = sandwich_constants(k, alpha_z)
        return constants.gamma1 + constants.gamma2
    return simple_gamma(interval_stochastic(k, m, alpha_z))


def test_hypergraph(
    sub: EdgeSublist,
    delta: float,
    beta: float,
    gamma_override: Optional[float] = None,
    force_branch: Optional[Branch] = None,
    tol: Optional[float] = None,
    max_sweeps: Optional[int] = None,
    leaf_budget: Optional[int] = None,
) -> TestReport:
    """Run the matching dichotomy test on a k-uniform sublist."""
    _check_parameters(delta, beta)
    spec = sub.base
    if spec.kind is not HypergraphKind.UNIFORM:
        raise StructuralError(f"The tester works on complete k-uniform bases, got {spec}")
    k, m = spec.k, spec.m
    epsilon = epsilon_for(delta, beta)
    log_threshold = m * math.log(delta) + log_phi(k, m)

    if gamma_override is not None:
        if not gamma_override > 0:
            raise DomainError(f"gamma_override must be positive, got {gamma_override}")
        gamma = float(gamma_override)
    else:
        try:
            gamma = default_gamma(k, m, epsilon)
        except DomainError as exc:
            # no finite gamma: the gate stays shut and only exact search applies
            logger.debug("default gamma unavailable, using inf: %s", exc)
            gamma = math.inf

    gated = small_m_gate(m, gamma, beta)
    branch = Branch(force_branch) if force_branch is not None else (
        Branch.DIRECT if gated else Branch.ESTIMATED
    )
    if branch is Branch.ESTIMATED and m == 1:
        raise DomainError("The estimated branch needs m > 1")
    if branch is Branch.ESTIMATED and math.isinf(gamma):
        raise DomainError(
            f"The estimated branch is not applicable: eps={epsilon:.3e} gives constants "
            f"too large for a finite gamma at k={k}; pass gamma_override"
        )
    logger.debug(
        "testing %d edges of %s: eps=%.3e gamma=%.6g branch=%s",
        len(sub),
        spec,
        epsilon,
        gamma,
        branch.value,
    )
    common = dict(
        branch=branch,
        k=k,
        m=m,
        delta=float(delta),
        beta=float(beta),
        epsilon=epsilon,
        gamma_used=gamma,
        gamma_is_default=gamma_override is None,
        log_threshold=log_threshold,
        crossover_m=crossover_m(gamma, beta),
    )

    if branch is Branch.DIRECT:
        size, witness = max_matching(sub, leaf_budget=leaf_budget)
        perfect = count_matchings_by_size(sub, leaf_budget=leaf_budget).perfect
        many = size >= math.ceil(beta * m - 1e-9)
        few = perfect == 0 or math.log(perfect) <= log_threshold + THRESHOLD_SLACK
        if not (many or few):
            raise StateError(
                f"Neither conclusion holds: max matching {size}, {perfect} perfect matchings"
            )
        verdict = Verdict.BOTH if many and few else (
            Verdict.MANY_MATCHINGS if many else Verdict.FEW_PERFECT_MATCHINGS
        )
        return TestReport(
            verdict=verdict, max_matching=size, witness=witness, perfect_matchings=perfect, **common
        )

    weights = build_test_weight(sub, epsilon)
    outcome = scale_to_k_stochastic(weights, tol=tol, max_sweeps=max_sweeps)
    log_eta = -(k - 1) * m - outcome.zeta
    log_lower = log_upper = None
    try:
        interval = interval_from_scaling(outcome, 1.0 / epsilon)
        log_lower, log_upper = interval.log_lower, interval.log_upper
    except DomainError as exc:
        logger.debug("no interval around eta: %s", exc)
    many = log_eta + gamma * math.log(m) > log_threshold
    return TestReport(
        verdict=Verdict.MANY_MATCHINGS if many else Verdict.FEW_PERFECT_MATCHINGS,
        log_eta=log_eta,
        log_lower=log_lower,
        log_upper=log_upper,
        **common,
    )


test_hypergraph.__test__ = False
