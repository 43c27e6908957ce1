"""Rendering results as text tables or stable key=value lines."""

from enum import Enum
from typing import List, Optional, Tuple

import pandas as pd

from ..core.bounds import (
    EXACT_PHI_MAX_VERTICES,
    EstimateInterval,
    RegularBound,
    log_phi,
    phi_exact,
    simple_gamma,
)
from ..core.exact import PartitionValue
from ..core.hypergraph import HypergraphSpec
from ..core.scaling import ScalingOutcome, balance_ratio
from ..core.tester import TestReport
from ..core.weights import WeightVector
from .helpers import format_number

Rows = List[Tuple[str, object]]


def _value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, str):
        return value
    return format_number(value)


def render(rows: Rows, output_format: str = "text") -> str:
    """Machine format is one key=value line per row; text format is a table."""
    if output_format == "machine":
        return "".join(f"{key}={_value(value)}\n" for key, value in rows)
    frame = pd.DataFrame(
        {"field": [key for key, _ in rows], "value": [_value(v) for _, v in rows]}
    )
    return frame.to_string(index=False, justify="left") + "\n"


def spec_rows(spec: HypergraphSpec) -> Rows:
    return [("kind", spec.kind.value), ("k", spec.k), ("m", spec.m)]


def exact_rows(spec: HypergraphSpec, result: PartitionValue) -> Rows:
    value = result.value
    return spec_rows(spec) + [
        ("log_P", result.log_value),
        ("P", value if value is not None else "unrepresentable"),
        ("is_zero", result.is_zero),
    ]


def scaling_rows(weights: WeightVector, outcome: ScalingOutcome) -> Rows:
    rows = spec_rows(weights.spec) + [
        ("zeta", outcome.zeta),
        ("residual", outcome.residual),
        ("iterations", outcome.iterations),
        ("converged", outcome.converged),
        ("balance_W", balance_ratio(weights)),
        ("balance_Z", balance_ratio(outcome.Z)),
    ]
    rows += [(f"lambda[{v}]", float(x)) for v, x in enumerate(outcome.lam)]
    return rows


def interval_rows(interval: EstimateInterval, alpha: Optional[float] = None) -> Rows:
    c = interval.constants
    rows = [("kind", interval.kind.value), ("k", interval.k), ("m", interval.m)]
    if alpha is not None:
        rows.append(("alpha_W", alpha))
    rows += [
        ("alpha_requested", c.alpha_requested),
        ("alpha", c.alpha),
        ("alpha_inflated", c.inflated),
        ("l", c.l),
        ("gamma1", c.gamma1),
        ("gamma2", c.gamma2),
        ("log_eps1", c.log_eps1),
        ("log_eps2", c.log_eps2),
        ("zeta", interval.zeta),
        ("log_lower", interval.log_lower),
        ("log_point", interval.log_point),
        ("log_upper", interval.log_upper),
        ("literal_log_lower", interval.literal_log_lower),
        ("literal_log_upper", interval.literal_log_upper),
        ("simple_gamma", simple_gamma(interval)),
    ]
    return rows


def tester_rows(report: TestReport) -> Rows:
    rows = [
        ("verdict", report.verdict),
        ("branch", report.branch),
        ("k", report.k),
        ("m", report.m),
        ("delta", report.delta),
        ("beta", report.beta),
        ("epsilon", report.epsilon),
        ("gamma_used", report.gamma_used),
        ("gamma_is_default", report.gamma_is_default),
        ("log_threshold", report.log_threshold),
        ("crossover_m", report.crossover_m),
    ]
    if report.max_matching is not None:
        rows += [
            ("max_matching", report.max_matching),
            ("witness", " ".join("-".join(str(v) for v in e) for e in report.witness) or "none"),
            ("perfect_matchings", report.perfect_matchings),
        ]
    else:
        rows += [
            ("log_eta", report.log_eta),
            ("log_lower", report.log_lower),
            ("log_upper", report.log_upper),
        ]
    return rows


def phi_rows(k: int, m: int) -> Rows:
    rows = [("k", k), ("m", m), ("log_phi", log_phi(k, m, exact=True))]
    if k * m <= EXACT_PHI_MAX_VERTICES:
        rows.append(("phi", phi_exact(k, m)))
    return rows


def regular_rows(bound: RegularBound) -> Rows:
    return [
        ("k", bound.k),
        ("m", bound.m),
        ("d", bound.d),
        ("s", bound.s),
        ("alpha", bound.alpha),
        ("log_bound", bound.log_value),
        ("bound", bound.value),
        ("guaranteed", bound.guaranteed),
        ("caveat", bound.caveat),
    ]


def error_rows(exc: Exception) -> Rows:
    rows = [("error", type(exc).__name__), ("message", str(exc))]
    locus = getattr(exc, "locus", None)
    if locus is not None:
        rows.append(("locus", locus))
    rows.append(("exit_code", getattr(exc, "exit_code", 1)))
    return rows
