import math
from typing import Iterable, Union

import numpy as np
from scipy.special import digamma, gammaln


def log_sum_exp(terms: Iterable[float]) -> float:
    """Compensated log of a sum of exponentials; -inf for an empty or all -inf input."""
    values = np.fromiter(terms, dtype=float)
    if values.size == 0:
        return -math.inf
    top = values.max()
    if top == -math.inf:
        return -math.inf
    # fsum keeps the reduction exactly rounded, independent of term order
    return float(top + math.log(math.fsum(np.exp(values - top))))


SHORT_PRODUCT_MAX = 64


def log_binom(n: Union[int, float], r: Union[int, float]) -> float:
    """Natural log of the binomial coefficient C(n, r).

    When the smaller of r and n - r is a short integer the falling factorial is
    summed term by term, which stays exact for integers beyond 2^53 where a
    log-gamma difference cancels to zero.
    """
    if r < 0 or r > n:
        return -math.inf
    j = min(r, n - r)
    if float(j).is_integer() and j <= SHORT_PRODUCT_MAX:
        j = int(j)
        return math.fsum(math.log(n - i) for i in range(j)) - math.lgamma(j + 1)
    n, r = float(n), float(r)
    return float(gammaln(n + 1) - gammaln(r + 1) - gammaln(n - r + 1))


def harmonic_span(lo: int, hi: int) -> float:
    """Sum of 1/(j-1) for j = lo+1 .. hi (zero when hi <= lo)."""
    if hi <= lo:
        return 0.0
    if hi - lo <= 10000:
        return math.fsum(1.0 / (j - 1) for j in range(lo + 1, hi + 1))
    return float(digamma(hi) - digamma(lo))


def exp_or_none(log_value: float):
    """exp(log_value) when it is a finite positive float, 0.0 for -inf, else None."""
    if log_value == -math.inf:
        return 0.0
    if log_value > 709.0 or log_value < -745.0:
        return None
    return math.exp(log_value)


def format_number(value: Union[int, float]) -> str:
    """Format numbers for reports with 17 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")
