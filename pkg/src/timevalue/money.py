"""Time value of money: compounding, discounting and discount functions.

The discrete transforms work with a per-period interest rate ``i`` and a
(possibly fractional) number of periods ``n``. The continuous-time models
take a discount parameter ``k`` and a delay ``D``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from timevalue.core import (
    CashFlowStream,
    RateKind,
    RateLike,
    check_periods,
    growth_factor,
    rate_value,
)
from timevalue.errors import OutOfDomain


@dataclass(frozen=True)
class DiscountFactor:
    """Multiplier turning a future amount into a present amount.

    ``sensible`` is False only for growth-adjusted factors whose growth rate
    exceeds the interest rate; the value is still returned in that case.
    """

    value: float
    sensible: bool = True

    def __float__(self) -> float:
        return self.value


def fv_of_pv(pv: float, i: RateLike, n: float) -> float:
    """Compound ``pv`` forward ``n`` periods at rate ``i``."""
    i = rate_value(i, RateKind.INTEREST)
    return pv * growth_factor(i, check_periods(n))


def pv_of_fv(fv: float, i: RateLike, n: float) -> float:
    """Discount ``fv``, received ``n`` periods from now, back to the present."""
    i = rate_value(i, RateKind.INTEREST)
    return fv / growth_factor(i, check_periods(n))


def pv_of_stream(stream: CashFlowStream, i: RateLike) -> float:
    """Present value of every flow in ``stream``; zero for an empty stream.

    Flows sharing a time are summed before discounting.
    """
    i = rate_value(i, RateKind.INTEREST)
    by_time: dict[float, float] = {}
    for flow in stream:
        by_time[flow.time] = by_time.get(flow.time, 0.0) + flow.amount
    return math.fsum(a / growth_factor(i, t) for t, a in by_time.items())


def discount_factor(i: RateLike, n: float) -> DiscountFactor:
    """``(1 + i) ** -n``; at most 1 whenever ``i >= 0``."""
    i = rate_value(i, RateKind.INTEREST)
    return DiscountFactor(1.0 / growth_factor(i, check_periods(n)))


def discount_factor_growth(i: RateLike, g: RateLike, n: float) -> DiscountFactor:
    """Growth-adjusted discount factor ``((1 + g) / (1 + i)) ** n``.

    A growth rate above the interest rate gives a factor above one for
    ``n > 0``. That is still returned, but flagged ``sensible=False``.
    """
    i = rate_value(i, RateKind.INTEREST)
    g = rate_value(g, RateKind.GROWTH)
    if g <= -1.0:
        raise OutOfDomain(f"growth rate must exceed -1, got {g!r}")
    n = check_periods(n)
    value = growth_factor(g, n) / growth_factor(i, n)
    return DiscountFactor(value, sensible=g <= i)


def discount_factor_hyperbolic(k: RateLike, delay: float) -> DiscountFactor:
    """Hyperbolic discount factor ``1 / (1 + k * delay)``."""
    k = rate_value(k, RateKind.DECAY)
    # exp(-log1p(x)) avoids rounding 1 + x, which could otherwise put the
    # result one ulp below exp(-x) for tiny x
    return DiscountFactor(math.exp(-math.log1p(k * check_periods(delay))))


def discount_factor_exp_continuous(k: RateLike, delay: float) -> DiscountFactor:
    """Continuous exponential discount factor ``exp(-k * delay)``."""
    k = rate_value(k, RateKind.DECAY)
    return DiscountFactor(math.exp(-k * check_periods(delay)))
