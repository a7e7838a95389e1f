"""Shared domain types: rates, periods, cash-flow streams and valuation results.

Everything here is an immutable value. Rates carry their kind so that the
kind-specific bound is checked once, at construction::

    >>> make_rate(0.05, RateKind.KNOWLEDGE)
    Rate(value=0.05, kind=<RateKind.KNOWLEDGE: 'knowledge'>)

Functions elsewhere in the package accept either a :class:`Rate` or a bare
float; bare floats are validated against the kind the function expects.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Union

from timevalue.errors import OutOfDomain


class RateKind(enum.Enum):
    INTEREST = "interest"
    KNOWLEDGE = "knowledge"
    GROWTH = "growth"
    DECAY = "decay"


@dataclass(frozen=True)
class Rate:
    """A per-period rate, e.g. ``0.05`` for 5% per period."""

    value: float
    kind: RateKind

    def __post_init__(self):
        _check_rate_bound(self.value, self.kind)

    def __float__(self) -> float:
        return float(self.value)


RateLike = Union[Rate, float, int]


def _check_rate_bound(value: float, kind: RateKind) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise OutOfDomain(f"rate must be a real number, got {value!r}")
    if not math.isfinite(value):
        raise OutOfDomain(f"rate must be finite, got {value!r}")
    if kind is RateKind.INTEREST and value <= -1.0:
        raise OutOfDomain(f"interest rate must exceed -1, got {value!r}")
    if kind in (RateKind.KNOWLEDGE, RateKind.DECAY) and value < 0.0:
        raise OutOfDomain(f"{kind.value} rate must be non-negative, got {value!r}")


def make_rate(value: float, kind: RateKind) -> Rate:
    """Build a :class:`Rate`, raising :class:`OutOfDomain` if the bound fails.

    Interest rates need ``value > -1`` so that ``1 + i`` stays positive and
    fractional powers are defined. Knowledge and decay rates need
    ``value >= 0``. Growth rates accept any finite real.
    """
    return Rate(float(value), kind)


def rate_value(rate: RateLike, kind: RateKind) -> float:
    """Return the numeric value of ``rate`` after checking it against ``kind``.

    A :class:`Rate` of a different kind is accepted as long as its value
    satisfies the bound of ``kind``; the formulas only care about the number.
    """
    value = rate.value if isinstance(rate, Rate) else rate
    _check_rate_bound(value, kind)
    return float(value)


def check_periods(n: float) -> float:
    """Validate a period count (or delay): finite and non-negative.

    Non-integer counts are allowed.
    """
    if not isinstance(n, (int, float)) or isinstance(n, bool):
        raise OutOfDomain(f"periods must be a real number, got {n!r}")
    if not math.isfinite(n) or n < 0:
        raise OutOfDomain(f"periods must be finite and >= 0, got {n!r}")
    return float(n)


def growth_factor(rate: float, n: float) -> float:
    # exp(n * log(1 + r)) treats integer and fractional n the same way
    return math.exp(n * math.log1p(rate))


@dataclass(frozen=True)
class CashFlow:
    time: float
    amount: float

    def __post_init__(self):
        check_periods(self.time)
        if not math.isfinite(self.amount):
            raise OutOfDomain(f"amount must be finite, got {self.amount!r}")


@dataclass(frozen=True)
class CashFlowStream:
    """Cash flows sorted by time. Flows sharing a time are kept separately."""

    flows: tuple[CashFlow, ...] = ()

    def __post_init__(self):
        times = [f.time for f in self.flows]
        if any(a > b for a, b in zip(times, times[1:])):
            raise OutOfDomain("cash flows must be sorted by time")

    def __iter__(self) -> Iterator[CashFlow]:
        return iter(self.flows)

    def __len__(self) -> int:
        return len(self.flows)

    def __add__(self, other: CashFlowStream) -> CashFlowStream:
        return make_stream([(f.time, f.amount) for f in (*self.flows, *other.flows)])

    @property
    def amounts(self) -> list[float]:
        return [f.amount for f in self.flows]


def make_stream(pairs: Iterable[tuple[float, float]]) -> CashFlowStream:
    """Build a time-sorted :class:`CashFlowStream` from ``(time, amount)`` pairs.

    The sort is stable, so flows at equal times keep their input order.
    An empty input gives an empty stream.
    """
    flows = [CashFlow(float(t), float(a)) for t, a in pairs]
    flows.sort(key=lambda f: f.time)
    return CashFlowStream(tuple(flows))


@dataclass(frozen=True)
class DivergenceCertificate:
    """Finite witness that ``base * (1 + k)**n`` grows without bound.

    ``crossing_period`` is the smallest integer ``N`` with
    ``base * (1 + k)**N > threshold``. Construction fails if the witness does
    not check out.
    """

    threshold: float
    crossing_period: int
    base_value: float
    rate: Rate

    def __post_init__(self):
        k = self.rate.value
        if self.rate.kind is not RateKind.KNOWLEDGE or not k > 0:
            raise OutOfDomain("certificate needs a strictly positive knowledge rate")
        if not (self.threshold > 0 and self.base_value > 0):
            raise OutOfDomain("threshold and base value must be positive")
        n = self.crossing_period
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise OutOfDomain(f"crossing period must be a non-negative int, got {n!r}")
        if not self.value_at(n) > self.threshold:
            raise OutOfDomain(f"value at period {n} does not exceed the threshold")
        if n > 0 and self.value_at(n - 1) > self.threshold:
            raise OutOfDomain(f"period {n} is not the first crossing")

    def value_at(self, n: int) -> float:
        return self.base_value * growth_factor(self.rate.value, n)


@dataclass(frozen=True)
class Finite:
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise OutOfDomain(f"finite result must be finite, got {self.value!r}")


@dataclass(frozen=True)
class Divergent:
    certificate: DivergenceCertificate


ValuationResult = Union[Finite, Divergent]
