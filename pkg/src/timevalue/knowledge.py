"""Knowledge-side valuation.

Knowledge never loses value, so its weight function is a compounding factor
``(1 + k) ** n`` with ``k >= 0``, applied whichever way in time a value is
moved. With ``k > 0`` the transported value grows without bound; that
divergence is reported as a :class:`~timevalue.core.Divergent` result carrying a
finite, checkable certificate instead of a floating-point infinity.
"""

from __future__ import annotations

import enum
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, replace

from timevalue.core import (
    DivergenceCertificate,
    Divergent,
    Finite,
    RateKind,
    RateLike,
    ValuationResult,
    check_periods,
    growth_factor,
    make_rate,
    rate_value,
)
from timevalue.errors import EmptyInput, Inconclusive, OutOfDomain

DEFAULT_INDIFFERENCE_TOL = 1e-9


class Epoch(enum.Enum):
    PAST = "past"
    PRESENT = "present"
    FUTURE = "future"


@dataclass(frozen=True)
class KnowledgeValue:
    magnitude: float
    epoch: Epoch

    def __post_init__(self):
        if not (math.isfinite(self.magnitude) and self.magnitude > 0):
            raise OutOfDomain(f"knowledge value must be positive and finite, got {self.magnitude!r}")


def weight(k: RateLike, n: float) -> float:
    """Knowledge weight ``(1 + k) ** n``; never below 1."""
    k = rate_value(k, RateKind.KNOWLEDGE)
    return growth_factor(k, check_periods(n))


def transport_value(v: KnowledgeValue, k: RateLike, n: float, target: Epoch) -> KnowledgeValue:
    """Move a knowledge value ``n`` periods to ``target``.

    Both directions multiply by ``weight(k, n)``: moving from future to
    present compounds just as moving from present to future does. A round
    trip therefore inflates the magnitude whenever ``k > 0`` and ``n > 0``.
    """
    return replace(v, magnitude=v.magnitude * weight(k, n), epoch=target)


def limit_probe(base: float, k: RateLike, threshold: float, n_max: int) -> ValuationResult:
    """Decide whether ``base * (1 + k) ** n`` diverges, with a finite witness.

    Parameters:
        base: starting value, > 0
        k: knowledge rate, >= 0
        threshold: level ``M`` the sequence must exceed, > 0
        n_max: largest period the probe may use as a witness, >= 1

    Returns:
        ``Finite(base)`` when ``k == 0`` (the sequence is constant), otherwise
        ``Divergent`` with the first period ``N`` at which the sequence exceeds
        ``threshold``.

    Raises:
        Inconclusive: if ``N > n_max``; the error carries the value at ``n_max``.
    """
    k = rate_value(k, RateKind.KNOWLEDGE)
    if not (math.isfinite(base) and base > 0):
        raise OutOfDomain(f"base must be positive and finite, got {base!r}")
    if not (math.isfinite(threshold) and threshold > 0):
        raise OutOfDomain(f"threshold must be positive and finite, got {threshold!r}")
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 1:
        raise OutOfDomain(f"n_max must be an integer >= 1, got {n_max!r}")
    if k == 0:
        return Finite(base)

    def value_at(n: int) -> float:
        return base * growth_factor(k, n)

    if base > threshold:
        n = 0
    else:
        n = max(1, math.ceil(math.log(threshold / base) / math.log1p(k)))
        # the logarithm can be off by one near the boundary; settle on the
        # exact first crossing under value_at
        while n > 1 and value_at(n - 1) > threshold:
            n -= 1
        while value_at(n) <= threshold:
            n += 1
    if n > n_max:
        raise Inconclusive(value_at(n_max), n_max)
    cert = DivergenceCertificate(
        threshold=float(threshold),
        crossing_period=n,
        base_value=float(base),
        rate=make_rate(k, RateKind.KNOWLEDGE),
    )
    return Divergent(cert)


def indifference_select(
    values: Sequence[ValuationResult],
    tol: float = DEFAULT_INDIFFERENCE_TOL,
    seed: int = 0,
) -> int:
    """Pick uniformly at random among the options worth the most.

    If any option diverges, every divergent option is a candidate: infinite
    values cannot be ranked against each other. Otherwise the candidates are
    the finite options within relative ``tol`` of the largest one.

    The draw uses :class:`random.Random` (Mersenne Twister) seeded with
    ``seed``, so the same inputs always return the same index.
    """
    if not values:
        raise EmptyInput("nothing to select from")
    if tol < 0:
        raise OutOfDomain(f"tolerance must be non-negative, got {tol!r}")
    candidates = [j for j, v in enumerate(values) if isinstance(v, Divergent)]
    if not candidates:
        best = max(v.value for v in values)
        candidates = [j for j, v in enumerate(values) if abs(v.value - best) <= tol * abs(best)]
    return candidates[random.Random(seed).randrange(len(candidates))]
