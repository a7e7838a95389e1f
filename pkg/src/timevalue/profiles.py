"""Time-shaped weight functions.

A weight profile says how much a piece of knowledge matters at time ``t``:

* a Gaussian bump (or normal density) peaking when it is most useful,
* a mixture of such bumps when several periods matter,
* a nascent Dirac delta for a value concentrated at one instant,
* an impulse response, zero before a shock and decaying exponentially after,
* plain exponential growth and decay.

Each profile type is callable, so ``profile(t)`` evaluates it and any of them
can be handed to :func:`timevalue.quadrature.integrate`.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from timevalue.core import RateKind, RateLike, rate_value
from timevalue.errors import EndpointSingularity, OutOfDomain
from timevalue.quadrature import integrate

_SQRT_2PI = math.sqrt(2.0 * math.pi)
BETA_TOL = 1e-12


def _positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise OutOfDomain(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class GaussianProfile:
    amplitude: float
    center: float
    width: float

    def __post_init__(self):
        _positive("amplitude", self.amplitude)
        _positive("width", self.width)
        if not math.isfinite(self.center):
            raise OutOfDomain(f"center must be finite, got {self.center!r}")

    def __call__(self, t: float) -> float:
        return gaussian_weight(self, t)


@dataclass(frozen=True)
class NormalDensity:
    mean: float
    variance: float

    def __post_init__(self):
        _positive("variance", self.variance)
        if not math.isfinite(self.mean):
            raise OutOfDomain(f"mean must be finite, got {self.mean!r}")

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def __call__(self, x: float) -> float:
        return normal_density(self, x)


@dataclass(frozen=True)
class BetaDensity:
    alpha: float
    beta: float

    def __post_init__(self):
        _positive("alpha", self.alpha)
        _positive("beta", self.beta)

    @cached_property
    def normalizer(self) -> float:
        return beta_function(self.alpha, self.beta)

    def __call__(self, x: float) -> float:
        return beta_density(self, x)


@dataclass(frozen=True)
class NascentDelta:
    width: float
    center: float = 0.0

    def __post_init__(self):
        _positive("width", self.width)

    def __call__(self, t: float) -> float:
        return nascent_delta(self.width, self.center, t)


@dataclass(frozen=True)
class ImpulseResponse:
    shock_time: float
    decay: float

    def __post_init__(self):
        rate_value(self.decay, RateKind.DECAY)

    def __call__(self, t: float) -> float:
        return impulse_response(self.shock_time, self.decay, t)


Component = Union[GaussianProfile, NormalDensity, BetaDensity]


@dataclass(frozen=True)
class MixtureProfile:
    """Convex combination of Gaussian, normal and beta components.

    ``components`` holds ``(weight, profile)`` pairs; weights are positive and
    sum to 1. Beta components contribute nothing outside ``[0, 1]``.
    """

    components: tuple[tuple[float, Component], ...]

    def __post_init__(self):
        if not self.components:
            raise OutOfDomain("a mixture needs at least one component")
        for w, p in self.components:
            _positive("mixture weight", w)
            if not isinstance(p, (GaussianProfile, NormalDensity, BetaDensity)):
                raise OutOfDomain(f"unsupported mixture component {p!r}")
        total = math.fsum(w for w, _ in self.components)
        if abs(total - 1.0) > 1e-12:
            raise OutOfDomain(f"mixture weights must sum to 1, got {total!r}")

    def __call__(self, t: float) -> float:
        return mixture_weight(self, t)


def make_mixture(components: Sequence[tuple[float, Component]]) -> MixtureProfile:
    return MixtureProfile(tuple((float(w), p) for w, p in components))


def gaussian_weight(p: GaussianProfile, t: float) -> float:
    z = (t - p.center) / p.width
    return p.amplitude * math.exp(-0.5 * z * z)


def normal_density(d: NormalDensity, x: float) -> float:
    z = (x - d.mean) / d.std
    return math.exp(-0.5 * z * z) / (d.std * _SQRT_2PI)


def beta_function(alpha: float, beta: float, tol: float = BETA_TOL) -> float:
    """Beta function as the integral of ``t**(alpha-1) * (1-t)**(beta-1)`` on [0, 1].

    The integral is split at 1/2. On a half whose endpoint exponent is
    negative (shape parameter below 1) the substitution ``t = u**(1/alpha)``
    (mirrored for the upper half) turns the singular integrand into a bounded
    smooth one before quadrature.

    Raises:
        NumericalFailure: if the quadrature does not reach ``tol``.
    """
    _positive("alpha", alpha)
    _positive("beta", beta)
    return _half_beta(alpha, beta, tol / 2) + _half_beta(beta, alpha, tol / 2)


def _half_beta(p: float, q: float, tol: float) -> float:
    # integral over [0, 1/2] of t**(p-1) * (1-t)**(q-1)
    if p >= 1:
        return integrate(lambda t: t ** (p - 1) * (1 - t) ** (q - 1), 0.0, 0.5, tol)
    inv = 1.0 / p
    upper = 0.5**p
    return inv * integrate(lambda u: (1 - u**inv) ** (q - 1), 0.0, upper, tol / inv)


def beta_density(d: BetaDensity, x: float) -> float:
    """Beta density on [0, 1].

    Raises:
        OutOfDomain: for ``x`` outside [0, 1].
        EndpointSingularity: at an endpoint where the density is infinite.
    """
    if not 0.0 <= x <= 1.0:
        raise OutOfDomain(f"beta density is defined on [0, 1], got x={x!r}")
    if (x == 0.0 and d.alpha < 1) or (x == 1.0 and d.beta < 1):
        raise EndpointSingularity(f"beta({d.alpha}, {d.beta}) density is infinite at x={x}")
    return x ** (d.alpha - 1) * (1 - x) ** (d.beta - 1) / d.normalizer


def mixture_weight(m: MixtureProfile, t: float) -> float:
    total = 0.0
    for w, p in m.components:
        if isinstance(p, BetaDensity) and not 0.0 <= t <= 1.0:
            continue
        total += w * p(t)
    return total


def nascent_delta(width: float, center: float, t: float) -> float:
    """Unit-mass Gaussian of standard deviation ``width`` centred at ``center``.

    As ``width`` shrinks this tends to a Dirac delta at ``center``.
    """
    _positive("width", width)
    z = (t - center) / width
    return math.exp(-0.5 * z * z) / (width * _SQRT_2PI)


def impulse_response(shock_time: float, decay: RateLike, t: float) -> float:
    """Zero before ``shock_time``, 1 at the shock, then ``exp(-decay * elapsed)``."""
    lam = rate_value(decay, RateKind.DECAY)
    if t < shock_time:
        return 0.0
    return math.exp(-lam * (t - shock_time))


def exp_growth(x0: float, k: float, t: float) -> float:
    """Solution ``x0 * exp(k t)`` of ``dx/dt = k x``."""
    if k < 0:
        raise OutOfDomain(f"growth rate must be non-negative, got {k!r}")
    if t < 0:
        raise OutOfDomain(f"time must be non-negative, got {t!r}")
    return x0 * math.exp(k * t)


def exp_decay(n0: float, lam: RateLike, t: float) -> float:
    """Solution ``n0 * exp(-lam t)`` of ``dN/dt = -lam N``."""
    lam = rate_value(lam, RateKind.DECAY)
    if t < 0:
        raise OutOfDomain(f"time must be non-negative, got {t!r}")
    return n0 * math.exp(-lam * t)
