"""Recovering rates from values: implied rates and internal rate of return."""

from __future__ import annotations

import math
from dataclasses import dataclass

from timevalue.core import CashFlowStream, Rate, RateKind, make_rate
from timevalue.errors import (
    AxiomViolation,
    EmptyStream,
    NoSignChange,
    NonConvergence,
    NumericalFailure,
    OutOfDomain,
)
from timevalue.money import fv_of_pv, pv_of_stream

IRR_TOL = 1e-12
IRR_MAX_ITER = 1000
_CHECK_RTOL = 1e-12


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise OutOfDomain(f"bracket needs finite lo < hi, got ({self.lo!r}, {self.hi!r})")
        if self.lo <= -1.0:
            raise OutOfDomain(f"bracket lower end must exceed -1, got {self.lo!r}")


DEFAULT_BRACKET = Bracket(-0.9, 1.0)


def _ratio_rate(v_from: float, v_to: float, n: float) -> float:
    for name, v in (("starting value", v_from), ("ending value", v_to), ("periods", n)):
        if not (math.isfinite(v) and v > 0):
            raise OutOfDomain(f"{name} must be positive and finite, got {v!r}")
    return math.expm1(math.log(v_to / v_from) / n)


def implied_rate(pv: float, fv: float, n: float) -> Rate:
    """Per-period interest rate that grows ``pv`` into ``fv`` over ``n`` periods."""
    i = _ratio_rate(pv, fv, n)
    rate = make_rate(i, RateKind.INTEREST)
    if not math.isclose(fv_of_pv(pv, rate, n), fv, rel_tol=_CHECK_RTOL):
        raise NumericalFailure(f"implied rate {i!r} does not reproduce fv={fv!r}")
    return rate


def implied_knowledge_rate(v_from: float, v_to: float, n: float) -> Rate:
    """Knowledge rate ``k`` with ``v_from * (1 + k) ** n == v_to``.

    Raises:
        AxiomViolation: if ``v_to < v_from``; knowledge cannot lose value.
    """
    if v_to < v_from:
        raise AxiomViolation(f"knowledge value fell from {v_from!r} to {v_to!r}")
    return make_rate(max(_ratio_rate(v_from, v_to, n), 0.0), RateKind.KNOWLEDGE)


def irr(
    stream: CashFlowStream,
    bracket: Bracket = DEFAULT_BRACKET,
    tol: float = IRR_TOL,
    max_iter: int = IRR_MAX_ITER,
) -> Rate:
    """Internal rate of return: a rate in ``bracket`` where the stream's NPV is zero.

    Secant steps are taken from the two latest iterates; a bisection step
    replaces any secant step that falls outside the current bracket, and is
    forced whenever two iterations fail to halve the bracket. Convergence
    means ``|NPV(r)| <= tol * sum(|amounts|)``.

    Streams with several sign changes can have several roots. This returns
    one of the roots inside the bracket, with no promise about which.

    Raises:
        EmptyStream: for a stream without flows.
        NoSignChange: if NPV has the same sign at both bracket ends.
        NonConvergence: if ``max_iter`` iterations pass, or the bracket
            shrinks to adjacent floats, without meeting the tolerance.
    """
    if len(stream) == 0:
        raise EmptyStream("IRR needs at least one cash flow")
    target = tol * math.fsum(abs(a) for a in stream.amounts)

    def npv(r: float) -> float:
        return pv_of_stream(stream, r)

    a, b = bracket.lo, bracket.hi
    fa, fb = npv(a), npv(b)
    for x, fx in ((a, fa), (b, fb)):
        if abs(fx) <= target:
            return make_rate(x, RateKind.INTEREST)
    if (fa > 0) == (fb > 0):
        raise NoSignChange("no sign change in bracket")

    x0, f0, x1, f1 = a, fa, b, fb
    widths = [math.inf, math.inf]
    for _ in range(max_iter):
        x = x1 - f1 * (x1 - x0) / (f1 - f0) if f1 != f0 else math.nan
        if not a < x < b or (b - a) > 0.5 * widths[-2]:
            x = 0.5 * (a + b)
        if not a < x < b:
            raise NonConvergence(f"bracket collapsed at {a!r} with NPV {fa!r} above tolerance")
        fx = npv(x)
        if abs(fx) <= target:
            return make_rate(x, RateKind.INTEREST)
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b, fb = x, fx
        x0, f0, x1, f1 = x1, f1, x, fx
        widths.append(b - a)
    raise NonConvergence(f"IRR not found within {max_iter} iterations")
