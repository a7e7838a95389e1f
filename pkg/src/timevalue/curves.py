"""Sampled curve tables for the standard figures and for ad-hoc profile specs.

A :class:`CurveTable` is a ``t`` column plus one column per named series. It
serialises to CSV using the shortest decimal that round-trips each double, so
output is byte-stable, and to a bare-bones SVG line plot for eyeballing.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from timevalue import knowledge, money, profiles
from timevalue.errors import OutOfDomain

Series = Callable[[float], float]


@dataclass(frozen=True)
class CurveTable:
    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not self.header or self.header[0] != "t":
            raise OutOfDomain("first column must be 't'")
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise OutOfDomain(f"row {row!r} does not have {width} columns")
            if not all(math.isfinite(v) for v in row):
                raise OutOfDomain(f"row {row!r} contains a non-finite value")
        ts = [row[0] for row in self.rows]
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise OutOfDomain("t must be strictly increasing")

    def column(self, name: str) -> list[float]:
        j = self.header.index(name)
        return [row[j] for row in self.rows]

    def to_csv(self) -> str:
        lines = [",".join(self.header)]
        lines.extend(",".join(repr(float(v)) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> CurveTable:
        lines = text.strip("\n").split("\n")
        header = tuple(lines[0].split(","))
        rows = tuple(tuple(float(v) for v in line.split(",")) for line in lines[1:])
        return cls(header, rows)

    def to_svg(self, width: int = 640, height: int = 400, margin: int = 40) -> str:
        colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
        ts = self.column("t")
        ys = [v for row in self.rows for v in row[1:]]
        t0, t1 = ts[0], ts[-1]
        y0, y1 = min(ys), max(ys)
        if y1 == y0:
            y0, y1 = y0 - 1.0, y1 + 1.0
        if t1 == t0:
            t1 = t0 + 1.0

        def px(t: float) -> float:
            return margin + (t - t0) / (t1 - t0) * (width - 2 * margin)

        def py(y: float) -> float:
            return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin)

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<rect x="{margin}" y="{margin}" width="{width - 2 * margin}" '
            f'height="{height - 2 * margin}" fill="none" stroke="#999"/>',
        ]
        for j, name in enumerate(self.header[1:], start=1):
            points = " ".join(f"{px(row[0]):.2f},{py(row[j]):.2f}" for row in self.rows)
            color = colors[(j - 1) % len(colors)]
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
            out.append(
                f'<text x="{width - margin + 4 - 120}" y="{margin + 14 * j}" '
                f'font-size="12" fill="{color}">{name}</text>'
            )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def parse_range(text: str) -> tuple[float, float, int]:
    """Parse ``a:b:steps`` into a grid specification."""
    parts = text.split(":")
    if len(parts) != 3:
        raise OutOfDomain(f"range must look like a:b:steps, got {text!r}")
    try:
        a, b, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise OutOfDomain(f"range must look like a:b:steps, got {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise OutOfDomain(f"range needs finite a < b, got {text!r}")
    if steps < 2:
        raise OutOfDomain(f"range needs at least 2 steps, got {steps}")
    return a, b, steps


def grid(a: float, b: float, steps: int) -> list[float]:
    ts = [a + (b - a) * j / (steps - 1) for j in range(steps)]
    ts[-1] = b
    return ts


def tabulate(series: Mapping[str, Series], ts: Sequence[float]) -> CurveTable:
    header = ("t", *series)
    fns = list(series.values())
    rows = tuple((t, *(float(f(t)) for f in fns)) for t in ts)
    return CurveTable(header, rows)


# Figure defaults. The published figures carry no axis values, so these are
# chosen to show each shape clearly.
FIGURE_DEFAULTS: dict[int, dict[str, float]] = {
    1: {"rate": 0.05},
    2: {"k": 0.1},
    3: {"k": 0.1, "lam": 0.1, "x0": 1.0, "n0": 1.0},
    4: {"a": 1.0, "b": 15.0, "c": 3.0},
    5: {"b1": 10.0, "b2": 20.0, "c": 2.0, "w": 0.5},
    6: {"eps": 0.05, "center": 15.0},
    7: {"shock": 10.0, "lam": 0.5},
}

FIGURE_RANGES: dict[int, str] = {
    1: "0:30:301",
    2: "0:50:501",
    3: "0:30:301",
    4: "0:30:301",
    5: "0:30:301",
    6: "0:30:301",
    7: "0:30:301",
}

FIGURE_TITLES: dict[int, str] = {
    1: "Time value of money: discounting and compounding",
    2: "Discount functions: hyperbolic and exponential",
    3: "Exponential growth and decay",
    4: "Gaussian weight function",
    5: "Multi-modal weight function",
    6: "Impulse function (nascent delta)",
    7: "Impulse response with a jump at the shock",
}


def figure_series(figure: int, overrides: Mapping[str, float] | None = None) -> dict[str, Series]:
    """Named series for one of the seven standard figures."""
    if figure not in FIGURE_DEFAULTS:
        raise OutOfDomain(f"figure must be one of 1..7, got {figure!r}")
    params = dict(FIGURE_DEFAULTS[figure])
    for key, value in (overrides or {}).items():
        if key not in params:
            raise OutOfDomain(f"figure {figure} has no parameter {key!r}; known: {', '.join(params)}")
        params[key] = float(value)
    p = params

    if figure == 1:
        return {
            "discount": lambda t: money.discount_factor(p["rate"], t).value,
            "compound": lambda t: money.fv_of_pv(1.0, p["rate"], t),
        }
    if figure == 2:
        return {
            "hyperbolic": lambda t: money.discount_factor_hyperbolic(p["k"], t).value,
            "exponential": lambda t: money.discount_factor_exp_continuous(p["k"], t).value,
        }
    if figure == 3:
        return {
            "growth": lambda t: profiles.exp_growth(p["x0"], p["k"], t),
            "decay": lambda t: profiles.exp_decay(p["n0"], p["lam"], t),
        }
    if figure == 4:
        return {"gaussian": profiles.GaussianProfile(p["a"], p["b"], p["c"])}
    if figure == 5:
        var = p["c"] ** 2
        mix = profiles.make_mixture(
            [
                (p["w"], profiles.NormalDensity(p["b1"], var)),
                (1.0 - p["w"], profiles.NormalDensity(p["b2"], var)),
            ]
        )
        return {"mixture": mix}
    if figure == 6:
        return {"delta": profiles.NascentDelta(p["eps"], p["center"])}
    return {"response": profiles.ImpulseResponse(p["shock"], p["lam"])}


def _get(spec: Mapping[str, Any], key: str, default: float | None = None) -> float:
    if key not in spec:
        if default is None:
            raise OutOfDomain(f"profile {spec.get('type')!r} needs {key!r}")
        return default
    value = spec[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise OutOfDomain(f"{key!r} must be a number, got {value!r}")
    return float(value)


def _component(spec: Mapping[str, Any]) -> profiles.Component:
    kind = spec.get("type")
    if kind == "gaussian":
        return profiles.GaussianProfile(_get(spec, "a", 1.0), _get(spec, "b"), _get(spec, "c"))
    if kind == "normal":
        return profiles.NormalDensity(_get(spec, "mean"), _get(spec, "variance"))
    if kind == "beta":
        return profiles.BetaDensity(_get(spec, "alpha"), _get(spec, "beta"))
    raise OutOfDomain(f"unknown mixture component type {kind!r}")


def profile_series(spec: Mapping[str, Any]) -> Series:
    """Build an evaluator from a JSON-style profile description.

    ``spec["type"]`` selects the function; the remaining keys are its
    parameters, e.g. ``{"type": "gaussian", "a": 1, "b": 15, "c": 3}``.
    """
    if not isinstance(spec, Mapping):
        raise OutOfDomain(f"profile spec must be an object, got {spec!r}")
    kind = spec.get("type")
    if kind == "discount":
        rate = _get(spec, "rate")
        return lambda t: money.discount_factor(rate, t).value
    if kind == "discount_growth":
        rate, growth = _get(spec, "rate"), _get(spec, "growth")
        return lambda t: money.discount_factor_growth(rate, growth, t).value
    if kind == "compound":
        rate = _get(spec, "rate")
        return lambda t: money.fv_of_pv(1.0, rate, t)
    if kind == "hyperbolic":
        k = _get(spec, "k")
        return lambda t: money.discount_factor_hyperbolic(k, t).value
    if kind == "exponential":
        k = _get(spec, "k")
        return lambda t: money.discount_factor_exp_continuous(k, t).value
    if kind == "knowledge_weight":
        k = _get(spec, "k")
        return lambda t: knowledge.weight(k, t)
    if kind in ("gaussian", "normal"):
        return _component(spec)
    if kind == "beta":
        # zero outside the support, like a beta component inside a mixture
        return profiles.make_mixture([(1.0, _component(spec))])
    if kind == "mixture":
        parts = spec.get("components")
        if not isinstance(parts, list) or not parts:
            raise OutOfDomain("mixture needs a non-empty 'components' list")
        return profiles.make_mixture([(_get(c, "weight"), _component(c)) for c in parts])
    if kind == "delta":
        return profiles.NascentDelta(_get(spec, "width"), _get(spec, "center", 0.0))
    if kind == "impulse_response":
        return profiles.ImpulseResponse(_get(spec, "shock_time"), _get(spec, "decay"))
    if kind == "exp_growth":
        x0, k = _get(spec, "x0", 1.0), _get(spec, "k")
        return lambda t: profiles.exp_growth(x0, k, t)
    if kind == "exp_decay":
        n0, lam = _get(spec, "n0", 1.0), _get(spec, "lam")
        return lambda t: profiles.exp_decay(n0, lam, t)
    raise OutOfDomain(f"unknown profile type {kind!r}")


def spec_series(text: str) -> dict[str, Series]:
    """Parse a JSON profile spec (one object or a list) into named series."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OutOfDomain(f"profile spec is not valid JSON: {exc}") from None
    items = data if isinstance(data, list) else [data]
    if not items:
        raise OutOfDomain("profile spec list is empty")
    series: dict[str, Series] = {}
    for idx, item in enumerate(items):
        if not isinstance(item, Mapping):
            raise OutOfDomain(f"profile spec entry {idx} must be an object")
        name = str(item.get("name", item.get("type", f"series{idx}")))
        if name == "t" or name in series or "," in name:
            raise OutOfDomain(f"series name {name!r} is reserved, repeated or contains a comma")
        series[name] = profile_series({k: v for k, v in item.items() if k != "name"})
    return series
