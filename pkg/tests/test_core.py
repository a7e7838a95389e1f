import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from timevalue import (
    DivergenceCertificate,
    Divergent,
    Finite,
    OutOfDomain,
    Rate,
    RateKind,
    check_periods,
    fv_of_pv,
    make_rate,
    make_stream,
    pv_of_stream,
)

finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6)

BOUNDS = {
    RateKind.INTEREST: lambda v: v > -1,
    RateKind.KNOWLEDGE: lambda v: v >= 0,
    RateKind.DECAY: lambda v: v >= 0,
    RateKind.GROWTH: lambda v: True,
}


def test_knowledge_rate_boundary_zero():
    assert make_rate(0.0, RateKind.KNOWLEDGE).value == 0.0


def test_negative_knowledge_rate_rejected():
    with pytest.raises(OutOfDomain):
        make_rate(-0.02, RateKind.KNOWLEDGE)


def test_negative_interest_above_minus_one_allowed():
    r = make_rate(-0.5, RateKind.INTEREST)
    assert r.value == -0.5
    assert fv_of_pv(100, r, 1) == pytest.approx(50, rel=1e-12)


@pytest.mark.parametrize("value", [-1.0, -1.5, math.inf, math.nan])
def test_interest_rate_out_of_domain(value):
    with pytest.raises(OutOfDomain):
        make_rate(value, RateKind.INTEREST)


def test_negative_decay_rejected():
    with pytest.raises(OutOfDomain):
        make_rate(-1e-9, RateKind.DECAY)


@given(finite, st.sampled_from(list(RateKind)))
def test_constructed_rates_satisfy_kind_bound(value, kind):
    try:
        r = make_rate(value, kind)
    except OutOfDomain:
        assert not BOUNDS[kind](value)
    else:
        assert BOUNDS[kind](r.value)


def test_rate_is_immutable():
    r = make_rate(0.1, RateKind.INTEREST)
    with pytest.raises(AttributeError):
        r.value = 0.2


@pytest.mark.parametrize("n", [-1.0, math.inf, math.nan, "3"])
def test_bad_periods(n):
    with pytest.raises(OutOfDomain):
        check_periods(n)


def test_fractional_periods_accepted():
    assert check_periods(2.5) == 2.5


def test_stream_sorted():
    s = make_stream([(2, 100), (1, 100)])
    assert [(f.time, f.amount) for f in s] == [(1, 100), (2, 100)]


def test_empty_stream():
    s = make_stream([])
    assert len(s) == 0
    assert pv_of_stream(s, 0.1) == 0


def test_equal_times_kept_and_summed():
    s = make_stream([(1, 100), (1, -40)])
    assert len(s) == 2
    assert pv_of_stream(s, 0.0) == 60


@pytest.mark.parametrize("pair", [(-1, 5), (math.inf, 5), (1, math.nan)])
def test_stream_rejects_bad_entries(pair):
    with pytest.raises(OutOfDomain):
        make_stream([pair])


@given(st.lists(st.tuples(st.floats(0, 1e3), finite), max_size=30), st.randoms())
def test_make_stream_idempotent_under_shuffle(pairs, rnd):
    shuffled = list(pairs)
    rnd.shuffle(shuffled)
    a = sorted((f.time, f.amount) for f in make_stream(pairs))
    b = sorted((f.time, f.amount) for f in make_stream(shuffled))
    assert a == b
    assert [f.time for f in make_stream(shuffled)] == [f.time for f in make_stream(pairs)]


def test_stream_concatenation():
    a = make_stream([(3, 1.0), (0, 2.0)])
    b = make_stream([(1, 5.0)])
    assert [f.time for f in a + b] == [0, 1, 3]


def test_certificate_validates_minimality():
    k = make_rate(0.01, RateKind.KNOWLEDGE)
    DivergenceCertificate(1e6, 1389, 1.0, k)
    with pytest.raises(OutOfDomain):
        DivergenceCertificate(1e6, 1390, 1.0, k)
    with pytest.raises(OutOfDomain):
        DivergenceCertificate(1e6, 1388, 1.0, k)


def test_certificate_needs_positive_knowledge_rate():
    with pytest.raises(OutOfDomain):
        DivergenceCertificate(1.0, 1, 1.0, make_rate(0.0, RateKind.KNOWLEDGE))
    with pytest.raises(OutOfDomain):
        DivergenceCertificate(1.0, 1, 1.0, Rate(0.5, RateKind.INTEREST))


def test_results_are_exclusive():
    cert = DivergenceCertificate(10.0, 1, 8.0, make_rate(0.5, RateKind.KNOWLEDGE))
    for r in (Finite(1.0), Divergent(cert)):
        assert isinstance(r, Finite) != isinstance(r, Divergent)


def test_finite_rejects_infinity():
    with pytest.raises(OutOfDomain):
        Finite(math.inf)
