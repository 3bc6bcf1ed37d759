import pytest
from hypothesis import given, settings

from frame_noise.aggregate import worst_case
from frame_noise.baseline import (
    frame_direction_peak,
    naive_peak_sum,
    pessimism_reduction,
    pruned_envelope,
)
from frame_noise.errors import EmptyInput, ZeroBaseline
from frame_noise.model import make_case

from conftest import chain_cases


def test_naive(example1):
    assert naive_peak_sum(example1.attackers).w == 5
    assert naive_peak_sum(make_case("o", [(1, 2, -0.4, 0, 1)]).attackers).w == 0.4
    assert naive_peak_sum(make_case("z", [(1, 2, 0, 0, 1)] * 3).attackers).w == 0
    with pytest.raises(EmptyInput):
        naive_peak_sum([])


def test_pruned_example(example1):
    res = pruned_envelope(example1.attackers)
    assert res.w == pytest.approx(3) and res.kept == {2} and res.direction == "min"
    res = pruned_envelope(example1.attackers, "max")
    assert res.w == pytest.approx(2) and res.kept == {1}
    with pytest.raises(EmptyInput):
        pruned_envelope([])
    with pytest.raises(ValueError):
        pruned_envelope(example1.attackers, "up")


def test_max_direction_cancellation(example1):
    r = worst_case(example1)
    frame = frame_direction_peak(r, "max")
    pruned = pruned_envelope(example1.attackers, "max").w
    assert frame == pytest.approx(1) and pruned == pytest.approx(2)
    assert pessimism_reduction(pruned, frame) == pytest.approx(50)
    assert frame_direction_peak(r, "min") == pytest.approx(3)
    assert frame_direction_peak(r) == r.w_star


def test_pessimism_reduction():
    assert pessimism_reduction(0.4144, 0.3398) == pytest.approx(18.0, abs=0.05)
    assert pessimism_reduction(1.7, 1.7) == 0
    assert pessimism_reduction(2, 1) == 50
    with pytest.raises(ZeroBaseline):
        pessimism_reduction(0, 0)


@settings(max_examples=150, deadline=None)
@given(chain_cases())
def test_dominance_chain(case):
    w = worst_case(case).w_star
    pruned = pruned_envelope(case.attackers).w
    naive = naive_peak_sum(case.attackers).w
    assert w <= pruned + 1e-9 <= naive + 2e-9


@settings(max_examples=60, deadline=None)
@given(chain_cases(sign=1))
def test_single_polarity_is_tight(case):
    assert worst_case(case).w_star == pytest.approx(pruned_envelope(case.attackers).w, abs=1e-9)


def test_coincident_peaks_make_pruned_equal_naive():
    case = make_case("c", [(1, 2, 1, 0, 0), (2, 3, 0.5, -1, -1), (0.5, 4, 0.25, 0.5, 0.5)])
    assert pruned_envelope(case.attackers).w == pytest.approx(naive_peak_sum(case.attackers).w)
