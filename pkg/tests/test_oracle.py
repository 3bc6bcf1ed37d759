import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from frame_noise.aggregate import worst_case
from frame_noise.errors import CombinationBudgetExceeded, LengthMismatch
from frame_noise.model import composite, make_case, validate
from frame_noise.oracle import composite_peak, grid_search, lipschitz_bound, verify, window_grid

from conftest import attacker_params, chain_cases


def test_composite_peak_examples(example1):
    assert composite_peak(example1.attackers, (1, 2)) == pytest.approx((5, -3))
    assert composite_peak(example1.attackers, (3, 0)) == pytest.approx((3, -3))
    att = validate((1.5, 4, -0.7, 0, 2))
    assert composite_peak([att], (1.2,)) == pytest.approx((2.7, -0.7))


def test_composite_peak_length_mismatch(example1):
    with pytest.raises(LengthMismatch):
        composite_peak(example1.attackers, (1,))


@settings(max_examples=60, deadline=None)
@given(chain_cases())
def test_composite_peak_matches_dense_sampling(case):
    s = [(att.a + att.b) / 2 for att in case.attackers]
    t_pk, v_pk = composite_peak(case.attackers, s)
    ts = np.linspace(min(s) - 1, max(x + att.e for x, att in zip(s, case.attackers)) + 1, 4001)
    dense = composite(case.attackers, s, ts)
    assert abs(v_pk) >= np.abs(dense).max() - 1e-9
    assert composite(case.attackers, s, t_pk) == pytest.approx(v_pk, abs=1e-9)


def test_window_grid_includes_endpoints():
    att = validate((1, 2, 1, 0.0, 1.0))
    g = window_grid(att, 0.3)
    assert g[0] == 0.0 and g[-1] == 1.0
    assert np.allclose(g, [0, 0.3, 0.6, 0.9, 1.0])
    assert list(window_grid(validate((1, 2, 1, 2, 2)), 0.1)) == [2]
    assert np.allclose(window_grid(validate((1, 2, 1, 0, 1)), 0.25), [0, 0.25, 0.5, 0.75, 1])


def test_grid_search_example(example1):
    w, s, combos = grid_search(example1.attackers, 0.5)
    assert w == pytest.approx(3)
    assert combos == 25
    assert abs(composite_peak(example1.attackers, s)[1]) == pytest.approx(3)


def test_grid_search_matches_itertools(example1):
    w, _, _ = grid_search(example1.attackers, 0.5)
    grids = [window_grid(att, 0.5) for att in example1.attackers]
    brute = max(abs(composite_peak(example1.attackers, s)[1]) for s in itertools.product(*grids))
    assert w == brute


def test_grid_search_forced_alignment():
    case = make_case("f", [(2, 3, 2, 1, 1), (3, 6, -3, 2, 2)])
    w, s, combos = grid_search(case.attackers, 0.1)
    assert combos == 1 and s == (1, 2)
    assert w == abs(composite_peak(case.attackers, (1, 2))[1])


@given(attacker_params(max_width=1.0))
def test_grid_search_single(params):
    att = validate(params)
    w, _, _ = grid_search([att], 0.37)
    assert w == pytest.approx(abs(att.m), abs=1e-12)


def test_budget_guard():
    case = make_case("big", [(1, 2, 1, 0, 10)] * 6)
    with pytest.raises(CombinationBudgetExceeded):
        grid_search(case.attackers, 0.01)
    with pytest.raises(ValueError):
        grid_search(case.attackers, 0.0)


def test_verify_example(example1):
    rep = verify(example1, worst_case(example1), 0.25)
    assert rep.achieved and rep.bounded and rep.ok
    assert abs(rep.gap) <= 1e-9
    assert rep.combinations_evaluated == 81


def test_verify_single_gap_zero():
    case = make_case("one", [(0.7, 1.9, -1.3, 0.2, 1.1)])
    rep = verify(case, worst_case(case), 0.2)
    assert rep.gap == 0.0


def test_verify_detects_wrong_w(example1):
    import dataclasses

    bad = dataclasses.replace(worst_case(example1), w_star=3.5)
    rep = verify(example1, bad, 0.25)
    assert not rep.achieved and not rep.ok
    low = dataclasses.replace(worst_case(example1), w_star=2.5)
    assert not verify(example1, low, 0.25).bounded


@settings(max_examples=40, deadline=None)
@given(chain_cases(n_max=3, max_width=0.5))
def test_soundness_and_tightness(case):
    r = worst_case(case)
    rep = verify(case, r, 0.05)
    assert rep.achieved
    assert rep.oracle_w <= r.w_star + 1e-9
    assert rep.gap <= lipschitz_bound(case.attackers, 0.05) + 1e-9


def test_verify_deterministic(example1):
    r = worst_case(example1)
    assert verify(example1, r, 0.1) == verify(example1, r, 0.1)
