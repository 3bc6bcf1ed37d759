import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from frame_noise.bench import (
    CSV_HEADER,
    GenConfig,
    boxplot_stats,
    gen_case,
    gen_corpus,
    mann_whitney_u,
    run_corpus,
)
from frame_noise.errors import EmptyInput, EmptySample
from frame_noise.model import make_case, validate
from frame_noise.oracle import composite_peak

from conftest import THETA1, THETA2


def brute_mwu(a, b):
    """Two-sided exact p by enumerating every split of the pooled midranks."""
    pooled = np.concatenate([a, b])
    ranks = stats.rankdata(pooled)
    k = len(a)
    u_obs = ranks[:k].sum() - k * (k + 1) / 2
    us = [ranks[list(c)].sum() - k * (k + 1) / 2 for c in itertools.combinations(range(len(pooled)), k)]
    us = np.array(us)
    low = np.mean(us <= u_obs + 1e-9)
    high = np.mean(us >= u_obs - 1e-9)
    return u_obs, min(1.0, 2 * min(low, high))


def test_mwu_small_exact():
    u, p = mann_whitney_u([1, 2, 3], [4, 5, 6])
    assert u == 0
    assert p == pytest.approx(0.1, abs=1e-12)
    assert brute_mwu(np.array([1, 2, 3.0]), np.array([4, 5, 6.0])) == pytest.approx((0, 0.1))


def test_mwu_identical_samples():
    _, p = mann_whitney_u([1, 2, 3, 4], [1, 2, 3, 4])
    assert p >= 0.99
    _, p = mann_whitney_u(list(range(20)), list(range(20)))
    assert p >= 0.99


def test_mwu_separated_large():
    u, p = mann_whitney_u(list(range(1, 21)), list(range(31, 51)))
    assert u == 0 and p < 0.001
    ref = stats.mannwhitneyu(range(1, 21), range(31, 51), alternative="two-sided", method="asymptotic")
    assert p == pytest.approx(ref.pvalue, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(0, 6), min_size=1, max_size=6),
    st.lists(st.integers(0, 6), min_size=1, max_size=6),
)
def test_mwu_exact_matches_enumeration_with_ties(a, b):
    u, p = mann_whitney_u(a, b)
    # enumerate over the smaller sample so the reference matches the statistic used
    if len(a) <= len(b):
        u_ref, p_ref = brute_mwu(np.array(a, float), np.array(b, float))
    else:
        u2, p_ref = brute_mwu(np.array(b, float), np.array(a, float))
        u_ref = len(a) * len(b) - u2
    assert u == pytest.approx(u_ref)
    assert p == pytest.approx(p_ref, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.floats(0, 10), min_size=9, max_size=40),
    st.lists(st.floats(0, 10), min_size=9, max_size=40),
)
def test_mwu_normal_matches_scipy(a, b):
    u, p = mann_whitney_u(a, b)
    ref = stats.mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    assert u == pytest.approx(ref.statistic)
    assert p == pytest.approx(ref.pvalue, rel=1e-7, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(0, 10), min_size=1, max_size=15), st.lists(st.floats(0, 10), min_size=1, max_size=15))
def test_mwu_symmetric_p(a, b):
    assert mann_whitney_u(a, b)[1] == pytest.approx(mann_whitney_u(b, a)[1], abs=1e-12)


def test_mwu_empty():
    with pytest.raises(EmptySample):
        mann_whitney_u([], [1])


def test_boxplot():
    assert boxplot_stats([0, 10, 20, 30, 40]) == (0, 10, 20, 30, 40)
    assert boxplot_stats([1, 2, 3, 4]) == pytest.approx((1, 1.75, 2.5, 3.25, 4))
    assert boxplot_stats([7.5]) == (7.5,) * 5
    with pytest.raises(EmptySample):
        boxplot_stats([])


def test_gen_deterministic():
    cfg = GenConfig(seed=42)
    assert gen_case(cfg, 0) == gen_case(cfg, 0)
    assert gen_case(cfg, 0) != gen_case(cfg, 1)
    assert gen_case(GenConfig(seed=43), 0) != gen_case(cfg, 0)


def test_gen_polarity_and_validity():
    cfg = GenConfig(seed=1, negative_prob=0.0)
    for case in gen_corpus(cfg, 30):
        for att in case.attackers:
            assert att.m > 0
            assert validate(att.as_tuple()) is not None
            assert cfg.window_width[0] <= att.b - att.a <= cfg.window_width[1] + 1e-12


def test_gen_zero_width_fixed_n():
    from frame_noise.aggregate import worst_case

    cfg = GenConfig(n_attackers=(2, 2), window_width=(0.0, 0.0), seed=3)
    for case in gen_corpus(cfg, 20):
        assert case.n == 2
        forced = abs(composite_peak(case.attackers, [att.a for att in case.attackers])[1])
        assert worst_case(case).w_star == pytest.approx(forced, abs=1e-12)


def test_gen_config_validation():
    with pytest.raises(ValueError):
        GenConfig(p_fraction=(0.0, 0.5))
    with pytest.raises(ValueError):
        GenConfig(n_attackers=(3, 2))
    with pytest.raises(ValueError):
        GenConfig(negative_prob=1.5)


def test_run_corpus_example():
    rep = run_corpus([make_case("ex1", [THETA1, THETA2])], 0.25)
    row = rep.rows[0]
    assert row.w_frame == pytest.approx(3)
    assert row.w_naive == 5 and row.w_pruned == pytest.approx(3)
    assert row.reduction_vs_naive_pct == pytest.approx(40)
    assert rep.mean_reduction_vs_naive == pytest.approx(40)


def test_run_corpus_single_polarity():
    cases = gen_corpus(GenConfig(seed=9, negative_prob=0.0, n_attackers=(1, 3)), 15)
    rep = run_corpus(cases, 0.25)
    assert all(r.reduction_pct == pytest.approx(0, abs=1e-7) for r in rep.rows)


def test_run_corpus_empty():
    with pytest.raises(EmptyInput):
        run_corpus([], 0.1)


def test_corpus_report_formats():
    cases = gen_corpus(GenConfig(seed=2, negative_prob=0.5, n_attackers=(1, 3)), 12)
    rep = run_corpus(cases, 0.25)
    lines = rep.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 13
    q = rep.quartiles
    assert list(q) == sorted(q)
    assert rep.to_csv() == run_corpus(cases, 0.25).to_csv()
    assert rep.to_json() == run_corpus(cases, 0.25).to_json()
