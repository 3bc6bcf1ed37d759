"""Synthetic corpora and the statistics used to compare FRAME with baselines.

Cases are drawn from numpy's PCG64 generator seeded with ``(seed, index)``
through :class:`numpy.random.SeedSequence`, so case ``k`` of a corpus does not
depend on how many other cases were generated.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import ndtr

from .aggregate import worst_case
from .baseline import naive_peak_sum, pessimism_reduction, pruned_envelope
from .errors import EmptyInput, EmptySample, FrameError
from .model import TOL, ChainCase, make_case
from .oracle import verify

CSV_HEADER = ("case", "n", "w_frame", "w_pruned", "w_naive", "reduction_pct", "verify_gap")


@dataclass(frozen=True)
class GenConfig:
    n_attackers: tuple = (1, 6)
    magnitude: tuple = (0.05, 1.0)
    p_fraction: tuple = (0.2, 0.8)
    duration: tuple = (0.5, 3.0)
    window_width: tuple = (0.0, 1.0)
    window_start: tuple = (0.0, 2.0)
    negative_prob: float = 0.3
    seed: int = 0

    def __post_init__(self):
        for name in ("n_attackers", "magnitude", "p_fraction", "duration", "window_width", "window_start"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name}: empty range ({lo}, {hi})")
        lo, hi = self.n_attackers
        if lo < 1 or int(lo) != lo or int(hi) != hi:
            raise ValueError(f"n_attackers must be integers >= 1, got {self.n_attackers}")
        lo, hi = self.p_fraction
        if not 0.0 < lo <= hi < 1.0:
            raise ValueError(f"p_fraction must lie in (0, 1), got {self.p_fraction}")
        if self.magnitude[0] < 0 or self.duration[0] <= 0 or self.window_width[0] < 0:
            raise ValueError("magnitude, duration and window_width must be non-negative")
        if not 0.0 <= self.negative_prob <= 1.0:
            raise ValueError(f"negative_prob must be a probability, got {self.negative_prob}")


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def gen_case(cfg: GenConfig, index: int) -> ChainCase:
    """Case ``index`` of the corpus described by ``cfg``."""
    rng = _rng(cfg.seed, index)
    lo, hi = cfg.n_attackers
    n = int(rng.integers(lo, hi + 1))
    direction = "rise" if rng.random() < 0.5 else "fall"
    records = []
    for _ in range(n):
        e = float(rng.uniform(*cfg.duration))
        p = e * float(rng.uniform(*cfg.p_fraction))
        m = float(rng.uniform(*cfg.magnitude))
        if rng.random() < cfg.negative_prob:
            m = -m
        a = float(rng.uniform(*cfg.window_start))
        b = a + float(rng.uniform(*cfg.window_width))
        records.append({"p": p, "e": e, "m": m, "a": a, "b": b})
    return make_case(f"case{index:04d}", records, direction)


def gen_corpus(cfg: GenConfig, count: int) -> list:
    return [gen_case(cfg, k) for k in range(count)]


# -- statistics -------------------------------------------------------------


def boxplot_stats(samples: Sequence[float]) -> tuple:
    """``(min, Q1, median, Q3, max)`` with linearly interpolated quartiles."""
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise EmptySample("boxplot of an empty sample")
    q = np.quantile(x, [0.0, 0.25, 0.5, 0.75, 1.0], method="linear")
    return tuple(float(v) for v in q)


def _ranks(values: np.ndarray) -> np.ndarray:
    """Midranks (1-based), ties sharing the average rank."""
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(len(values))
    sorted_vals = values[order]
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _exact_u_distribution(ranks: np.ndarray, k: int) -> dict:
    """Distribution of the rank sum of a size-``k`` subset, over all subsets.

    Ranks are doubled to stay integral with midranks.  Returns
    ``{2 * rank_sum: count}``.
    """
    doubled = np.rint(2 * ranks).astype(int)
    # ways[j] maps doubled sum -> number of j-subsets
    ways = [dict() for _ in range(k + 1)]
    ways[0][0] = 1
    for r in doubled:
        for j in range(min(k, len(ways) - 1), 0, -1):
            prev = ways[j - 1]
            cur = ways[j]
            for s, c in prev.items():
                cur[s + r] = cur.get(s + r, 0) + c
    return ways[k]


def mann_whitney_u(sample_a: Sequence[float], sample_b: Sequence[float]) -> tuple:
    """Two-sided Mann-Whitney U test.

    Returns ``(U, p)`` where ``U`` counts pairs with ``a > b`` (ties count
    one half).  The p-value is exact, by enumerating every assignment of
    the pooled ranks to the smaller sample, when that sample has at most 8
    observations; otherwise the tie-corrected normal approximation with
    continuity correction is used.
    """
    a = np.asarray(sample_a, dtype=float)
    b = np.asarray(sample_b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise EmptySample("both samples must be non-empty")
    n1, n2 = a.size, b.size
    ranks = _ranks(np.concatenate([a, b]))
    u = float(ranks[:n1].sum() - n1 * (n1 + 1) / 2.0)
    mean = n1 * n2 / 2.0

    if min(n1, n2) <= 8:
        k = min(n1, n2)
        dist = _exact_u_distribution(ranks, k)
        total = sum(dist.values())
        # statistic of the smaller sample, in doubled-U units
        u_small = u if n1 == k else n1 * n2 - u
        obs = round(2 * u_small) + k * (k + 1)
        low = sum(c for s, c in dist.items() if s <= obs) / total
        high = sum(c for s, c in dist.items() if s >= obs) / total
        return u, min(1.0, 2.0 * min(low, high))

    n = n1 + n2
    _, counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(counts**3 - counts))
    var = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if var <= 0:
        return u, 1.0
    z = (abs(u - mean) - 0.5) / math.sqrt(var)
    return u, float(min(1.0, 2.0 * ndtr(-max(z, 0.0))))


# -- corpus runs --------------------------------------------------------------


@dataclass(frozen=True)
class CorpusRow:
    case: str
    n: int
    w_frame: float
    w_pruned: float
    w_naive: float
    reduction_pct: float
    reduction_vs_naive_pct: float
    verify_gap: float
    achieved: bool


@dataclass
class CorpusReport:
    rows: list
    mean_reduction: float = 0.0
    mean_reduction_vs_naive: float = 0.0
    quartiles: tuple = ()
    mann_whitney_u: float = 0.0
    mann_whitney_p: float = 1.0
    grid_step: float = 0.0

    def summary(self) -> dict:
        lo, q1, med, q3, hi = self.quartiles
        return {
            "cases": len(self.rows),
            "grid_step": self.grid_step,
            "mean_reduction_pct": self.mean_reduction,
            "mean_reduction_vs_naive_pct": self.mean_reduction_vs_naive,
            "reduction_boxplot": {"min": lo, "q1": q1, "median": med, "q3": q3, "max": hi},
            "mann_whitney": {"u": self.mann_whitney_u, "p": self.mann_whitney_p},
            "all_achieved": all(r.achieved for r in self.rows),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [r.case, r.n] + [f"{x:.9g}" for x in (r.w_frame, r.w_pruned, r.w_naive, r.reduction_pct, r.verify_gap)]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(_round_floats(self.summary()), indent=2, sort_keys=True) + "\n"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.9g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


class DominanceViolation(FrameError, AssertionError):
    pass


def _reduction(base: float, frame: float) -> float:
    # zero baselines only arise when every bump is null, and then FRAME is 0 too
    return pessimism_reduction(base, frame) if base > TOL else 0.0


def run_case(case: ChainCase, h: float) -> CorpusRow:
    result = worst_case(case)
    pruned = pruned_envelope(case.attackers).w
    naive = naive_peak_sum(case.attackers).w
    if not (result.w_star <= pruned + TOL and pruned <= naive + TOL):
        raise DominanceViolation(
            f"{case.name}: expected W*={result.w_star:.9g} <= pruned={pruned:.9g} <= naive={naive:.9g}"
        )
    rep = verify(case, result, h)
    return CorpusRow(
        case=case.name,
        n=case.n,
        w_frame=result.w_star,
        w_pruned=pruned,
        w_naive=naive,
        reduction_pct=_reduction(pruned, result.w_star),
        reduction_vs_naive_pct=_reduction(naive, result.w_star),
        verify_gap=rep.gap,
        achieved=rep.ok,
    )


def run_corpus(cases: Sequence[ChainCase], h: float) -> CorpusReport:
    """Analyse, verify and compare every case, then aggregate."""
    if not cases:
        raise EmptyInput("empty corpus")
    rows = []
    for case in cases:
        try:
            rows.append(run_case(case, h))
        except FrameError as exc:
            raise type(exc)(f"{case.name}: {exc}") from exc
    reductions = [r.reduction_pct for r in rows]
    u, p = mann_whitney_u([r.w_frame for r in rows], [r.w_pruned for r in rows])
    return CorpusReport(
        rows=rows,
        mean_reduction=float(np.mean(reductions)),
        mean_reduction_vs_naive=float(np.mean([r.reduction_vs_naive_pct for r in rows])),
        quartiles=boxplot_stats(reductions),
        mann_whitney_u=u,
        mann_whitney_p=p,
        grid_step=h,
    )
