"""Brute-force cross-check of the envelope analysis.

Nothing here touches envelopes: the composite waveform for a fixed alignment
is evaluated exactly at its breakpoints, and alignments are enumerated on a
grid over the timing windows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CombinationBudgetExceeded, LengthMismatch
from .model import TOL, AttackerSpec

MAX_COMBINATIONS = 10**7
_CHUNK = 1 << 15


@dataclass(frozen=True)
class VerificationReport:
    frame_w: float
    oracle_w: float
    gap: float
    achieved: bool
    bounded: bool
    grid_step: float
    combinations_evaluated: int
    composite_w: float = float("nan")
    lipschitz_bound: float = float("inf")

    @property
    def ok(self) -> bool:
        return self.achieved and self.bounded


def composite_peak(attackers: Sequence[AttackerSpec], shifts: Sequence[float]) -> tuple:
    """Exact peak ``(t, v)`` of the composite waveform for a fixed alignment.

    ``v`` is signed; the peak is the breakpoint with the largest ``|v|``,
    earliest first on ties.
    """
    if len(attackers) != len(shifts):
        raise LengthMismatch(f"{len(attackers)} attackers but {len(shifts)} shifts")
    breaks = sorted({s + off for att, s in zip(attackers, shifts) for off in (0.0, att.p, att.e)})
    best_t, best_v = breaks[0], 0.0
    for t in breaks:
        v = 0.0
        for att, s in zip(attackers, shifts):
            u = t - s
            if 0.0 <= u < att.p:
                v += att.m / att.p * u
            elif att.p <= u < att.e:
                v += att.m / (att.e - att.p) * (att.e - u)
        if abs(v) > abs(best_v) + TOL:
            best_t, best_v = t, v
    return best_t, best_v


def window_grid(att: AttackerSpec, h: float) -> np.ndarray:
    """Shifts ``a, a+h, ...`` up to and always including ``b``."""
    if att.b - att.a <= TOL:
        return np.array([att.a])
    k = int(math.floor((att.b - att.a) / h + TOL))
    pts = att.a + h * np.arange(k + 1)
    if att.b - pts[-1] > TOL:
        pts = np.append(pts, att.b)
    else:
        pts[-1] = att.b
    return pts


def _peaks(attackers, shifts: np.ndarray) -> np.ndarray:
    """Signed composite peak for each row of ``shifts`` (shape ``(k, n)``)."""
    p = np.array([att.p for att in attackers])
    e = np.array([att.e for att in attackers])
    m = np.array([att.m for att in attackers])
    # breakpoints: (k, 3n)
    t = np.concatenate([shifts, shifts + p, shifts + e], axis=1)
    u = t[:, :, None] - shifts[:, None, :]
    rise = m / p * u
    fall = m / (e - p) * (e - u)
    v = np.where((u >= 0) & (u < p), rise, np.where((u >= p) & (u < e), fall, 0.0)).sum(axis=2)
    idx = np.argmax(np.abs(v), axis=1)
    return v[np.arange(len(v)), idx]


def grid_search(attackers: Sequence[AttackerSpec], h: float, budget: int = MAX_COMBINATIONS) -> tuple:
    """Exhaustive alignment search on a shift grid.

    Returns ``(oracle_w, best_shifts, combinations)``.  Among equal magnitudes
    the lexicographically smallest alignment wins.
    """
    if not h > 0:
        raise ValueError(f"grid step must be positive, got {h}")
    grids = [window_grid(att, h) for att in attackers]
    total = math.prod(len(g) for g in grids)
    if total > budget:
        raise CombinationBudgetExceeded(
            f"{total} alignments on a grid of step {h} exceeds the budget of {budget}"
        )
    shape = [len(g) for g in grids]
    best_w, best_s = -1.0, None
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total))
        idx = np.unravel_index(flat, shape)
        shifts = np.stack([g[i] for g, i in zip(grids, idx)], axis=1)
        w = np.abs(_peaks(attackers, shifts))
        # row-major enumeration is lexicographic, so argmax keeps the smallest S
        k = int(np.argmax(w))
        if w[k] > best_w + TOL:
            best_w, best_s = float(w[k]), tuple(float(x) for x in shifts[k])
    return best_w, best_s, total


def lipschitz_bound(attackers: Sequence[AttackerSpec], h: float) -> float:
    """Largest change of the composite peak when each shift moves by ``h``."""
    return h * sum(abs(att.m) * max(1.0 / att.p, 1.0 / (att.e - att.p)) for att in attackers)


def verify(case, result, h: float, budget: int = MAX_COMBINATIONS) -> VerificationReport:
    """Check a worst-case result for achievability and against grid search.

    ``case`` is a :class:`ChainCase` or a plain attacker sequence.
    """
    attackers = tuple(getattr(case, "attackers", case))
    _, v = composite_peak(attackers, result.s_star)
    achieved = abs(abs(v) - result.w_star) <= TOL and all(
        att.a - TOL <= s <= att.b + TOL for att, s in zip(attackers, result.s_star)
    )
    oracle_w, _, combos = grid_search(attackers, h, budget)
    return VerificationReport(
        frame_w=result.w_star,
        oracle_w=oracle_w,
        gap=result.w_star - oracle_w,
        achieved=achieved,
        bounded=oracle_w <= result.w_star + TOL,
        grid_step=h,
        combinations_evaluated=combos,
        composite_w=abs(v),
        lipschitz_bound=lipschitz_bound(attackers, h),
    )
