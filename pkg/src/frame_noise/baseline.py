"""Conventional estimators that FRAME is compared against.

``naive_peak_sum`` stacks every bump peak in one direction.  ``pruned_envelope``
models a pruning analyser: attackers whose polarity opposes the noise
direction are dropped and the survivors are aligned exactly within their
windows, i.e. the peak of the sum of their outer envelopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .aggregate import MAX, MIN, sum_envelopes
from .envelope import build_outer
from .errors import EmptyInput, ZeroBaseline
from .model import AttackerSpec

NAIVE = "naive_peak_sum"
PRUNED = "pruned_envelope"


@dataclass(frozen=True)
class BaselineResult:
    method: str
    w: float
    kept: frozenset = frozenset()
    direction: str = ""


def naive_peak_sum(attackers: Sequence[AttackerSpec]) -> BaselineResult:
    if not attackers:
        raise EmptyInput("no attackers")
    w = sum(abs(att.m) for att in attackers)
    return BaselineResult(NAIVE, w, frozenset(att.index for att in attackers), "")


def _survivor_peak(attackers) -> float:
    if not attackers:
        return 0.0
    return sum_envelopes([build_outer(att) for att in attackers]).peak()


def pruned_envelope(attackers: Sequence[AttackerSpec], direction: str | None = None) -> BaselineResult:
    """Polarity-pruned worst case.

    With ``direction`` of ``"max"`` or ``"min"`` only that noise direction is
    analysed; by default the larger of the two is reported (max on ties).
    """
    if not attackers:
        raise EmptyInput("no attackers")
    if direction not in (None, MAX, MIN):
        raise ValueError(f"direction must be 'max', 'min' or None, got {direction!r}")
    plus = [att for att in attackers if att.m >= 0]
    minus = [att for att in attackers if att.m < 0]
    cands = []
    if direction in (None, MAX):
        cands.append((_survivor_peak(plus), MAX, plus))
    if direction in (None, MIN):
        cands.append((_survivor_peak(minus), MIN, minus))
    w, side, kept = max(cands, key=lambda c: c[0])
    return BaselineResult(PRUNED, w, frozenset(att.index for att in kept), side)


def frame_direction_peak(result, direction: str | None = None) -> float:
    """FRAME magnitude restricted to one noise direction (or overall)."""
    if direction is None:
        return result.w_star
    if direction == MAX:
        return max(float(result.e_max.total.max()), 0.0)
    if direction == MIN:
        return max(-float(result.e_min.total.min()), 0.0)
    raise ValueError(f"direction must be 'max', 'min' or None, got {direction!r}")


def pessimism_reduction(w_base: float, w_frame: float) -> float:
    """Percentage by which ``w_frame`` undercuts the baseline estimate."""
    if w_base <= 0:
        raise ZeroBaseline(f"baseline magnitude must be positive, got {w_base}")
    return 100.0 * (w_base - w_frame) / w_base
