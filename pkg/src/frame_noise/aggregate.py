"""Envelope addition over a master vertex list and worst-case extraction.

All envelope vertices are merged into one sorted list of master times.  Each
master time carries one attribute tuple ``(v, s_l, s_r)`` per attacker; an
attacker without a native vertex at that time gets the tuple by linear
interpolation along its own envelope.  Summing ``v`` down each column gives
the summed envelope, and since every piece is linear the extremum sits on a
master vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .envelope import Envelope, build_inner, build_outer
from .errors import EmptyInput
from .model import TOL, AttackerSpec, ChainCase

MAX = "max"
MIN = "min"


@dataclass(frozen=True, eq=False)
class SummedEnvelope:
    """Sum of ``n`` envelopes sampled on a shared master vertex list.

    ``volts``, ``s_left`` and ``s_right`` have shape ``(n, len(times))``;
    column ``j`` is the attribute tuple chain of master vertex ``j``.
    """

    times: np.ndarray
    volts: np.ndarray
    s_left: np.ndarray
    s_right: np.ndarray
    owners: tuple
    role: str = ""
    total: np.ndarray = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.volts.sum(axis=0))

    @property
    def n(self) -> int:
        return len(self.owners)

    def __len__(self) -> int:
        return len(self.times)

    def chain(self, j: int) -> list:
        """Attribute tuples ``(owner, v, s_l, s_r)`` at master vertex ``j``."""
        return [
            (owner, float(self.volts[k, j]), float(self.s_left[k, j]), float(self.s_right[k, j]))
            for k, owner in enumerate(self.owners)
        ]

    def __call__(self, t):
        """Summed voltage at ``t``; zero outside the master list."""
        return np.interp(t, self.times, self.total, left=0.0, right=0.0)

    def peak(self) -> float:
        """Largest magnitude over the master vertices."""
        return float(np.max(np.abs(self.total)))


@dataclass(frozen=True, eq=False)
class AnalysisResult:
    w_star: float
    t_star: float
    t_star_all: tuple
    s_star: tuple
    achieved_on: str
    e_max: SummedEnvelope
    e_min: SummedEnvelope
    attackers: tuple = ()
    signed_peak: float = 0.0

    def sigma_at(self, t: float) -> tuple:
        """Alignment (right-limit shifts) read off the winning envelope at ``t``."""
        env = self.e_max if self.achieved_on == MAX else self.e_min
        return shifts_at(env, t)

    @property
    def alignment(self) -> dict:
        """Mapping from attacker index to its worst-case shift."""
        return {att.index: s for att, s in zip(self.attackers, self.s_star)}


def partition(attackers: Sequence[AttackerSpec]) -> tuple:
    """Split attacker indices by bump polarity; ``m == 0`` counts as positive."""
    plus = [att.index for att in attackers if att.m >= 0]
    minus = [att.index for att in attackers if att.m < 0]
    return plus, minus


def _merge_times(envs: Sequence[Envelope]) -> np.ndarray:
    raw = np.sort(np.concatenate([np.array(env.times, dtype=float) for env in envs]))
    keep = [raw[0]]
    for t in raw[1:]:
        if t - keep[-1] > TOL:
            keep.append(t)
    return np.array(keep)


def _vertex_arrays(envs: Sequence[Envelope]) -> tuple:
    """Vertex attributes as ``(n, 4)`` arrays, short envelopes padded by
    repeating their last vertex."""
    width = max(len(env.vertices) for env in envs)
    rows = [list(env.vertices) + [env.vertices[-1]] * (width - len(env.vertices)) for env in envs]
    arr = np.array(rows, dtype=float).reshape(len(envs), width, 4)
    return arr[:, :, 0], arr[:, :, 1], arr[:, :, 2], arr[:, :, 3]


def _fill(envs: Sequence[Envelope], times: np.ndarray) -> tuple:
    """Attribute tuples of every envelope at every master time, shape ``(n, M)``."""
    vt, vv, vsl, vsr = _vertex_arrays(envs)
    n, width = vt.shape

    # outside its support an attacker contributes 0 V and holds its edge shift
    volts = np.zeros((n, len(times)))
    s_left = np.where(times[None, :] < vt[:, :1], vsl[:, :1], vsr[:, -1:])
    s_right = s_left.copy()

    # interpolate only the (attacker, master time) pairs inside each support
    lo = np.searchsorted(times, vt[:, 0] - TOL, side="left")
    hi = np.searchsorted(times, vt[:, -1] + TOL, side="right")
    lens = hi - lo
    rr = np.repeat(np.arange(n), lens)
    cc = np.arange(lens.sum()) - np.repeat(np.cumsum(lens) - lens, lens) + np.repeat(lo, lens)
    tt = times[cc]
    # segment i spans vertex i -> i+1
    seg = np.clip((vt[rr] <= tt[:, None]).sum(axis=1) - 1, 0, max(width - 2, 0))
    nxt = np.minimum(seg + 1, width - 1)
    t0, t1 = vt[rr, seg], vt[rr, nxt]
    span = t1 - t0
    with np.errstate(invalid="ignore", divide="ignore"):
        frac = np.where(span > 0, (tt - t0) / span, 0.0)
    frac = np.clip(frac, 0.0, 1.0)
    v0, v1 = vv[rr, seg], vv[rr, nxt]
    volts[rr, cc] = v0 + frac * (v1 - v0)
    s0, s1 = vsr[rr, seg], vsl[rr, nxt]
    s_mid = np.clip(s0 + frac * (s1 - s0), np.minimum(s0, s1), np.maximum(s0, s1))
    s_left[rr, cc] = s_mid
    s_right[rr, cc] = s_mid

    # native vertices override interpolation; a run of vertices sharing one
    # master time contributes its first v/s_l and its last s_r
    pos = np.searchsorted(times, vt - TOL)
    pos_c = np.minimum(pos, len(times) - 1)
    hit = (pos < len(times)) & (np.abs(times[pos_c] - vt) <= TOL)
    same_prev = np.zeros_like(hit)
    same_prev[:, 1:] = hit[:, 1:] & hit[:, :-1] & (pos[:, 1:] == pos[:, :-1])
    same_next = np.zeros_like(hit)
    same_next[:, :-1] = same_prev[:, 1:]
    r, c = np.nonzero(hit & ~same_prev)
    volts[r, pos[r, c]] = vv[r, c]
    s_left[r, pos[r, c]] = vsl[r, c]
    r, c = np.nonzero(hit & ~same_next)
    s_right[r, pos[r, c]] = vsr[r, c]
    return volts, s_left, s_right


def sum_envelopes(envs: Sequence[Envelope], role: str = "") -> SummedEnvelope:
    """Add envelopes on the merged master vertex list."""
    envs = list(envs)
    if not envs:
        raise EmptyInput("cannot add an empty list of envelopes")
    times = _merge_times(envs)
    volts, s_left, s_right = _fill(envs, times)
    return SummedEnvelope(times, volts, s_left, s_right, tuple(env.owner for env in envs), role)


def build_emax(attackers: Sequence[AttackerSpec]) -> SummedEnvelope:
    """Positive outer envelopes plus negative inner envelopes."""
    if not attackers:
        raise EmptyInput("no attackers")
    envs = [build_outer(att) if att.m >= 0 else build_inner(att) for att in attackers]
    return sum_envelopes(envs, MAX)


def build_emin(attackers: Sequence[AttackerSpec]) -> SummedEnvelope:
    """Positive inner envelopes plus negative outer envelopes."""
    if not attackers:
        raise EmptyInput("no attackers")
    envs = [build_inner(att) if att.m >= 0 else build_outer(att) for att in attackers]
    return sum_envelopes(envs, MIN)


def shifts_at(env: SummedEnvelope, t: float) -> tuple:
    """Per-attacker right-limit shifts at time ``t``, in envelope order."""
    j = int(np.searchsorted(env.times, t - TOL))
    if j < len(env.times) and abs(env.times[j] - t) <= TOL:
        s = env.s_right[:, j]
    else:
        # off the master list: interpolate each attacker's right limit
        # between the neighbouring master vertices
        if j == 0:
            s = env.s_left[:, 0]
        elif j == len(env.times):
            s = env.s_right[:, -1]
        else:
            t0, t1 = env.times[j - 1], env.times[j]
            frac = (t - t0) / (t1 - t0)
            s = env.s_right[:, j - 1] + frac * (env.s_left[:, j] - env.s_right[:, j - 1])
    return tuple(float(x) for x in s)


def analyze(attackers: Sequence[AttackerSpec]) -> AnalysisResult:
    """Worst-case magnitude, times and alignment for a list of attackers."""
    attackers = tuple(attackers)
    if not attackers:
        raise EmptyInput("no attackers")
    e_max = build_emax(attackers)
    e_min = build_emin(attackers)
    w_max = e_max.peak()
    w_min = e_min.peak()
    winner, w = (e_max, w_max) if w_max >= w_min else (e_min, w_min)
    hits = np.flatnonzero(np.abs(np.abs(winner.total) - w) <= TOL)
    t_all = tuple(float(winner.times[j]) for j in hits)
    t_star = t_all[0]
    return AnalysisResult(
        w_star=w,
        t_star=t_star,
        t_star_all=t_all,
        s_star=shifts_at(winner, t_star),
        achieved_on=winner.role,
        e_max=e_max,
        e_min=e_min,
        attackers=attackers,
        signed_peak=float(winner.total[hits[0]]),
    )


def worst_case(case: ChainCase) -> AnalysisResult:
    return analyze(case.attackers)
