"""Attacker waveform model: triangular bumps sliding inside timing windows.

An attacker bump is a triangle starting at time 0, peaking with signed
magnitude ``m`` at ``p`` and returning to zero at ``e``.  Its arrival can be
shifted by any ``s`` in the timing window ``[a, b]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyInput,
    NonFiniteParameter,
    PeakOrderViolation,
    ValidationError,
    WindowOrderViolation,
)

# Absolute tolerance for comparing times and voltages.
TOL = 1e-9

DIRECTIONS = ("rise", "fall")


@dataclass(frozen=True)
class Triangle:
    p: float
    e: float
    m: float
    l: float = 0.0

    def __call__(self, t):
        return eval_triangle(self, t)


@dataclass(frozen=True)
class TimingWindow:
    a: float
    b: float

    @property
    def width(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class AttackerSpec:
    """Triangle shape plus timing window for one attacker, ``(p, e, m, a, b)``."""

    p: float
    e: float
    m: float
    a: float
    b: float
    index: int = 1

    @property
    def triangle(self) -> Triangle:
        return Triangle(self.p, self.e, self.m)

    @property
    def window(self) -> TimingWindow:
        return TimingWindow(self.a, self.b)

    @property
    def delta(self) -> float:
        """Height/width scale of the inner envelope, ``(a + e - b) / e``."""
        return (self.a + self.e - self.b) / self.e

    def as_tuple(self) -> tuple:
        return (self.p, self.e, self.m, self.a, self.b)

    def as_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "m": self.m, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class ChainCase:
    name: str
    attackers: tuple
    direction: str = "fall"

    def __post_init__(self):
        object.__setattr__(self, "attackers", tuple(self.attackers))
        if not self.attackers:
            raise EmptyInput(f"case {self.name!r} has no attackers")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}, got {self.direction!r}")
        indices = [att.index for att in self.attackers]
        if sorted(indices) != list(range(1, len(indices) + 1)):
            raise ValueError(f"attacker indices must be 1..{len(indices)}, got {indices}")

    @property
    def n(self) -> int:
        return len(self.attackers)


def validate(spec, index: int = 1) -> AttackerSpec:
    """Build a checked :class:`AttackerSpec` from raw parameters.

    ``spec`` may be a mapping with keys ``p, e, m, a, b``, a 5-sequence in
    that order, or an existing ``AttackerSpec`` (re-checked).
    """
    if isinstance(spec, AttackerSpec):
        values = spec.as_tuple()
        index = spec.index
    elif isinstance(spec, Mapping):
        try:
            values = tuple(spec[k] for k in ("p", "e", "m", "a", "b"))
        except KeyError as exc:
            raise ValidationError(f"missing parameter {exc.args[0]!r}") from None
    else:
        values = tuple(spec)
        if len(values) != 5:
            raise ValidationError(f"expected 5 parameters (p, e, m, a, b), got {len(values)}")

    try:
        p, e, m, a, b = (float(v) for v in values)
    except (TypeError, ValueError):
        raise ValidationError(f"parameters must be numeric, got {values!r}") from None

    for name, v in zip("pemab", (p, e, m, a, b)):
        if not math.isfinite(v):
            raise NonFiniteParameter(f"{name}={v} is not finite")
    if not 0.0 < p < e:
        raise PeakOrderViolation(f"need 0 < p < e, got p={p}, e={e}")
    if a > b:
        raise WindowOrderViolation(f"need a <= b, got a={a}, b={b}")
    return AttackerSpec(p, e, m, a, b, index=index)


def make_case(name: str, params: Iterable, direction: str = "fall") -> ChainCase:
    """Validate a list of raw attacker records and number them from 1."""
    attackers = []
    for i, raw in enumerate(params):
        try:
            att = validate(raw, index=i + 1)
        except ValidationError as exc:
            if exc.index is None:
                raise type(exc)(str(exc), index=i) from None
            raise
        attackers.append(att)
    return ChainCase(name, attackers, direction)


def eval_triangle(tri: Triangle, t):
    """Evaluate the triangular bump at time ``t`` (scalar or array)."""
    if _is_scalar(t):
        if tri.l <= t < tri.p:
            return tri.m / (tri.p - tri.l) * (t - tri.l)
        if tri.p <= t < tri.e:
            return -tri.m / (tri.e - tri.p) * (t - tri.e)
        return 0.0
    t = np.asarray(t, dtype=float)
    rise = tri.m / (tri.p - tri.l) * (t - tri.l)
    fall = -tri.m / (tri.e - tri.p) * (t - tri.e)
    return np.where((t >= tri.l) & (t < tri.p), rise, np.where((t >= tri.p) & (t < tri.e), fall, 0.0))


def eval_shifted(att: AttackerSpec, s, t):
    """Bump of ``att`` delayed by ``s`` and evaluated at ``t``."""
    return eval_triangle(att.triangle, t - s)


def composite(attackers: Sequence[AttackerSpec], shifts: Sequence[float], t):
    """Sum of all shifted bumps at ``t``."""
    return sum(eval_shifted(att, s, t) for att, s in zip(attackers, shifts))


def _is_scalar(x) -> bool:
    return isinstance(x, (int, float)) or getattr(x, "ndim", 1) == 0
