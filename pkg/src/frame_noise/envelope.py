"""Outer/inner envelopes of a single attacker and their shift (sigma) functions.

Sliding an attacker's bump over its timing window sweeps out a band of
reachable voltages.  The *outer* envelope traces the edge of that band on the
bump's own polarity side, the *inner* envelope the opposite edge.  Both are
piecewise linear and are stored as annotated vertices ``(t, v, [s_l, s_r])``
where ``s_l``/``s_r`` are the one-sided limits of the shift that realises the
envelope value at ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .model import TOL, AttackerSpec

OUTER = "outer"
INNER = "inner"


class Vertex(NamedTuple):
    t: float
    v: float
    s_l: float
    s_r: float


@dataclass(frozen=True)
class Envelope:
    kind: str
    owner: int
    vertices: tuple
    theta: AttackerSpec

    @property
    def times(self) -> list:
        return [vx.t for vx in self.vertices]

    def __call__(self, t: float) -> float:
        return eval_envelope(self, t)

    def sigma(self, t: float) -> tuple:
        return eval_sigma(self, t)


def build_outer(att: AttackerSpec) -> Envelope:
    a, b, p, e, m = att.a, att.b, att.p, att.e, att.m
    vertices = (
        Vertex(a, 0.0, a, a),
        Vertex(a + p, m, a, a),
        Vertex(b + p, m, b, b),
        Vertex(b + e, 0.0, b, b),
    )
    return Envelope(OUTER, att.index, vertices, att)


def build_inner(att: AttackerSpec) -> Envelope:
    """Inner envelope: a scaled triangle when the window is narrower than the
    bump (``b < a + e``), otherwise identically zero."""
    a, b, p, e, m = att.a, att.b, att.p, att.e, att.m
    # delta == 0 (b == a + e) also takes the flat branch
    if b < a + e - TOL:
        delta = att.delta
        vertices = (
            Vertex(b, 0.0, b, b),
            Vertex(b + p * delta, m * delta, b, a),
            Vertex(a + e, 0.0, a, a),
        )
    else:
        vertices = (Vertex(b, 0.0, b, a),)
    return Envelope(INNER, att.index, vertices, att)


def build_envelopes(att: AttackerSpec) -> tuple:
    return build_outer(att), build_inner(att)


def _bracket(vertices, t):
    """Locate ``t`` among the vertices.

    Returns ``("before", 0)``, ``("after", last)``, ``("at", i, j)`` for the
    run ``i..j`` of vertices coinciding with ``t``, or ``("between", i)`` when
    ``t`` lies strictly inside segment ``i -> i+1``.
    """
    if t < vertices[0].t - TOL:
        return ("before", 0)
    if t > vertices[-1].t + TOL:
        return ("after", len(vertices) - 1)
    for i, vx in enumerate(vertices):
        if abs(vx.t - t) <= TOL:
            j = i
            while j + 1 < len(vertices) and abs(vertices[j + 1].t - t) <= TOL:
                j += 1
            return ("at", i, j)
        if vx.t > t:
            return ("between", i - 1)
    raise AssertionError("unreachable")  # pragma: no cover


def eval_envelope(env: Envelope, t: float) -> float:
    """Envelope voltage at ``t`` by linear interpolation between vertices."""
    vs = env.vertices
    where = _bracket(vs, t)
    if where[0] in ("before", "after"):
        return 0.0
    if where[0] == "at":
        return vs[where[1]].v
    i = where[1]
    v0, v1 = vs[i], vs[i + 1]
    frac = (t - v0.t) / (v1.t - v0.t)
    return v0.v + frac * (v1.v - v0.v)


def eval_sigma(env: Envelope, t: float) -> tuple:
    """Shift limits ``(s_l, s_r)`` that realise the envelope value at ``t``.

    Between vertices the shift moves linearly from the left vertex's right
    limit to the right vertex's left limit; outside the support it is held at
    the nearest vertex's outward limit.
    """
    vs = env.vertices
    where = _bracket(vs, t)
    if where[0] == "before":
        return (vs[0].s_l, vs[0].s_l)
    if where[0] == "after":
        return (vs[-1].s_r, vs[-1].s_r)
    if where[0] == "at":
        return (vs[where[1]].s_l, vs[where[2]].s_r)
    i = where[1]
    v0, v1 = vs[i], vs[i + 1]
    frac = (t - v0.t) / (v1.t - v0.t)
    s = v0.s_r + frac * (v1.s_l - v0.s_r)
    return (s, s)
