"""Envelopes of a single attacker and the shift that realises them.

Run: python demos/01_envelopes.py
"""
import numpy as np

from frame_noise import build_inner, build_outer, eval_envelope, eval_sigma, eval_shifted, validate

# A positive bump peaking at 2 V, 2 ns after it starts, gone by 3 ns.
# It may arrive anywhere between 1 ns and 3 ns.
att = validate({"p": 2, "e": 3, "m": 2, "a": 1, "b": 3})

outer, inner = build_outer(att), build_inner(att)
print("outer vertices (t, V, s_L, s_R):")
for vx in outer.vertices:
    print("   ", tuple(round(x, 4) for x in vx))
print("inner vertices:")
for vx in inner.vertices:
    print("   ", tuple(round(x, 4) for x in vx))

# Slide the bump over its window and record what we see at each t.
# The outer envelope is the pointwise max, the inner the pointwise min.
ts = np.linspace(0, 7, 15)
shifts = np.linspace(att.a, att.b, 401)
sweep = eval_shifted(att, shifts[:, None], ts[None, :])
print("\n   t    outer  max(sweep)   inner  min(sweep)")
for k, t in enumerate(ts):
    print(f"{t:5.2f}  {eval_envelope(outer, t):6.3f}  {sweep[:, k].max():9.3f}"
          f"  {eval_envelope(inner, t):6.3f}  {sweep[:, k].min():9.3f}")

# sigma tells us which arrival time produces the envelope value.
for t in (2.0, 4.0, 5.5):
    s_l, s_r = eval_sigma(outer, t)
    print(f"\nouter at t={t}: shift {s_r:.3f} gives {eval_shifted(att, s_r, t):.3f} V "
          f"(envelope {eval_envelope(outer, t):.3f} V)")

# The inner peak is where the achieving shift jumps from b to a.
print("\nsigma at the inner peak:", eval_sigma(inner, inner.vertices[1].t))

# With a wide window (b >= a + e) the bump can always dodge t, so the
# inner envelope is flat zero.
wide = validate({"p": 1, "e": 2, "m": 1, "a": 0, "b": 5})
print("wide-window inner envelope:", build_inner(wide).vertices)
