"""Worst-case alignment for two attackers of opposite polarity.

Run: python demos/02_worst_case.py
"""
from pathlib import Path

from frame_noise import composite, composite_peak, grid_search, parse_case, verify, worst_case

case = parse_case(Path(__file__).with_name("example1.json")).cases()[0]
r = worst_case(case)

# E_max adds the positive outer and the negative inner envelopes; E_min
# does the opposite.  Both live on one master vertex list.
print("E_max master list:")
for t, v in zip(r.e_max.times, r.e_max.total):
    print(f"  t={t:6.3f}  V={v:7.3f}")
print("E_min master list:")
for t, v in zip(r.e_min.times, r.e_min.total):
    print(f"  t={t:6.3f}  V={v:7.3f}")

print(f"\nW* = {r.w_star:g} V on E_{r.achieved_on}, reached at t = {r.t_star_all}")
for t in r.t_star_all:
    s = r.sigma_at(t)
    print(f"  alignment read at t={t:g}: S = {s}, composite(t) = {composite(case.attackers, s, t):g} V")

# Each of those alignments really produces a -3 V peak.
print("\ncomposite peak for S=(1, 2):", composite_peak(case.attackers, (1, 2)))

# Brute force over a 0.25 ns grid agrees.
w, s, n = grid_search(case.attackers, 0.25)
print(f"grid search: {w:g} V at S={s} after {n} alignments")
print(verify(case, r, 0.25))
