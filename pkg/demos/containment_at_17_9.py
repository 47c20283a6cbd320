"""Walk through the exact rational pipeline on the 17/9 construction.

Builds the interlaced barrier system whose consumption-ratio maxima all
equal 17/9 exactly, simulates it, and prints the k-interval cycle and the
ratio maxima as exact fractions.
"""

from fractions import Fraction

from firebreak import (
    build_seventeen_ninths,
    check_speed,
    predict_intervals,
    ratio_report,
    side_intervals,
    validate,
)

system = build_seventeen_ninths(head_start=1, cycles=8)
print("right side (gap, height):", [(str(a), str(b)) for a, b in system.right[:4]], "...")
print("left side  (gap, height):", [(str(c), str(d)) for c, d in system.left[:4]], "...")

report = validate(system)
print("growth conditions hold on both sides:", report.right.conditions7 and report.left.conditions7)

curves, ratios = ratio_report(system)
print(f"\nsimulated to t = {float(curves.total.end):.4g}")
print(f"valid horizon:  t = {float(ratios.valid_horizon):.4g}")

print("\nconsumption-ratio maxima (all exact):")
for t, q in ratios.local_maxima:
    print(f"  t = {str(t):>12}   Q = {q}  ({float(q):.9f})")
print("supremum:", ratios.supremum)

print("\nfirst right-side k-intervals:")
for iv in side_intervals(curves, "right")[:6]:
    print(f"  [{str(iv.t_start):>4}, {str(iv.t_end):>4}]  k = {iv.k}")

print("\nanalytic cycle after the first right top:")
print(" ", predict_intervals(system, "right", 1))
print("(one idle stretch of the barrier's height, the next gap, a triple-burn")
print(" stretch of the same height, then the climb up the next barrier)")

verdict = check_speed(system, Fraction(17, 9))
print(f"\nbuild speed 17/9 feasible over the valid horizon: {verdict.feasible}")

# the interlacing in action: idle stretches of the two sides never overlap
zeros_r = [(iv.t_start, iv.t_end) for iv in side_intervals(curves, "right") if iv.k == 0 and iv.t_start > 0]
zeros_l = [(iv.t_start, iv.t_end) for iv in side_intervals(curves, "left") if iv.k == 0 and iv.t_start > 0]
overlap = any(r1 > l0 and l1 > r0 for r0, r1 in zeros_r for l0, l1 in zeros_l)
print("idle stretches of the two sides overlap:", overlap)
