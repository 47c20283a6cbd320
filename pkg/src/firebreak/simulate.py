"""Event-driven computation of consumption curves, k-intervals and ratios.

Every barrier point is consumed at the minimum arrival time over the faces
covering it.  Each face profile is piecewise linear with slopes +-1 in
arclength, so consumption accumulates as a sum of unit-rate ramps: one ramp
per monotone profile piece, active between the piece's earliest and latest
arrival time.  The total consumed length B(t) is therefore piecewise linear
with integer slopes, and the slope over any stretch equals the number of
simultaneously active consumption points k.

The near (origin-facing) profile of a vertical barrier is pointwise no later
than the far one: their difference is nonincreasing toward the top, where
both equal the top arrival time.  Far faces thus contribute no consumption
of their own and are skipped when assembling ramps.

Head-start accounting: ground within ``head_start`` of the origin is
burned over but adds nothing to B(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .geodesic import GROUND, VERTICAL_RIGHT, face_arrival_profiles
from .model import FLOAT, LEFT, RIGHT, SIDES, BarrierSystem, render_number, validate

TOTAL = "total"

# float mode: event times closer than this relative gap collapse to one breakpoint
MERGE_RTOL = 1e-12


class PiecewiseLinearCurve:
    """Continuous nondecreasing piecewise-linear curve given by its breakpoints."""

    __slots__ = ("points",)

    def __init__(self, points):
        points = tuple((t, v) for t, v in points)
        if len(points) < 2:
            raise ValueError("curve needs at least two breakpoints")
        for (t0, v0), (t1, v1) in zip(points, points[1:]):
            if not t1 > t0:
                raise ValueError(f"breakpoint times must increase: {t0} -> {t1}")
            if v1 < v0:
                raise ValueError(f"curve must be nondecreasing: {v0} -> {v1}")
        self.points = points

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @property
    def start(self):
        return self.points[0][0]

    @property
    def end(self):
        return self.points[-1][0]

    def value_at(self, t):
        pts = self.points
        if not (pts[0][0] <= t <= pts[-1][0]):
            raise ValueError(f"time {t} outside curve domain [{pts[0][0]}, {pts[-1][0]}]")
        lo, hi = 0, len(pts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pts[mid][0] <= t:
                lo = mid
            else:
                hi = mid
        t0, v0 = pts[lo]
        t1, v1 = pts[hi]
        if t == t0:
            return v0
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def slopes(self):
        return tuple(
            (v1 - v0) / (t1 - t0)
            for (t0, v0), (t1, v1) in zip(self.points, self.points[1:])
        )


@dataclass(frozen=True)
class KInterval:
    """Maximal time interval with a constant number of consumption points."""

    side: str
    t_start: object
    t_end: object
    k: int


@dataclass(frozen=True)
class RatioReport:
    """Local maxima and supremum of the consumption ratio Q(t) = B(t)/t."""

    local_maxima: tuple
    supremum: object
    sup_time: object
    valid_horizon: object
    feasible_for: object = None
    feasible: bool | None = None
    earliest_violation: object = None


@dataclass(frozen=True)
class SpeedCheck:
    feasible: bool
    speed: object
    horizon: object
    earliest_violation: object = None


class ConsumptionCurves(NamedTuple):
    total: PiecewiseLinearCurve
    left: PiecewiseLinearCurve
    right: PiecewiseLinearCurve
    intervals: tuple  # KInterval entries for right, left and total


# -- horizons ------------------------------------------------------------------


def top_arrival_times(system: BarrierSystem, side: str) -> tuple:
    """Arrival time of the fire at the top of each vertical on one side."""
    times = []
    pos = system.zero
    clearance = system.zero
    for gap, height in system.pairs(side):
        pos = pos + gap
        drop = clearance - height
        times.append(pos + height + (2 * drop if drop > 0 else system.zero))
        if height > clearance:
            clearance = height
    return tuple(times)


def valid_horizon(system: BarrierSystem):
    """Time range over which a truncated prefix still matches the infinite system.

    Per side: the arrival time at the top of the last generated vertical
    minus one full cycle, i.e. the arrival at the second-to-last top.  With
    fewer than two verticals the last top itself is used; with none there is
    no structural bound and None is returned.
    """
    bounds = []
    for side in SIDES:
        tops = top_arrival_times(system, side)
        if len(tops) >= 2:
            bounds.append(tops[-2])
        elif len(tops) == 1:
            bounds.append(tops[-1])
    return min(bounds) if bounds else None


def default_horizon(system: BarrierSystem):
    """Arrival at the earliest side's last top: the natural simulation span."""
    bounds = []
    for side in SIDES:
        tops = top_arrival_times(system, side)
        if tops:
            bounds.append(tops[-1])
    return min(bounds) if bounds else None


# -- ramp assembly and sweep -----------------------------------------------------


def _side_ramps(system: BarrierSystem, side: str, horizon) -> list:
    """Unit-rate consumption ramps (t_lo, t_hi) for one side, head start excluded."""
    head = system.head_start
    ramps = []
    for prof in face_arrival_profiles(system, side, horizon):
        if prof.kind == VERTICAL_RIGHT:
            continue
        pts = prof.points
        if prof.kind == GROUND:
            if pts[-1][0] <= head:
                continue
            if pts[0][0] < head:
                # ground slope is +1: shift start to the head-start boundary
                pts = ((head, pts[0][1] + (head - pts[0][0])),) + pts[1:]
        for (p0, t0), (p1, t1) in zip(pts, pts[1:]):
            lo, hi = (t0, t1) if t1 >= t0 else (t1, t0)
            if hi > lo:
                ramps.append((lo, hi))
    return ramps


def _merge_event_times(items: list, mode: str) -> list:
    """Sort (time, delta) events; in float mode collapse near-identical times."""
    items.sort(key=lambda it: it[0])
    merged = []
    for t, delta in items:
        if merged and (
            t == merged[-1][0]
            or (mode == FLOAT and t - merged[-1][0] <= MERGE_RTOL * max(abs(t), 1.0))
        ):
            merged[-1][1] += delta
        else:
            merged.append([t, delta])
    return merged


def _sweep(ramps: list, horizon, side: str, system: BarrierSystem):
    """Turn ramps into the side curve and its maximal k-intervals."""
    zero = system.zero
    events = [(lo, +1) for lo, _ in ramps] + [(hi, -1) for _, hi in ramps]
    merged = _merge_event_times(events, system.mode)

    intervals = []
    k = 0
    t_prev = zero
    for t, delta in merged:
        if t > t_prev:
            if intervals and intervals[-1][2] == k:
                intervals[-1] = (intervals[-1][0], t, k)
            else:
                intervals.append((t_prev, t, k))
        k += delta
        t_prev = t
    if t_prev < horizon:
        if intervals and intervals[-1][2] == k:
            intervals[-1] = (intervals[-1][0], horizon, k)
        else:
            intervals.append((t_prev, horizon, k))

    points = [(zero, zero)]
    total = zero
    for t0, t1, k in intervals:
        total = total + k * (t1 - t0)
        points.append((t1, total))
    curve = PiecewiseLinearCurve(points)
    k_intervals = tuple(KInterval(side, t0, t1, k) for t0, t1, k in intervals)
    return curve, k_intervals


def _combine_sides(right, left, right_iv, left_iv, system: BarrierSystem):
    """Total curve and k-intervals from the two independent side sweeps."""
    bounds = sorted({t for iv in right_iv + left_iv for t in (iv.t_start, iv.t_end)})
    intervals = []
    ri = li = 0
    for t0, t1 in zip(bounds, bounds[1:]):
        while right_iv[ri].t_end <= t0 and ri < len(right_iv) - 1:
            ri += 1
        while left_iv[li].t_end <= t0 and li < len(left_iv) - 1:
            li += 1
        k = right_iv[ri].k + left_iv[li].k
        if intervals and intervals[-1][2] == k:
            intervals[-1] = (intervals[-1][0], t1, k)
        else:
            intervals.append((t0, t1, k))
    points = [(system.zero, system.zero)]
    for t0, t1, k in intervals:
        points.append((t1, right.value_at(t1) + left.value_at(t1)))
    curve = PiecewiseLinearCurve(points)
    k_intervals = tuple(KInterval(TOTAL, t0, t1, k) for t0, t1, k in intervals)
    return curve, k_intervals


def consumption_curve(
    system: BarrierSystem, horizon=None, truncated: bool = False
) -> ConsumptionCurves:
    """Consumption curves B(t) for both sides and their sum, with k-intervals.

    ``horizon`` defaults to the arrival at the earliest side's last top.  An
    explicit horizon beyond the valid horizon requires ``truncated=True``:
    past that point a longer instance of the same construction would burn
    differently.
    """
    if horizon is None:
        horizon = default_horizon(system)
        if horizon is None:
            raise ValueError("system has no verticals; specify an explicit horizon")
        truncated = True
    else:
        horizon = system.number(horizon)
    if horizon <= 0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    bound = valid_horizon(system)
    if bound is not None and horizon > bound and not truncated:
        raise ValueError(
            f"horizon {horizon} exceeds the valid horizon {bound}; "
            "pass truncated=True to simulate the truncated system anyway"
        )
    right, right_iv = _sweep(_side_ramps(system, RIGHT, horizon), horizon, RIGHT, system)
    left, left_iv = _sweep(_side_ramps(system, LEFT, horizon), horizon, LEFT, system)
    total, total_iv = _combine_sides(right, left, right_iv, left_iv, system)
    return ConsumptionCurves(total, left, right, right_iv + left_iv + total_iv)


def side_intervals(curves: ConsumptionCurves, side: str) -> tuple:
    return tuple(iv for iv in curves.intervals if iv.side == side)


# -- consumption ratio -----------------------------------------------------------


def ratio_maxima(curve: PiecewiseLinearCurve, valid_horizon=None, speed=None) -> RatioReport:
    """Local maxima and supremum of Q(t) = B(t)/t over (0, valid_horizon].

    Q is monotone between breakpoints, so a breakpoint is a local maximum
    iff the incoming slope exceeds Q(t) and the outgoing slope does not.
    Q(0) is taken as 0.
    """
    pts = curve.points
    if len(pts) < 2:
        raise ValueError("empty curve")
    bound = curve.end if valid_horizon is None else valid_horizon
    if bound > curve.end:
        bound = curve.end
    if bound <= curve.start:
        raise ValueError(f"valid horizon {bound} not inside curve domain")

    maxima = []
    sup = None
    sup_time = None

    def consider(t, q):
        nonlocal sup, sup_time
        if sup is None or q > sup:
            sup, sup_time = q, t

    for j in range(1, len(pts) - 1):
        t, v = pts[j]
        if t <= 0 or t > bound:
            continue
        q = v / t
        consider(t, q)
        t0, v0 = pts[j - 1]
        t1, v1 = pts[j + 1]
        k_in = (v - v0) / (t - t0)
        k_out = (v1 - v) / (t1 - t)
        if k_in > q >= k_out:
            maxima.append((t, q))
    consider(bound, curve.value_at(bound) / bound)

    feasible = violation = None
    if speed is not None:
        feasible, violation = _feasibility(curve, speed, bound)
    return RatioReport(
        local_maxima=tuple(maxima),
        supremum=sup,
        sup_time=sup_time,
        valid_horizon=bound,
        feasible_for=speed,
        feasible=feasible,
        earliest_violation=violation,
    )


def _feasibility(curve: PiecewiseLinearCurve, speed, bound):
    """B(t) <= speed*t on (0, bound]?  B - speed*t is linear per segment, so
    checking segment endpoints (plus the bound itself) is exhaustive."""
    prev_t, prev_v = curve.points[0]
    for t, v in curve.points[1:]:
        t_chk, v_chk = (t, v) if t <= bound else (bound, curve.value_at(bound))
        if v_chk > speed * t_chk:
            k = (v - prev_v) / (t - prev_t)
            # first upward crossing of B(t) = speed*t inside (prev_t, t_chk]
            if prev_v == speed * prev_t:
                return False, prev_t
            t_star = (prev_v - k * prev_t) / (speed - k)
            return False, t_star
        if t >= bound:
            break
        prev_t, prev_v = t, v
    return True, None


def check_speed(system: BarrierSystem, speed, horizon=None, truncated: bool = False) -> SpeedCheck:
    """Feasibility of build speed ``speed``: B(t) <= speed*t up to the horizon."""
    speed = system.number(speed)
    if speed <= 0:
        raise ValueError(f"speed must be > 0, got {speed}")
    curves = consumption_curve(system, horizon, truncated=truncated)
    end = curves.total.end
    feasible, violation = _feasibility(curves.total, speed, end)
    return SpeedCheck(feasible=feasible, speed=speed, horizon=end, earliest_violation=violation)


def ratio_report(system: BarrierSystem, horizon=None, speed=None, truncated: bool = False):
    """Convenience wrapper: simulate, then analyze Q over the valid horizon."""
    curves = consumption_curve(system, horizon, truncated=truncated)
    bound = valid_horizon(system)
    if speed is not None:
        speed = system.number(speed)
    report = ratio_maxima(curves.total, bound, speed=speed)
    return curves, report


# -- analytic k-interval cycle -----------------------------------------------------


def predict_intervals(system: BarrierSystem, side: str, index: int) -> list:
    """Analytic (length, k) cycle following the top of vertical ``index`` (1-based).

    Requires the side to satisfy the growth conditions (each gap at least
    the previous height, heights at least doubling); the cycle is then
    one 0-interval of the barrier's own height, a 1-interval along the next
    gap, a 3-interval of the same height again, and a closing 1-interval up
    the next barrier.  Zero-length entries are dropped.
    """
    report = validate(system)
    side_check = report.right if side == RIGHT else report.left
    if not side_check.conditions7:
        raise ValueError(
            f"{side} side violates the growth conditions at barrier "
            f"{side_check.conditions7_violation}"
        )
    pairs = system.pairs(side)
    if not 1 <= index <= len(pairs) - 1:
        raise ValueError(f"cycle index must be in [1, {len(pairs) - 1}], got {index}")
    height = pairs[index - 1][1]
    next_gap, next_height = pairs[index]
    entries = [
        (height, 0),
        (next_gap - height, 1),
        (height, 3),
        (next_height - 2 * height, 1),
    ]
    return [(length, k) for length, k in entries if length > 0]


# -- exports -----------------------------------------------------------------------


def curve_to_csv(curves: ConsumptionCurves) -> str:
    """Breakpoint rows of the total curve: t, B_total, B_left, B_right, k_total."""
    totals = side_intervals(curves, TOTAL)
    k_at = {iv.t_start: iv.k for iv in totals}
    last_k = totals[-1].k if totals else 0
    lines = ["t,B_total,B_left,B_right,k_total"]
    for t, v in curves.total.points:
        k = k_at.get(t, last_k)
        lines.append(
            f"{float(t)!r},{float(v)!r},{float(curves.left.value_at(t))!r},"
            f"{float(curves.right.value_at(t))!r},{k}"
        )
    return "\n".join(lines) + "\n"


def intervals_to_document(curves: ConsumptionCurves, mode: str) -> dict:
    doc = {}
    for side in (RIGHT, LEFT, TOTAL):
        doc[side] = [
            {
                "t_start": render_number(iv.t_start, mode),
                "t_end": render_number(iv.t_end, mode),
                "k": iv.k,
            }
            for iv in side_intervals(curves, side)
        ]
    return doc


def report_to_document(report: RatioReport, mode: str) -> dict:
    def num(x):
        return None if x is None else render_number(x, mode)

    return {
        "local_maxima": [{"t": num(t), "q": num(q)} for t, q in report.local_maxima],
        "supremum": num(report.supremum),
        "sup_time": num(report.sup_time),
        "valid_horizon": num(report.valid_horizon),
        "feasible_for": num(report.feasible_for),
        "feasible": report.feasible,
        "earliest_violation": num(report.earliest_violation),
    }
