"""Exact L1 geodesic distances from the origin among vertical barriers.

The fire front at time t is the set of points whose shortest
non-barrier-crossing path from the origin has length t.  Within one side of
the origin an optimal path never reverses horizontal direction: revisiting a
vertical line costs horizontal length with no vertical savings in L1.  Every
distance therefore reduces to

    |x| + y + 2 * forced_descent(heights between origin and x, y)

where the forced descent is the minimal total downward movement an
x-monotone path needs to clear the given barrier heights and end at height
y.  Per-face arrival profiles are piecewise linear in arclength with slopes
exactly +-1 (the front moves at unit speed along any face it consumes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .model import LEFT, RIGHT, SIDES, BarrierSystem

GROUND = "ground"
VERTICAL_LEFT = "vertical_left"    # face toward the origin
VERTICAL_RIGHT = "vertical_right"  # face away from the origin


class Point(NamedTuple):
    x: object
    y: object


def forced_descent(heights, terminal_height):
    """Minimal total downward movement clearing ``heights`` in order, ending at ``terminal_height``.

    Returns sum_i max(0, h_i - max(M_{i+1}, terminal_height)) where M_{i+1}
    is the maximum height strictly after i (0 if none).  Equals
    max(0, max(heights) - terminal_height): only descents from running peaks
    are ever forced.
    """
    heights = list(heights)
    if terminal_height < 0:
        raise ValueError(f"terminal height must be >= 0, got {terminal_height}")
    total = 0
    suffix_max = 0
    # accumulate from the back so the suffix maximum is available
    for h in reversed(heights):
        floor = suffix_max if suffix_max > terminal_height else terminal_height
        if h > floor:
            total = total + (h - floor)
        if h > suffix_max:
            suffix_max = h
    return total


def _side_of(x) -> str:
    return RIGHT if x >= 0 else LEFT


def geodesic_distance(system: BarrierSystem, point) -> object:
    """Arrival time of the fire at ``point`` (min over faces for on-barrier points)."""
    x, y = point
    if y < 0:
        raise ValueError(f"point must lie in the upper half-plane, got y={y}")
    ax = x if x >= 0 else -x
    side = _side_of(x)
    feet = system.feet(side)
    heights = system.heights(side)
    before = [h for pos, h in zip(feet, heights) if pos < ax]
    direct = ax + y + 2 * forced_descent(before, y)
    # points on a vertical barrier see both faces; the top is the pivot
    for pos, h in zip(feet, heights):
        if pos == ax and y <= h:
            clearance = max(before) if before else 0
            top = pos + h + 2 * forced_descent(before, h)
            over_the_top = top + (h - y)
            return direct if direct <= over_the_top else over_the_top
    return direct


@dataclass(frozen=True)
class FaceArrivalProfile:
    """Arrival time along one face as a piecewise-linear function of arclength.

    ``points`` maps the arclength parameter (height for vertical faces,
    absolute horizontal offset for ground segments) to arrival time; slopes
    between breakpoints are exactly +1 or -1.
    """

    side: str
    kind: str
    index: int  # 1-based barrier index; ground segment i lies before barrier i+1
    points: tuple

    def arrival(self, param):
        pts = self.points
        if not (pts[0][0] <= param <= pts[-1][0]):
            raise ValueError(f"parameter {param} outside [{pts[0][0]}, {pts[-1][0]}]")
        for (p0, t0), (p1, t1) in zip(pts, pts[1:]):
            if param <= p1:
                if p1 == p0:
                    return t0
                return t0 + (t1 - t0) * (param - p0) / (p1 - p0)
        return pts[-1][1]

    @property
    def length(self):
        return self.points[-1][0] - self.points[0][0]


def _clip_points(points: list, horizon) -> list | None:
    """Restrict a piecewise-linear (param, time) chain to time <= horizon."""
    clipped: list = []
    for (p0, t0), (p1, t1) in zip(points, points[1:]):
        lo_in, hi_in = t0 <= horizon, t1 <= horizon
        if lo_in and not clipped:
            clipped.append((p0, t0))
        if lo_in and hi_in:
            clipped.append((p1, t1))
        elif lo_in and not hi_in:
            # slope is +-1, so the crossing parameter is exact
            pc = p0 + (horizon - t0) * (1 if t1 > t0 else -1)
            clipped.append((pc, horizon))
        elif not lo_in and hi_in:
            pc = p0 + (t0 - horizon) * (1 if t1 < t0 else -1)
            clipped.append((pc, horizon))
            clipped.append((p1, t1))
    if len(clipped) < 2:
        return None
    return clipped


def face_arrival_profiles(system: BarrierSystem, side: str, horizon) -> list:
    """All face profiles of one side, truncated at the horizon.

    Vertical barrier i gets a near face (toward the origin: the front hits
    it at the clearance height of everything before and spreads both ways)
    and a far face (reached over the top).  Each horizontal segment,
    including the stretch under the head start and the trailing ray, has a
    single upward-sloping profile.
    """
    if side not in SIDES:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if horizon <= 0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    profiles = []
    pairs = system.pairs(side)
    zero = system.zero

    pos = zero
    clearance = zero
    for i, (gap, height) in enumerate(pairs, start=1):
        foot = pos + gap
        ground = _clip_points(
            [(pos, pos + 2 * clearance), (foot, foot + 2 * clearance)], horizon
        )
        if ground:
            profiles.append(FaceArrivalProfile(side, GROUND, i - 1, tuple(ground)))
        if clearance <= 0:
            near = [(zero, foot), (height, foot + height)]
        elif clearance >= height:
            near = [(zero, foot + 2 * clearance), (height, foot + 2 * clearance - height)]
        else:
            near = [
                (zero, foot + 2 * clearance),
                (clearance, foot + clearance),
                (height, foot + height),
            ]
        top_arrival = near[-1][1]
        far = [(zero, top_arrival + height), (height, top_arrival)]
        near = _clip_points(near, horizon)
        if near:
            profiles.append(FaceArrivalProfile(side, VERTICAL_LEFT, i, tuple(near)))
        far = _clip_points(far, horizon)
        if far:
            profiles.append(FaceArrivalProfile(side, VERTICAL_RIGHT, i, tuple(far)))
        pos = foot
        clearance = clearance if clearance > height else height

    # trailing ray: arrival = x + 2*clearance, truncated where it meets the horizon
    ray_end = horizon - 2 * clearance
    if ray_end > pos:
        profiles.append(
            FaceArrivalProfile(
                side,
                GROUND,
                len(pairs),
                ((pos, pos + 2 * clearance), (ray_end, horizon)),
            )
        )
    return profiles
