"""Brute-force grid validation of the exact geodesics and consumption curves.

The upper half-plane is discretized with nodes at integer multiples of the
cell size; the fire source sits at the origin node.  All edge weights equal
the cell size, so breadth-first search reproduces L1 distances exactly and no
priority queue is needed.  A vertical barrier blocks every node strictly
below its top on its grid column (equivalently: every edge incident to an
interior barrier node), which realizes zero-thickness segments: paths may
graze the top node but cannot pass through the column below it.  Nodes on
the ground row stay passable because the fire travels along the upper face
of the horizontal barrier.

When barrier coordinates are integer multiples of the cell size the BFS
arrival times at free nodes agree with the exact geodesic; otherwise
barriers snap to the nearest column (within half a cell).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import LEFT, RIGHT, BarrierSystem
from .simulate import PiecewiseLinearCurve


@dataclass(frozen=True)
class GridScene:
    """Discretized upper half-plane: passability mask plus indexing metadata."""

    cell: float
    x_extent: float           # covers [-x_extent, x_extent]
    y_extent: float           # covers [0, y_extent]
    passable: np.ndarray      # bool, shape (ny, nx), row 0 is the ground
    source_col: int           # column index of x = 0

    @property
    def shape(self):
        return self.passable.shape

    def col(self, x: float) -> int:
        return self.source_col + int(round(x / self.cell))

    def row(self, y: float) -> int:
        return int(round(y / self.cell))

    def in_bounds(self, row: int, col: int) -> bool:
        ny, nx = self.passable.shape
        return 0 <= row < ny and 0 <= col < nx


def build_scene(system: BarrierSystem, cell: float, horizon: float) -> GridScene:
    """Scene covering everything reachable within the horizon plus a margin."""
    if cell <= 0 or horizon <= 0:
        raise ValueError("cell size and horizon must be > 0")
    cell = float(cell)
    horizon = float(horizon)
    steps = int(np.ceil(horizon / cell)) + 2  # margin of two cells all around
    nx = 2 * steps + 1
    ny = steps + 1
    passable = np.ones((ny, nx), dtype=bool)
    scene = GridScene(
        cell=cell,
        x_extent=steps * cell,
        y_extent=steps * cell,
        passable=passable,
        source_col=steps,
    )
    for side, sign in ((RIGHT, 1), (LEFT, -1)):
        for foot, height in zip(system.feet(side), system.heights(side)):
            col = scene.col(sign * float(foot))
            if not 0 <= col < nx:
                continue
            # block nodes strictly below the top; the top node stays open
            top_row = int(np.floor(float(height) / cell - 1e-9)) + 1
            passable[: min(top_row, ny), col] = False
    if not passable[0, scene.source_col]:
        raise ValueError("source node is blocked by a barrier")
    return scene


def grid_arrival(scene: GridScene, max_time: float | None = None) -> np.ndarray:
    """BFS arrival time per node (np.inf where unreachable)."""
    passable = scene.passable
    dist = np.full(scene.shape, -1, dtype=np.int64)
    frontier = np.zeros(scene.shape, dtype=bool)
    frontier[0, scene.source_col] = True
    dist[0, scene.source_col] = 0
    max_level = None if max_time is None else int(np.ceil(max_time / scene.cell)) + 1
    level = 0
    while frontier.any():
        if max_level is not None and level >= max_level:
            break
        nxt = np.zeros(scene.shape, dtype=bool)
        nxt[1:, :] |= frontier[:-1, :]
        nxt[:-1, :] |= frontier[1:, :]
        nxt[:, 1:] |= frontier[:, :-1]
        nxt[:, :-1] |= frontier[:, 1:]
        nxt &= passable
        nxt &= dist < 0
        level += 1
        dist[nxt] = level
        frontier = nxt
    arrival = dist.astype(float) * scene.cell
    arrival[dist < 0] = np.inf
    return arrival


def arrival_at(scene: GridScene, arrival: np.ndarray, x: float, y: float) -> float:
    row, col = scene.row(y), scene.col(x)
    if not scene.in_bounds(row, col):
        raise ValueError(f"point ({x}, {y}) outside the scene extent")
    return float(arrival[row, col])


@dataclass(frozen=True)
class SampledCurve:
    """Consumption curve sampled on the grid: values[i] estimates B(times[i])."""

    times: np.ndarray
    values: np.ndarray

    def to_csv(self) -> str:
        lines = ["t,B_sampled"]
        lines.extend(f"{t!r},{v!r}" for t, v in zip(self.times, self.values))
        return "\n".join(lines) + "\n"


def _min_neighbor(arrival: np.ndarray, scene: GridScene, rows, cols) -> float:
    best = np.inf
    for r in rows:
        for c in cols:
            if scene.in_bounds(r, c) and scene.passable[r, c]:
                a = arrival[r, c]
                if a < best:
                    best = a
    return best


def grid_consumption(
    system: BarrierSystem, cell: float, horizon: float, sides=(RIGHT, LEFT)
) -> SampledCurve:
    """Sampled consumption curve: barrier points spaced one cell apart, the
    head-start stretch excluded, each consumed at its minimum adjacent-node
    arrival; B is sampled at the cell size in t.  ``sides`` restricts the
    tally to one side for side-resolved comparisons."""
    scene = build_scene(system, cell, horizon)
    arrival = grid_arrival(scene, max_time=horizon + 2 * cell)
    head = float(system.head_start)
    consumed_at = []

    for side, sign in ((RIGHT, 1), (LEFT, -1)):
        if side not in sides:
            continue
        feet = [float(f) for f in system.feet(side)]
        heights = [float(h) for h in system.heights(side)]
        # vertical barriers: midpoints along the height, flanked by both columns;
        # points with arrival beyond the horizon can never be counted, and
        # arrival >= foot + y, so the sampled stretch is capped accordingly
        for foot, height in zip(feet, heights):
            if foot >= horizon:
                continue
            col = scene.col(sign * foot)
            reachable = min(height, horizon - foot)
            n = max(1, int(round(reachable / cell)))
            for j in range(n):
                y_mid = (j + 0.5) * cell
                if y_mid > height:
                    break
                rows = (scene.row(y_mid - 0.5 * cell), scene.row(y_mid + 0.5 * cell))
                consumed_at.append(_min_neighbor(arrival, scene, rows, (col - 1, col + 1)))
        # ground: midpoints from the head-start boundary out to the horizon
        x_max = min(horizon, scene.x_extent - cell)
        n_ground = int(np.floor((x_max - head) / cell))
        start = int(np.floor(head / cell))
        for j in range(start, start + max(0, n_ground) + 1):
            x_mid = (j + 0.5) * cell
            if x_mid < head or x_mid > x_max:
                continue
            cols = (scene.col(sign * (x_mid - 0.5 * cell)), scene.col(sign * (x_mid + 0.5 * cell)))
            consumed_at.append(_min_neighbor(arrival, scene, (0,), cols))

    consumed_at = np.sort(np.asarray(consumed_at))
    times = np.arange(0.0, horizon + 0.5 * cell, cell)
    counts = np.searchsorted(consumed_at, times, side="right")
    return SampledCurve(times=times, values=counts * cell)


def consumption_tolerance(system: BarrierSystem, cell: float) -> float:
    """Acceptance bound for |sampled - exact|: two cells per face plus two."""
    faces = len(system.right) + len(system.left)
    return 2.0 * cell * (faces + 2)


@dataclass(frozen=True)
class OracleComparison:
    max_deviation: float
    at_time: float
    tolerance: float
    passed: bool
    first_exceedance: float | None = None

    def to_document(self) -> dict:
        return {
            "max_deviation": self.max_deviation,
            "at_time": self.at_time,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "first_exceedance": self.first_exceedance,
        }


def compare(exact: PiecewiseLinearCurve, sampled: SampledCurve, tolerance: float) -> OracleComparison:
    """Max |sampled - exact| over the common sample times, judged against ``tolerance``."""
    lo = float(exact.start)
    hi = float(exact.end)
    mask = (sampled.times >= lo) & (sampled.times <= hi)
    if not mask.any():
        raise ValueError("curves share no common time range")
    worst = -1.0
    worst_t = lo
    first_exceedance = None
    for t, v in zip(sampled.times[mask], sampled.values[mask]):
        dev = abs(v - float(exact.value_at(t)))
        if dev > worst:
            worst, worst_t = dev, float(t)
        if first_exceedance is None and dev > tolerance:
            first_exceedance = float(t)
    return OracleComparison(
        max_deviation=worst,
        at_time=worst_t,
        tolerance=tolerance,
        passed=first_exceedance is None,
        first_exceedance=first_exceedance,
    )
