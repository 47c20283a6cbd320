"""Geodesic distances and face arrival profiles, cross-checked by the grid oracle."""

import random
from fractions import Fraction

import pytest

from firebreak import (
    RATIONAL,
    BarrierSystem,
    build_scene,
    face_arrival_profiles,
    forced_descent,
    geodesic_distance,
    grid_arrival,
    top_arrival_times,
)
from firebreak.oracle import arrival_at


def rational(head_start, right=(), left=()):
    return BarrierSystem(mode=RATIONAL, head_start=head_start, right=right, left=left)


SINGLE = rational(1, right=((1, 17),))
TWO_BARRIER = rational(1, right=((1, 17), (34, 136)))


class TestForcedDescent:
    def test_no_obstacles(self):
        assert forced_descent([], 0) == 0

    def test_single_obstacle_to_ground(self):
        assert forced_descent([17], 0) == 17

    def test_descending_pair(self):
        # descend 1 after the first peak, 2 after the second
        assert forced_descent([3, 2], 0) == 3

    def test_descending_pair_matches_grid_oracle(self):
        # two barriers of heights 3 and 2 at x = 1 and 2; query behind both
        system = rational("1/2", right=((1, 3), (1, 2)))
        scene = build_scene(system, 0.05, 12.0)
        arr = grid_arrival(scene)
        x, y = 3.0, 0.0
        observed = arrival_at(scene, arr, x, y)
        descent = (observed - x - y) / 2
        assert descent == pytest.approx(3.0, abs=1e-9)

    def test_terminal_height_absorbs_descent(self):
        assert forced_descent([5, 2], 3) == 2
        assert forced_descent([2, 5], 7) == 0

    def test_matches_suffix_maximum_form(self):
        rng = random.Random(3)
        for _ in range(200):
            heights = [Fraction(rng.randint(1, 60), 4) for _ in range(rng.randint(0, 6))]
            y = Fraction(rng.randint(0, 80), 4)
            expected = max(heights, default=Fraction(0)) - y
            if expected < 0:
                expected = Fraction(0)
            assert forced_descent(heights, y) == expected

    def test_rejects_negative_terminal(self):
        with pytest.raises(ValueError):
            forced_descent([1], -1)


class TestGeodesicDistance:
    def test_top_of_first_barrier(self, sys17):
        assert geodesic_distance(sys17, (1, 17)) == 18

    def test_vertical_ray_above_origin(self, sys17):
        assert geodesic_distance(sys17, (0, 5)) == 5

    def test_ground_behind_single_barrier(self):
        assert geodesic_distance(SINGLE, (10, 0)) == 44

    def test_ground_behind_single_barrier_matches_grid(self):
        scene = build_scene(SINGLE, 0.25, 48.0)
        arr = grid_arrival(scene)
        assert arrival_at(scene, arr, 10, 0) == pytest.approx(44.0)

    def test_on_barrier_point_takes_face_minimum(self):
        # halfway up the first barrier: crawled from the foot, not over the top
        assert geodesic_distance(SINGLE, (1, 10)) == 11

    def test_left_side_mirrors(self):
        system = rational(1, left=((1, 17),))
        assert geodesic_distance(system, (-10, 0)) == 44

    def test_rejects_lower_half_plane(self, sys17):
        with pytest.raises(ValueError):
            geodesic_distance(sys17, (1, -1))

    def test_lipschitz_within_free_cell(self):
        rng = random.Random(5)
        system = BarrierSystem(
            mode="float", head_start=0.8, right=((1.0, 3.0), (2.5, 7.0)), left=((1.5, 4.0),)
        )
        for _ in range(200):
            x = rng.uniform(1.01, 3.49)  # strictly between the two right feet
            y = rng.uniform(0.0, 6.0)
            dx = rng.uniform(-0.2, 0.2)
            dy = rng.uniform(-0.2, 0.2)
            x2 = min(max(x + dx, 1.01), 3.49)
            y2 = max(y + dy, 0.0)
            d1 = geodesic_distance(system, (x, y))
            d2 = geodesic_distance(system, (x2, y2))
            assert abs(d1 - d2) <= abs(x - x2) + abs(y - y2) + 1e-9


class TestProfiles:
    def test_single_barrier_faces(self):
        profiles = face_arrival_profiles(SINGLE, "right", 100)
        near = next(p for p in profiles if p.kind == "vertical_left")
        far = next(p for p in profiles if p.kind == "vertical_right")
        assert near.points == ((0, 1), (17, 18))       # arrival(y) = 1 + y
        assert far.points == ((0, 35), (17, 18))       # arrival(y) = 35 - y
        assert near.arrival(10) == 11
        assert far.arrival(10) == 25

    def test_second_barrier_near_face_has_contact_vertex(self):
        profiles = face_arrival_profiles(TWO_BARRIER, "right", 300)
        near = [p for p in profiles if p.kind == "vertical_left"][1]
        # arrival(y) = 35 + max(y, 34 - y): fire arrives at the clearance height
        assert near.points == ((0, 69), (17, 52), (136, 171))
        assert near.arrival(0) == 69
        assert near.arrival(17) == 52
        assert near.arrival(100) == 135

    def test_head_start_ground_arrival_is_distance(self, sys17):
        profiles = face_arrival_profiles(sys17, "right", 1000)
        ground0 = next(p for p in profiles if p.kind == "ground" and p.index == 0)
        assert ground0.points == ((0, 0), (1, 1))

    def test_all_slopes_unit(self, sys17):
        for side in ("right", "left"):
            for prof in face_arrival_profiles(sys17, side, 10**6):
                for (p0, t0), (p1, t1) in zip(prof.points, prof.points[1:]):
                    assert abs(t1 - t0) == abs(p1 - p0)

    def test_arrival_at_least_l1_distance(self):
        for prof in face_arrival_profiles(TWO_BARRIER, "right", 10**4):
            feet = TWO_BARRIER.feet("right")
            for p, t in prof.points:
                if prof.kind == "ground":
                    assert t >= p
                else:
                    assert t >= feet[prof.index - 1] + p

    def test_profiles_truncated_at_horizon(self):
        profiles = face_arrival_profiles(TWO_BARRIER, "right", 60)
        for prof in profiles:
            for _, t in prof.points:
                assert t <= 60
        # the tall barrier's near face is clipped around the contact vertex
        near2 = [p for p in profiles if p.kind == "vertical_left" and p.index == 2]
        assert near2 and near2[0].points[0][1] == 60

    def test_telescoping_top_arrivals(self, sys17):
        for side in ("right", "left"):
            feet = sys17.feet(side)
            heights = sys17.heights(side)
            tops = top_arrival_times(sys17, side)
            assert tops == tuple(f + h for f, h in zip(feet, heights))

    def test_far_face_never_earlier_than_near_face(self):
        # the simulator counts consumption from the near face only; this is
        # what makes that sound
        import random

        rng = random.Random(29)
        for _ in range(30):
            pairs = tuple(
                (Fraction(rng.randint(1, 200), 10), Fraction(rng.randint(1, 200), 10))
                for _ in range(rng.randint(1, 5))
            )
            system = rational(Fraction(rng.randint(0, 20), 10), right=pairs)
            profiles = face_arrival_profiles(system, "right", 10**6)
            near = {p.index: p for p in profiles if p.kind == "vertical_left"}
            far = {p.index: p for p in profiles if p.kind == "vertical_right"}
            for idx, nf in near.items():
                ff = far[idx]
                params = {p for p, _ in nf.points} | {p for p, _ in ff.points}
                for y in params:
                    assert ff.arrival(y) >= nf.arrival(y)


class TestGridAgreement:
    def test_random_systems_match_grid(self):
        # grid-aligned random scenes: BFS arrival equals the exact geodesic
        rng = random.Random(17)
        cell = 0.25
        for _ in range(50):
            def side():
                pairs = []
                for _ in range(rng.randint(0, 3)):
                    pairs.append(
                        (Fraction(rng.randint(1, 10), 4), Fraction(rng.randint(1, 12), 4))
                    )
                return tuple(pairs)

            system = rational(Fraction(rng.randint(0, 4), 4), right=side(), left=side())
            horizon = 14.0
            scene = build_scene(system, cell, horizon)
            arr = grid_arrival(scene)
            crossings = len(system.right) + len(system.left)
            tol = 2 * cell + cell * crossings
            for _ in range(30):
                x = Fraction(rng.randint(-40, 40), 4)
                y = Fraction(rng.randint(0, 40), 4)
                if any(
                    abs(x) == f and y < h
                    for s_ in ("right", "left")
                    for f, h in zip(system.feet(s_), system.heights(s_))
                ):
                    continue  # nodes inside barriers are blocked by design
                exact = geodesic_distance(system, (x, y))
                if exact > horizon:
                    continue
                observed = arrival_at(scene, arr, float(x), float(y))
                assert abs(observed - float(exact)) <= tol
