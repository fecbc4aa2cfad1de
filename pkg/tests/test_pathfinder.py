import math

import numpy as np
import pytest

from staa.geometry import Polygon, Pose, Vec2
from staa.gridmap import frame_for_agent
from staa.pathfinder import (Path, PathQuery, clip_to_local,
                             dynamic_or_static_path, shortest_path)

import oracles


def rand_scene(rng, n_obs=4, spread=4.0):
    """Random small scene of disjoint-ish convex obstacles plus free
    start/goal positions."""
    polys = []
    tries = 0
    while len(polys) < n_obs and tries < 200:
        tries += 1
        cx, cy = rng.uniform(-spread / 2, spread / 2, 2)
        n = int(rng.integers(3, 7))
        r = rng.uniform(0.2, 0.6)
        cand = Polygon.regular(n, r, cx, cy, rng.uniform(0, 2 * math.pi))
        sh = oracles.to_shapely(cand)
        if all(sh.distance(oracles.to_shapely(p)) > 0.05 for p in polys):
            polys.append(cand)

    def free_point():
        while True:
            p = Vec2(*rng.uniform(-spread / 2 - 1, spread / 2 + 1, 2))
            if all(oracles.to_shapely(q).distance(oracles.Point(p.x, p.y)) > 0.05
                   for q in polys):
                return p

    return polys, free_point(), free_point()


class TestShortestPathBasics:
    def test_empty_scene_straight(self):
        p = shortest_path(Vec2(0, 0), Vec2(3, 4), [])
        assert len(p.waypoints) == 2
        assert p.total_length == pytest.approx(5.0)

    def test_start_equals_goal(self):
        p = shortest_path(Vec2(1, 1), Vec2(1, 1), [])
        assert len(p.waypoints) == 1
        assert p.total_length == 0.0

    def test_single_square_detour(self):
        sq = Polygon.rectangle(1.5, 0.0, 1.0, 1.0)
        p = shortest_path(Vec2(0, 0), Vec2(3, 0), [sq])
        assert p is not None
        assert p.total_length > 3.0
        ref_len, _ = oracles.visibility_dijkstra_oracle((0, 0), (3, 0), [sq])
        assert p.total_length == pytest.approx(ref_len, rel=1e-9)
        dense = oracles.dense_grid_path_length((0, 0), (3, 0), [sq])
        assert abs(p.total_length - dense) <= 0.01 * dense

    def test_unreachable_none(self):
        # goal sealed inside a box of walls
        walls = [Polygon.rectangle(0, 1.0, 2.4, 0.4),
                 Polygon.rectangle(0, -1.0, 2.4, 0.4),
                 Polygon.rectangle(1.0, 0, 0.4, 2.4),
                 Polygon.rectangle(-1.0, 0, 0.4, 2.4)]
        assert shortest_path(Vec2(-3, 0), Vec2(0, 0), walls) is None

    def test_start_inside_projected_out(self):
        sq = Polygon.rectangle(0.0, 0.0, 1.0, 1.0)
        p = shortest_path(Vec2(0.1, 0.0), Vec2(3, 0), [sq])
        assert p is not None
        # first waypoint pushed to just outside the polygon
        w0 = p.waypoints[0]
        assert not oracles.to_shapely(sq).contains(oracles.Point(w0.x, w0.y))

    def test_segment_orientations(self):
        p = shortest_path(Vec2(0, 0), Vec2(2, 2), [])
        assert p.segment_orientations[0] == pytest.approx(math.pi / 4)


class TestShortestPathOracles:
    def test_matches_exhaustive_visibility_graph(self):
        rng = np.random.default_rng(42)
        agree = 0
        for _ in range(50):
            polys, s, g = rand_scene(rng, n_obs=int(rng.integers(1, 6)))
            got = shortest_path(s, g, polys)
            ref_len, _ = oracles.visibility_dijkstra_oracle((s.x, s.y), (g.x, g.y),
                                                            polys)
            if got is None:
                assert math.isinf(ref_len)
            else:
                assert got.total_length == pytest.approx(ref_len, rel=1e-6)
                agree += 1
        assert agree >= 40

    def test_full_graph_mode_agrees(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            polys, s, g = rand_scene(rng, n_obs=3)
            lazy = shortest_path(s, g, polys)
            full = shortest_path(s, g, polys, full_graph=True)
            if lazy is None:
                assert full is None
            else:
                assert lazy.total_length == pytest.approx(full.total_length,
                                                          rel=1e-9)

    def test_paths_collision_free(self):
        rng = np.random.default_rng(17)
        for _ in range(30):
            polys, s, g = rand_scene(rng, n_obs=4)
            p = shortest_path(s, g, polys)
            if p is None:
                continue
            shp = [oracles.to_shapely(q) for q in polys]
            for a, b in zip(p.waypoints[:-1], p.waypoints[1:]):
                assert oracles.segment_clear_oracle((a.x, a.y), (b.x, b.y), shp)

    def test_adding_obstacle_never_shortens(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            polys, s, g = rand_scene(rng, n_obs=4)
            base = shortest_path(s, g, polys[:2])
            more = shortest_path(s, g, polys)
            if base is None:
                continue
            if more is not None:
                assert more.total_length >= base.total_length - 1e-9


class TestDynamicOrStatic:
    CORRIDOR = [Polygon.rectangle(0.0, 1.0, 6.0, 0.6),
                Polygon.rectangle(0.0, -1.0, 6.0, 0.6)]

    def test_no_dynamics_identical_to_static(self):
        q = PathQuery(Vec2(-2.5, 0), Vec2(2.5, 0), self.CORRIDOR, ())
        path, used_dynamic = dynamic_or_static_path(q)
        ref = shortest_path(Vec2(-2.5, 0), Vec2(2.5, 0), self.CORRIDOR)
        assert used_dynamic is True
        assert path.total_length == pytest.approx(ref.total_length)

    def test_blocking_obstacle_falls_back_to_static(self):
        # sealed room split by a doorway; the plug closes the only passage
        room = [Polygon.rectangle(0, 3.0, 8.4, 0.4),
                Polygon.rectangle(0, -3.0, 8.4, 0.4),
                Polygon.rectangle(4.0, 0, 0.4, 6.4),
                Polygon.rectangle(-4.0, 0, 0.4, 6.4),
                Polygon.rectangle(0.0, 1.75, 0.4, 2.5),
                Polygon.rectangle(0.0, -1.75, 0.4, 2.5)]
        plug = Polygon.rectangle(0.0, 0.0, 1.2, 1.4)
        q = PathQuery(Vec2(-2, 0), Vec2(2, 0), room, (plug,))
        path, used_dynamic = dynamic_or_static_path(q)
        assert used_dynamic is False
        assert path is not None

    def test_adjacent_obstacle_detours(self):
        bump = Polygon.rectangle(0.0, -0.45, 0.5, 0.5)  # narrows the corridor
        q = PathQuery(Vec2(-2.5, 0), Vec2(2.5, 0), self.CORRIDOR, (bump,))
        path, used_dynamic = dynamic_or_static_path(q)
        assert used_dynamic is True
        static_only = shortest_path(Vec2(-2.5, 0), Vec2(2.5, 0), self.CORRIDOR)
        assert path.total_length >= static_only.total_length
        shp = [oracles.to_shapely(bump)]
        for a, b in zip(path.waypoints[:-1], path.waypoints[1:]):
            assert oracles.segment_clear_oracle((a.x, a.y), (b.x, b.y), shp)

    def test_fully_sealed_returns_none(self):
        box = [Polygon.rectangle(0, 1.0, 2.4, 0.4),
               Polygon.rectangle(0, -1.0, 2.4, 0.4),
               Polygon.rectangle(1.0, 0, 0.4, 2.4),
               Polygon.rectangle(-1.0, 0, 0.4, 2.4)]
        q = PathQuery(Vec2(-3, 0), Vec2(0, 0), box, ())
        assert dynamic_or_static_path(q) is None


class TestClipToLocal:
    def test_straight_exit_front(self):
        f = frame_for_agent(Pose(Vec2(0, 0), 0.0))
        path = Path((Vec2(0, 0), Vec2(10, 0)))
        g = clip_to_local(path, f, goal_theta=1.0)
        assert g.x == pytest.approx(6.0)
        assert g.y == pytest.approx(0.0)
        assert g.theta == pytest.approx(0.0)

    def test_goal_inside_keeps_goal_pose(self):
        f = frame_for_agent(Pose(Vec2(0, 0), 0.0))
        path = Path((Vec2(0, 0), Vec2(1, 0)))
        g = clip_to_local(path, f, goal_theta=2.0)
        assert g.x == pytest.approx(1.0)
        assert g.theta == pytest.approx(2.0)

    def test_corner_exit_takes_first_crossing(self):
        f = frame_for_agent(Pose(Vec2(0, 0), 0.0))
        # diagonal path exits the side edge (y=4) before the front (x=6)
        path = Path((Vec2(0, 0), Vec2(8, 8)))
        g = clip_to_local(path, f)
        assert g.y == pytest.approx(4.0)
        assert g.x == pytest.approx(4.0)
        assert g.theta == pytest.approx(math.pi / 4)

    def test_rotated_frame(self):
        f = frame_for_agent(Pose(Vec2(2, 3), math.pi / 2))
        path = Path((Vec2(2, 3), Vec2(2, 30)))  # straight ahead in world
        g = clip_to_local(path, f)
        assert g.x == pytest.approx(2.0)
        assert g.y == pytest.approx(9.0)  # 6 m ahead
        assert g.theta == pytest.approx(math.pi / 2)

    def test_requires_start_inside(self):
        f = frame_for_agent(Pose(Vec2(0, 0), 0.0))
        with pytest.raises(ValueError):
            clip_to_local(Path((Vec2(50, 0), Vec2(60, 0))), f)
