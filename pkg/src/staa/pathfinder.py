"""Any-angle shortest paths over polygon sets via a lazy visibility graph.

Candidate waypoints are the convex corners of the (already inflated)
polygons; graph edges are collision-checked only when the A* search pops
them, which keeps recomputing paths every control cycle affordable. A
full-graph mode validating every edge eagerly exists for oracle testing.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .geometry import PackedPolygons, Polygon, Pose, Vec2
from .gridmap import GridFrame

PROJECT_MARGIN = 1e-3  # push-out distance for starts inside an inflated zone


@dataclass(frozen=True)
class Path:
    """Polyline path with cached segment orientations and total length."""

    waypoints: tuple
    segment_orientations: tuple = field(default=None)
    total_length: float = field(default=None)

    def __post_init__(self):
        wps = tuple(self.waypoints)
        if len(wps) < 1:
            raise ValueError("path needs at least one waypoint")
        angles = []
        length = 0.0
        for a, b in zip(wps[:-1], wps[1:]):
            d = b - a
            angles.append(d.angle())
            length += d.norm()
        object.__setattr__(self, "waypoints", wps)
        object.__setattr__(self, "segment_orientations", tuple(angles))
        object.__setattr__(self, "total_length", length)

    @property
    def start(self) -> Vec2:
        return self.waypoints[0]

    @property
    def goal(self) -> Vec2:
        return self.waypoints[-1]


@dataclass(frozen=True)
class PathQuery:
    start: Vec2
    goal: Vec2
    static_polygons: tuple
    dynamic_polygons: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "static_polygons", tuple(self.static_polygons))
        object.__setattr__(self, "dynamic_polygons", tuple(self.dynamic_polygons))


def project_out(p: Vec2, pack: PackedPolygons, margin: float = PROJECT_MARGIN) -> Vec2:
    """Move a point that lies strictly inside some polygon to just outside
    its boundary (planning must still work when the agent overlaps an
    inflation zone)."""
    q = p
    for _ in range(8):
        moved = False
        for k in range(pack.count):
            lo = pack.starts[k]
            hi = pack.starts[k + 1]
            if K.point_strictly_in_poly(q.x, q.y, pack.vx, pack.vy, lo, hi, K.EPS):
                q = _nearest_boundary_exit(q, pack.vx, pack.vy, lo, hi, margin)
                moved = True
        if not moved:
            return q
    return q


def _nearest_boundary_exit(p, vx, vy, lo, hi, margin):
    best_d = math.inf
    best = None
    n = hi - lo
    for i in range(n):
        a = Vec2(vx[lo + i], vy[lo + i])
        b = Vec2(vx[lo + (i + 1) % n], vy[lo + (i + 1) % n])
        e = b - a
        L2 = e.dot(e)
        t = 0.0 if L2 == 0.0 else min(max((p - a).dot(e) / L2, 0.0), 1.0)
        foot = a + e * t
        d = (p - foot).norm()
        if d < best_d:
            best_d = d
            best = (foot, e)
    foot, e = best
    out_dir = (foot - p)
    if out_dir.norm() < 1e-12:
        # point on the edge itself: step along the outward edge normal
        out_dir = Vec2(e.y, -e.x)
    out_dir = out_dir * (1.0 / out_dir.norm())
    return foot + out_dir * margin


def _candidate_vertices(start: Vec2, goal: Vec2, pack: PackedPolygons,
                        convex_masks):
    """Waypoint arrays: index 0 = start, 1 = goal, then usable corners."""
    xs = [start.x, goal.x]
    ys = [start.y, goal.y]
    for k in range(pack.count):
        lo = int(pack.starts[k])
        hi = int(pack.starts[k + 1])
        mask = convex_masks[k]
        for i in range(hi - lo):
            if not mask[i]:
                continue
            px = pack.vx[lo + i]
            py = pack.vy[lo + i]
            buried = False
            for m in range(pack.count):
                if m == k:
                    continue
                if K.point_strictly_in_poly(px, py, pack.vx, pack.vy,
                                            pack.starts[m], pack.starts[m + 1],
                                            K.EPS):
                    buried = True
                    break
            if not buried:
                xs.append(px)
                ys.append(py)
    return (np.asarray(xs, dtype=np.float64), np.asarray(ys, dtype=np.float64))


def shortest_path(start: Vec2, goal: Vec2, polygons, full_graph: bool = False):
    """Euclidean shortest path over the visibility graph of the polygons.

    Returns a Path, or None when start and goal lie in different free-space
    components. Start/goal strictly inside a polygon are projected out to
    the nearest boundary first.
    """
    polygons = list(polygons)
    pack = PackedPolygons.from_polygons(polygons)
    if (start - goal).norm() == 0.0:
        return Path((start,))
    start = project_out(start, pack)
    goal = project_out(goal, pack)
    masks = [p.convex_vertex_mask() for p in polygons]
    wx, wy = _candidate_vertices(start, goal, pack, masks)
    if full_graph:
        return _full_graph_dijkstra(wx, wy, pack)
    V = len(wx)
    parent = np.empty(V, dtype=np.int32)
    cap = 64 * V + 4096
    length = K.lazy_visibility_astar(start.x, start.y, pack.vx, pack.vy,
                                     pack.starts, wx, wy, parent, cap)
    if length == -2.0:  # queue overflow: retry exhaustively
        return _full_graph_dijkstra(wx, wy, pack)
    if not math.isfinite(length):
        return None
    return _extract(wx, wy, parent)


def _extract(wx, wy, parent) -> Path:
    chain = [1]
    v = int(parent[1])
    while v >= 0:
        chain.append(v)
        v = int(parent[v])
    chain.reverse()
    return Path(tuple(Vec2(float(wx[i]), float(wy[i])) for i in chain))


def _full_graph_dijkstra(wx, wy, pack) -> Path | None:
    """Eagerly validated visibility graph + textbook Dijkstra (oracle mode)."""
    V = len(wx)
    adj = [[] for _ in range(V)]
    for i in range(V):
        for j in range(i + 1, V):
            if not K.seg_blocked_by_set(wx[i], wy[i], wx[j], wy[j],
                                        pack.vx, pack.vy, pack.starts, K.EPS):
                d = math.hypot(wx[j] - wx[i], wy[j] - wy[i])
                adj[i].append((j, d))
                adj[j].append((i, d))
    dist = [math.inf] * V
    par = [-1] * V
    dist[0] = 0.0
    pq = [(0.0, 0)]
    done = [False] * V
    while pq:
        d, u = heapq.heappop(pq)
        if done[u]:
            continue
        done[u] = True
        if u == 1:
            break
        for w, l in adj[u]:
            nd = d + l
            if nd < dist[w]:
                dist[w] = nd
                par[w] = u
                heapq.heappush(pq, (nd, w))
    if not done[1]:
        return None
    parent = np.asarray(par, dtype=np.int32)
    return _extract(wx, wy, parent)


def dynamic_or_static_path(q: PathQuery):
    """Shortest path over statics plus dynamics, falling back to a
    static-only path when moving obstacles seal the route.

    Returns (path, used_dynamic) or None when even the static query fails.
    """
    both = list(q.static_polygons) + list(q.dynamic_polygons)
    path = shortest_path(q.start, q.goal, both)
    if path is not None:
        return path, True
    path = shortest_path(q.start, q.goal, list(q.static_polygons))
    if path is not None:
        return path, False
    return None


def clip_to_local(path: Path, frame: GridFrame, goal_theta: float = None) -> Pose:
    """Intermediate goal: the point where the path first leaves the local
    window, oriented along the crossing segment. A path that stays inside
    yields its final waypoint with the global goal orientation."""
    res = frame.resolution
    xmin, ymin = -frame.offset.x, -frame.offset.y
    xmax = xmin + frame.width_cells * res
    ymax = ymin + frame.height_cells * res
    pts = [frame.world_to_local(w) for w in path.waypoints]

    def inside(p):
        return xmin <= p.x <= xmax and ymin <= p.y <= ymax

    if not inside(pts[0]):
        raise ValueError("path must start inside the local window")
    for i in range(len(pts) - 1):
        p, qp = pts[i], pts[i + 1]
        if inside(qp):
            continue
        t = _exit_param(p, qp, xmin, xmax, ymin, ymax)
        cross_local = p + (qp - p) * t
        cross_world = frame.local_to_world(cross_local)
        return Pose(cross_world, path.segment_orientations[i])
    final = path.waypoints[-1]
    if goal_theta is None:
        goal_theta = path.segment_orientations[-1] if path.segment_orientations else 0.0
    return Pose(final, goal_theta)


def _exit_param(p, q, xmin, xmax, ymin, ymax) -> float:
    """First parameter in [0,1] at which segment p->q leaves the box."""
    t_exit = 1.0
    dx = q.x - p.x
    dy = q.y - p.y
    for d, lo, hi, c in ((dx, xmin, xmax, p.x), (dy, ymin, ymax, p.y)):
        if d > 0:
            t_exit = min(t_exit, (hi - c) / d)
        elif d < 0:
            t_exit = min(t_exit, (lo - c) / d)
    return max(t_exit, 0.0)
