"""Planar geometry: vectors, poses, polygons and collision predicates.

All types are immutable after construction, so they can be shared freely
between concurrently running searches. Angles are radians in (-pi, pi],
distances are meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K

TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Normalize an angle to (-pi, pi]."""
    if not math.isfinite(theta):
        raise ValueError(f"non-finite angle: {theta}")
    w = theta % TWO_PI
    if w > math.pi:
        w -= TWO_PI
    return w


def angle_diff(a: float, b: float) -> float:
    """Magnitude of the wrapped difference a-b, in [0, pi]."""
    return abs(wrap_angle(a - b))


@dataclass(frozen=True)
class Vec2:
    """Immutable planar vector/point."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite vector ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def rotated(self, angle: float) -> "Vec2":
        c = math.cos(angle)
        s = math.sin(angle)
        return Vec2(c * self.x - s * self.y, s * self.x + c * self.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


@dataclass(frozen=True)
class Pose:
    """Position plus heading; theta is normalized to (-pi, pi]."""

    position: Vec2
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", wrap_angle(self.theta))

    @property
    def x(self) -> float:
        return self.position.x

    @property
    def y(self) -> float:
        return self.position.y

    def transform(self, local: Vec2) -> Vec2:
        """Map a point from this pose's frame into the world frame."""
        return self.position + local.rotated(self.theta)


IDENTITY = Pose(Vec2(0.0, 0.0), 0.0)


class Polygon:
    """Simple polygon with counter-clockwise vertex order.

    Convexity is detected once at construction and cached; the packed
    coordinate arrays are reused by the compiled kernels.
    """

    __slots__ = ("vertices", "convex", "_xs", "_ys")

    def __init__(self, vertices):
        verts = [v if isinstance(v, Vec2) else Vec2(float(v[0]), float(v[1]))
                 for v in vertices]
        if len(verts) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for a, b in zip(verts, verts[1:] + verts[:1]):
            if (a - b).norm() < 1e-12:
                raise ValueError("consecutive duplicate vertices")
        area = _signed_area(verts)
        if area <= 0.0:
            raise ValueError(f"vertices must be counter-clockwise (area={area:g})")
        self.vertices = tuple(verts)
        self._xs = np.array([v.x for v in verts], dtype=np.float64)
        self._ys = np.array([v.y for v in verts], dtype=np.float64)
        self.convex = _is_convex(verts)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Polygon({len(self.vertices)} verts, convex={self.convex})"

    @property
    def area(self) -> float:
        return _signed_area(self.vertices)

    def centroid(self) -> Vec2:
        a = 0.0
        cx = 0.0
        cy = 0.0
        vs = self.vertices
        for i in range(len(vs)):
            j = (i + 1) % len(vs)
            w = vs[i].cross(vs[j])
            a += w
            cx += (vs[i].x + vs[j].x) * w
            cy += (vs[i].y + vs[j].y) * w
        a *= 0.5
        return Vec2(cx / (6.0 * a), cy / (6.0 * a))

    def world_coords(self, pose: Pose = IDENTITY):
        """Vertex coordinate arrays (xs, ys) transformed by the pose."""
        if pose is IDENTITY or (pose.theta == 0.0 and pose.x == 0.0 and pose.y == 0.0):
            return self._xs, self._ys
        c = math.cos(pose.theta)
        s = math.sin(pose.theta)
        xs = c * self._xs - s * self._ys + pose.x
        ys = s * self._xs + c * self._ys + pose.y
        return xs, ys

    def transformed(self, pose: Pose) -> "Polygon":
        xs, ys = self.world_coords(pose)
        return Polygon(list(zip(xs.tolist(), ys.tolist())))

    def bounding_box(self, pose: Pose = IDENTITY):
        xs, ys = self.world_coords(pose)
        return float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max())

    def convex_vertex_mask(self) -> np.ndarray:
        """Boolean mask of vertices that are convex corners (left turns)."""
        vs = self.vertices
        n = len(vs)
        mask = np.zeros(n, dtype=bool)
        for i in range(n):
            p = vs[i - 1]
            q = vs[i]
            r = vs[(i + 1) % n]
            mask[i] = (q - p).cross(r - q) > 1e-12
        return mask

    @staticmethod
    def rectangle(cx, cy, width, height) -> "Polygon":
        hw = width / 2.0
        hh = height / 2.0
        return Polygon([(cx - hw, cy - hh), (cx + hw, cy - hh),
                        (cx + hw, cy + hh), (cx - hw, cy + hh)])

    @staticmethod
    def regular(n: int, radius: float, cx: float = 0.0, cy: float = 0.0,
                phase: float = 0.0) -> "Polygon":
        pts = []
        for k in range(n):
            a = phase + TWO_PI * k / n
            pts.append((cx + radius * math.cos(a), cy + radius * math.sin(a)))
        return Polygon(pts)


def _signed_area(verts) -> float:
    a = 0.0
    n = len(verts)
    for i in range(n):
        j = (i + 1) % n
        a += verts[i].cross(verts[j])
    return 0.5 * a


def _is_convex(verts) -> bool:
    n = len(verts)
    for i in range(n):
        p = verts[i - 1]
        q = verts[i]
        r = verts[(i + 1) % n]
        if (q - p).cross(r - q) < -1e-12:
            return False
    return True


@dataclass(frozen=True)
class MovingObstacle:
    """Tracked dynamic obstacle under a constant-velocity motion model."""

    shape: Polygon
    pose: Pose
    linear_velocity: Vec2

    def pose_at(self, t: float) -> Pose:
        """Predicted pose after t seconds (pure translation)."""
        return Pose(self.pose.position + self.linear_velocity * t, self.pose.theta)

    def world_coords(self, t: float = 0.0):
        return self.shape.world_coords(self.pose_at(t))


# ---------------------------------------------------------------------------
# packed polygon sets for the kernels


class PackedPolygons:
    """CSR-packed polygon set shared with the numba kernels."""

    __slots__ = ("vx", "vy", "starts", "count")

    def __init__(self, coord_pairs):
        xs_list = []
        ys_list = []
        starts = [0]
        for xs, ys in coord_pairs:
            xs_list.append(np.asarray(xs, dtype=np.float64))
            ys_list.append(np.asarray(ys, dtype=np.float64))
            starts.append(starts[-1] + len(xs))
        if xs_list:
            self.vx = np.ascontiguousarray(np.concatenate(xs_list))
            self.vy = np.ascontiguousarray(np.concatenate(ys_list))
        else:
            self.vx = np.empty(0, dtype=np.float64)
            self.vy = np.empty(0, dtype=np.float64)
        self.starts = np.asarray(starts, dtype=np.int32)
        self.count = len(coord_pairs)

    @staticmethod
    def from_polygons(polygons, poses=None) -> "PackedPolygons":
        if poses is None:
            return PackedPolygons([p.world_coords() for p in polygons])
        return PackedPolygons([p.world_coords(q) for p, q in zip(polygons, poses)])

    @staticmethod
    def from_obstacles(obstacles, t: float = 0.0) -> "PackedPolygons":
        return PackedPolygons([o.world_coords(t) for o in obstacles])


EMPTY_PACK = PackedPolygons([])


# ---------------------------------------------------------------------------
# collision predicates


def sat_collide(a: Polygon, pose_a: Pose = IDENTITY,
                b: Polygon = None, pose_b: Pose = IDENTITY) -> bool:
    """Separating-axis overlap test for two convex polygons.

    Touching counts as collision. Raises ValueError for non-convex input;
    use corner_collide for those.
    """
    if not a.convex or not b.convex:
        raise ValueError("sat_collide requires convex polygons")
    ax, ay = a.world_coords(pose_a)
    bx, by = b.world_coords(pose_b)
    return bool(K.sat_overlap(ax, ay, bx, by))


def corner_collide(a: Polygon, pose_a: Pose = IDENTITY,
                   b: Polygon = None, pose_b: Pose = IDENTITY) -> bool:
    """Approximate overlap test: does either polygon contain a vertex of
    the other? Misses overlaps where no corner is contained (e.g. two thin
    rectangles crossing plus-sign style); dense hulls avoid that case.
    """
    ax, ay = a.world_coords(pose_a)
    bx, by = b.world_coords(pose_b)
    return bool(K.corner_overlap(ax, ay, bx, by, K.EPS))


def point_in_polygon(p: Vec2, poly: Polygon, pose: Pose = IDENTITY) -> bool:
    """Even-odd containment; boundary points count as inside."""
    xs, ys = poly.world_coords(pose)
    return bool(K.point_in_poly(p.x, p.y, xs, ys, 0, len(xs), K.EPS))


def distance_to_set(p: Vec2, obstacles, t: float = 0.0) -> float:
    """Distance from p to the nearest edge or vertex over all obstacles
    predicted at time t; 0 if p lies inside any of them, inf for an empty
    set."""
    if not obstacles:
        return math.inf
    pack = PackedPolygons.from_obstacles(obstacles, t)
    return float(K.dist_to_polyset(p.x, p.y, pack.vx, pack.vy, pack.starts))


def segment_polygon_intersect(a: Vec2, b: Vec2, poly: Polygon,
                              pose: Pose = IDENTITY) -> bool:
    """True iff the open segment (a, b) passes through the polygon interior.

    Grazing a vertex or sliding along an edge does not block: shortest paths
    are allowed to turn exactly at inflated corners.
    """
    if (a - b).norm() == 0.0:
        raise ValueError("degenerate segment")
    xs, ys = poly.world_coords(pose)
    return bool(K.seg_blocked_by_poly(a.x, a.y, b.x, b.y, xs, ys, 0, len(xs), K.EPS))


# ---------------------------------------------------------------------------
# inflation


ARC_POINTS_PER_CORNER = 8


def inflate(poly: Polygon, radius: float) -> Polygon:
    """Grow a polygon outward by ``radius``.

    Edges are offset exactly; each convex corner is rounded by an 8-segment
    tangent fan circumscribing the offset circle, so the result contains
    the exact Minkowski sum with the disc (corner overshoot stays below 1%
    of the radius for right angles). Reflex corners use the mitered
    intersection of the adjacent offset edges.
    """
    if radius <= 0.0:
        raise ValueError("inflation radius must be > 0")
    vs = poly.vertices
    n = len(vs)
    out = []
    for i in range(n):
        prev = vs[i - 1]
        cur = vs[i]
        nxt = vs[(i + 1) % n]
        d_in = cur - prev
        d_out = nxt - cur
        li = d_in.norm()
        lo = d_out.norm()
        n_in = Vec2(d_in.y / li, -d_in.x / li)      # outward normal (CCW poly)
        n_out = Vec2(d_out.y / lo, -d_out.x / lo)
        cross = d_in.cross(d_out)
        if cross > 1e-12:
            # convex corner: vertices are the intersections of consecutive
            # tangent lines to the offset circle (first/last tangents are
            # the adjacent offset edges themselves)
            a0 = n_in.angle()
            sweep = wrap_angle(n_out.angle() - a0)
            if sweep < 0.0:
                sweep += TWO_PI
            gap = sweep / ARC_POINTS_PER_CORNER
            rr = radius / math.cos(0.5 * gap)
            for k in range(ARC_POINTS_PER_CORNER):
                a = a0 + gap * (k + 0.5)
                out.append(cur + Vec2(math.cos(a), math.sin(a)) * rr)
        elif cross < -1e-12:
            # reflex corner: offset-line intersection, capped against spikes
            p1 = cur + n_in * radius
            p2 = cur + n_out * radius
            den = d_in.cross(d_out)
            t = (p2 - p1).cross(d_out) / den
            m = p1 + d_in * t
            if (m - cur).norm() > 4.0 * radius:
                out.append(p1)
                out.append(p2)
            else:
                out.append(m)
        else:
            out.append(cur + n_in * radius)
    # drop near-duplicate consecutive points introduced by tiny sweeps
    cleaned = []
    for v in out:
        if not cleaned or (v - cleaned[-1]).norm() > 1e-9:
            cleaned.append(v)
    if (cleaned[0] - cleaned[-1]).norm() <= 1e-9:
        cleaned.pop()
    return Polygon(cleaned)


def inflate_miter(poly: Polygon, radius: float) -> Polygon:
    """Coarse conservative inflation: one mitered point per corner.

    Keeps the vertex count unchanged, which keeps visibility graphs small;
    over-covers convex corners by up to ``radius*(1/cos(pi/4)-1)`` for right
    angles. Used by the path planners, where a conservative margin is fine.
    """
    if radius <= 0.0:
        raise ValueError("inflation radius must be > 0")
    vs = poly.vertices
    n = len(vs)
    out = []
    for i in range(n):
        prev = vs[i - 1]
        cur = vs[i]
        nxt = vs[(i + 1) % n]
        d_in = cur - prev
        d_out = nxt - cur
        li = d_in.norm()
        lo = d_out.norm()
        n_in = Vec2(d_in.y / li, -d_in.x / li)
        n_out = Vec2(d_out.y / lo, -d_out.x / lo)
        bis = n_in + n_out
        bl = bis.norm()
        if bl < 1e-9:
            # 180-degree turn: place two points
            out.append(cur + n_in * radius)
            out.append(cur + n_out * radius)
            continue
        bis = bis * (1.0 / bl)
        # scale so both adjacent edges are offset by at least radius
        cos_half = max(bis.dot(n_in), 0.25)
        m = cur + bis * (radius / cos_half)
        if (m - cur).norm() > 4.0 * radius:
            out.append(cur + n_in * radius)
            out.append(cur + n_out * radius)
        else:
            out.append(m)
    cleaned = []
    for v in out:
        if not cleaned or (v - cleaned[-1]).norm() > 1e-9:
            cleaned.append(v)
    return Polygon(cleaned)
