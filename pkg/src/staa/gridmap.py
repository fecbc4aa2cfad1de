"""Robot-centric occupancy grid, costmap and grid distance field.

The local window is a 160x160 grid at 5 cm resolution, axis-aligned with
the robot heading: it spans 2 m behind, 6 m ahead and 4 m to each side of
the agent. Grids are built once per control cycle and read-only afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .geometry import PackedPolygons, Polygon, Pose, Vec2

GRID_CELLS = 160
RESOLUTION = 0.05
BACK_EXTENT = 2.0
FRONT_EXTENT = 6.0
SIDE_EXTENT = 4.0


@dataclass(frozen=True)
class GridFrame:
    """Placement of the local grid relative to the agent pose.

    Grid axis 0 runs along the agent heading (x grows forward), axis 1 to
    the agent's left. ``offset`` is the agent position measured from the
    back-right grid corner.
    """

    origin_pose: Pose
    width_cells: int = GRID_CELLS
    height_cells: int = GRID_CELLS
    resolution: float = RESOLUTION
    offset: Vec2 = field(default_factory=lambda: Vec2(BACK_EXTENT, SIDE_EXTENT))

    def world_to_local(self, p: Vec2) -> Vec2:
        d = p - self.origin_pose.position
        return d.rotated(-self.origin_pose.theta)

    def local_to_world(self, p: Vec2) -> Vec2:
        return self.origin_pose.position + p.rotated(self.origin_pose.theta)

    def world_to_cell_coords(self, p: Vec2):
        """Continuous cell coordinates (cell k's center is at k + 0.5)."""
        local = self.world_to_local(p)
        return ((local.x + self.offset.x) / self.resolution,
                (local.y + self.offset.y) / self.resolution)

    def cell_index(self, p: Vec2):
        gx, gy = self.world_to_cell_coords(p)
        return int(math.floor(gx)), int(math.floor(gy))

    def cell_center(self, i: int, j: int) -> Vec2:
        local = Vec2((i + 0.5) * self.resolution - self.offset.x,
                     (j + 0.5) * self.resolution - self.offset.y)
        return self.local_to_world(local)

    def contains_cell(self, i: int, j: int) -> bool:
        return 0 <= i < self.width_cells and 0 <= j < self.height_cells

    def contains_point(self, p: Vec2) -> bool:
        i, j = self.cell_index(p)
        return self.contains_cell(i, j)

    def corners(self):
        """World positions of the four window corners, CCW."""
        w = self.width_cells * self.resolution
        h = self.height_cells * self.resolution
        lo = Vec2(-self.offset.x, -self.offset.y)
        pts = [lo, lo + Vec2(w, 0.0), lo + Vec2(w, h), lo + Vec2(0.0, h)]
        return [self.local_to_world(p) for p in pts]


def frame_for_agent(pose: Pose) -> GridFrame:
    return GridFrame(origin_pose=pose)


@dataclass
class OccupancyGrid:
    frame: GridFrame
    cells: np.ndarray  # uint8 [width, height]

    def copy(self) -> "OccupancyGrid":
        return OccupancyGrid(self.frame, self.cells.copy())


@dataclass
class Costmap:
    frame: GridFrame
    cells: np.ndarray  # float32 in [0, 1]


@dataclass
class DistanceField:
    """Shortest grid path time (seconds) to the goal cell, inf if cut off."""

    frame: GridFrame
    cells: np.ndarray  # float64 seconds
    goal_cell: tuple
    settled_cells: int = 0


def rasterize(polygons, frame: GridFrame) -> OccupancyGrid:
    """Draw polygons into the grid: a cell is occupied when its center lies
    inside a polygon or within half a cell of a polygon edge."""
    cells = np.zeros((frame.width_cells, frame.height_cells), dtype=np.uint8)
    for poly in polygons:
        gx = np.empty(len(poly.vertices), dtype=np.float64)
        gy = np.empty(len(poly.vertices), dtype=np.float64)
        for idx, v in enumerate(poly.vertices):
            gx[idx], gy[idx] = frame.world_to_cell_coords(v)
        if gx.max() < -1 or gx.min() > frame.width_cells + 1:
            continue
        if gy.max() < -1 or gy.min() > frame.height_cells + 1:
            continue
        K.rasterize_poly(cells, gx, gy)
    return OccupancyGrid(frame, cells)


def disc_offsets(radius: float, resolution: float) -> np.ndarray:
    """Cell offsets within a Euclidean radius (cell-center metric)."""
    r_cells = radius / resolution
    n = int(math.floor(r_cells))
    offs = []
    for di in range(-n, n + 1):
        for dj in range(-n, n + 1):
            if di * di + dj * dj <= r_cells * r_cells:
                offs.append((di, dj))
    return np.asarray(offs, dtype=np.int64).reshape(-1, 2)


def dilate(grid: OccupancyGrid, radius: float) -> OccupancyGrid:
    """Binary dilation by a disc of the given radius (0 = identity)."""
    if radius < 0.0:
        raise ValueError("radius must be >= 0")
    dst = grid.cells.copy()
    if radius > 0.0:
        offs = disc_offsets(radius, grid.frame.resolution)
        K.dilate_grid(grid.cells, dst, offs)
    return OccupancyGrid(grid.frame, dst)


def gaussian_kernel(sigma: float, resolution: float) -> np.ndarray:
    radius = max(1, int(math.ceil(3.0 * sigma / resolution)))
    xs = np.arange(-radius, radius + 1, dtype=np.float64) * resolution
    k = np.exp(-0.5 * (xs / sigma) ** 2)
    return k / k.sum()


def blur(grid: OccupancyGrid, sigma: float) -> Costmap:
    """Separable Gaussian blur of the binary grid, rescaled so every
    occupied source cell reads 1.0, clamped to [0, 1]."""
    if sigma <= 0.0:
        raise ValueError("sigma must be > 0")
    kern = gaussian_kernel(sigma, grid.frame.resolution)
    src = grid.cells.astype(np.float64)
    tmp = np.empty_like(src)
    dst = np.empty_like(src)
    K.blur_separable(src, tmp, dst, kern)
    peak = float(kern.max()) ** 2  # response of an isolated occupied cell
    out = np.clip(dst / peak, 0.0, 1.0)
    return Costmap(grid.frame, out.astype(np.float32))


def cost_at(cmap: Costmap, p: Vec2) -> float:
    """Bilinear costmap sample at a world point; 0 outside the window."""
    gx, gy = cmap.frame.world_to_cell_coords(p)
    return float(K.bilinear_at(cmap.cells, gx, gy))


def occupied_at(grid: OccupancyGrid, p: Vec2) -> bool:
    """Occupancy of the cell containing p; free outside the window."""
    i, j = grid.frame.cell_index(p)
    if not grid.frame.contains_cell(i, j):
        return False
    return bool(grid.cells[i, j])


def snap_to_free(grid: OccupancyGrid, i: int, j: int):
    """Nearest free cell by expanding ring search (the cell itself if free)."""
    W, H = grid.cells.shape
    i = min(max(i, 0), W - 1)
    j = min(max(j, 0), H - 1)
    if not grid.cells[i, j]:
        return i, j
    for r in range(1, max(W, H)):
        best = None
        best_d = None
        for di in range(-r, r + 1):
            for dj in (-r, r):
                for ci, cj in ((i + di, j + dj), (i + dj, j + di)):
                    if 0 <= ci < W and 0 <= cj < H and not grid.cells[ci, cj]:
                        d = (ci - i) ** 2 + (cj - j) ** 2
                        if best_d is None or d < best_d:
                            best, best_d = (ci, cj), d
        if best is not None:
            return best
    return i, j


def dijkstra_field(grid: OccupancyGrid, goal: Vec2, v_max: float) -> DistanceField:
    """8-connected Dijkstra over free cells, in seconds at top speed.

    The goal is snapped to the nearest free cell when it falls on an
    occupied one. Unreachable cells hold +inf.
    """
    gi, gj = grid.frame.cell_index(goal)
    gi, gj = snap_to_free(grid, gi, gj)
    dist = np.empty(grid.cells.shape, dtype=np.float64)
    settled = K.dijkstra_grid(grid.cells, gi, gj, grid.frame.resolution, dist)
    np.divide(dist, v_max, out=dist)
    return DistanceField(grid.frame, dist, (gi, gj), int(settled))


def write_pgm(cells: np.ndarray, path) -> None:
    """Dump a grid or costmap as an 8-bit binary PGM (P5) image."""
    arr = np.asarray(cells, dtype=np.float64)
    finite = np.isfinite(arr)
    top = arr[finite].max() if finite.any() and arr[finite].max() > 0 else 1.0
    img = np.zeros(arr.shape, dtype=np.uint8)
    img[finite] = np.clip(arr[finite] / top * 255.0, 0, 255).astype(np.uint8)
    img[~finite] = 255
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (img.shape[1], img.shape[0]))
        fh.write(np.ascontiguousarray(img).tobytes())
