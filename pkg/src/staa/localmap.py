"""Per-cycle local environment model around one agent.

Bundles the robot-centric collision grid, its dilated/blurred costmap, the
set of inflated polygons used for heuristic path queries, and the tracked
moving obstacles. Built once per control cycle, then treated as read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Polygon, Pose, Vec2, inflate_miter
from .gridmap import (Costmap, GridFrame, OccupancyGrid, blur, dilate,
                      frame_for_agent, rasterize)

COSTMAP_SIGMA = 0.15  # meters; chosen so the blur penalizes ~3 cells around
                      # the dilated obstacles


@dataclass
class LocalMaps:
    frame: GridFrame
    collision_grid: OccupancyGrid      # raw static polygons
    dilated_grid: OccupancyGrid        # grown by the agent radius
    costmap: Costmap                   # blurred dilated grid, [0, 1]
    local_polygons: tuple              # inflated statics near the window
    agent_radius: float

    @property
    def width(self) -> float:
        return self.frame.width_cells * self.frame.resolution


def window_aabb(frame: GridFrame, margin: float = 1.0):
    xs = []
    ys = []
    for c in frame.corners():
        xs.append(c.x)
        ys.append(c.y)
    return (min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


def _aabb_overlap(a, b) -> bool:
    return a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]


def build_local_maps(pose: Pose, static_polygons, inflated_polygons,
                     agent_radius: float,
                     sigma: float = COSTMAP_SIGMA) -> LocalMaps:
    """Assemble the local grids and polygon set for one control cycle.

    ``inflated_polygons`` are the planning copies of the static map (grown
    by the agent radius); pass precomputed ones to avoid re-inflating every
    cycle.
    """
    frame = frame_for_agent(pose)
    box = window_aabb(frame)
    near_raw = [p for p in static_polygons if _aabb_overlap(p.bounding_box(), box)]
    grid = rasterize(near_raw, frame)
    dil = dilate(grid, agent_radius)
    cmap = blur(dil, sigma)
    local = tuple(p for p in inflated_polygons
                  if _aabb_overlap(p.bounding_box(), box))
    return LocalMaps(frame, grid, dil, cmap, local, agent_radius)


def inflate_for_planning(polygons, radius: float):
    """Conservative (mitered) inflation of a static map for path planning."""
    return tuple(inflate_miter(p, radius) for p in polygons)
