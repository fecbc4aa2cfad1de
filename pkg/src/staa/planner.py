"""Short-term aborting A* motion controller.

Expands sampled acceleration commands over a fixed prediction interval,
dedupes states on a 5 cm / 0.1 rad closed table, collision-checks against
the local grid and predicted moving obstacles, and ranks nodes by elapsed
time plus proximity penalties plus a path-guided time-to-goal heuristic.
The search is built to abort: when its budget runs out it returns the best
plan found so far (the pushed node with the smallest heuristic value), so
the control rate stays fixed regardless of scene difficulty.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import _kernels as K
from .geometry import (MovingObstacle, PackedPolygons, Polygon, Pose, Vec2,
                       inflate_miter)
from .gridmap import DistanceField, dijkstra_field
from .localmap import LocalMaps
from .unicycle import (AccelCmd, KinodynamicLimits, UnicycleState,
                       action_arrays, brake_command, predict)

PATH_RTR = "path-rtr"
PATH_EUCLID = "path-euclid"
DIJKSTRA_RTR = "dijkstra-rtr"
HEURISTIC_KINDS = (PATH_RTR, PATH_EUCLID, DIJKSTRA_RTR)
_KIND_CODE = {PATH_RTR: 0, PATH_EUCLID: 1, DIJKSTRA_RTR: 2}

BUDGET_WALL = "wall"
BUDGET_DETERMINISTIC = "deterministic"

# Deterministic budget cost model, calibrated on the development machine:
# one expansion of the compiled search core costs about this much wall time,
# and one settled cell of the grid Dijkstra this much. Simulations charge
# work against the time budget with these constants instead of reading the
# clock, so identical runs give identical results on any machine.
EXPANSION_COST_S = 45e-6
FIELD_CELL_COST_S = 65e-9


@dataclass(frozen=True)
class PlannerConfig:
    tbar: float = 0.3
    n_samples: int = 7
    time_budget: float = 0.019
    w_s: float = 0.1                    # costmap weight
    w_d: float = 0.5                    # dynamic proximity weight
    proximity_range: float = 1.0        # meters of effective repulsion
    prediction_depth_limit: int = 3
    finish_threshold: float = 0.1       # seconds of heuristic time
    heuristic_kind: str = PATH_RTR
    budget_mode: str = BUDGET_WALL
    max_expansions: int = 100000        # safety cap in both modes
    accumulate_penalties: bool = False  # sum penalties along ancestors
    trace: bool = False
    limits: KinodynamicLimits = field(default_factory=KinodynamicLimits)

    def __post_init__(self):
        if self.time_budget <= 0:
            raise ValueError("time budget must be > 0")
        if self.prediction_depth_limit < 0:
            raise ValueError("prediction depth limit must be >= 0")
        if self.heuristic_kind not in HEURISTIC_KINDS:
            raise ValueError(f"unknown heuristic {self.heuristic_kind!r}; "
                             f"choose from {HEURISTIC_KINDS}")
        if self.budget_mode not in (BUDGET_WALL, BUDGET_DETERMINISTIC):
            raise ValueError(f"unknown budget mode {self.budget_mode!r}")

    @property
    def expansion_budget(self) -> int:
        """Deterministic-mode equivalent of the wall-clock budget."""
        return max(1, int(self.time_budget / EXPANSION_COST_S))


@dataclass(frozen=True)
class SearchNode:
    state: UnicycleState
    g: float
    h: float
    f: float
    depth: int
    parent: "SearchNode | None"
    action: AccelCmd | None


@dataclass
class PlanResult:
    command: AccelCmd
    trajectory: list            # SearchNode chain, root first (empty on brake)
    finished: bool
    expansions: int
    elapsed: float
    emergency_brake: bool
    best_h: float = math.inf
    pushed_min_h: float = math.inf     # audit: smallest h ever pushed
    nodes_created: int = 0
    field_settled: int = 0
    trace: list | None = None


def write_trace(result: PlanResult, path) -> None:
    """Dump the per-expansion trace as line-delimited records."""
    if result.trace is None:
        raise ValueError("planner was run without trace enabled")
    with open(path, "w") as fh:
        for rec in result.trace:
            fh.write(" ".join(f"{v:.9g}" if isinstance(v, float) else str(v)
                              for v in rec) + "\n")


# ---------------------------------------------------------------------------
# RTR timing and public heuristic/cost surfaces


def rtr(s: Pose, g: Pose, limits: KinodynamicLimits) -> float:
    """Rotate-translate-rotate time between two poses (min of the forward
    and the backing-up variant)."""
    return float(K.rtr_time(s.x, s.y, s.theta, g.x, g.y, g.theta,
                            limits.v_max, limits.v_back_max, limits.omega_max))


def g_cost(parent_g: float, depth: int, s: UnicycleState, maps: LocalMaps,
           obstacles, cfg: PlannerConfig) -> float:
    """Node cost: elapsed time plus weighted costmap and obstacle-proximity
    penalties at the new state (the dynamic term vanishes beyond the
    prediction depth limit)."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    from .gridmap import cost_at
    penalty = cfg.w_s * cost_at(maps.costmap, s.position)
    if obstacles and depth <= cfg.prediction_depth_limit:
        from .geometry import distance_to_set
        d = distance_to_set(s.position, obstacles, depth * cfg.tbar)
        penalty += cfg.w_d * max(cfg.proximity_range - d, 0.0)
    if cfg.accumulate_penalties:
        return parent_g + cfg.tbar + penalty
    return depth * cfg.tbar + penalty


_EMPTY_F = np.empty(0, dtype=np.float64)
_EMPTY_I = np.empty(1, dtype=np.int32)
_EMPTY_PACK4 = (_EMPTY_F, _EMPTY_F, np.zeros(1, dtype=np.int32),
                np.empty(0, dtype=np.uint8))


def _pack_obstacles(obstacles, t: float):
    """Raw obstacle hulls predicted at time t, plus per-polygon convexity."""
    if not obstacles:
        return _EMPTY_PACK4
    pack = PackedPolygons.from_obstacles(obstacles, t)
    conv = np.array([o.shape.convex for o in obstacles], dtype=np.uint8)
    return (pack.vx, pack.vy, pack.starts, conv)


class HeuristicContext:
    """Goal-rooted shortest-path trees for one plan cycle.

    One tree covers the static polygons; when moving obstacles are present
    an extra tree per prediction depth covers statics plus the inflated
    obstacles predicted at that depth. Queries connect a state into the
    right tree (optimal by sorted-bound scan) and time the path with RTR.
    """

    def __init__(self, goal: Pose, maps: LocalMaps, obstacles,
                 cfg: PlannerConfig):
        self.goal = goal
        self.cfg = cfg
        self.have_dyn = bool(obstacles)
        static_polys = list(maps.local_polygons)
        self.static_tree = _build_goal_tree(goal.position, static_polys)
        vmax_candidates = self.static_tree[0].shape[0]
        if self.have_dyn:
            self.depth_trees = []
            for d in (1, 2, 3):
                t = d * cfg.tbar
                dyn_infl = [inflate_miter(o.shape.transformed(o.pose_at(t)),
                                          maps.agent_radius)
                            for o in obstacles]
                tree = _build_goal_tree(goal.position, static_polys + dyn_infl)
                vmax_candidates = max(vmax_candidates, tree[0].shape[0])
                self.depth_trees.append(tree)
        else:
            self.depth_trees = [self.static_tree] * 3
        self.scratch_bound = np.empty(vmax_candidates, dtype=np.float64)
        self.scratch_used = np.empty(vmax_candidates, dtype=np.uint8)

    def tree_for_depth(self, depth: int):
        if self.have_dyn and 1 <= depth <= self.cfg.prediction_depth_limit:
            return self.depth_trees[min(depth, 3) - 1]
        return self.static_tree

    def query(self, s: UnicycleState, depth: int, kind: str) -> float:
        lim = self.cfg.limits
        use_dyn = self.have_dyn and 1 <= depth <= self.cfg.prediction_depth_limit
        tree_dyn = self.depth_trees[min(max(depth, 1), 3) - 1]
        return float(K.heuristic_query(
            s.x, s.y, s.theta, self.goal.theta, tree_dyn, self.static_tree,
            use_dyn, _KIND_CODE[kind], lim.v_max, lim.v_back_max,
            lim.omega_max, self.scratch_bound, self.scratch_used))


def _build_goal_tree(goal: Vec2, polygons):
    """(wx, wy, dist, parent, pvx, pvy, pstarts) rooted at the goal."""
    pack = PackedPolygons.from_polygons(polygons)
    gx, gy = K.project_out_of_set(goal.x, goal.y, pack.vx, pack.vy,
                                  pack.starts, 1e-3)
    xs = [gx]
    ys = [gy]
    for p in polygons:
        mask = p.convex_vertex_mask()
        for v, ok in zip(p.vertices, mask):
            if ok:
                xs.append(v.x)
                ys.append(v.y)
    wx = np.asarray(xs, dtype=np.float64)
    wy = np.asarray(ys, dtype=np.float64)
    buried = np.zeros(len(wx), dtype=np.uint8)
    if pack.count:
        K.mask_buried(wx, wy, pack.vx, pack.vy, pack.starts, buried)
    buried[0] = 0
    keep = buried == 0
    wx = np.ascontiguousarray(wx[keep])
    wy = np.ascontiguousarray(wy[keep])
    V = len(wx)
    dx = wx[:, None] - wx[None, :]
    dy = wy[:, None] - wy[None, :]
    order = np.argsort(dx * dx + dy * dy, axis=1).astype(np.int32)
    dist = np.empty(V, dtype=np.float64)
    parent = np.empty(V, dtype=np.int32)
    K.goal_distance_tree(wx, wy, pack.vx, pack.vy, pack.starts, order,
                         dist, parent, 32 * V + 256)
    return (wx, wy, dist, parent, pack.vx, pack.vy, pack.starts)


def path_rtr_h(s: UnicycleState, goal: Pose, maps: LocalMaps, obstacles,
               depth: int, cfg: PlannerConfig,
               ctx: HeuristicContext | None = None) -> float:
    """Path-guided RTR heuristic: RTR motions concatenated along the
    shortest path from the state to the intermediate goal, using predicted
    obstacle inflations up to the depth limit and falling back to the
    static path when moving obstacles seal the route."""
    if ctx is None:
        ctx = HeuristicContext(goal, maps, obstacles, cfg)
    return ctx.query(s, depth, PATH_RTR)


def path_euclid_h(s: UnicycleState, goal: Pose, maps: LocalMaps, obstacles,
                  depth: int, cfg: PlannerConfig,
                  ctx: HeuristicContext | None = None) -> float:
    """Shortest-path length divided by the top speed (rotations ignored)."""
    if ctx is None:
        ctx = HeuristicContext(goal, maps, obstacles, cfg)
    return ctx.query(s, depth, PATH_EUCLID)


def dijkstra_rtr_h(s: UnicycleState, goal: Pose, fld: DistanceField,
                   cfg: PlannerConfig,
                   path_buf: np.ndarray | None = None) -> float:
    """RTR concatenation along the steepest-descent path of a grid distance
    field (computed once per cycle toward the goal)."""
    lim = cfg.limits
    f = fld.frame
    if path_buf is None:
        path_buf = np.empty((f.width_cells * f.height_cells, 2), dtype=np.int32)
    o = f.origin_pose
    return float(K.dijkstra_rtr_query(
        s.x, s.y, s.theta, goal.x, goal.y, goal.theta, fld.cells,
        o.x, o.y, math.cos(o.theta), math.sin(o.theta),
        f.resolution, f.offset.x, f.offset.y, path_buf,
        lim.v_max, lim.v_back_max, lim.omega_max))


def collision_check(s: UnicycleState, depth: int, maps: LocalMaps,
                    obstacles, cfg: PlannerConfig, hull: Polygon) -> bool:
    """Two-stage collision test: grid lookups for every hull corner and the
    center, then polygon tests against obstacles predicted at the state's
    depth (skipped beyond the prediction depth limit). True = collides."""
    hx = hull._xs
    hy = hull._ys
    packs = []
    for d in (1, 2, 3):
        if obstacles and d <= cfg.prediction_depth_limit:
            packs.append(_pack_obstacles(obstacles, d * cfg.tbar))
        else:
            packs.append(_EMPTY_PACK4)
    f = maps.frame
    o = f.origin_pose
    n = len(hx)
    return bool(K.state_collides(
        s.x, s.y, s.theta, depth, maps.collision_grid.cells,
        o.x, o.y, math.cos(o.theta), math.sin(o.theta),
        f.resolution, f.offset.x, f.offset.y, hx, hy,
        cfg.prediction_depth_limit, packs[0], packs[1], packs[2],
        np.empty(n, dtype=np.float64), np.empty(n, dtype=np.float64)))


# ---------------------------------------------------------------------------
# the search


class Planner:
    """One agent's search instance; owns reusable buffers between cycles."""

    INITIAL_CAPACITY = 1 << 14

    def __init__(self, cfg: PlannerConfig, hull: Polygon):
        self.cfg = cfg
        self.hull = hull
        self._alloc(self.INITIAL_CAPACITY)
        self.act_a, self.act_b = action_arrays(cfg.n_samples, cfg.limits)
        self.closed = np.zeros((160, 160, 63), dtype=np.int32)
        self.generation = 0
        self.field_buf = np.empty((160 * 160, 2), dtype=np.int32)
        nh = len(hull._xs)
        self.sc_hx = np.empty(nh, dtype=np.float64)
        self.sc_hy = np.empty(nh, dtype=np.float64)
        self.counters = np.zeros(4, dtype=np.int64)
        self.out_i = np.zeros(4, dtype=np.int64)
        self.best_h = np.zeros(1, dtype=np.float64)

    def _alloc(self, cap):
        self.cap = cap
        self.n_x = np.empty(cap, dtype=np.float64)
        self.n_y = np.empty(cap, dtype=np.float64)
        self.n_th = np.empty(cap, dtype=np.float64)
        self.n_v = np.empty(cap, dtype=np.float64)
        self.n_om = np.empty(cap, dtype=np.float64)
        self.n_g = np.empty(cap, dtype=np.float64)
        self.n_h = np.empty(cap, dtype=np.float64)
        self.n_f = np.empty(cap, dtype=np.float64)
        self.n_depth = np.empty(cap, dtype=np.int32)
        self.n_parent = np.empty(cap, dtype=np.int32)
        self.n_action = np.empty(cap, dtype=np.int32)
        self.h_key = np.empty(cap, dtype=np.float64)
        self.h_dep = np.empty(cap, dtype=np.int32)
        self.h_seq = np.empty(cap, dtype=np.int64)
        self.h_node = np.empty(cap, dtype=np.int32)

    def _grow(self):
        old = (self.n_x, self.n_y, self.n_th, self.n_v, self.n_om, self.n_g,
               self.n_h, self.n_f, self.n_depth, self.n_parent, self.n_action,
               self.h_key, self.h_dep, self.h_seq, self.h_node)
        counts = (self.counters[0], self.counters[1])
        self._alloc(self.cap * 2)
        new = (self.n_x, self.n_y, self.n_th, self.n_v, self.n_om, self.n_g,
               self.n_h, self.n_f, self.n_depth, self.n_parent, self.n_action,
               self.h_key, self.h_dep, self.h_seq, self.h_node)
        nc = int(counts[0])
        hc = int(counts[1])
        for o_arr, n_arr in zip(old[:11], new[:11]):
            n_arr[:nc] = o_arr[:nc]
        for o_arr, n_arr in zip(old[11:], new[11:]):
            n_arr[:hc] = o_arr[:hc]

    def plan(self, start: UnicycleState, goal: Pose, maps: LocalMaps,
             obstacles) -> PlanResult:
        """Run one bounded search cycle and return the next command."""
        cfg = self.cfg
        lim = cfg.limits
        t0 = time.perf_counter()

        # per-cycle structures ------------------------------------------------
        field_settled = 0
        fld = None
        if cfg.heuristic_kind == DIJKSTRA_RTR:
            fld = dijkstra_field(maps.dilated_grid, goal.position, lim.v_max)
            field_settled = fld.settled_cells
            field_cells = fld.cells
            ctx = None
        else:
            ctx = HeuristicContext(goal, maps, obstacles, cfg)
            field_cells = np.zeros((1, 1), dtype=np.float64)
        packs = []
        for d in (1, 2, 3):
            if obstacles and d <= cfg.prediction_depth_limit:
                packs.append(_pack_obstacles(obstacles, d * cfg.tbar))
            else:
                packs.append(_EMPTY_PACK4)
        if ctx is not None:
            trees = (ctx.depth_trees[0], ctx.depth_trees[1],
                     ctx.depth_trees[2], ctx.static_tree)
            sc_bound = ctx.scratch_bound
            sc_used = ctx.scratch_used
        else:
            dummy = _dummy_tree()
            trees = (dummy, dummy, dummy, dummy)
            sc_bound = np.empty(1, dtype=np.float64)
            sc_used = np.empty(1, dtype=np.uint8)

        # root node -----------------------------------------------------------
        self.generation += 1
        self.counters[:] = (1, 1, 1, self.generation)
        self.out_i[:] = (0, -1, -1, -1)
        self.best_h[0] = math.inf
        root_h = self._root_h(start, goal, ctx, field_cells, maps)
        self.n_x[0] = start.x
        self.n_y[0] = start.y
        self.n_th[0] = start.theta
        self.n_v[0] = start.v
        self.n_om[0] = start.omega
        self.n_g[0] = 0.0
        self.n_h[0] = root_h
        self.n_f[0] = root_h
        self.n_depth[0] = 0
        self.n_parent[0] = -1
        self.n_action[0] = -1
        self.h_key[0] = root_h
        self.h_dep[0] = 0
        self.h_seq[0] = 0
        self.h_node[0] = 0

        f = maps.frame
        o = f.origin_pose
        fcos = math.cos(o.theta)
        fsin = math.sin(o.theta)
        kind = _KIND_CODE[cfg.heuristic_kind]
        have_dyn = bool(obstacles)

        budget = cfg.time_budget
        deterministic = cfg.budget_mode == BUDGET_DETERMINISTIC
        exp_budget = cfg.max_expansions
        if deterministic:
            charge = int(field_settled * FIELD_CELL_COST_S / EXPANSION_COST_S)
            exp_budget = min(exp_budget, max(1, cfg.expansion_budget - charge))

        expansions = 0
        trace = [] if cfg.trace else None
        aborted = False
        finished_idx = -1
        while True:
            if expansions >= exp_budget:
                aborted = True
                break
            if not deterministic and expansions > 0 and \
                    time.perf_counter() - t0 >= budget:
                aborted = True
                break
            if self.counters[0] + 64 >= self.cap or \
                    self.counters[1] + 64 >= self.cap:
                self._grow()
            K.staa_step(
                self.n_x, self.n_y, self.n_th, self.n_v, self.n_om,
                self.n_g, self.n_h, self.n_f, self.n_depth, self.n_parent,
                self.n_action, self.counters,
                self.h_key, self.h_dep, self.h_seq, self.h_node,
                self.closed, maps.collision_grid.cells, maps.costmap.cells,
                o.x, o.y, fcos, fsin, f.resolution, f.offset.x, f.offset.y,
                self.act_a, self.act_b, cfg.tbar,
                lim.v_max, lim.v_back_max, lim.omega_max,
                cfg.w_s, cfg.w_d, cfg.proximity_range,
                cfg.prediction_depth_limit, cfg.finish_threshold,
                cfg.accumulate_penalties, kind, goal.x, goal.y, goal.theta,
                packs[0], packs[1], packs[2], have_dyn,
                trees[0], trees[1], trees[2], trees[3],
                field_cells, self.field_buf,
                sc_bound, sc_used, self.sc_hx, self.sc_hy,
                self.hull._xs, self.hull._ys,
                self.out_i, self.best_h)
            status = int(self.out_i[0])
            if status == K.STATUS_EMPTY:
                elapsed = time.perf_counter() - t0
                return self._brake_result(start, expansions, elapsed,
                                          field_settled, trace)
            if status == K.STATUS_FINISHED:
                finished_idx = int(self.out_i[1])
                break
            if status == K.STATUS_EXPANDED:
                node = int(self.out_i[1])
                expansions += 1
                if trace is not None:
                    trace.append((expansions - 1, float(self.n_x[node]),
                                  float(self.n_y[node]), float(self.n_th[node]),
                                  float(self.n_v[node]), float(self.n_om[node]),
                                  float(self.n_g[node]), float(self.n_h[node]),
                                  float(self.n_f[node]), int(self.n_depth[node])))
            # STATUS_DUP: popped an already-closed duplicate; just continue

        elapsed = time.perf_counter() - t0
        if finished_idx >= 0:
            return self._result(finished_idx, True, expansions, elapsed,
                                field_settled, trace)
        best_idx = int(self.out_i[2])
        if best_idx < 0:
            best_idx = int(self.out_i[3])  # only infinite-h nodes were pushed
        if best_idx < 0:
            return self._brake_result(start, expansions, elapsed,
                                      field_settled, trace)
        return self._result(best_idx, False, expansions, elapsed,
                            field_settled, trace)

    def expand(self, state: UnicycleState, goal: Pose, maps: LocalMaps,
               obstacles) -> list:
        """Expand a single state exactly as the search would (the state is
        closed first, successors that collide or fall into closed cells are
        dropped) and return the surviving successor nodes."""
        cfg = replace(self.cfg, max_expansions=1,
                      budget_mode=BUDGET_DETERMINISTIC)
        saved = self.cfg
        self.cfg = cfg
        try:
            self.plan(state, goal, maps, obstacles)
        finally:
            self.cfg = saved
        out = []
        root = self._node(0)
        for idx in range(1, int(self.counters[0])):
            out.append(self._node(idx, root_cache={0: root}))
        return out

    # -- result assembly ----------------------------------------------------

    def _root_h(self, start, goal, ctx, field_cells, maps):
        cfg = self.cfg
        if cfg.heuristic_kind == DIJKSTRA_RTR:
            f = maps.frame
            o = f.origin_pose
            lim = cfg.limits
            return float(K.dijkstra_rtr_query(
                start.x, start.y, start.theta, goal.x, goal.y, goal.theta,
                field_cells, o.x, o.y, math.cos(o.theta), math.sin(o.theta),
                f.resolution, f.offset.x, f.offset.y, self.field_buf,
                lim.v_max, lim.v_back_max, lim.omega_max))
        return ctx.query(start, 0, cfg.heuristic_kind)

    def _node(self, idx, root_cache=None):
        cache = root_cache if root_cache is not None else {}
        return self._node_rec(idx, cache)

    def _node_rec(self, idx, cache):
        if idx in cache:
            return cache[idx]
        parent_idx = int(self.n_parent[idx])
        parent = self._node_rec(parent_idx, cache) if parent_idx >= 0 else None
        ai = int(self.n_action[idx])
        action = AccelCmd(float(self.act_a[ai]), float(self.act_b[ai])) \
            if ai >= 0 else None
        node = SearchNode(
            UnicycleState(float(self.n_x[idx]), float(self.n_y[idx]),
                          float(self.n_th[idx]), float(self.n_v[idx]),
                          float(self.n_om[idx])),
            float(self.n_g[idx]), float(self.n_h[idx]), float(self.n_f[idx]),
            int(self.n_depth[idx]), parent, action)
        cache[idx] = node
        return node

    def _result(self, idx, finished, expansions, elapsed, settled, trace):
        chain_idx = []
        cur = idx
        while cur >= 0:
            chain_idx.append(cur)
            cur = int(self.n_parent[cur])
        chain_idx.reverse()
        cache = {}
        chain = [self._node_rec(i, cache) for i in chain_idx]
        first = chain[1] if len(chain) > 1 else None
        command = first.action if first is not None else \
            brake_command(chain[0].state, self.cfg.tbar, self.cfg.limits)
        return PlanResult(command=command, trajectory=chain, finished=finished,
                          expansions=expansions, elapsed=elapsed,
                          emergency_brake=False,
                          best_h=float(self.n_h[idx]),
                          pushed_min_h=float(self.best_h[0]),
                          nodes_created=int(self.counters[0]),
                          field_settled=settled, trace=trace)

    def _brake_result(self, start, expansions, elapsed, settled, trace):
        cmd = brake_command(start, self.cfg.tbar, self.cfg.limits)
        return PlanResult(command=cmd, trajectory=[], finished=False,
                          expansions=expansions, elapsed=elapsed,
                          emergency_brake=True,
                          pushed_min_h=float(self.best_h[0]),
                          nodes_created=int(self.counters[0]),
                          field_settled=settled, trace=trace)


def _dummy_tree():
    z = np.zeros(1, dtype=np.float64)
    return (z, z, z, np.full(1, -1, dtype=np.int32),
            _EMPTY_F, _EMPTY_F, np.zeros(1, dtype=np.int32))


def plan(start: UnicycleState, goal: Pose, maps: LocalMaps, obstacles,
         cfg: PlannerConfig, hull: Polygon) -> PlanResult:
    """Single-shot convenience wrapper around Planner.plan."""
    return Planner(cfg, hull).plan(start, goal, maps, obstacles)
