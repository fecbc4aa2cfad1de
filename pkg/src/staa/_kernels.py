"""Numba-compiled geometry and grid kernels.

Everything in here operates on plain float64/int arrays so it can be called
from tight planner loops. Polygon sets use a CSR-style layout: flat vertex
arrays ``vx, vy`` plus an int32 ``starts`` array of length P+1 giving the
vertex range of each polygon. All functions are deterministic.
"""

import math

import numpy as np
from numba import njit

# Geometric tolerance in meters; parameter-space tolerance for segment tests.
EPS = 1e-9
PEPS = 1e-12
INF = math.inf

JIT = dict(cache=True, fastmath=False, nogil=True)


# ---------------------------------------------------------------------------
# point / polygon predicates


@njit(**JIT)
def point_on_poly_boundary(px, py, vx, vy, lo, hi, eps):
    """True if the point lies within eps of any edge of polygon [lo, hi)."""
    n = hi - lo
    for i in range(n):
        x0 = vx[lo + i]
        y0 = vy[lo + i]
        j = lo + ((i + 1) % n)
        x1 = vx[j]
        y1 = vy[j]
        ex = x1 - x0
        ey = y1 - y0
        L2 = ex * ex + ey * ey
        if L2 <= 0.0:
            t = 0.0
        else:
            t = ((px - x0) * ex + (py - y0) * ey) / L2
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
        dx = px - (x0 + t * ex)
        dy = py - (y0 + t * ey)
        if dx * dx + dy * dy <= eps * eps:
            return True
    return False


@njit(**JIT)
def point_in_poly_evenodd(px, py, vx, vy, lo, hi):
    """Even-odd ray crossing test, boundary not treated specially."""
    n = hi - lo
    inside = False
    j = n - 1
    for i in range(n):
        xi = vx[lo + i]
        yi = vy[lo + i]
        xj = vx[lo + j]
        yj = vy[lo + j]
        if (yi > py) != (yj > py):
            xcross = xi + (py - yi) * (xj - xi) / (yj - yi)
            if px < xcross:
                inside = not inside
        j = i
    return inside


@njit(**JIT)
def point_in_poly(px, py, vx, vy, lo, hi, eps):
    """Even-odd containment with boundary points counting as inside."""
    if point_in_poly_evenodd(px, py, vx, vy, lo, hi):
        return True
    return point_on_poly_boundary(px, py, vx, vy, lo, hi, eps)


@njit(**JIT)
def point_strictly_in_poly(px, py, vx, vy, lo, hi, eps):
    """Even-odd containment excluding a thin boundary band."""
    if not point_in_poly_evenodd(px, py, vx, vy, lo, hi):
        return False
    return not point_on_poly_boundary(px, py, vx, vy, lo, hi, eps)


@njit(**JIT)
def dist_to_poly(px, py, vx, vy, lo, hi):
    """Distance from a point to the boundary of polygon [lo, hi)."""
    n = hi - lo
    best = INF
    for i in range(n):
        x0 = vx[lo + i]
        y0 = vy[lo + i]
        j = lo + ((i + 1) % n)
        x1 = vx[j]
        y1 = vy[j]
        ex = x1 - x0
        ey = y1 - y0
        L2 = ex * ex + ey * ey
        if L2 <= 0.0:
            t = 0.0
        else:
            t = ((px - x0) * ex + (py - y0) * ey) / L2
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
        dx = px - (x0 + t * ex)
        dy = py - (y0 + t * ey)
        d2 = dx * dx + dy * dy
        if d2 < best:
            best = d2
    return math.sqrt(best)


@njit(**JIT)
def dist_to_polyset(px, py, vx, vy, starts):
    """Distance to the nearest edge/vertex over a polygon set; 0 inside."""
    np_ = starts.shape[0] - 1
    if np_ == 0:
        return INF
    best = INF
    for p in range(np_):
        lo = starts[p]
        hi = starts[p + 1]
        if point_in_poly_evenodd(px, py, vx, vy, lo, hi):
            return 0.0
        d = dist_to_poly(px, py, vx, vy, lo, hi)
        if d < best:
            best = d
    return best


@njit(**JIT)
def point_in_polyset(px, py, vx, vy, starts, eps):
    for p in range(starts.shape[0] - 1):
        if point_in_poly(px, py, vx, vy, starts[p], starts[p + 1], eps):
            return True
    return False


@njit(**JIT)
def point_strictly_in_polyset(px, py, vx, vy, starts, eps):
    for p in range(starts.shape[0] - 1):
        if point_strictly_in_poly(px, py, vx, vy, starts[p], starts[p + 1], eps):
            return True
    return False


# ---------------------------------------------------------------------------
# segment vs polygon


@njit(**JIT)
def _seg_params_vs_poly(ax, ay, bx, by, vx, vy, lo, hi, ts, count):
    """Append boundary-touch parameters of segment a-b against one polygon.

    Returns (count, proper) where proper=True means the segment interior
    crosses an edge interior transversally (a definite interior crossing).
    """
    dx = bx - ax
    dy = by - ay
    n = hi - lo
    for i in range(n):
        x0 = vx[lo + i]
        y0 = vy[lo + i]
        j = lo + ((i + 1) % n)
        x1 = vx[j]
        y1 = vy[j]
        ex = x1 - x0
        ey = y1 - y0
        rx = x0 - ax
        ry = y0 - ay
        den = dx * ey - dy * ex
        scale = abs(dx * ey) + abs(dy * ex) + EPS
        if abs(den) > 1e-14 * scale:
            t = (rx * ey - ry * ex) / den
            u = (rx * dy - ry * dx) / den
            if PEPS < t < 1.0 - PEPS and PEPS < u < 1.0 - PEPS:
                return count, True
            if -PEPS <= t <= 1.0 + PEPS and -PEPS <= u <= 1.0 + PEPS:
                if count < ts.shape[0]:
                    tt = t
                    if tt < 0.0:
                        tt = 0.0
                    elif tt > 1.0:
                        tt = 1.0
                    ts[count] = tt
                    count += 1
        else:
            # parallel: handle collinear overlap by projecting edge endpoints
            cross = rx * dy - ry * dx
            seg_len2 = dx * dx + dy * dy
            if seg_len2 > 0.0 and cross * cross <= (EPS * EPS) * seg_len2:
                t0 = (rx * dx + ry * dy) / seg_len2
                t1 = ((x1 - ax) * dx + (y1 - ay) * dy) / seg_len2
                for tt in (t0, t1):
                    if -PEPS <= tt <= 1.0 + PEPS and count < ts.shape[0]:
                        tc = tt
                        if tc < 0.0:
                            tc = 0.0
                        elif tc > 1.0:
                            tc = 1.0
                        ts[count] = tc
                        count += 1
    return count, False


@njit(**JIT)
def _seg_touch_scan(ax, ay, bx, by, vx, vy, lo, hi):
    """Fast first pass: (proper_crossing, touch_count) of segment vs edges."""
    dx = bx - ax
    dy = by - ay
    n = hi - lo
    touches = 0
    for i in range(n):
        x0 = vx[lo + i]
        y0 = vy[lo + i]
        j = lo + ((i + 1) % n)
        x1 = vx[j]
        y1 = vy[j]
        ex = x1 - x0
        ey = y1 - y0
        rx = x0 - ax
        ry = y0 - ay
        den = dx * ey - dy * ex
        scale = abs(dx * ey) + abs(dy * ex) + EPS
        if abs(den) > 1e-14 * scale:
            t = (rx * ey - ry * ex) / den
            u = (rx * dy - ry * dx) / den
            if PEPS < t < 1.0 - PEPS and PEPS < u < 1.0 - PEPS:
                return True, touches
            if -PEPS <= t <= 1.0 + PEPS and -PEPS <= u <= 1.0 + PEPS:
                touches += 1
        else:
            cross = rx * dy - ry * dx
            seg_len2 = dx * dx + dy * dy
            if seg_len2 > 0.0 and cross * cross <= (EPS * EPS) * seg_len2:
                touches += 2
    return False, touches


@njit(**JIT)
def seg_blocked_by_poly(ax, ay, bx, by, vx, vy, lo, hi, eps):
    """True iff the open segment passes through the polygon interior.

    Boundary contact (vertex grazing, sliding along an edge) does not block.
    The common no-contact case is allocation-free; only segments touching
    the boundary pay for the subsegment-midpoint analysis.
    """
    proper, touches = _seg_touch_scan(ax, ay, bx, by, vx, vy, lo, hi)
    if proper:
        return True
    if touches == 0:
        # no boundary contact at all: blocked iff the whole segment runs
        # inside the polygon
        mx = 0.5 * (ax + bx)
        my = 0.5 * (ay + by)
        return point_strictly_in_poly(mx, my, vx, vy, lo, hi, eps)
    ts = np.empty(2 * (hi - lo) + 2, dtype=np.float64)
    ts[0] = 0.0
    ts[1] = 1.0
    count, _ = _seg_params_vs_poly(ax, ay, bx, by, vx, vy, lo, hi, ts, 2)
    # insertion sort of the touch parameters
    for i in range(1, count):
        key = ts[i]
        j = i - 1
        while j >= 0 and ts[j] > key:
            ts[j + 1] = ts[j]
            j -= 1
        ts[j + 1] = key
    # midpoint of every open subsegment: strictly inside => blocked
    for i in range(count - 1):
        if ts[i + 1] - ts[i] > 1e-9:
            tm = 0.5 * (ts[i] + ts[i + 1])
            mx = ax + tm * (bx - ax)
            my = ay + tm * (by - ay)
            if point_strictly_in_poly(mx, my, vx, vy, lo, hi, eps):
                return True
    return False


@njit(**JIT)
def seg_blocked_by_set(ax, ay, bx, by, vx, vy, starts, eps):
    for p in range(starts.shape[0] - 1):
        if seg_blocked_by_poly(ax, ay, bx, by, vx, vy, starts[p], starts[p + 1], eps):
            return True
    return False


# ---------------------------------------------------------------------------
# convex overlap (separating axis)


@njit(**JIT)
def sat_overlap(ax_, ay_, bx_, by_):
    """Separating-axis overlap test for two convex polygons (touch counts)."""
    na = ax_.shape[0]
    nb = bx_.shape[0]
    for poly in range(2):
        if poly == 0:
            n = na
        else:
            n = nb
        for i in range(n):
            if poly == 0:
                x0 = ax_[i]
                y0 = ay_[i]
                x1 = ax_[(i + 1) % na]
                y1 = ay_[(i + 1) % na]
            else:
                x0 = bx_[i]
                y0 = by_[i]
                x1 = bx_[(i + 1) % nb]
                y1 = by_[(i + 1) % nb]
            # outward-ish normal; orientation does not matter for projections
            nx_ = y1 - y0
            ny_ = x0 - x1
            amin = INF
            amax = -INF
            for k in range(na):
                d = ax_[k] * nx_ + ay_[k] * ny_
                if d < amin:
                    amin = d
                if d > amax:
                    amax = d
            bmin = INF
            bmax = -INF
            for k in range(nb):
                d = bx_[k] * nx_ + by_[k] * ny_
                if d < bmin:
                    bmin = d
                if d > bmax:
                    bmax = d
            if amax < bmin or bmax < amin:
                return False
    return True


@njit(**JIT)
def corner_overlap(ax_, ay_, bx_, by_, eps):
    """True if any vertex of one polygon lies inside the other (even-odd)."""
    na = ax_.shape[0]
    nb = bx_.shape[0]
    lo_a = 0
    lo_b = 0
    for i in range(na):
        if point_in_poly(ax_[i], ay_[i], bx_, by_, lo_b, nb, eps):
            return True
    for i in range(nb):
        if point_in_poly(bx_[i], by_[i], ax_, ay_, lo_a, na, eps):
            return True
    return False


# ---------------------------------------------------------------------------
# occupancy grid kernels (grid arrays are [ix, iy] in the local frame)


@njit(**JIT)
def rasterize_poly(grid, vx, vy):
    """Mark cells whose center is inside the polygon or within half a cell
    of one of its edges. Vertices are given in continuous cell coordinates
    (cell center k has coordinate k + 0.5)."""
    W = grid.shape[0]
    H = grid.shape[1]
    n = vx.shape[0]
    # scanline fill along the second axis (rows of constant iy)
    ymin = INF
    ymax = -INF
    for i in range(n):
        if vy[i] < ymin:
            ymin = vy[i]
        if vy[i] > ymax:
            ymax = vy[i]
    j0 = int(math.floor(ymin - 0.5))
    j1 = int(math.ceil(ymax + 0.5))
    if j0 < 0:
        j0 = 0
    if j1 > H - 1:
        j1 = H - 1
    xs = np.empty(n, dtype=np.float64)
    for j in range(j0, j1 + 1):
        yc = j + 0.5
        cnt = 0
        for i in range(n):
            y0 = vy[i]
            y1 = vy[(i + 1) % n]
            if (y0 > yc) != (y1 > yc):
                x0 = vx[i]
                x1 = vx[(i + 1) % n]
                xs[cnt] = x0 + (yc - y0) * (x1 - x0) / (y1 - y0)
                cnt += 1
        # sort crossings
        for a in range(1, cnt):
            key = xs[a]
            b = a - 1
            while b >= 0 and xs[b] > key:
                xs[b + 1] = xs[b]
                b -= 1
            xs[b + 1] = key
        k = 0
        while k + 1 < cnt:
            i0 = int(math.ceil(xs[k] - 0.5))
            i1 = int(math.floor(xs[k + 1] - 0.5))
            if i0 < 0:
                i0 = 0
            if i1 > W - 1:
                i1 = W - 1
            for ii in range(i0, i1 + 1):
                grid[ii, j] = 1
            k += 2
    # edge band: centers within half a cell of an edge
    for i in range(n):
        x0 = vx[i]
        y0 = vy[i]
        x1 = vx[(i + 1) % n]
        y1 = vy[(i + 1) % n]
        bx0 = int(math.floor(min(x0, x1) - 1.0))
        bx1 = int(math.ceil(max(x0, x1) + 1.0))
        by0 = int(math.floor(min(y0, y1) - 1.0))
        by1 = int(math.ceil(max(y0, y1) + 1.0))
        if bx0 < 0:
            bx0 = 0
        if by0 < 0:
            by0 = 0
        if bx1 > W - 1:
            bx1 = W - 1
        if by1 > H - 1:
            by1 = H - 1
        ex = x1 - x0
        ey = y1 - y0
        L2 = ex * ex + ey * ey
        for ii in range(bx0, bx1 + 1):
            for jj in range(by0, by1 + 1):
                if grid[ii, jj]:
                    continue
                px = ii + 0.5
                py = jj + 0.5
                if L2 <= 0.0:
                    t = 0.0
                else:
                    t = ((px - x0) * ex + (py - y0) * ey) / L2
                    if t < 0.0:
                        t = 0.0
                    elif t > 1.0:
                        t = 1.0
                dx = px - (x0 + t * ex)
                dy = py - (y0 + t * ey)
                if dx * dx + dy * dy <= 0.25:
                    grid[ii, jj] = 1


@njit(**JIT)
def dilate_grid(src, dst, offs):
    """Binary dilation by stamping precomputed disc offsets."""
    W = src.shape[0]
    H = src.shape[1]
    K = offs.shape[0]
    for i in range(W):
        for j in range(H):
            if src[i, j]:
                for k in range(K):
                    ii = i + offs[k, 0]
                    jj = j + offs[k, 1]
                    if 0 <= ii < W and 0 <= jj < H:
                        dst[ii, jj] = 1


@njit(**JIT)
def blur_separable(src, tmp, dst, kern):
    """Two-pass separable convolution with zero padding."""
    W = src.shape[0]
    H = src.shape[1]
    R = (kern.shape[0] - 1) // 2
    for i in range(W):
        for j in range(H):
            acc = 0.0
            for k in range(-R, R + 1):
                jj = j + k
                if 0 <= jj < H:
                    acc += src[i, jj] * kern[k + R]
            tmp[i, j] = acc
    for i in range(W):
        for j in range(H):
            acc = 0.0
            for k in range(-R, R + 1):
                ii = i + k
                if 0 <= ii < W:
                    acc += tmp[ii, j] * kern[k + R]
            dst[i, j] = acc


@njit(**JIT)
def bilinear_at(cells, gx, gy):
    """Bilinear interpolation at continuous cell coords; 0 outside."""
    W = cells.shape[0]
    H = cells.shape[1]
    u = gx - 0.5
    v = gy - 0.5
    i0 = int(math.floor(u))
    j0 = int(math.floor(v))
    fu = u - i0
    fv = v - j0
    acc = 0.0
    for di in range(2):
        for dj in range(2):
            ii = i0 + di
            jj = j0 + dj
            if 0 <= ii < W and 0 <= jj < H:
                w = (fu if di == 1 else 1.0 - fu) * (fv if dj == 1 else 1.0 - fv)
                acc += w * cells[ii, jj]
    return acc


@njit(**JIT)
def dijkstra_grid(occ, gi, gj, step, dist):
    """8-connected Dijkstra over free cells from (gi, gj).

    ``dist`` receives path length in meters (inf where unreachable);
    returns the number of settled cells.
    """
    W = occ.shape[0]
    H = occ.shape[1]
    dist[:, :] = INF
    if occ[gi, gj]:
        return 0
    cap = 8 * W * H
    hk = np.empty(cap, dtype=np.float64)
    hv = np.empty(cap, dtype=np.int64)
    hn = 0
    # push
    hk[0] = 0.0
    hv[0] = gi * H + gj
    hn = 1
    dist[gi, gj] = 0.0
    done = np.zeros((W, H), dtype=np.uint8)
    settled = 0
    diag = step * math.sqrt(2.0)
    while hn > 0:
        # pop-min
        k = hk[0]
        v = hv[0]
        hn -= 1
        hk[0] = hk[hn]
        hv[0] = hv[hn]
        i = 0
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < hn and hk[l] < hk[m]:
                m = l
            if r < hn and hk[r] < hk[m]:
                m = r
            if m == i:
                break
            hk[i], hk[m] = hk[m], hk[i]
            hv[i], hv[m] = hv[m], hv[i]
            i = m
        ci = v // H
        cj = v % H
        if done[ci, cj]:
            continue
        done[ci, cj] = 1
        settled += 1
        for di in range(-1, 2):
            for dj in range(-1, 2):
                if di == 0 and dj == 0:
                    continue
                ii = ci + di
                jj = cj + dj
                if ii < 0 or ii >= W or jj < 0 or jj >= H:
                    continue
                if occ[ii, jj] or done[ii, jj]:
                    continue
                w = diag if (di != 0 and dj != 0) else step
                nd = k + w
                if nd < dist[ii, jj]:
                    dist[ii, jj] = nd
                    if hn < cap:
                        hk[hn] = nd
                        hv[hn] = ii * H + jj
                        hn += 1
                        c = hn - 1
                        while c > 0:
                            par = (c - 1) // 2
                            if hk[par] <= hk[c]:
                                break
                            hk[par], hk[c] = hk[c], hk[par]
                            hv[par], hv[c] = hv[c], hv[par]
                            c = par
    return settled


@njit(**JIT)
def descend_field(dist, si, sj, out_ij):
    """Follow steepest descent of a Dijkstra field to its zero cell.

    Writes visited cells into out_ij and returns the count (0 if the start
    cell is unreachable)."""
    W = dist.shape[0]
    H = dist.shape[1]
    if not (0 <= si < W and 0 <= sj < H):
        return 0
    if not np.isfinite(dist[si, sj]):
        return 0
    ci = si
    cj = sj
    n = 0
    out_ij[n, 0] = ci
    out_ij[n, 1] = cj
    n += 1
    maxlen = out_ij.shape[0]
    while dist[ci, cj] > 0.0 and n < maxlen:
        best = dist[ci, cj]
        bi = ci
        bj = cj
        for di in range(-1, 2):
            for dj in range(-1, 2):
                if di == 0 and dj == 0:
                    continue
                ii = ci + di
                jj = cj + dj
                if ii < 0 or ii >= W or jj < 0 or jj >= H:
                    continue
                if dist[ii, jj] < best:
                    best = dist[ii, jj]
                    bi = ii
                    bj = jj
        if bi == ci and bj == cj:
            break
        ci = bi
        cj = bj
        out_ij[n, 0] = ci
        out_ij[n, 1] = cj
        n += 1
    return n


# ---------------------------------------------------------------------------
# unicycle prediction


# 4-point Gauss-Legendre nodes/weights on [0, 1]
_GL_X0 = 0.5 - 0.5 * 0.8611363115940526
_GL_X1 = 0.5 - 0.5 * 0.3399810435848563
_GL_X2 = 0.5 + 0.5 * 0.3399810435848563
_GL_X3 = 0.5 + 0.5 * 0.8611363115940526
_GL_W0 = 0.5 * 0.3478548451374538
_GL_W1 = 0.5 * 0.6521451548625461


@njit(**JIT)
def predict_one(x, y, th, v, om, a, b, tbar,
                v_max, v_back_max, om_max):
    """Forward prediction of one unicycle state under linearly ramping
    velocities: the heading integrates exactly; the position uses the exact
    constant-turn-rate arc when the angular acceleration is zero and a
    Gauss-Legendre quadrature of the ramping-rate trajectory otherwise
    (both within a fraction of a millimeter of the true path). Velocities
    are clamped to the limits after integration.
    """
    if abs(b) < 1e-12:
        if abs(om) < 1e-6:
            # straight-line limit of the arc
            dist = v * tbar + 0.5 * a * tbar * tbar
            nx = x + dist * math.cos(th)
            ny = y + dist * math.sin(th)
        else:
            # exact integral for constant turn rate, ramping speed
            th1 = th + om * tbar
            v1 = v + a * tbar
            nx = x + (v1 * math.sin(th1) - v * math.sin(th)) / om \
                + a * (math.cos(th1) - math.cos(th)) / (om * om)
            ny = y - (v1 * math.cos(th1) - v * math.cos(th)) / om \
                + a * (math.sin(th1) - math.sin(th)) / (om * om)
        nth = th + om * tbar
    else:
        nx = x
        ny = y
        for node in range(4):
            if node == 0:
                t = _GL_X0 * tbar
                w = _GL_W0 * tbar
            elif node == 1:
                t = _GL_X1 * tbar
                w = _GL_W1 * tbar
            elif node == 2:
                t = _GL_X2 * tbar
                w = _GL_W1 * tbar
            else:
                t = _GL_X3 * tbar
                w = _GL_W0 * tbar
            vt = v + a * t
            ph = th + om * t + 0.5 * b * t * t
            nx += w * vt * math.cos(ph)
            ny += w * vt * math.sin(ph)
        nth = th + om * tbar + 0.5 * b * tbar * tbar
    # wrap to (-pi, pi]
    nth = nth % (2.0 * math.pi)
    if nth > math.pi:
        nth -= 2.0 * math.pi
    nv = v + tbar * a
    nom = om + tbar * b
    if nv > v_max:
        nv = v_max
    elif nv < -v_back_max:
        nv = -v_back_max
    if nom > om_max:
        nom = om_max
    elif nom < -om_max:
        nom = -om_max
    return nx, ny, nth, nv, nom


# ---------------------------------------------------------------------------
# lazy visibility-graph A*
#
# Vertex 0 is the start, vertex 1 the goal; the rest are polygon corners.
# Edges are validated against the polygon set only when their head node is
# popped, matching a lazily constructed visibility graph.


@njit(**JIT)
def _heap_push(hk, hg, hvert, hpar, hseq, hn, key, g, v, p, seq):
    hk[hn] = key
    hg[hn] = g
    hvert[hn] = v
    hpar[hn] = p
    hseq[hn] = seq
    hn += 1
    c = hn - 1
    while c > 0:
        par = (c - 1) // 2
        if hk[par] < hk[c] or (hk[par] == hk[c] and hseq[par] < hseq[c]):
            break
        hk[par], hk[c] = hk[c], hk[par]
        hg[par], hg[c] = hg[c], hg[par]
        hvert[par], hvert[c] = hvert[c], hvert[par]
        hpar[par], hpar[c] = hpar[c], hpar[par]
        hseq[par], hseq[c] = hseq[c], hseq[par]
        c = par
    return hn


@njit(**JIT)
def lazy_visibility_astar(px, py, vx, vy, starts, wx, wy, parent_out, cap):
    """A* over the implicit complete graph on candidate waypoints wx/wy.

    Edges are only collision-checked when their head entry is popped. A
    failed check marks the edge dead and restores the vertex's best
    alternative entry from the closed set, so push pruning stays sound.
    Returns the goal's path length (inf if unreachable, -2.0 on queue
    overflow). parent_out receives the search tree for path extraction.
    """
    V = wx.shape[0]
    gx = wx[1]
    gy = wy[1]
    hk = np.empty(cap, dtype=np.float64)
    hg = np.empty(cap, dtype=np.float64)
    hvert = np.empty(cap, dtype=np.int32)
    hpar = np.empty(cap, dtype=np.int32)
    hseq = np.empty(cap, dtype=np.int64)
    hn = 0
    seq = 0
    closed = np.zeros(V, dtype=np.uint8)
    gclosed = np.full(V, INF, dtype=np.float64)
    gbest = np.full(V, INF, dtype=np.float64)
    failed = np.zeros((V, V), dtype=np.uint8)
    hgoal = np.empty(V, dtype=np.float64)
    for i in range(V):
        dx = wx[i] - gx
        dy = wy[i] - gy
        hgoal[i] = math.sqrt(dx * dx + dy * dy)
    for i in range(V):
        parent_out[i] = -1
    # seed: start vertex, no parent edge to validate
    hn = _heap_push(hk, hg, hvert, hpar, hseq, hn, hgoal[0], 0.0, 0, -1, seq)
    seq += 1
    while hn > 0:
        # pop min (key, seq)
        g0 = hg[0]
        v0 = hvert[0]
        p0 = hpar[0]
        hn -= 1
        hk[0] = hk[hn]
        hg[0] = hg[hn]
        hvert[0] = hvert[hn]
        hpar[0] = hpar[hn]
        hseq[0] = hseq[hn]
        i = 0
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < hn and (hk[l] < hk[m] or (hk[l] == hk[m] and hseq[l] < hseq[m])):
                m = l
            if r < hn and (hk[r] < hk[m] or (hk[r] == hk[m] and hseq[r] < hseq[m])):
                m = r
            if m == i:
                break
            hk[i], hk[m] = hk[m], hk[i]
            hg[i], hg[m] = hg[m], hg[i]
            hvert[i], hvert[m] = hvert[m], hvert[i]
            hpar[i], hpar[m] = hpar[m], hpar[i]
            hseq[i], hseq[m] = hseq[m], hseq[i]
            i = m
        if closed[v0]:
            continue
        if p0 >= 0:
            # lazy edge validation
            if seg_blocked_by_set(wx[p0], wy[p0], wx[v0], wy[v0], vx, vy, starts, EPS):
                failed[p0, v0] = 1
                failed[v0, p0] = 1
                # restore the best remaining candidate entry for v0
                bg = INF
                bu = -1
                for u in range(V):
                    if closed[u] and not failed[u, v0]:
                        dx = wx[v0] - wx[u]
                        dy = wy[v0] - wy[u]
                        ng = gclosed[u] + math.sqrt(dx * dx + dy * dy)
                        if ng < bg:
                            bg = ng
                            bu = u
                gbest[v0] = bg
                if bu >= 0:
                    if hn >= cap:
                        return -2.0
                    hn = _heap_push(hk, hg, hvert, hpar, hseq, hn,
                                    bg + hgoal[v0], bg, v0, bu, seq)
                    seq += 1
                continue
        closed[v0] = 1
        gclosed[v0] = g0
        parent_out[v0] = p0
        if v0 == 1:
            return g0
        for w in range(V):
            if closed[w] or w == v0 or failed[v0, w]:
                continue
            dx = wx[w] - wx[v0]
            dy = wy[w] - wy[v0]
            ng = g0 + math.sqrt(dx * dx + dy * dy)
            if ng >= gbest[w]:
                continue
            gbest[w] = ng
            if hn >= cap:
                return -2.0
            hn = _heap_push(hk, hg, hvert, hpar, hseq, hn,
                            ng + hgoal[w], ng, w, v0, seq)
            seq += 1
    return INF


@njit(**JIT)
def goal_distance_tree(wx, wy, vx, vy, starts, order, dist_out, parent_out, cap):
    """Dijkstra from waypoint 0 over the implicit visibility graph.

    Edges are validated lazily at relaxation time, in near-to-far order per
    vertex (``order`` holds argsorted candidate indices row by row).
    Fills shortest-path distance and parent for every reachable waypoint.
    """
    V = wx.shape[0]
    hk = np.empty(cap, dtype=np.float64)
    hv = np.empty(cap, dtype=np.int32)
    hn = 0
    closed = np.zeros(V, dtype=np.uint8)
    for i in range(V):
        dist_out[i] = INF
        parent_out[i] = -1
    dist_out[0] = 0.0
    hk[0] = 0.0
    hv[0] = 0
    hn = 1
    while hn > 0:
        k0 = hk[0]
        v0 = hv[0]
        hn -= 1
        hk[0] = hk[hn]
        hv[0] = hv[hn]
        i = 0
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < hn and hk[l] < hk[m]:
                m = l
            if r < hn and hk[r] < hk[m]:
                m = r
            if m == i:
                break
            hk[i], hk[m] = hk[m], hk[i]
            hv[i], hv[m] = hv[m], hv[i]
            i = m
        if closed[v0]:
            continue
        closed[v0] = 1
        for oi in range(V):
            w = order[v0, oi]
            if w == v0 or closed[w]:
                continue
            dx = wx[w] - wx[v0]
            dy = wy[w] - wy[v0]
            nd = k0 + math.sqrt(dx * dx + dy * dy)
            if nd >= dist_out[w]:
                continue
            if seg_blocked_by_set(wx[v0], wy[v0], wx[w], wy[w], vx, vy, starts, EPS):
                continue
            dist_out[w] = nd
            parent_out[w] = v0
            if hn < cap:
                hk[hn] = nd
                hv[hn] = w
                hn += 1
                c = hn - 1
                while c > 0:
                    par = (c - 1) // 2
                    if hk[par] <= hk[c]:
                        break
                    hk[par], hk[c] = hk[c], hk[par]
                    hv[par], hv[c] = hv[c], hv[par]
                    c = par
    return 0


@njit(**JIT)
def tree_connect(px, py, wx, wy, tree_dist, vx, vy, starts):
    """Best waypoint linking a free point into a goal-rooted distance tree.

    Scans candidates in ascending ``|p-w| + tree_dist[w]`` order and returns
    (index, total_length) of the first one with a clear line of sight, which
    is optimal. Returns (-1, inf) when none connects.
    """
    V = wx.shape[0]
    bound = np.empty(V, dtype=np.float64)
    for i in range(V):
        dx = wx[i] - px
        dy = wy[i] - py
        bound[i] = math.sqrt(dx * dx + dy * dy) + tree_dist[i]
    used = np.zeros(V, dtype=np.uint8)
    for _ in range(V):
        best = INF
        bi = -1
        for i in range(V):
            if not used[i] and bound[i] < best:
                best = bound[i]
                bi = i
        if bi < 0 or not np.isfinite(best):
            return -1, INF
        used[bi] = 1
        if not seg_blocked_by_set(px, py, wx[bi], wy[bi], vx, vy, starts, EPS):
            return bi, best
    return -1, INF


# ---------------------------------------------------------------------------
# rotate-translate-rotate timing


@njit(**JIT)
def wrap_pi(a):
    w = a % (2.0 * math.pi)
    if w > math.pi:
        w -= 2.0 * math.pi
    return w


@njit(**JIT)
def rtr_time(sx, sy, sth, gx, gy, gth, v_max, v_back_max, om_max):
    """Time to face the goal, drive straight and attain the goal heading.

    Evaluates both the forward and the backing-up variant and returns the
    cheaper one.
    """
    dx = gx - sx
    dy = gy - sy
    dist = math.sqrt(dx * dx + dy * dy)
    if dist < 1e-12:
        return abs(wrap_pi(gth - sth)) / om_max
    ang = math.atan2(dy, dx)
    fwd = (abs(wrap_pi(ang - sth)) / om_max + dist / v_max
           + abs(wrap_pi(gth - ang)) / om_max)
    rev = (abs(wrap_pi(ang - sth - math.pi)) / om_max + dist / v_back_max
           + abs(wrap_pi(gth - ang - math.pi)) / om_max)
    return min(fwd, rev)


@njit(**JIT)
def rtr_along_chain(px, py, pth, conn, wx, wy, parent, gth,
                    v_max, v_back_max, om_max):
    """RTR times concatenated along a tree path p -> conn -> ... -> root.

    Intermediate orientations are the incoming segment angles; the root
    pose (the intermediate goal) keeps its own heading gth.
    """
    total = 0.0
    cx = px
    cy = py
    cth = pth
    cur = conn
    guard = 0
    while guard < 128:
        guard += 1
        nx = wx[cur]
        ny = wy[cur]
        dx = nx - cx
        dy = ny - cy
        if dx * dx + dy * dy > 1e-24:
            ang = math.atan2(dy, dx)
        else:
            ang = cth
        gthis = gth if cur == 0 else ang
        total += rtr_time(cx, cy, cth, nx, ny, gthis,
                          v_max, v_back_max, om_max)
        if cur == 0:
            return total
        cx = nx
        cy = ny
        cth = gthis
        cur = parent[cur]
        if cur < 0:
            return INF
    return INF


@njit(**JIT)
def tree_connect_scratch(px, py, wx, wy, tree_dist, vx, vy, starts,
                         bound, used):
    """tree_connect with caller-provided scratch buffers (see tree_connect)."""
    V = wx.shape[0]
    for i in range(V):
        dx = wx[i] - px
        dy = wy[i] - py
        bound[i] = math.sqrt(dx * dx + dy * dy) + tree_dist[i]
        used[i] = 0
    for _ in range(V):
        best = INF
        bi = -1
        for i in range(V):
            if not used[i] and bound[i] < best:
                best = bound[i]
                bi = i
        if bi < 0 or not np.isfinite(best):
            return -1, INF
        used[bi] = 1
        if not seg_blocked_by_set(px, py, wx[bi], wy[bi], vx, vy, starts, EPS):
            return bi, best
    return -1, INF


@njit(**JIT)
def project_out_of_set(px, py, vx, vy, starts, margin):
    """Push a point outside every polygon of a set (at most 6 rounds)."""
    qx = px
    qy = py
    for _ in range(6):
        moved = False
        for p in range(starts.shape[0] - 1):
            lo = starts[p]
            hi = starts[p + 1]
            if point_strictly_in_poly(qx, qy, vx, vy, lo, hi, EPS):
                n = hi - lo
                bd = INF
                bx = qx
                by = qy
                bex = 0.0
                bey = 0.0
                for i in range(n):
                    x0 = vx[lo + i]
                    y0 = vy[lo + i]
                    j = lo + ((i + 1) % n)
                    x1 = vx[j]
                    y1 = vy[j]
                    ex = x1 - x0
                    ey = y1 - y0
                    L2 = ex * ex + ey * ey
                    t = 0.0 if L2 <= 0.0 else min(max(((qx - x0) * ex + (qy - y0) * ey) / L2, 0.0), 1.0)
                    fx = x0 + t * ex
                    fy = y0 + t * ey
                    d2 = (qx - fx) ** 2 + (qy - fy) ** 2
                    if d2 < bd:
                        bd = d2
                        bx = fx
                        by = fy
                        bex = ex
                        bey = ey
                ox = bx - qx
                oy = by - qy
                onorm = math.sqrt(ox * ox + oy * oy)
                if onorm < 1e-12:
                    el = math.sqrt(bex * bex + bey * bey)
                    ox = bey / el
                    oy = -bex / el
                    onorm = 1.0
                qx = bx + ox / onorm * margin
                qy = by + oy / onorm * margin
                moved = True
        if not moved:
            break
    return qx, qy


# ---------------------------------------------------------------------------
# planner heuristics and collision staging
#
# A "tree" is the tuple (wx, wy, dist, parent, pvx, pvy, pstarts): goal-rooted
# shortest-path tree waypoints plus the polygon set it was validated against.


@njit(**JIT)
def heuristic_query(px, py, pth, gth, tree_dyn, tree_static, use_dyn,
                    kind, v_max, v_back_max, om_max, bound, used):
    """Heuristic time-to-goal from a state via the goal trees.

    Tries the dynamic-aware tree first (when applicable) and falls back to
    the static tree, mirroring the dynamic/static path fallback. kind 0 =
    path RTR, 1 = path Euclidean. Returns +inf when no path exists.
    """
    if use_dyn:
        wx, wy, dist, parent, pvx, pvy, pstarts = tree_dyn
        qx, qy = project_out_of_set(px, py, pvx, pvy, pstarts, 1e-3)
        conn, total = tree_connect_scratch(qx, qy, wx, wy, dist,
                                           pvx, pvy, pstarts, bound, used)
        if conn >= 0:
            if kind == 1:
                return total / v_max
            return rtr_along_chain(qx, qy, pth, conn, wx, wy, parent, gth,
                                   v_max, v_back_max, om_max)
    wx, wy, dist, parent, pvx, pvy, pstarts = tree_static
    qx, qy = project_out_of_set(px, py, pvx, pvy, pstarts, 1e-3)
    conn, total = tree_connect_scratch(qx, qy, wx, wy, dist,
                                       pvx, pvy, pstarts, bound, used)
    if conn < 0:
        return INF
    if kind == 1:
        return total / v_max
    return rtr_along_chain(qx, qy, pth, conn, wx, wy, parent, gth,
                           v_max, v_back_max, om_max)


@njit(**JIT)
def dijkstra_rtr_query(px, py, pth, gx, gy, gth, field, fox, foy, fcos, fsin,
                       res, offx, offy, path_buf, v_max, v_back_max, om_max):
    """RTR laid along the steepest-descent grid path of a distance field."""
    W = field.shape[0]
    H = field.shape[1]
    lx = fcos * (px - fox) + fsin * (py - foy)
    ly = -fsin * (px - fox) + fcos * (py - foy)
    si = int(math.floor((lx + offx) / res))
    sj = int(math.floor((ly + offy) / res))
    if si < 0 or si >= W or sj < 0 or sj >= H:
        return INF
    if not np.isfinite(field[si, sj]):
        return INF
    n = descend_field(field, si, sj, path_buf)
    if n <= 0:
        return INF
    if n == 1:
        return 0.0  # already on the goal cell
    # decimate to direction-change corners and accumulate RTR on the fly
    total = 0.0
    cx = px
    cy = py
    cth = pth
    pref_i = path_buf[0, 0]
    pref_j = path_buf[0, 1]
    di0 = path_buf[1, 0] - pref_i
    dj0 = path_buf[1, 1] - pref_j
    for k in range(2, n + 1):
        corner = False
        if k == n:
            corner = True
        else:
            di = path_buf[k, 0] - path_buf[k - 1, 0]
            dj = path_buf[k, 1] - path_buf[k - 1, 1]
            if di != di0 or dj != dj0:
                corner = True
                di0 = di
                dj0 = dj
        if not corner:
            continue
        idx = k - 1
        wxl = (path_buf[idx, 0] + 0.5) * res - offx
        wyl = (path_buf[idx, 1] + 0.5) * res - offy
        wxw = fox + fcos * wxl - fsin * wyl
        wyw = foy + fsin * wxl + fcos * wyl
        last = (k == n)
        if last:
            wxw = gx
            wyw = gy
        dx = wxw - cx
        dy = wyw - cy
        if dx * dx + dy * dy > 1e-24:
            ang = math.atan2(dy, dx)
        else:
            ang = cth
        gthis = gth if last else ang
        total += rtr_time(cx, cy, cth, wxw, wyw, gthis,
                          v_max, v_back_max, om_max)
        cx = wxw
        cy = wyw
        cth = gthis
    return total


@njit(**JIT)
def state_collides(x, y, th, depth, grid, fox, foy, fcos, fsin, res,
                   offx, offy, hull_x, hull_y, depth_limit,
                   dyn1, dyn2, dyn3, scratch_x, scratch_y):
    """Two-stage collision test of an agent state.

    Stage 1 looks up every hull corner and the hull center in the static
    collision grid. Stage 2 (only within the prediction depth limit) runs
    polygon tests against each obstacle predicted at the state's depth.
    A state whose center leaves the local window counts as colliding (the
    search is confined to the window).
    """
    W = grid.shape[0]
    H = grid.shape[1]
    # hull center must stay inside the window
    lx = fcos * (x - fox) + fsin * (y - foy)
    ly = -fsin * (x - fox) + fcos * (y - foy)
    ci = int(math.floor((lx + offx) / res))
    cj = int(math.floor((ly + offy) / res))
    if ci < 0 or ci >= W or cj < 0 or cj >= H:
        return True
    if grid[ci, cj]:
        return True
    c = math.cos(th)
    s = math.sin(th)
    nh = hull_x.shape[0]
    for k in range(nh):
        wx = x + c * hull_x[k] - s * hull_y[k]
        wy = y + s * hull_x[k] + c * hull_y[k]
        lx = fcos * (wx - fox) + fsin * (wy - foy)
        ly = -fsin * (wx - fox) + fcos * (wy - foy)
        i = int(math.floor((lx + offx) / res))
        j = int(math.floor((ly + offy) / res))
        if 0 <= i < W and 0 <= j < H and grid[i, j]:
            return True
        scratch_x[k] = wx
        scratch_y[k] = wy
    if depth > depth_limit or depth < 1:
        return False
    if depth == 1:
        dvx, dvy, dstarts, dconvex = dyn1
    elif depth == 2:
        dvx, dvy, dstarts, dconvex = dyn2
    else:
        dvx, dvy, dstarts, dconvex = dyn3
    npoly = dstarts.shape[0] - 1
    hull_wx = scratch_x[:nh]
    hull_wy = scratch_y[:nh]
    for p in range(npoly):
        lo = dstarts[p]
        hi = dstarts[p + 1]
        ox = dvx[lo:hi]
        oy = dvy[lo:hi]
        if dconvex[p]:
            if sat_overlap(hull_wx, hull_wy, ox, oy):
                return True
        else:
            if corner_overlap(hull_wx, hull_wy, ox, oy, EPS):
                return True
    return False


STATUS_EMPTY = 0
STATUS_FINISHED = 1
STATUS_EXPANDED = 2


@njit(**JIT)
def staa_search(
        nodes,       # (nx, ny, nth, nv, nom, ng, nh, nf, ndepth, nparent, naction)
        counters,    # int64[5]: node_count, heap_count, seq, generation, expansions
        heap,        # (hk f8, hdep i4, hseq i8, hnode i4)
        closed,      # int32 stamp grid [W, H, TH]
        grid, cost,  # collision grid u8, costmap f4
        frame,       # (fox, foy, fcos, fsin, res, offx, offy)
        actions,     # (act_a, act_b)
        limits,      # (v_max, v_back_max, om_max)
        params_f,    # (tbar, w_s, w_d, prox_range, finish_h)
        params_i,    # (depth_limit, accumulate, kind, have_dyn)
        goal,        # (gx, gy, gth)
        dyn1, dyn2, dyn3,   # obstacle packs (vx, vy, starts, convex) per depth
        trees,       # 4-tuple of goal trees (depth 1..3, static)
        field, field_buf,
        scratch,     # (sc_bound, sc_used, sc_hx, sc_hy)
        hull_x, hull_y,
        out_i,       # int64[4]: status, node_idx, best_h_idx, first_push_idx
        best_h_track,
        chunk):
    """Run the aborting A* search for up to ``chunk`` expansions.

    Pops the best-f node (ties: deeper node, then insertion order), skips
    closed duplicates, finishes when the popped heuristic drops below the
    threshold, and otherwise expands the sampled acceleration commands with
    two-stage collision checking. Returns through out_i so the caller can
    interleave wall-clock budget checks between chunks.
    """
    nx, ny, nth, nv, nom, ng, nh, nf, ndepth, nparent, naction = nodes
    hk, hdep, hseq, hnode = heap
    fox, foy, fcos, fsin, res, offx, offy = frame
    act_a, act_b = actions
    v_max, v_back_max, om_max = limits
    tbar, w_s, w_d, prox_range, finish_h = params_f
    depth_limit, accumulate, kind, have_dyn = params_i
    ggx, ggy, ggth = goal
    sc_bound, sc_used, sc_hx, sc_hy = scratch
    tree_d1, tree_d2, tree_d3, tree_static = trees
    TH = closed.shape[2]
    W = closed.shape[0]
    H = closed.shape[1]
    gen = counters[3]
    done = 0
    while done < chunk:
        # ---- pop the best entry, skipping closed duplicates -------------
        heap_n = counters[1]
        node = -1
        while True:
            if heap_n <= 0:
                counters[1] = 0
                out_i[0] = STATUS_EMPTY
                out_i[1] = -1
                return
            node = hnode[0]
            heap_n -= 1
            hk[0] = hk[heap_n]
            hdep[0] = hdep[heap_n]
            hseq[0] = hseq[heap_n]
            hnode[0] = hnode[heap_n]
            i = 0
            while True:
                l = 2 * i + 1
                r = l + 1
                m = i
                if l < heap_n and (hk[l] < hk[m] or (hk[l] == hk[m] and (
                        hdep[l] > hdep[m] or (hdep[l] == hdep[m] and hseq[l] < hseq[m])))):
                    m = l
                if r < heap_n and (hk[r] < hk[m] or (hk[r] == hk[m] and (
                        hdep[r] > hdep[m] or (hdep[r] == hdep[m] and hseq[r] < hseq[m])))):
                    m = r
                if m == i:
                    break
                hk[i], hk[m] = hk[m], hk[i]
                hdep[i], hdep[m] = hdep[m], hdep[i]
                hseq[i], hseq[m] = hseq[m], hseq[i]
                hnode[i], hnode[m] = hnode[m], hnode[i]
                i = m
            counters[1] = heap_n
            # closed-table lookup of the popped state
            lx = fcos * (nx[node] - fox) + fsin * (ny[node] - foy)
            ly = -fsin * (nx[node] - fox) + fcos * (ny[node] - foy)
            ci = int(math.floor((lx + offx) / res))
            cj = int(math.floor((ly + offy) / res))
            ck = int((nth[node] + math.pi) / 0.1)
            if ck >= TH:
                ck = TH - 1
            if closed[ci, cj, ck] == gen:
                continue
            closed[ci, cj, ck] = gen
            break
        if nh[node] < finish_h:
            out_i[0] = STATUS_FINISHED
            out_i[1] = node
            return
        # ---- expand ------------------------------------------------------
        n_act = act_a.shape[0]
        depth_child = ndepth[node] + 1
        node_count = counters[0]
        heap_n = counters[1]
        seq = counters[2]
        use_dyn = have_dyn == 1 and depth_child <= depth_limit
        if use_dyn:
            if depth_child == 1:
                dvx, dvy, dstarts, dconv = dyn1
            elif depth_child == 2:
                dvx, dvy, dstarts, dconv = dyn2
            else:
                dvx, dvy, dstarts, dconv = dyn3
        else:
            dvx, dvy, dstarts, dconv = dyn1
        if depth_child == 1:
            tree_dyn = tree_d1
        elif depth_child == 2:
            tree_dyn = tree_d2
        else:
            tree_dyn = tree_d3
        px = nx[node]
        py = ny[node]
        pth = nth[node]
        pv = nv[node]
        pom = nom[node]
        pg = ng[node]
        for ai in range(n_act):
            sx, sy, sth, sv, som = predict_one(
                px, py, pth, pv, pom, act_a[ai], act_b[ai], tbar,
                v_max, v_back_max, om_max)
            # closed-cell dedup
            lx = fcos * (sx - fox) + fsin * (sy - foy)
            ly = -fsin * (sx - fox) + fcos * (sy - foy)
            gx_ = (lx + offx) / res
            gy_ = (ly + offy) / res
            ci = int(math.floor(gx_))
            cj = int(math.floor(gy_))
            if ci < 0 or ci >= W or cj < 0 or cj >= H:
                continue
            ck = int((sth + math.pi) / 0.1)
            if ck >= TH:
                ck = TH - 1
            if closed[ci, cj, ck] == gen:
                continue
            # two-stage collision check
            if state_collides(sx, sy, sth, depth_child, grid,
                              fox, foy, fcos, fsin, res, offx, offy,
                              hull_x, hull_y, depth_limit,
                              dyn1, dyn2, dyn3, sc_hx, sc_hy):
                continue
            # cost (after the collision check)
            cell_cost = bilinear_at(cost, gx_, gy_)
            prox = 0.0
            if use_dyn:
                d_obs = dist_to_polyset(sx, sy, dvx, dvy, dstarts)
                if d_obs < prox_range:
                    prox = prox_range - d_obs
            penalty = w_s * cell_cost + w_d * prox
            if accumulate == 1:
                g = pg + tbar + penalty
            else:
                g = depth_child * tbar + penalty
            # heuristic
            if kind == 2:
                h = dijkstra_rtr_query(sx, sy, sth, ggx, ggy, ggth, field,
                                       fox, foy, fcos, fsin, res, offx, offy,
                                       field_buf, v_max, v_back_max, om_max)
            else:
                h = heuristic_query(sx, sy, sth, ggth, tree_dyn, tree_static,
                                    use_dyn, kind, v_max, v_back_max, om_max,
                                    sc_bound, sc_used)
            f = g + h
            idx = node_count
            nx[idx] = sx
            ny[idx] = sy
            nth[idx] = sth
            nv[idx] = sv
            nom[idx] = som
            ng[idx] = g
            nh[idx] = h
            nf[idx] = f
            ndepth[idx] = depth_child
            nparent[idx] = node
            naction[idx] = ai
            node_count += 1
            # heap push
            hk[heap_n] = f
            hdep[heap_n] = depth_child
            hseq[heap_n] = seq
            hnode[heap_n] = idx
            heap_n += 1
            seq += 1
            c = heap_n - 1
            while c > 0:
                par = (c - 1) // 2
                if hk[par] < hk[c] or (hk[par] == hk[c] and (
                        hdep[par] > hdep[c] or (hdep[par] == hdep[c] and hseq[par] < hseq[c]))):
                    break
                hk[par], hk[c] = hk[c], hk[par]
                hdep[par], hdep[c] = hdep[c], hdep[par]
                hseq[par], hseq[c] = hseq[c], hseq[par]
                hnode[par], hnode[c] = hnode[c], hnode[par]
                c = par
            if h < best_h_track[0]:
                best_h_track[0] = h
                out_i[2] = idx
            if out_i[3] < 0:
                out_i[3] = idx  # first pushed node (fallback abort target)
        counters[0] = node_count
        counters[1] = heap_n
        counters[2] = seq
        done += 1
        counters[4] += 1
        out_i[0] = STATUS_EXPANDED
        out_i[1] = node
        if node_count + 64 > nx.shape[0] or heap_n + 64 > hk.shape[0]:
            return  # caller must grow the buffers


@njit(**JIT)
def mask_buried(wx, wy, vx, vy, starts, out):
    """Flag points lying strictly inside any polygon of the set."""
    for i in range(wx.shape[0]):
        out[i] = 1 if point_strictly_in_polyset(wx[i], wy[i], vx, vy, starts, EPS) else 0
