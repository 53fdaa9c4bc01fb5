"""Planar scenes with non-Lipschitz boundaries and their admissibility checks.

A scene is a polygonal domain (outer loop, holes, interior slits) whose
boundary carries a Dirichlet part given as a finite union of closed line
segments.  All measure computations on the Dirichlet part (arclength of
ball intersections, disc clipping) are exact up to floating point, which
keeps the regularity estimators oracle-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

_EPS = 1e-12


# ---------------------------------------------------------------------------
# segment primitives


def _as_points(x):
    a = np.asarray(x, dtype=float)
    if a.shape[-1] != 2:
        raise ValueError("points must be 2D")
    return a


def seg_point_dist(p, a, b):
    """Exact Euclidean distance from point p to segment [a, b]."""
    p, a, b = map(np.asarray, (p, a, b))
    d = b - a
    L2 = float(d @ d)
    if L2 <= _EPS * _EPS:
        return float(np.hypot(*(p - a)))
    t = float(np.clip((p - a) @ d / L2, 0.0, 1.0))
    q = a + t * d
    return float(np.hypot(*(p - q)))


def _seg_seg_intersect(p0, p1, q0, q1):
    """True if open segments properly intersect or overlap collinearly."""
    d1 = p1 - p0
    d2 = q1 - q0
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    r = q0 - p0
    if abs(denom) > _EPS * max(1.0, np.abs(d1).max() * np.abs(d2).max()):
        t = (r[0] * d2[1] - r[1] * d2[0]) / denom
        s = (r[0] * d1[1] - r[1] * d1[0]) / denom
        return _EPS < t < 1 - _EPS and _EPS < s < 1 - _EPS
    # parallel: overlap only if collinear and ranges overlap
    cross = r[0] * d1[1] - r[1] * d1[0]
    if abs(cross) > _EPS * max(1.0, np.abs(d1).max()):
        return False
    L2 = d1 @ d1
    if L2 < _EPS:
        return False
    t0 = (q0 - p0) @ d1 / L2
    t1 = (q1 - p0) @ d1 / L2
    lo, hi = min(t0, t1), max(t0, t1)
    return hi > _EPS and lo < 1 - _EPS


def disc_clip_interval(a, b, center, r):
    """Parameter interval [t0, t1] of segment a + t(b-a) inside B(center, r).

    Returns None if the segment misses the closed disc.
    """
    a = np.asarray(a, float)
    d = np.asarray(b, float) - a
    f = a - np.asarray(center, float)
    A = float(d @ d)
    if A <= _EPS * _EPS:
        return (0.0, 1.0) if f @ f <= r * r else None
    B = 2.0 * float(f @ d)
    C = float(f @ f) - r * r
    disc = B * B - 4 * A * C
    if disc < 0.0:
        return None
    sq = math.sqrt(disc)
    t0 = (-B - sq) / (2 * A)
    t1 = (-B + sq) / (2 * A)
    t0, t1 = max(t0, 0.0), min(t1, 1.0)
    if t1 <= t0:
        return None
    return (t0, t1)


@dataclass(frozen=True)
class SegmentSet:
    """Finite union of closed line segments carrying arclength measure.

    The concrete (d-1)-set of the toolkit: ``segments`` has shape
    (n, 2, 2) and every member must have positive length.
    """

    segments: np.ndarray

    def __post_init__(self):
        segs = np.asarray(self.segments, dtype=float).reshape(-1, 2, 2)
        object.__setattr__(self, "segments", segs)
        if len(segs) == 0:
            raise ValueError("segment set is empty")
        if np.any(self.lengths() <= 0.0):
            raise ValueError("segment of nonpositive length")

    def lengths(self):
        d = self.segments[:, 1] - self.segments[:, 0]
        return np.hypot(d[:, 0], d[:, 1])

    @property
    def total_length(self):
        return float(self.lengths().sum())

    @property
    def diameter(self):
        pts = self.segments.reshape(-1, 2)
        d = pts[:, None, :] - pts[None, :, :]
        return float(np.sqrt((d * d).sum(-1)).max())

    def point_at(self, i, t):
        a, b = self.segments[i]
        return a + t * (b - a)

    def dist(self, x):
        x = np.asarray(x, float)
        return min(seg_point_dist(x, a, b) for a, b in self.segments)

    def measure_in_disc(self, center, r):
        """Arclength of the set inside B(center, r), by exact clipping."""
        total = 0.0
        for (a, b), L in zip(self.segments, self.lengths()):
            iv = disc_clip_interval(a, b, center, r)
            if iv is not None:
                total += (iv[1] - iv[0]) * L
        return total

    def scaled(self, factor, origin=(0.0, 0.0)):
        o = np.asarray(origin, float)
        return SegmentSet((self.segments - o) * factor + o)

    def union(self, other):
        return SegmentSet(np.vstack([self.segments, other.segments]))


def dist_to_set(x, F: SegmentSet):
    """Distance from a point to a segment set (Lipschitz constant 1)."""
    if F is None or len(F.segments) == 0:
        raise ValueError("empty segment set")
    return F.dist(x)


# ---------------------------------------------------------------------------
# polygons


def polygon_area(loop):
    v = _as_points(loop)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def point_in_polygon(p, loop):
    """Even-odd test; points on the boundary count as inside."""
    v = _as_points(loop)
    n = len(v)
    px, py = float(p[0]), float(p[1])
    inside = False
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if seg_point_dist((px, py), a, b) <= 1e-12 * (1 + abs(px) + abs(py)):
            return True
        if (a[1] > py) != (b[1] > py):
            xi = a[0] + (py - a[1]) / (b[1] - a[1]) * (b[0] - a[0])
            if px < xi:
                inside = not inside
    return inside


def _loop_is_simple(loop):
    v = _as_points(loop)
    n = len(v)
    if n < 3:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            if _seg_seg_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]):
                return False
    return True


def disc_polygon_area(loops, center, r):
    """Exact area of B(center, r) intersected with a region given by loops.

    Each loop contributes its signed area (CCW positive), so a CCW outer
    loop together with CW holes yields the area of the region with holes.
    Edge parts inside the disc contribute triangle terms, parts outside
    contribute circular sectors; both are closed-form.
    """
    c = np.asarray(center, float)
    total = 0.0
    for loop in loops:
        v = _as_points(loop) - c
        n = len(v)
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            iv = disc_clip_interval(a, b, (0.0, 0.0), r)
            # breakpoints dividing the edge into inside/outside parts
            ts = [0.0, 1.0]
            if iv is not None:
                ts += [iv[0], iv[1]]
            ts = sorted(set(np.clip(ts, 0.0, 1.0)))
            d = b - a
            for t0, t1 in zip(ts[:-1], ts[1:]):
                if t1 - t0 <= 0.0:
                    continue
                p0 = a + t0 * d
                p1 = a + t1 * d
                mid = a + 0.5 * (t0 + t1) * d
                if mid @ mid <= r * r * (1 + 1e-14):
                    total += 0.5 * (p0[0] * p1[1] - p0[1] * p1[0])
                else:
                    th0 = math.atan2(p0[1], p0[0])
                    th1 = math.atan2(p1[1], p1[0])
                    dth = th1 - th0
                    while dth <= -math.pi:
                        dth += 2 * math.pi
                    while dth > math.pi:
                        dth -= 2 * math.pi
                    total += 0.5 * r * r * dth
    return total


# ---------------------------------------------------------------------------
# scenes


@dataclass(frozen=True)
class PlanarScene:
    """Polygonal domain with holes and interior slits plus a Dirichlet set.

    ``outer_loop`` is counterclockwise, holes are stored as given (their
    orientation is normalized to clockwise internally when areas are
    computed).  Slits are open polylines in the closure of the domain;
    ``dirichlet`` is a SegmentSet supported on the boundary and the slits.
    The Neumann part is the implicit complement.
    """

    outer_loop: np.ndarray
    holes: tuple = ()
    slits: tuple = ()
    dirichlet: SegmentSet | None = None
    name: str = "scene"

    def __post_init__(self):
        outer = _as_points(self.outer_loop)
        if polygon_area(outer) < 0:
            outer = outer[::-1]
        object.__setattr__(self, "outer_loop", outer)
        object.__setattr__(self, "holes", tuple(_as_points(h) for h in self.holes))
        object.__setattr__(
            self, "slits", tuple(_as_points(s) for s in self.slits)
        )
        self._validate()

    # -- validation

    def _validate(self):
        if not _loop_is_simple(self.outer_loop):
            raise ValueError("outer loop is not a simple polygon")
        for h in self.holes:
            if not _loop_is_simple(h):
                raise ValueError("hole loop is not a simple polygon")
        for s in self.slits:
            if len(s) < 2:
                raise ValueError("slit needs at least two vertices")
            for p in s:
                if not point_in_polygon(p, self.outer_loop):
                    raise ValueError("slit leaves the closure of the domain")
        if self.dirichlet is not None:
            tol = 1e-9 * max(self.diameter, 1.0)
            for a, b in self.dirichlet.segments:
                for q in (a, b, 0.5 * (a + b)):
                    if self.dist_to_boundary(q) > tol:
                        raise ValueError(
                            "dirichlet segment not on boundary or slits"
                        )

    # -- basic geometry

    @property
    def diameter(self):
        return float(
            max(
                np.hypot(*(p - q))
                for p in self.outer_loop
                for q in self.outer_loop
            )
        )

    def area_loops(self):
        loops = [self.outer_loop]
        for h in self.holes:
            hh = h if polygon_area(h) < 0 else h[::-1]
            loops.append(hh)
        return loops

    @property
    def area(self):
        return float(sum(polygon_area(l) for l in self.area_loops()))

    def boundary_segments(self, include_slits=True):
        segs = []
        for loop in [self.outer_loop] + list(self.holes):
            n = len(loop)
            for i in range(n):
                segs.append((loop[i], loop[(i + 1) % n]))
        if include_slits:
            for s in self.slits:
                for i in range(len(s) - 1):
                    segs.append((s[i], s[i + 1]))
        return SegmentSet(np.asarray(segs))

    def dist_to_boundary(self, x):
        return self.boundary_segments().dist(x)

    def contains(self, p, tol=0.0):
        """True if p lies in the open domain (strictly off holes)."""
        if not point_in_polygon(p, self.outer_loop):
            return False
        for h in self.holes:
            if point_in_polygon(p, h):
                return False
        return True

    @property
    def neumann_length(self):
        total = self.boundary_segments().total_length
        d = self.dirichlet.total_length if self.dirichlet else 0.0
        return total - d


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class RegularityReport:
    """Two-sided Ahlfors ratio estimates for a (d-1)-set."""

    l: int
    c1_hat: float
    c2_hat: float
    samples: list

    def __post_init__(self):
        if not (0.0 < self.c1_hat <= self.c2_hat):
            raise ValueError("need 0 < c1_hat <= c2_hat")


@dataclass(frozen=True)
class JonesReport:
    epsilon_hat: float
    delta: float
    worst_pair: tuple
    feasible: bool


# ---------------------------------------------------------------------------
# operations


def ahlfors_regularity(F: SegmentSet, centers, radii):
    """Estimate the two-sided arclength regularity constants of F.

    For every center x on F and radius r the ratio
    arclength(F cap B(x, r)) / r is computed by exact segment-disc
    clipping.  The scene is rescaled to diameter 1 first, so admissible
    radii live in ]0, 1[.
    """
    if F is None or len(F.segments) == 0:
        raise ValueError("empty segment set")
    centers = _as_points(centers).reshape(-1, 2)
    radii = np.asarray(radii, dtype=float).ravel()
    if np.any(radii <= 0):
        raise ValueError("radii must be positive")
    diam = F.diameter
    if diam <= 0:
        raise ValueError("degenerate segment set")
    Fs = SegmentSet(F.segments / diam)
    centers = centers / diam
    radii = radii / diam
    if np.any(radii >= 1.0):
        raise ValueError("radius >= scene diameter after rescaling")
    samples = []
    for c in centers:
        if Fs.dist(c) > 1e-9:
            raise ValueError(f"center {tuple(c * diam)} is not on the set")
        for r in radii:
            ratio = Fs.measure_in_disc(c, r) / r
            samples.append((tuple(c), float(r), float(ratio)))
    ratios = [s[2] for s in samples]
    return RegularityReport(
        l=1, c1_hat=min(ratios), c2_hat=max(ratios), samples=samples
    )


def _grid_graph(scene: PlanarScene, resolution):
    """Axis-aligned grid graph of interior points with visibility edges."""
    pts = scene.outer_loop
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    xs = np.linspace(lo[0], hi[0], resolution)
    ys = np.linspace(lo[1], hi[1], resolution)
    bnd = scene.boundary_segments()
    nodes = []
    for x in xs:
        for y in ys:
            p = np.array([x, y])
            if scene.contains(p) and bnd.dist(p) > 1e-9:
                nodes.append(p)
    nodes = np.asarray(nodes)
    if len(nodes) == 0:
        return nodes, csr_matrix((0, 0))
    step = np.array([xs[1] - xs[0] if resolution > 1 else 0.0,
                     ys[1] - ys[0] if resolution > 1 else 0.0])
    reach = np.hypot(*step) * 1.01 + 1e-12
    rows, cols, vals = [], [], []
    for i, p in enumerate(nodes):
        d = nodes - p
        dist = np.hypot(d[:, 0], d[:, 1])
        for j in np.nonzero((dist > 0) & (dist <= reach))[0]:
            if j <= i:
                continue
            if _segment_clear(p, nodes[j], bnd):
                rows.append(i)
                cols.append(j)
                vals.append(dist[j])
    m = csr_matrix((vals, (rows, cols)), shape=(len(nodes), len(nodes)))
    return nodes, m + m.T


def _segment_clear(p, q, bnd: SegmentSet):
    for a, b in bnd.segments:
        if _seg_seg_intersect(np.asarray(p, float), np.asarray(q, float),
                              np.asarray(a, float), np.asarray(b, float)):
            return False
    return True


def jones_check(scene: PlanarScene, delta, pair_samples, path_resolution,
                seed=0):
    """Estimate the (eps, delta) constants of the scene in Jones' sense.

    Interior point pairs with separation at most delta are connected by
    shortest paths in a grid graph; both the length condition and the
    cigar condition are evaluated along each path.  The reported epsilon
    is an upper-biased estimate of the true infimum.  Sampling is
    prefix-stable in the seed, so adding samples can only lower it.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    if pair_samples < 1 or path_resolution < 1:
        raise ValueError("sample counts must be >= 1")
    rng = np.random.default_rng(seed)
    nodes, graph = _grid_graph(scene, path_resolution)
    if len(nodes) == 0:
        return JonesReport(0.0, float(delta), ((0, 0), (0, 0)), False)
    bnd = scene.boundary_segments()
    pts = scene.outer_loop
    lo, hi = pts.min(axis=0), pts.max(axis=0)

    def sample_point():
        while True:
            p = lo + rng.random(2) * (hi - lo)
            if scene.contains(p) and bnd.dist(p) > 1e-9:
                return p

    eps = math.inf
    worst = None
    feasible = True
    dist_mat, pred = dijkstra(graph, return_predecessors=True)
    for _ in range(pair_samples):
        x = sample_point()
        # draw the partner near x so the separation constraint is met
        for _ in range(1000):
            y = sample_point()
            if np.hypot(*(x - y)) <= delta:
                break
        sep = float(np.hypot(*(x - y)))
        if sep < 1e-12:
            continue
        path = _shortest_path(x, y, nodes, dist_mat, pred, bnd)
        if path is None:
            eps = 0.0
            worst = (tuple(x), tuple(y))
            feasible = False
            break
        length = sum(
            float(np.hypot(*(path[k + 1] - path[k])))
            for k in range(len(path) - 1)
        )
        cand = sep / length if length > 0 else math.inf
        for z in path:
            dx = float(np.hypot(*(x - z)))
            dy = float(np.hypot(*(y - z)))
            if dx < 1e-12 or dy < 1e-12:
                continue
            cand = min(cand, bnd.dist(z) * sep / (dx * dy))
        if cand < eps:
            eps = cand
            worst = (tuple(x), tuple(y))
    if worst is None:
        eps, worst, feasible = 0.0, ((0, 0), (0, 0)), False
    return JonesReport(float(eps), float(delta), worst, feasible)


def _shortest_path(x, y, nodes, dist_mat, pred, bnd):
    d = nodes - x
    order_x = np.argsort(np.hypot(d[:, 0], d[:, 1]))
    d = nodes - y
    order_y = np.argsort(np.hypot(d[:, 0], d[:, 1]))
    ix = next((i for i in order_x[:20] if _segment_clear(x, nodes[i], bnd)),
              None)
    iy = next((i for i in order_y[:20] if _segment_clear(y, nodes[i], bnd)),
              None)
    if ix is None or iy is None:
        return None
    if not np.isfinite(dist_mat[ix, iy]):
        return None
    chain = [iy]
    while chain[-1] != ix:
        p = pred[ix, chain[-1]]
        if p < 0:
            return None
        chain.append(p)
    return [np.asarray(x)] + [nodes[i] for i in reversed(chain)] + [np.asarray(y)]


def _segment_covered(a, b, cover: SegmentSet, tol):
    """True if segment [a, b] is contained in the union of cover segments."""
    # sample-free: the segment must be collinear-contained in one cover
    # segment; unions of partial covers are handled by interval arithmetic.
    intervals = []
    d = b - a
    L = float(np.hypot(*d))
    for (p, q) in cover.segments:
        if seg_point_dist(p, a, b) > tol and seg_point_dist(q, a, b) > tol:
            # endpoints of the cover segment not on our line: can still
            # cover the middle only if our endpoints are inside [p, q]
            if seg_point_dist(a, p, q) > tol or seg_point_dist(b, p, q) > tol:
                continue
            return True
        # project cover segment onto [a, b]
        t0 = float((p - a) @ d) / (L * L)
        t1 = float((q - a) @ d) / (L * L)
        if seg_point_dist(a + np.clip(t0, 0, 1) * d, p, q) > tol and \
           seg_point_dist(a + np.clip(t1, 0, 1) * d, p, q) > tol:
            continue
        lo, hi = sorted((t0, t1))
        if hi < 0 or lo > 1:
            continue
        # verify collinearity at the midpoint of the overlap
        mid = a + 0.5 * (max(lo, 0) + min(hi, 1)) * d
        if seg_point_dist(mid, p, q) > tol:
            continue
        intervals.append((max(lo, 0.0), min(hi, 1.0)))
    if not intervals:
        return False
    intervals.sort()
    reach = 0.0
    for lo, hi in intervals:
        if lo > reach + tol / max(L, tol):
            return False
        reach = max(reach, hi)
    return reach >= 1.0 - tol / max(L, tol)


def collapse_crack(scene: PlanarScene, E: SegmentSet):
    """Pass to the interior of (domain union E): covered slits vanish.

    E must be part of the declared Dirichlet set.  Slit segments covered
    by E are deleted (they gain interior), the rest of the boundary is
    untouched, and the returned scene keeps E restricted to its actual
    boundary as Dirichlet set.
    """
    if E is None or len(E.segments) == 0:
        return scene
    if scene.dirichlet is None:
        raise ValueError("scene has no Dirichlet set")
    tol = 1e-9 * max(scene.diameter, 1.0)
    for a, b in E.segments:
        if not _segment_covered(a, b, scene.dirichlet, tol):
            raise ValueError("E is not a subset of the Dirichlet set")
    new_slits = []
    removed_any = False
    for s in scene.slits:
        kept_chain = []
        for i in range(len(s) - 1):
            if _segment_covered(s[i], s[i + 1], E, tol):
                removed_any = True
                if len(kept_chain) >= 2:
                    new_slits.append(np.asarray(kept_chain))
                kept_chain = []
            else:
                if not kept_chain:
                    kept_chain = [s[i]]
                kept_chain.append(s[i + 1])
        if len(kept_chain) >= 2:
            new_slits.append(np.asarray(kept_chain))
    # Dirichlet part that survives on the new boundary: E minus removed
    # slit segments.
    remaining = []
    removed_sets = [
        SegmentSet(np.asarray([[s[i], s[i + 1]]]))
        for s in scene.slits
        for i in range(len(s) - 1)
        if not any(
            np.allclose(np.asarray([s[i], s[i + 1]]), ns[j:j + 2], atol=tol)
            for ns in new_slits
            for j in range(len(ns) - 1)
        )
    ]
    for a, b in E.segments:
        gone = any(
            _segment_covered(a, b, rs, tol) for rs in removed_sets
        )
        if not gone:
            remaining.append((a, b))
    new_dirichlet = (
        SegmentSet(np.asarray(remaining)) if remaining else None
    )
    if not removed_any:
        new_slits = scene.slits
    return PlanarScene(
        outer_loop=scene.outer_loop,
        holes=scene.holes,
        slits=tuple(new_slits),
        dirichlet=new_dirichlet,
        name=scene.name + "_collapsed",
    )


def relative_volume(scene: PlanarScene, F: SegmentSet, r_grid):
    """Relative area |B(y, r) cap domain| / r^2 at sample points on F.

    Radii must be decreasing; returns per-point minima over the grid and
    the global minimum, with areas from exact disc-polygon clipping.
    """
    r_grid = np.asarray(r_grid, dtype=float).ravel()
    if np.any(np.diff(r_grid) >= 0):
        raise ValueError("radii must be strictly decreasing")
    if np.any(r_grid <= 0):
        raise ValueError("radii must be positive")
    if r_grid[0] > scene.diameter:
        raise ValueError("radius exceeds scene diameter")
    loops = scene.area_loops()
    rows = []
    for a, b in F.segments:
        y = 0.5 * (a + b)
        ratios = [
            disc_polygon_area(loops, y, r) / (r * r) for r in r_grid
        ]
        rows.append((tuple(y), float(min(ratios)), list(map(float, ratios))))
    global_min = min(r[1] for r in rows)
    return {"points": rows, "min_ratio": global_min}


# ---------------------------------------------------------------------------
# scene file format: plain text with sections, '#' comments


def save_scene(scene: PlanarScene, path):
    """Write a scene in the VERTICES/LOOPS/SLITS/DIRICHLET text format."""
    verts = {}

    def vid(p):
        key = (round(float(p[0]), 12), round(float(p[1]), 12))
        if key not in verts:
            verts[key] = len(verts)
        return verts[key]

    loops = [[vid(p) for p in scene.outer_loop]]
    loops += [[vid(p) for p in h] for h in scene.holes]
    slits = [[vid(p) for p in s] for s in scene.slits]
    dir_rows = []
    if scene.dirichlet is not None:
        for a, b in scene.dirichlet.segments:
            dir_rows.append((vid(a), vid(b)))
    with open(path, "w") as fh:
        fh.write(f"# scene {scene.name}\n")
        fh.write("VERTICES\n")
        for (x, y), i in sorted(verts.items(), key=lambda kv: kv[1]):
            fh.write(f"{i} {x!r} {y!r}\n")
        fh.write("LOOPS\n")
        for loop in loops:
            fh.write(" ".join(map(str, loop)) + "\n")
        if slits:
            fh.write("SLITS\n")
            for s in slits:
                fh.write(" ".join(map(str, s)) + "\n")
        if dir_rows:
            fh.write("DIRICHLET\n")
            for a, b in dir_rows:
                fh.write(f"{a} {b}\n")


def load_scene(path, name=None):
    """Read a scene written by :func:`save_scene`."""
    section = None
    verts = {}
    loops, slits, dirich = [], [], []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line in ("VERTICES", "LOOPS", "SLITS", "DIRICHLET"):
                section = line
                continue
            parts = line.split()
            if section == "VERTICES":
                verts[int(parts[0])] = (float(parts[1]), float(parts[2]))
            elif section == "LOOPS":
                loops.append([int(t) for t in parts])
            elif section == "SLITS":
                slits.append([int(t) for t in parts])
            elif section == "DIRICHLET":
                dirich.append((int(parts[0]), int(parts[1])))
            else:
                raise ValueError(f"line outside of any section: {line!r}")
    if not loops:
        raise ValueError("scene file has no LOOPS section")
    pt = lambda i: verts[i]
    dirichlet = None
    if dirich:
        dirichlet = SegmentSet(
            np.asarray([[pt(a), pt(b)] for a, b in dirich])
        )
    return PlanarScene(
        outer_loop=np.asarray([pt(i) for i in loops[0]]),
        holes=tuple(np.asarray([pt(i) for i in l]) for l in loops[1:]),
        slits=tuple(np.asarray([pt(i) for i in s]) for s in slits),
        dirichlet=dirichlet,
        name=name or "scene",
    )


# ---------------------------------------------------------------------------
# stock scenes used across experiments


def unit_square_scene(dirichlet_edges=(), name="square"):
    """Unit square; dirichlet_edges picks sides from {bottom,right,top,left}."""
    loop = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    side = {
        "bottom": [[0.0, 0.0], [1.0, 0.0]],
        "right": [[1.0, 0.0], [1.0, 1.0]],
        "top": [[1.0, 1.0], [0.0, 1.0]],
        "left": [[0.0, 1.0], [0.0, 0.0]],
    }
    segs = [side[e] for e in dirichlet_edges]
    dir_set = SegmentSet(np.asarray(segs)) if segs else None
    return PlanarScene(outer_loop=loop, dirichlet=dir_set, name=name)


def slit_square_scene(x0=0.25, x1=0.75, y=0.5, dirichlet="slit",
                      name="slit_square"):
    """Unit square with a horizontal interior slit.

    dirichlet: 'slit' puts the Dirichlet condition on the slit only,
    'none' leaves the scene pure Neumann.
    """
    loop = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    slit = np.array([[x0, y], [x1, y]])
    dir_set = None
    if dirichlet == "slit":
        dir_set = SegmentSet(slit[None, :, :])
    return PlanarScene(
        outer_loop=loop, slits=(slit,), dirichlet=dir_set, name=name
    )
