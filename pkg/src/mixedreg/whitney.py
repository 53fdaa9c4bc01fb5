"""Whitney decomposition and the averaging extension operator on (d-1)-sets.

The complement of a segment set F inside a square bounding box is tiled
by dyadic cubes Q with diam Q <= dist(Q, F) <= 4 diam Q; a C^2 partition
of unity subordinate to the expanded cubes turns ring averages of
boundary data into a Lipschitz-preserving extension.  The matching
restriction is a ball-average trace with Richardson extrapolation, and
both compose into the trace-zero projection u - extend(restrict(u)).

Cube membership in the decomposition is a purely local predicate
(accepted and parent rejected), so evaluators descend the dyadic grid on
demand near F instead of materializing arbitrarily deep trees.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .geometry import SegmentSet, dist_to_set

IOTA = 9.0 / 8.0  # cube expansion factor, inside the open range ]1, 5/4[
SMALL_SIDE = 1.0  # cubes with side <= SMALL_SIDE feed the extension sum
RING_FACTOR = 6.0  # ball radius for ring averages, in units of cube diam

# Recorded implementation constant: sup over probes of l_i * |grad phi_i|
# stays below this for every decomposition the suite builds.
PHI_GRAD_CONST = 16.0

# Recorded overlap cap: no point lies in more than this many expanded
# cubes in 2D; revalidated by the test suite.
OVERLAP_CAP = 12


class UncoveredAreaError(RuntimeError):
    """Raised when max_level leaves too much area next to F untiled."""

    def __init__(self, uncovered_area, msg):
        super().__init__(msg)
        self.uncovered_area = uncovered_area


# ---------------------------------------------------------------------------
# exact distance between axis-aligned squares and segments


def box_segment_dist(centers, halfs, a, b):
    """Exact distance from axis-aligned boxes to the segment [a, b].

    The squared distance along the segment is piecewise quadratic; its
    minimum is attained at an endpoint, a slab breakpoint or a stationary
    point of one of the nine active-set combinations, all of which are
    evaluated in closed form (vectorized over boxes).
    """
    centers = np.asarray(centers, float).reshape(-1, 2)
    halfs = np.asarray(halfs, float).ravel()
    a = np.asarray(a, float)
    d = np.asarray(b, float) - a
    n = len(centers)
    cands = [np.zeros(n), np.ones(n)]
    for k in (0, 1):
        if abs(d[k]) > 0:
            for sgn in (-1.0, 1.0):
                beta = centers[:, k] + sgn * halfs
                cands.append((beta - a[k]) / d[k])
    for ax in (None, -1.0, 1.0):
        for ay in (None, -1.0, 1.0):
            if ax is None and ay is None:
                continue
            num = np.zeros(n)
            den = 0.0
            if ax is not None:
                num += d[0] * (centers[:, 0] + ax * halfs - a[0])
                den += d[0] * d[0]
            if ay is not None:
                num += d[1] * (centers[:, 1] + ay * halfs - a[1])
                den += d[1] * d[1]
            if den > 0:
                cands.append(num / den)
    T = np.clip(np.stack(cands, axis=1), 0.0, 1.0)
    px = a[0] + T * d[0]
    py = a[1] + T * d[1]
    gx = np.maximum(np.abs(px - centers[:, :1]) - halfs[:, None], 0.0)
    gy = np.maximum(np.abs(py - centers[:, 1:2]) - halfs[:, None], 0.0)
    return np.sqrt((gx * gx + gy * gy).min(axis=1))


def boxes_to_set_dist(centers, halfs, F: SegmentSet):
    dist = None
    for seg in F.segments:
        d = box_segment_dist(centers, halfs, seg[0], seg[1])
        dist = d if dist is None else np.minimum(dist, d)
    return dist


# ---------------------------------------------------------------------------
# the dyadic grid: canonical decomposition as a local predicate


class DyadicWhitneyGrid:
    """Canonical Whitney decomposition of bbox \\ F, queried on demand.

    bbox is (x0, y0, side); cubes at level l have side/2^l.  A dyadic
    cube belongs to the decomposition iff it satisfies diam <= dist(Q, F)
    while its parent does not.
    """

    def __init__(self, F: SegmentSet, bbox, iota=IOTA):
        x0, y0, S = bbox
        if S <= 0:
            raise ValueError("bbox side must be positive")
        for p in F.segments.reshape(-1, 2):
            if not (x0 < p[0] < x0 + S and y0 < p[1] < y0 + S):
                raise ValueError("F must lie in the interior of the bbox")
        if not (1.0 < iota < 1.25):
            raise ValueError("expansion factor must lie in ]1, 5/4[")
        self.F = F
        self.x0, self.y0, self.S = float(x0), float(y0), float(S)
        self.iota = float(iota)
        self._accept_cache = {}
        self._rho_cache = {}

    def side(self, level):
        return self.S / (1 << level)

    def center(self, level, ix, iy):
        s = self.side(level)
        return np.array([self.x0 + (ix + 0.5) * s, self.y0 + (iy + 0.5) * s])

    def cube_dist(self, level, ix, iy):
        s = self.side(level)
        c = self.center(level, ix, iy)
        return float(boxes_to_set_dist(c[None, :], np.array([s / 2]), self.F)[0])

    def accepted(self, level, ix, iy):
        key = (level, ix, iy)
        hit = self._accept_cache.get(key)
        if hit is None:
            s = self.side(level)
            hit = s * math.sqrt(2.0) <= self.cube_dist(level, ix, iy)
            self._accept_cache[key] = hit
        return hit

    def member(self, level, ix, iy):
        if not self.accepted(level, ix, iy):
            return False
        if level == 0:
            return True
        return not self.accepted(level - 1, ix // 2, iy // 2)

    def cubes_at(self, x):
        """Member cubes whose expanded copy contains x, as (key, center, side)."""
        x = np.asarray(x, float)
        delta = dist_to_set(x, self.F)
        if delta <= 0.0:
            raise ValueError("point lies on F; the partition is undefined there")
        s_hi = delta / 1.3
        s_lo = delta / 7.2
        l_lo = max(0, int(math.floor(math.log2(self.S / max(s_hi, 1e-300)))) - 1)
        l_hi = int(math.ceil(math.log2(self.S / max(s_lo, 1e-300)))) + 1
        out = []
        for level in range(l_lo, l_hi + 1):
            s = self.side(level)
            reach = self.iota * s / 2
            jx = int(math.floor((x[0] - self.x0) / s))
            jy = int(math.floor((x[1] - self.y0) / s))
            for ix in (jx - 1, jx, jx + 1):
                for iy in (jy - 1, jy, jy + 1):
                    c = self.center(level, ix, iy)
                    if abs(x[0] - c[0]) >= reach or abs(x[1] - c[1]) >= reach:
                        continue
                    if self.member(level, ix, iy):
                        out.append(((level, ix, iy), c, s))
        return out

    def rho_ball(self, key):
        """Arclength measure of F in the ring ball of cube `key` (cached)."""
        hit = self._rho_cache.get(key)
        if hit is None:
            level, ix, iy = key
            s = self.side(level)
            c = self.center(level, ix, iy)
            hit = self.F.measure_in_disc(c, RING_FACTOR * s * math.sqrt(2.0))
            self._rho_cache[key] = hit
        return hit


def _smoothstep(t):
    return t * t * (3.0 - 2.0 * t)


def bump_profile(u, iota=IOTA):
    """C^2 one-dimensional profile: 1 for |u|<=1/2, 0 for |u|>=iota.

    u is the distance to the cube center in units of the half side; the
    ramp is smoothstep-of-smoothstep, which has two vanishing derivatives
    at both ends.
    """
    u = abs(u)
    if u <= 0.5:
        return 1.0
    if u >= iota:
        return 0.0
    v = (u - 0.5) / (iota - 0.5)
    return _smoothstep(_smoothstep(1.0 - v))


def cube_bump(x, center, side, iota=IOTA):
    hw = side / 2.0
    return bump_profile((x[0] - center[0]) / hw, iota) * bump_profile(
        (x[1] - center[1]) / hw, iota
    )


# ---------------------------------------------------------------------------
# explicit decomposition (structural object for checks and dumps)


@dataclass
class WhitneyDecomposition:
    """Materialized Whitney cubes of bbox \\ F down to max_level.

    levels/ix/iy are the dyadic coordinates, centers/sides/dists the
    derived geometry (dists computed exactly), small_mask marks the index
    set I of cubes with side <= 1 that carry ring weights.
    """

    F: SegmentSet
    bbox: tuple
    max_level: int
    levels: np.ndarray
    ix: np.ndarray
    iy: np.ndarray
    centers: np.ndarray
    sides: np.ndarray
    dists: np.ndarray
    discarded_area: float
    discarded_count: int
    iota: float = IOTA
    grid: DyadicWhitneyGrid = None
    _weights: np.ndarray = None

    @property
    def diams(self):
        return self.sides * math.sqrt(2.0)

    @property
    def small_mask(self):
        return self.sides <= SMALL_SIDE

    def __len__(self):
        return len(self.levels)

    def key(self, i):
        return (int(self.levels[i]), int(self.ix[i]), int(self.iy[i]))

    def sandwich_margins(self):
        """Exact aj-1 slack: (dist - diam, 4*diam - dist) per cube."""
        d = self.diams
        return self.dists - d, 4.0 * d - self.dists

    def touching_pairs(self):
        """Index pairs of cubes whose closed copies intersect."""
        from scipy.spatial import cKDTree

        tol = 1e-12 * self.bbox[2]
        tree = cKDTree(self.centers)
        smax = self.sides.max()
        pairs = []
        for i in range(len(self)):
            reach = (self.sides[i] + smax) / 2 * math.sqrt(2.0) + tol
            for j in tree.query_ball_point(self.centers[i], reach):
                if j <= i:
                    continue
                gap = np.abs(self.centers[i] - self.centers[j]) - (
                    self.sides[i] + self.sides[j]
                ) / 2
                if gap.max() <= tol:
                    pairs.append((i, j))
        return np.asarray(pairs, dtype=int).reshape(-1, 2)

    def weights(self):
        """Ring weights c_i = 1 / rho(B(x_i, 6 l_i)) on the small cubes."""
        if self._weights is None:
            w = np.full(len(self), np.nan)
            for i in np.nonzero(self.small_mask)[0]:
                rho = self.grid.rho_ball(self.key(i))
                if rho <= 0.0:
                    raise RuntimeError(
                        "empty ring ball: decomposition bug (aj-1 violated)"
                    )
                w[i] = 1.0 / rho
            self._weights = w
        return self._weights

    def to_csv(self, path):
        with open(path, "w") as fh:
            fh.write("center_x,center_y,side,level\n")
            for c, s, l in zip(self.centers, self.sides, self.levels):
                fh.write(f"{c[0]!r},{c[1]!r},{s!r},{l}\n")


def decompose(F: SegmentSet, bbox, max_level, uncovered_tol=1e-3,
              iota=IOTA):
    """Quadtree Whitney decomposition of bbox \\ F.

    A cube is accepted when diam(Q) <= dist(Q, F) and subdivided
    otherwise; recursion is capped at max_level, where cubes still
    meeting the rejection criterion are discarded.  Raises
    UncoveredAreaError if the discarded area exceeds
    uncovered_tol * area(bbox).
    """
    grid = DyadicWhitneyGrid(F, bbox, iota)
    S = grid.S
    acc = {"levels": [], "ix": [], "iy": [], "centers": [], "sides": [],
           "dists": []}
    frontier_ix = np.array([0], dtype=np.int64)
    frontier_iy = np.array([0], dtype=np.int64)
    discarded_area = 0.0
    discarded_count = 0
    for level in range(max_level + 1):
        if len(frontier_ix) == 0:
            break
        s = grid.side(level)
        cx = grid.x0 + (frontier_ix + 0.5) * s
        cy = grid.y0 + (frontier_iy + 0.5) * s
        centers = np.column_stack([cx, cy])
        dists = boxes_to_set_dist(centers, np.full(len(cx), s / 2), F)
        accept = s * math.sqrt(2.0) <= dists
        acc["levels"].append(np.full(accept.sum(), level, dtype=np.int64))
        acc["ix"].append(frontier_ix[accept])
        acc["iy"].append(frontier_iy[accept])
        acc["centers"].append(centers[accept])
        acc["sides"].append(np.full(accept.sum(), s))
        acc["dists"].append(dists[accept])
        rej_ix = frontier_ix[~accept]
        rej_iy = frontier_iy[~accept]
        if level == max_level:
            discarded_count = len(rej_ix)
            discarded_area = discarded_count * s * s
            break
        frontier_ix = np.repeat(rej_ix * 2, 4) + np.tile([0, 1, 0, 1],
                                                         len(rej_ix))
        frontier_iy = np.repeat(rej_iy * 2, 4) + np.tile([0, 0, 1, 1],
                                                         len(rej_iy))
    if discarded_area > uncovered_tol * S * S:
        raise UncoveredAreaError(
            discarded_area,
            f"uncovered area {discarded_area:.3e} above threshold "
            f"{uncovered_tol * S * S:.3e} at max_level={max_level}",
        )
    W = WhitneyDecomposition(
        F=F,
        bbox=tuple(map(float, bbox)),
        max_level=max_level,
        levels=np.concatenate(acc["levels"]),
        ix=np.concatenate(acc["ix"]),
        iy=np.concatenate(acc["iy"]),
        centers=np.vstack(acc["centers"]),
        sides=np.concatenate(acc["sides"]),
        dists=np.concatenate(acc["dists"]),
        discarded_area=discarded_area,
        discarded_count=discarded_count,
        iota=iota,
        grid=grid,
    )
    return W


# ---------------------------------------------------------------------------
# partition of unity


class PartitionOfUnity:
    """Evaluator for the normalized bumps phi_i = psi_i / sum_k psi_k."""

    def __init__(self, W: WhitneyDecomposition):
        self.W = W
        self.grid = W.grid
        self.iota = W.iota
        self._index = {W.key(i): i for i in range(len(W))}
        self.grad_bound_constant = PHI_GRAD_CONST

    def raw_values(self, x):
        """(keys, psi values) of all bumps positive at x."""
        cubes = self.grid.cubes_at(x)
        keys = []
        psis = []
        for key, c, s in cubes:
            p = cube_bump(x, c, s, self.iota)
            if p > 0.0:
                keys.append(key)
                psis.append(p)
        return keys, np.asarray(psis)

    def values(self, x):
        """(keys, phi values); raises off the covered region and on F."""
        keys, psis = self.raw_values(x)
        total = psis.sum()
        if total <= 0.0:
            raise ValueError("point not covered by the decomposition")
        return keys, psis / total

    def value_by_index(self, i, x):
        """phi_i(x) for the i-th cube of the materialized decomposition."""
        key = self.W.key(i)
        try:
            keys, phis = self.values(x)
        except ValueError:
            return 0.0
        for k, p in zip(keys, phis):
            if k == key:
                return float(p)
        return 0.0

    def sum_at(self, x):
        return float(self.values(x)[1].sum())


def partition_of_unity(W: WhitneyDecomposition):
    return PartitionOfUnity(W)


# ---------------------------------------------------------------------------
# boundary data


def _gauss_cache(order):
    xs, ws = np.polynomial.legendre.leggauss(order)
    return 0.5 * (xs + 1.0), 0.5 * ws  # mapped to [0, 1]


@dataclass
class BoundaryFunction:
    """Function on a segment set, sampled at per-segment Gauss nodes.

    When a callable is attached it is used directly; otherwise values are
    interpolated per segment (barycentric on the Gauss nodes), which is
    exact for the polynomial data produced by the restriction operator.
    """

    F: SegmentSet
    values: np.ndarray
    nodes_t: np.ndarray
    func: object = None
    lipschitz_hint: float = None
    flagged: list = field(default_factory=list)

    def __post_init__(self):
        if not np.all(np.isfinite(self.values)):
            raise ValueError("boundary data has non-finite node values")
        t = self.nodes_t
        w = np.ones(len(t))
        for j in range(len(t)):
            for k in range(len(t)):
                if k != j:
                    w[j] /= t[j] - t[k]
        self._bary_w = w

    @classmethod
    def from_callable(cls, f, F: SegmentSet, order=8, lipschitz_hint=None):
        t, _ = _gauss_cache(order)
        vals = np.empty((len(F.segments), order))
        for i, (a, b) in enumerate(F.segments):
            pts = a[None, :] + t[:, None] * (b - a)[None, :]
            vals[i] = [f(p) for p in pts]
        return cls(F=F, values=np.asarray(vals, float), nodes_t=t, func=f,
                   lipschitz_hint=lipschitz_hint)

    @classmethod
    def from_node_values(cls, values, F: SegmentSet, order=None,
                         lipschitz_hint=None, flagged=None):
        values = np.asarray(values, float)
        t, _ = _gauss_cache(values.shape[1] if order is None else order)
        return cls(F=F, values=values, nodes_t=t,
                   lipschitz_hint=lipschitz_hint, flagged=flagged or [])

    def nodes(self):
        """All quadrature node coordinates, shape (nseg, order, 2)."""
        segs = self.F.segments
        return segs[:, None, 0, :] + self.nodes_t[None, :, None] * (
            segs[:, None, 1, :] - segs[:, None, 0, :]
        )

    def eval_param(self, i, t):
        """Value on segment i at parameter t in [0, 1]."""
        if self.func is not None:
            a, b = self.F.segments[i]
            return self.func(a + t * (b - a))
        d = t - self.nodes_t
        j = np.argmin(np.abs(d))
        if abs(d[j]) < 1e-14:
            return self.values[i, j]
        w = self._bary_w / d
        return float(w @ self.values[i] / w.sum())

    def __call__(self, x):
        """Value at a point on F (nearest segment, projected parameter)."""
        x = np.asarray(x, float)
        best = None
        for i, (a, b) in enumerate(self.F.segments):
            d = b - a
            L2 = float(d @ d)
            t = float(np.clip((x - a) @ d / L2, 0.0, 1.0))
            q = a + t * d
            dist = float(np.hypot(*(x - q)))
            if best is None or dist < best[0]:
                best = (dist, i, t)
        return self.eval_param(best[1], best[2])


# ---------------------------------------------------------------------------
# extension operator


class ExtensionEvaluator:
    """The averaging extension of boundary data f off the set F.

    At a point x off F the value is sum_{i in I} phi_i(x) c_i Int f drho
    over the ring balls B(x_i, 6 l_i); on F it is f(x) itself.  Ring
    integrals use exact segment-disc clipping plus per-piece Gauss
    quadrature and are cached per cube.
    """

    def __init__(self, f, F: SegmentSet, W: WhitneyDecomposition,
                 quad_order=8):
        if not isinstance(f, BoundaryFunction):
            f = BoundaryFunction.from_callable(f, F, order=quad_order)
        self.f = f
        self.F = F
        self.grid = W.grid
        self.iota = W.iota
        self.quad_order = quad_order
        self._gauss = _gauss_cache(quad_order)
        self._ring_cache = {}
        self.on_set_tol = 0.0

    def ring_integral(self, key):
        hit = self._ring_cache.get(key)
        if hit is None:
            level, ix, iy = key
            s = self.grid.side(level)
            c = self.grid.center(level, ix, iy)
            r = RING_FACTOR * s * math.sqrt(2.0)
            hit = self._integrate_ball(c, r)
            self._ring_cache[key] = hit
        return hit

    def _integrate_ball(self, center, r):
        from .geometry import disc_clip_interval

        gt, gw = self._gauss
        total = 0.0
        for i, (a, b) in enumerate(self.F.segments):
            iv = disc_clip_interval(a, b, center, r)
            if iv is None:
                continue
            t0, t1 = iv
            L = float(np.hypot(*(b - a))) * (t1 - t0)
            ts = t0 + gt * (t1 - t0)
            total += L * sum(
                w * self.f.eval_param(i, t) for w, t in zip(gw, ts)
            )
        return total

    def __call__(self, x):
        x = np.asarray(x, float)
        if dist_to_set(x, self.F) <= self.on_set_tol:
            return float(self.f(x))
        cubes = self.grid.cubes_at(x)
        psi_sum = 0.0
        val = 0.0
        for key, c, s in cubes:
            psi = cube_bump(x, c, s, self.iota)
            if psi <= 0.0:
                continue
            psi_sum += psi
            if s <= SMALL_SIDE:
                rho = self.grid.rho_ball(key)
                if rho <= 0.0:
                    raise RuntimeError(
                        "empty ring ball: decomposition bug (aj-1 violated)"
                    )
                val += psi * self.ring_integral(key) / rho
        if psi_sum <= 0.0:
            raise ValueError("point not covered by the decomposition")
        return val / psi_sum


def extend(f, F: SegmentSet, W: WhitneyDecomposition, quad_order=8):
    """Build the extension evaluator (E_F f)(x) for boundary data f."""
    return ExtensionEvaluator(f, F, W, quad_order=quad_order)


# ---------------------------------------------------------------------------
# restriction operator


def ball_average(u, y, r, n_radial=8, n_angular=32):
    """Average of u over B(y, r) by Gauss-in-r^2 x midpoint-in-angle."""
    y = np.asarray(y, float)
    gv, gw = _gauss_cache(n_radial)  # nodes/weights on [0, 1]
    radii = r * np.sqrt(gv)
    thetas = (np.arange(n_angular) + 0.5) * (2 * math.pi / n_angular)
    cos_t, sin_t = np.cos(thetas), np.sin(thetas)
    total = 0.0
    for rv, w in zip(radii, gw):
        for ct, st in zip(cos_t, sin_t):
            total += w * u(y + rv * np.array([ct, st]))
    return total / n_angular


def restrict(u, F: SegmentSet, r_schedule, quad_order=8, n_radial=8,
             n_angular=32, flag_tol=1e-3):
    """Ball-average trace of u on F, extrapolated to radius zero.

    At each quadrature node the averages over the given radii are
    computed and the two smallest radii are combined by first-order
    Richardson extrapolation (model a + b r), which also annihilates the
    scale-periodic linear term of Whitney extensions when the two radii
    are in ratio 2.  Nodes whose smallest averages still disagree by more
    than flag_tol are reported in the flagged list of the result.
    """
    r = np.sort(np.asarray(r_schedule, float).ravel())
    if len(r) < 2:
        raise ValueError("need at least two radii for extrapolation")
    if np.any(r <= 0):
        raise ValueError("radii must be positive")
    t, _ = _gauss_cache(quad_order)
    nseg = len(F.segments)
    values = np.empty((nseg, quad_order))
    flagged = []
    r0, r1 = r[0], r[1]
    for i, (a, b) in enumerate(F.segments):
        for j, tj in enumerate(t):
            y = a + tj * (b - a)
            A0 = ball_average(u, y, r0, n_radial, n_angular)
            A1 = ball_average(u, y, r1, n_radial, n_angular)
            lim = (A0 * r1 - A1 * r0) / (r1 - r0)
            values[i, j] = lim
            if abs(A1 - A0) > flag_tol * (1.0 + abs(lim)):
                flagged.append((i, j))
    return BoundaryFunction.from_node_values(
        values, F, order=quad_order, flagged=flagged
    )


# ---------------------------------------------------------------------------
# projection


class ProjectionEvaluator:
    """(P u)(x) = u(x) - (E_F restrict(u))(x); trace-free by construction."""

    def __init__(self, u, F, W, r_schedule, quad_order=8, n_radial=8,
                 n_angular=32):
        self.u = u
        self.trace = restrict(u, F, r_schedule, quad_order=quad_order,
                              n_radial=n_radial, n_angular=n_angular)
        self.correction = extend(self.trace, F, W, quad_order=quad_order)

    def __call__(self, x):
        return self.u(x) - self.correction(x)


def project(u, F: SegmentSet, W: WhitneyDecomposition, r_schedule,
            quad_order=8, n_radial=8, n_angular=32):
    return ProjectionEvaluator(u, F, W, r_schedule, quad_order=quad_order,
                               n_radial=n_radial, n_angular=n_angular)


# ---------------------------------------------------------------------------
# cut-off mollification of mesh functions


def cutoff_ramp(t, n):
    """The piecewise-linear cut-off: 0 below 1/n, linear ramp, 1 above 2/n."""
    if t <= 1.0 / n:
        return 0.0
    if t <= 2.0 / n:
        return n * t - 1.0
    return 1.0


def cutoff_mollify(mesh, values, F: SegmentSet, n):
    """Multiply a P1 mesh function by the distance cut-off w_n.

    w_n = ramp(dist_F) vanishes within 1/n of F, so the nodal product has
    support at distance >= 1/n - h from F.  The caller is responsible for
    u having (numerically) zero trace on F.  Warns when the ramp is not
    resolved by the mesh.
    """
    if n <= 0:
        raise ValueError("cut-off index must be positive")
    if 2.0 / n < 2.0 * mesh.h:
        warnings.warn(
            f"cut-off 2/n={2.0 / n:.3g} below mesh resolution h={mesh.h:.3g};"
            " the ramp is unresolved",
            RuntimeWarning,
        )
    values = np.asarray(values)
    w = np.array([cutoff_ramp(F.dist(v), n) for v in mesh.vertices])
    return values * w
