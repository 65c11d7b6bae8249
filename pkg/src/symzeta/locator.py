"""Counting and locating a-points by the argument principle.

Counting uses adaptive composite Gauss-Legendre quadrature of G'/G along
the boundary (the accepted winding integral must land within 1e-3 of a
nonnegative integer).  Locating recursively quadrisects the rectangle; the
per-cell winding decisions use branch-safe phase tracking of G along the
cell boundary, which needs no derivative evaluations and is exact up to
float rounding once adjacent phase jumps are small.  Count-1 cells are
refined by Newton iteration with the analytic derivative; cells that stall
at count m > 1 below diameter 1e-6 are emitted with multiplicity m.

All shared state is read-only; cells are processed in a deterministic
order and results are sorted by (gamma, beta).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryTooCloseToZero,
    NewtonDiverged,
    NonIntegerWinding,
    SymZetaError,
)
from .symmetric import (
    G_many,
    SymZeta,
    TargetValue,
    cancellation_scale,
    eval_terms_many,
    logderiv_G_many,
    zeta_many,
)

__all__ = [
    "Rectangle",
    "APoint",
    "WindingResult",
    "count_apoints",
    "locate_apoints",
    "verify_cluster",
    "scan_free_right",
    "scan_strip_free",
]

logger = logging.getLogger(__name__)

_MIN_BOUNDARY_G = 1e-6     # boundary guard on |G|
_WINDING_TOL = 1e-3        # accepted integer residual
_MULT_CELL_DIAM = 1e-6     # multiplicity fallback diameter
_RESIDUAL_TOL = 1e-8       # accepted |f(rho) - a|
_GROW_STEP = 1e-3          # boundary perturbation unit
_MAX_GROW = 5              # perturbation attempts

_GL_X, _GL_W = np.polynomial.legendre.leggauss(12)
_GL_X = 0.5 * (_GL_X + 1.0)  # nodes on [0, 1]
_GL_W = 0.5 * _GL_W


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned search rectangle kept strictly above the real axis,
    where the real poles s = 1/c of the expansion factors live."""

    sigma_min: float
    sigma_max: float
    t_min: float
    t_max: float

    def __post_init__(self):
        if not self.sigma_min < self.sigma_max:
            raise ValueError("sigma_min must be < sigma_max")
        if not (0.0 < self.t_min < self.t_max):
            raise ValueError("need 0 < t_min < t_max")

    @property
    def width(self) -> float:
        return self.sigma_max - self.sigma_min

    @property
    def height(self) -> float:
        return self.t_max - self.t_min

    @property
    def diameter(self) -> float:
        return math.hypot(self.width, self.height)

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.sigma_min + self.sigma_max),
                       0.5 * (self.t_min + self.t_max))

    def contains(self, s: complex, slack: float = 0.0) -> bool:
        return (self.sigma_min - slack <= s.real <= self.sigma_max + slack
                and self.t_min - slack <= s.imag <= self.t_max + slack)

    def grown(self, delta: float) -> "Rectangle":
        new_tmin = self.t_min - delta
        if new_tmin <= 0.0:
            new_tmin = 0.5 * self.t_min
        return Rectangle(self.sigma_min - delta, self.sigma_max + delta,
                         new_tmin, self.t_max + delta)

    def corners(self) -> list[complex]:
        return [
            complex(self.sigma_min, self.t_min),
            complex(self.sigma_max, self.t_min),
            complex(self.sigma_max, self.t_max),
            complex(self.sigma_min, self.t_max),
        ]


@dataclass(frozen=True)
class APoint:
    """A located solution of f(s) = a."""

    beta: float
    gamma: float
    multiplicity: int
    residual: float
    newton_iters: int = 0

    @property
    def s(self) -> complex:
        return complex(self.beta, self.gamma)


@dataclass(frozen=True)
class WindingResult:
    count: int
    raw_integral: complex
    integer_residual: float


# ---------------------------------------------------------------------------
# paths: straight segments and circular arcs, parametrized on [0, 1]
# ---------------------------------------------------------------------------

class _Line:
    __slots__ = ("a", "b")

    def __init__(self, a: complex, b: complex):
        self.a = a
        self.b = b

    def z(self, u):
        return self.a + (self.b - self.a) * u

    def dz(self, u):
        return np.full(np.shape(u), self.b - self.a, dtype=complex)


class _Arc:
    __slots__ = ("center", "radius", "th0", "th1")

    def __init__(self, center: complex, radius: float, th0: float, th1: float):
        self.center = center
        self.radius = radius
        self.th0 = th0
        self.th1 = th1

    def z(self, u):
        th = self.th0 + (self.th1 - self.th0) * np.asarray(u)
        return self.center + self.radius * np.exp(1j * th)

    def dz(self, u):
        th = self.th0 + (self.th1 - self.th0) * np.asarray(u)
        return 1j * self.radius * (self.th1 - self.th0) * np.exp(1j * th)


def _rect_path(rect: Rectangle) -> list[_Line]:
    c = rect.corners()
    return [_Line(c[i], c[(i + 1) % 4]) for i in range(4)]


def _circle_path(center: complex, radius: float) -> list[_Arc]:
    q = 0.5 * math.pi
    return [_Arc(center, radius, k * q, (k + 1) * q) for k in range(4)]


# ---------------------------------------------------------------------------
# winding number by branch-safe phase tracking (derivative-free)
# ---------------------------------------------------------------------------

def _phase_winding(f_many, segments, jump_tol: float = 1.0,
                   init_per_unit: float = 4.0, max_points: int = 400_000,
                   g_scale=None) -> int:
    """Winding number of f along the closed path.

    Samples f, refines every gap whose principal phase jump exceeds
    ``jump_tol`` (radians) or across which |f| changes by more than a
    factor ~3 (a dip in |f| flags a nearby zero that plain phase sampling
    could alias away), and sums the jumps; the cyclic sum telescopes to an
    exact multiple of 2 pi.  Gaps that keep failing below parameter width
    1e-9 indicate a zero on the contour; ``g_scale`` (|G|/|f| as a
    function of position) additionally enforces the 1e-6 boundary floor
    on every sample taken.
    """
    us = []
    fs = []
    for seg in segments:
        length = abs(seg.z(1.0) - seg.z(0.0)) if isinstance(seg, _Line) \
            else seg.radius * abs(seg.th1 - seg.th0)
        n0 = max(8, int(math.ceil(length * init_per_unit)))
        u = np.linspace(0.0, 1.0, n0 + 1)[:-1]  # endpoint owned by next segment
        us.append(u)
        fs.append(f_many(seg.z(u)))
    total_pts = sum(u.size for u in us)

    def guard(i, fvals, uvals):
        if g_scale is None:
            return
        gv = np.abs(fvals) * g_scale(segments[i].z(uvals))
        if np.any(gv < _MIN_BOUNDARY_G):
            raise BoundaryTooCloseToZero(
                "sampled |G| on the contour fell below the 1e-6 floor")

    for i in range(len(segments)):
        guard(i, fs[i], us[i])

    while True:
        phases = [np.angle(f) for f in fs]
        inserts = []
        for i in range(len(segments)):
            ph = phases[i]
            nxt_f = fs[(i + 1) % len(segments)][0]
            d = np.diff(np.append(ph, np.angle(nxt_f)))
            d = (d + math.pi) % (2.0 * math.pi) - math.pi
            mags = np.abs(np.append(fs[i], nxt_f))
            ratio = np.minimum(mags[:-1], mags[1:]) / np.maximum(mags[:-1], mags[1:])
            bad = (np.abs(d) > jump_tol) | (ratio < 0.4)
            if d.size >= 3:
                # an aliased gap breaks the smooth trend of its neighbors
                curve = np.abs(d[1:-1] - 0.5 * (d[:-2] + d[2:]))
                bad[1:-1] |= curve > 0.7
            bad = np.nonzero(bad)[0]
            if bad.size:
                u = us[i]
                u_next = np.append(u[1:], 1.0)
                widths = u_next[bad] - u[bad]
                if np.any(widths < 1e-9):
                    raise BoundaryTooCloseToZero(
                        "phase refinement stalled: zero on or near the contour")
                inserts.append((i, 0.5 * (u[bad] + u_next[bad])))
        if not inserts:
            break
        for i, mids in inserts:
            fnew = f_many(segments[i].z(mids))
            guard(i, fnew, mids)
            u = np.concatenate([us[i], mids])
            f = np.concatenate([fs[i], fnew])
            order = np.argsort(u)
            us[i] = u[order]
            fs[i] = f[order]
        total_pts += sum(m.size for _, m in inserts)
        if total_pts > max_points:
            raise BoundaryTooCloseToZero(
                f"phase winding did not settle within {max_points} samples")

    total = 0.0
    for i in range(len(segments)):
        ph = phases[i]
        nxt = phases[(i + 1) % len(segments)][0]
        d = np.diff(np.append(ph, nxt))
        d = (d + math.pi) % (2.0 * math.pi) - math.pi
        total += float(d.sum())
    turns = total / (2.0 * math.pi)
    if abs(turns - round(turns)) > 1e-6:
        raise NonIntegerWinding(f"phase sum {turns} is not an integer")
    return int(round(turns))


# ---------------------------------------------------------------------------
# winding integral by adaptive composite Gauss-Legendre on G'/G
# ---------------------------------------------------------------------------

def _gl_panel(fof_many, seg, u0, u1):
    u = u0 + (u1 - u0) * _GL_X
    vals = fof_many(seg.z(u)) * seg.dz(u)
    return (u1 - u0) * np.dot(_GL_W, vals)

def _gl_segment(fof_many, seg, abs_tol: float, max_depth: int = 48) -> complex:
    """Adaptive composite Gauss-Legendre integral of (G'/G) dz over one
    segment: panels are bisected until the two-level estimates agree."""
    total = 0.0 + 0.0j
    stack = [(0.0, 1.0, _gl_panel(fof_many, seg, 0.0, 1.0), 0)]
    while stack:
        u0, u1, coarse, depth = stack.pop()
        um = 0.5 * (u0 + u1)
        left = _gl_panel(fof_many, seg, u0, um)
        right = _gl_panel(fof_many, seg, um, u1)
        fine = left + right
        if abs(fine - coarse) <= abs_tol * (u1 - u0) or depth >= max_depth:
            total += fine
            continue
        stack.append((u0, um, left, depth + 1))
        stack.append((um, u1, right, depth + 1))
    return total


def _gl_winding(fof_many, segments, winding_tol: float) -> complex:
    """Raw contour integral (1/2 pi i) sum_edges int G'/G ds."""
    # allocate the absolute tolerance on the 2*pi*i scale across segments
    abs_tol = winding_tol * 2.0 * math.pi / max(1, len(segments))
    raw = sum(_gl_segment(fof_many, seg, abs_tol) for seg in segments)
    return raw / (2.0j * math.pi)


# ---------------------------------------------------------------------------
# public counting
# ---------------------------------------------------------------------------

def _f_factory(z: SymZeta, a: TargetValue):
    """f(s) = (symmetric sum)(s) - a; same zeros as G, cheaper than G."""
    av = a.a

    def f_many(s_arr):
        return eval_terms_many(z, np.asarray(s_arr, dtype=complex)) - av

    return f_many


def _g_abs_factory(z: SymZeta, a: TargetValue):
    def g_abs(s_arr):
        return np.abs(G_many(z, a, np.asarray(s_arr, dtype=complex)))

    return g_abs


def _g_scale_factory(z: SymZeta, a: TargetValue):
    """|G| / |f| as a cheap function of position (f = symmetric sum - a)."""
    if a.is_zero:
        log_m = math.log(z.weights.M)
        b = float(z.weights.B)

        def scale(s_arr):
            return np.exp(-np.asarray(s_arr).real * log_m) / b
    else:
        inv_a = 1.0 / abs(a.a)

        def scale(s_arr):
            return np.full(np.shape(s_arr), inv_a)

    return scale


def _fof_factory(z: SymZeta, a: TargetValue):
    def fof(s_arr):
        return logderiv_G_many(z, a, s_arr, check=False)

    return fof


def _boundary_min_g(z, a, segments, per_unit: float = 8.0) -> float:
    g_abs = _g_abs_factory(z, a)
    m = math.inf
    for seg in segments:
        length = abs(seg.z(1.0) - seg.z(0.0)) if isinstance(seg, _Line) \
            else seg.radius * abs(seg.th1 - seg.th0)
        n = max(16, int(math.ceil(length * per_unit)))
        u = np.linspace(0.0, 1.0, n + 1)
        m = min(m, float(np.min(g_abs(seg.z(u)))))
    return m


def _count_on_path(z, a, segments, quad_tol: float = 2.5e-4) -> WindingResult:
    fof = _fof_factory(z, a)
    raw = _gl_winding(fof, segments, quad_tol)
    count = int(round(raw.real))
    residual = abs(raw - count)
    if residual > _WINDING_TOL:
        raw = _gl_winding(fof, segments, quad_tol / 10.0)
        count = int(round(raw.real))
        residual = abs(raw - count)
        if residual > _WINDING_TOL:
            raise NonIntegerWinding(
                f"winding integral {raw} not within {_WINDING_TOL} of an integer")
    if count < 0:
        raise NonIntegerWinding(f"negative winding count {count}")
    return WindingResult(count=count, raw_integral=complex(raw),
                         integer_residual=float(residual))


def _count_rect(z: SymZeta, a: TargetValue, rect: Rectangle):
    """Counting with the boundary-perturbation policy; returns the result
    together with the rectangle actually used."""
    last = None
    for k in range(_MAX_GROW + 1):
        r = rect if k == 0 else rect.grown(_GROW_STEP * k)
        segs = _rect_path(r)
        mg = _boundary_min_g(z, a, segs)
        if mg < _MIN_BOUNDARY_G:
            last = mg
            continue
        return _count_on_path(z, a, segs), r
    raise BoundaryTooCloseToZero(
        f"min |G| on boundary stayed below {_MIN_BOUNDARY_G} "
        f"after {_MAX_GROW} perturbations (last {last})")


def count_apoints(z: SymZeta, a: TargetValue, rect: Rectangle) -> WindingResult:
    """Number of a-points inside the rectangle, with multiplicity, as the
    winding number of G; the raw integral is certified within 1e-3 of the
    returned integer."""
    result, used = _count_rect(z, a, rect)
    if used is not rect:
        logger.info("boundary perturbed: %s -> %s", rect, used)
    return result


# ---------------------------------------------------------------------------
# locating: quadrisection + Newton
# ---------------------------------------------------------------------------

def _pick_split(values_min_g, candidates):
    best = None
    for x, mg in zip(candidates, values_min_g):
        if mg >= 1e-5:
            return x
        if best is None or mg > best[1]:
            best = (x, mg)
    if best[1] >= _MIN_BOUNDARY_G:
        return best[0]
    raise BoundaryTooCloseToZero("no admissible split line found")


_SPLIT_FRACTIONS = (
    (0.5, 0.46, 0.54, 0.42, 0.58),
    (0.48, 0.52, 0.44, 0.56, 0.40),
    (0.47, 0.53, 0.51, 0.49, 0.60),
)


def _split_coord(z, a, rect, vertical: bool, attempt: int = 0) -> float:
    """A split coordinate near the midpoint whose line stays away from
    zeros (sampled |G| at least 1e-6, preferring 1e-5)."""
    g_abs = _g_abs_factory(z, a)
    lo, hi = ((rect.sigma_min, rect.sigma_max) if vertical
              else (rect.t_min, rect.t_max))
    span = hi - lo
    fracs = _SPLIT_FRACTIONS[attempt % len(_SPLIT_FRACTIONS)]
    candidates = [lo + span * f for f in fracs]
    mins = []
    for x in candidates:
        if vertical:
            line = x + 1j * np.linspace(rect.t_min, rect.t_max, 33)
        else:
            line = np.linspace(rect.sigma_min, rect.sigma_max, 33) + 1j * x
        mins.append(float(np.min(g_abs(line))))
    return _pick_split(mins, candidates)


def _residual_bound(z: SymZeta, a: TargetValue, s: complex) -> float:
    """Acceptance bound for |f(s) - a|: the requested 1e-8, relaxed to the
    double-precision floor where the expansion terms are individually huge
    and cancel (the floor is the cancellation scale times ~1e-15, so 1e-12
    of it leaves a safety factor of about a thousand)."""
    scale = cancellation_scale(z, s) + abs(a.a)
    return max(_RESIDUAL_TOL, 1e-12 * scale)


def _newton_refine(z: SymZeta, a: TargetValue, cell: Rectangle,
                   max_iter: int = 60):
    """Newton iteration on f = (symmetric sum) - a from seeds inside the
    cell; succeeds when the iterate converges inside the cell with a
    residual at the evaluation floor (1e-8 wherever that is reachable)."""
    av = a.a
    c = cell.center
    w4, h4 = 0.25 * cell.width, 0.25 * cell.height
    seeds = [c, c + complex(w4, h4), c - complex(w4, h4),
             c + complex(-w4, h4), c + complex(w4, -h4)]
    for seed in seeds:
        s = seed
        for it in range(1, max_iter + 1):
            vals, derivs = eval_terms_many(
                z, np.array([s], dtype=complex), want_deriv=True)
            f = complex(vals[0]) - av
            fp = complex(derivs[0])
            if fp == 0:
                break
            step = f / fp
            s2 = s - step
            if not cell.contains(s2, slack=2.0 * cell.diameter):
                break  # wandered far outside: try next seed
            s = s2
            if abs(step) <= 1e-13 * (1.0 + abs(s)):
                resid = abs(complex(eval_terms_many(
                    z, np.array([s], dtype=complex))[0]) - av)
                if resid <= _residual_bound(z, a, s) and cell.contains(s, slack=1e-10):
                    return s, resid, it
                break
    raise NewtonDiverged("no converged in-cell root from any seed")


def _subdivide(z, a, cell: Rectangle, attempt: int = 0):
    sig = _split_coord(z, a, cell, vertical=True, attempt=attempt)
    tau = _split_coord(z, a, cell, vertical=False, attempt=attempt)
    return [
        Rectangle(cell.sigma_min, sig, cell.t_min, tau),
        Rectangle(sig, cell.sigma_max, cell.t_min, tau),
        Rectangle(cell.sigma_min, sig, tau, cell.t_max),
        Rectangle(sig, cell.sigma_max, tau, cell.t_max),
    ]


def _ambient_density(z: SymZeta, t_max: float) -> float:
    """Initial boundary samples per unit length: keeps the smooth phase
    rotation of the dominant factors below ~2.5 radians per gap."""
    rate = sum(c * max(1.0, math.log(max(2.0, c * t_max / (2.0 * math.pi))))
               for c in z.unique_sums)
    return max(4.0, rate / 2.0)


def _cell_winding(f_many, cell: Rectangle, jump_tol: float, g_scale,
                  per_unit: float) -> int:
    return _phase_winding(f_many, _rect_path(cell), jump_tol=jump_tol,
                          init_per_unit=per_unit, g_scale=g_scale)


class _TreeInconsistent(Exception):
    """Internal: a subdivision count contradicted its own refinement."""


def _locate_pass(z, a, used: Rectangle, top_count: int,
                 jump_tol: float) -> list[APoint]:
    f_many = _f_factory(z, a)
    g_scale = _g_scale_factory(z, a)
    per_unit = _ambient_density(z, used.t_max)
    found: list[APoint] = []
    stack: list[tuple[Rectangle, int]] = [(used, top_count)]
    while stack:
        cell, cnt = stack.pop()
        if cnt == 1 and cell.diameter < 1.5:
            try:
                s, resid, iters = _newton_refine(z, a, cell)
                found.append(APoint(beta=s.real, gamma=s.imag, multiplicity=1,
                                    residual=resid, newton_iters=iters))
                continue
            except NewtonDiverged:
                pass  # fall through to subdivision
        if cell.diameter < _MULT_CELL_DIAM:
            # stalled below the size floor: emit the cell center with the
            # winding count as multiplicity (for cnt == 1 this only happens
            # when Newton kept being rejected, e.g. at a corner-pinned zero)
            c = cell.center
            resid = abs(complex(eval_terms_many(
                z, np.array([c], dtype=complex))[0]) - a.a)
            found.append(APoint(beta=c.real, gamma=c.imag, multiplicity=cnt,
                                residual=resid, newton_iters=0))
            logger.info("multiplicity-%d cell emitted at %s", cnt, c)
            continue
        counts = None
        children = None
        for attempt in range(3):
            try:
                children = _subdivide(z, a, cell, attempt=attempt)
                counts = [_cell_winding(f_many, ch, jump_tol, g_scale, per_unit)
                          for ch in children]
            except BoundaryTooCloseToZero:
                counts = None
                continue
            if sum(counts) == cnt:
                break
            counts = None
        if counts is None and children is not None:
            # authoritative repair: quadrature counts for the four children
            counts = [_count_on_path(z, a, _rect_path(ch)).count
                      for ch in children]
            if sum(counts) != cnt:
                # the inherited count itself was wrong: restart globally
                raise _TreeInconsistent(
                    f"quadrature children {counts} vs inherited {cnt}")
        if counts is None:
            raise _TreeInconsistent("no admissible subdivision found")
        for ch, c in zip(children, counts):
            if c > 0:
                stack.append((ch, c))
    found.sort(key=lambda p: (p.gamma, p.beta))
    total = sum(p.multiplicity for p in found)
    if total != top_count:
        raise _TreeInconsistent(
            f"located multiplicity total {total} != contour count {top_count}")
    return found


def locate_apoints(z: SymZeta, a: TargetValue, rect: Rectangle) -> list[APoint]:
    """All a-points in the rectangle, found by recursive quadrisection with
    per-cell winding numbers and Newton refinement.

    The multiplicity total is certified against the direct quadrature
    count of the full rectangle; any internal inconsistency triggers a
    full retry with tighter phase tracking before giving up.
    """
    top, used = _count_rect(z, a, rect)
    if top.count == 0:
        return []
    last = None
    for jump_tol in (0.8, 0.35, 0.15):
        try:
            return _locate_pass(z, a, used, top.count, jump_tol)
        except _TreeInconsistent as exc:
            logger.warning("locate pass at jump_tol=%s inconsistent: %s",
                           jump_tol, exc)
            last = exc
    raise NonIntegerWinding(f"subdivision never became consistent: {last}")


# ---------------------------------------------------------------------------
# cluster disks and free-region scans
# ---------------------------------------------------------------------------

def verify_cluster(z: SymZeta, a: TargetValue, n: int, eps: float) -> WindingResult:
    """Winding number of (symmetric sum) - a on the circle of radius eps
    around -2n/A: the count of a-points in the n-th cluster disk."""
    A = z.weights.A
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not (0.0 < eps <= 0.4 * (2.0 / A)):
        raise ValueError("need 0 < eps <= 0.4 * (2/A) so disks stay disjoint")
    center = complex(-2.0 * n / A, 0.0)
    segs = _circle_path(center, eps)
    if _boundary_min_g(z, a, segs) < _MIN_BOUNDARY_G:
        raise BoundaryTooCloseToZero("cluster circle passes too close to an a-point")
    return _count_on_path(z, a, segs)


def scan_free_right(z: SymZeta, a: TargetValue, t_range,
                    sigma_lo: float = -5.0, sigma_hi: float = 30.0,
                    step: float = 0.25, n_t: int = 33) -> float:
    """Empirical right abscissa beyond which no a-points occur.

    Scans a sigma grid for the smallest value from which the sufficient
    condition (|G - 1| < 1/2 for target 0, else |f| < |a|/2) holds at all
    sampled heights, then certifies emptiness of the 20-wide band to its
    right by a direct contour count.
    """
    t_lo, t_hi = float(t_range[0]), float(t_range[1])
    ts = np.linspace(t_lo, t_hi, n_t)
    sigmas = np.arange(sigma_lo, sigma_hi + step, step)
    ok = np.zeros(sigmas.shape, dtype=bool)
    for i, sg in enumerate(sigmas):
        pts = sg + 1j * ts
        if a.is_zero:
            ok[i] = bool(np.all(np.abs(G_many(z, a, pts) - 1.0) < 0.5))
        else:
            vals = eval_terms_many(z, pts)
            ok[i] = bool(np.all(np.abs(vals) < 0.5 * abs(a.a)))
    suffix = np.logical_and.accumulate(ok[::-1])[::-1]
    hits = np.nonzero(suffix)[0]
    if hits.size == 0:
        raise SymZetaError("no free abscissa found on the scan grid")
    for i in hits:
        c1_hat = float(sigmas[i])
        band = Rectangle(c1_hat, c1_hat + 20.0, t_lo, t_hi)
        result = count_apoints(z, a, band)
        if result.count == 0:
            return c1_hat
        logger.warning("band at sigma=%s unexpectedly contains %d points",
                       c1_hat, result.count)
    raise SymZetaError("sampled condition never certified by contour")


def scan_strip_free(z: SymZeta, a: TargetValue, y1: float, y2: float,
                    t_lo: float, t_hi: float) -> WindingResult:
    """Contour count over the left strip [-y1, -y2] x [t_lo, t_hi].

    Requires the product model to hold empirically at the probe heights
    (the strip result is only meaningful in that regime); the observed
    ratio deviations are logged for reporting.
    """
    if not (y1 > y2 > 0.0):
        raise ValueError("need y1 > y2 > 0")
    probes = []
    for sg in (-y1, -0.5 * (y1 + y2), -y2):
        for t in (t_lo, 0.5 * (t_lo + t_hi), t_hi):
            s = complex(sg, t)
            prod = complex(np.prod(zeta_many(
                np.array([c * s for c in z.weights.values]), z.prec)))
            val = complex(eval_terms_many(z, np.array([s]))[0])
            probes.append(abs(val / prod - 1.0))
    worst = max(probes)
    logger.info("left-strip ratio deviations: worst %.3g", worst)
    rect = Rectangle(-y1, -y2, t_lo, t_hi)
    return count_apoints(z, a, rect)
