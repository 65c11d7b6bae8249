"""Leading-order counting formulas, weighted real-part sums, and tail
densities over located a-point sets, with CSV / plot-data export.

All report builders are pure functions of their inputs: identical point
lists produce byte-identical files.  The counting window starts at
t_min = 0.5 rather than 0 (contours cannot cross the real-axis poles);
every report carries that window so the shift is explicit.
"""

import csv
import logging
import math
from dataclasses import dataclass

from .locator import APoint, Rectangle, locate_apoints, scan_free_right
from .partitions import Weights
from .symmetric import SymZeta, TargetValue

logger = logging.getLogger(__name__)

__all__ = [
    "CountReport",
    "SumReport",
    "TailReport",
    "main_term_N",
    "compare_counts",
    "counting_rectangle",
    "weighted_sums",
    "tail_density",
    "write_count_reports",
    "write_sum_reports",
    "write_tail_reports",
    "write_plot_data",
]

T_MIN_WINDOW = 0.5

# soft flag threshold for |count - main term| / log T; the true remainder
# constant is unknowable, anything past this signals an implementation bug
DISCREPANCY_FLAG = 25.0


@dataclass(frozen=True)
class CountReport:
    weights: tuple[float, ...]
    a: complex
    y: float
    T: float
    computed_count: int
    main_term: float
    discrepancy: float
    discrepancy_over_logT: float
    flagged: bool


@dataclass(frozen=True)
class SumReport:
    T: float
    y: float
    count: int
    sum_half: float        # 2 pi sum (beta - 1/2)
    sum_crit: float        # 2 pi sum (beta - r/(2A))
    sum_littlewood: float  # 2 pi sum (beta + y)
    predicted_half: float
    predicted_littlewood: float


@dataclass(frozen=True)
class TailReport:
    y3: float
    delta: float
    T: float
    tail_count: int
    bound_scale: float     # T log log T / delta
    scaled_count: float    # tail_count * delta / (T log log T)


def main_term_N(w: Weights, a: TargetValue, T: float) -> float:
    """Leading-order count of a-points up to height T:
    (T/2pi) sum_j a_j log(a_j T / 2pi) - A T / 2pi, minus
    (T/2pi) log(1^a_1 ... r^a_r) when the target is zero.

    Note log(1^a_1 ... r^a_r) = -log M.  Evaluated for any T > 0; below
    T = 2 pi / min_j a_j some logs go negative and the formula leaves its
    intended range (still evaluated, with a warning).
    """
    if T <= 2.0 * math.pi / w.values[-1]:
        logger.warning("main term evaluated below T = 2 pi / min weight "
                       "(T=%s): outside the intended range", T)
    tp = T / (2.0 * math.pi)
    total = sum(aj * math.log(aj * tp) for aj in w.values) * tp - w.A * tp
    if a.is_zero:
        total -= tp * (-math.log(w.M))
    return total


def counting_rectangle(z: SymZeta, a: TargetValue, y: float,
                       t_max: float, t_range=None) -> Rectangle:
    """Search rectangle [-y, C1_hat + 5] x [t_min, t_max]: the right edge
    sits 5 past the empirically certified a-point-free abscissa, with the
    scan and its certification contour covering the full height range."""
    if t_range is None:
        t_range = (T_MIN_WINDOW, t_max)
    n_t = max(33, int(math.ceil((t_range[1] - t_range[0]) / 2.0)))
    c1_hat = scan_free_right(z, a, t_range, n_t=n_t)
    return Rectangle(-y, c1_hat + 5.0, T_MIN_WINDOW, t_max)


def compare_counts(z: SymZeta, a: TargetValue, y: float, T_grid,
                   apoints: list[APoint] | None = None) -> list[CountReport]:
    """Computed counts against the leading-order formula for each T.

    If no point list is supplied, the locator is run once over
    [-y, C1_hat + 5] x [t_min, max T] and sliced per grid entry.  The
    remainder constant is not assertable; reports carry a soft flag at
    |discrepancy| / log T > 25.
    """
    ts = sorted(float(t) for t in T_grid)
    if apoints is None:
        rect = counting_rectangle(z, a, y, ts[-1])
        apoints = locate_apoints(z, a, rect)
    out = []
    for T in ts:
        n = sum(p.multiplicity for p in apoints
                if p.gamma < T and p.beta > -y)
        mt = main_term_N(z.weights, a, T)
        disc = n - mt
        ratio = disc / math.log(T)
        out.append(CountReport(
            weights=z.weights.values, a=a.a, y=y, T=T, computed_count=n,
            main_term=mt, discrepancy=disc, discrepancy_over_logT=ratio,
            flagged=abs(ratio) > DISCREPANCY_FLAG))
    return out


def weighted_sums(apoints: list[APoint], w: Weights, y: float, T: float,
                  t_min: float = T_MIN_WINDOW) -> SumReport:
    """Weighted real-part sums over the points with -y < beta and
    t_min < gamma < T, with the leading-order predictions.

    sum_half tests the balance about sigma = 1/2; sum_crit about the
    conjectured center sigma = r/(2A); sum_littlewood is the boundary-
    integral form whose prediction is sum_j (1/2 + a_j y) T log T.
    """
    r = w.r
    center = r / (2.0 * w.A)
    sel = [p for p in apoints if p.beta > -y and t_min < p.gamma < T]
    two_pi = 2.0 * math.pi
    s_half = two_pi * sum((p.beta - 0.5) * p.multiplicity for p in sel)
    s_crit = two_pi * sum((p.beta - center) * p.multiplicity for p in sel)
    s_lw = two_pi * sum((p.beta + y) * p.multiplicity for p in sel)
    tlogt = T * math.log(T)
    return SumReport(
        T=T, y=y, count=sum(p.multiplicity for p in sel),
        sum_half=s_half, sum_crit=s_crit, sum_littlewood=s_lw,
        predicted_half=0.5 * (r - w.A) * tlogt,
        predicted_littlewood=sum(0.5 + aj * y for aj in w.values) * tlogt)


def tail_density(apoints: list[APoint], w: Weights, delta: float,
                 T: float, t_min: float = T_MIN_WINDOW) -> TailReport:
    """Count of points with beta > 1/(2 a_r) + delta below height T, and
    the same count scaled by delta / (T log log T) (the growth rate the
    tail bound permits)."""
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    y3 = 1.0 / (2.0 * w.values[-1])
    n = sum(p.multiplicity for p in apoints
            if p.beta > y3 + delta and t_min < p.gamma < T)
    loglog = math.log(math.log(T))
    scale = T * loglog / delta
    return TailReport(y3=y3, delta=delta, T=T, tail_count=n,
                      bound_scale=scale, scaled_count=n / scale)


# ---------------------------------------------------------------------------
# delimited output
# ---------------------------------------------------------------------------

_COUNT_COLS = ["T", "count", "main_term", "discrepancy",
               "discrepancy_over_logT", "flagged", "y", "a_re", "a_im"]
_SUM_COLS = ["T", "y", "count", "sum_half", "sum_crit", "sum_littlewood",
             "predicted_half", "predicted_littlewood"]
_TAIL_COLS = ["T", "delta", "y3", "tail_count", "bound_scale", "scaled_count"]


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def write_count_reports(reports: list[CountReport], path):
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(_COUNT_COLS)
        for rep in reports:
            wr.writerow(_fmt(v) for v in [
                rep.T, rep.computed_count, rep.main_term, rep.discrepancy,
                rep.discrepancy_over_logT, rep.flagged, rep.y,
                rep.a.real, rep.a.imag])


def write_sum_reports(reports: list[SumReport], path):
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(_SUM_COLS)
        for rep in reports:
            wr.writerow(_fmt(v) for v in [
                rep.T, rep.y, rep.count, rep.sum_half, rep.sum_crit,
                rep.sum_littlewood, rep.predicted_half,
                rep.predicted_littlewood])


def write_tail_reports(reports: list[TailReport], path):
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(_TAIL_COLS)
        for rep in reports:
            wr.writerow(_fmt(v) for v in [
                rep.T, rep.delta, rep.y3, rep.tail_count, rep.bound_scale,
                rep.scaled_count])


def write_plot_data(pairs, path):
    """Two-column (x, value) text file for external plotting."""
    with open(path, "w") as fh:
        for x, v in pairs:
            fh.write(f"{_fmt(float(x))} {_fmt(float(v))}\n")
