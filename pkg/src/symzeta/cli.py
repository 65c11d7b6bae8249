"""Command-line front end.

Subcommands: eval, expand, locate, count, report, scan-free.  Options can
be preloaded from a key = value config document (--config); explicit
flags win over config values.  Complex quantities are always split into
re/im pairs.  Exit codes: 0 success, 1 usage error, 2 numeric failure.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cache import ResultCache, read_points_jsonl, write_points_jsonl
from .errors import MissingPoints, OutsideRegime, SymZetaError
from .figures import (
    render_apoints_figure,
    render_count_figure,
    render_sum_figure,
    render_tail_figure,
)
from .locator import Rectangle, count_apoints, locate_apoints, scan_free_right
from .partitions import expansion_as_json
from .reports import (
    compare_counts,
    counting_rectangle,
    tail_density,
    weighted_sums,
    write_count_reports,
    write_plot_data,
    write_sum_reports,
    write_tail_reports,
)
from .special import EvalPrecision
from .symmetric import (
    TargetValue,
    asymptotic_left_strip,
    asymptotic_right,
    eval_G,
    eval_sym,
    make_sym_zeta,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the documented contract
    # reserves 2 for numeric failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_floats(text):
    return [float(tok) for tok in str(text).replace(",", " ").split()]


def load_config(path) -> dict:
    """key = value document; '#' starts a comment; keys use underscores."""
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line without '=': {raw!r}")
        key, val = line.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _merged(args, config: dict, key: str, cast, default=None):
    flag_val = getattr(args, key, None)
    if flag_val is not None:
        return cast(flag_val)
    if key in config:
        return cast(config[key])
    return default


@dataclass(frozen=True)
class JobConfig:
    """Validated job parameters after merging config file and flags."""

    weights: tuple[float, ...]
    a_re: float
    a_im: float
    region: Rectangle | None
    precision: EvalPrecision
    t_grid: tuple[float, ...]
    y: float
    output_dir: Path
    cache_dir: str | None

    @property
    def z(self):
        return make_sym_zeta(self.weights, self.precision)

    @property
    def a(self) -> TargetValue:
        return TargetValue(complex(self.a_re, self.a_im))


def _build_job(args) -> JobConfig:
    config = load_config(args.config) if args.config else {}
    weights = _merged(args, config, "weights", _parse_floats)
    if not weights:
        raise ValueError("weights are required (--weights or config)")
    sorted_w = sorted(weights, reverse=True)
    if sorted_w != weights:
        print(f"note: weights reordered to {sorted_w}", file=sys.stderr)
    region = _merged(args, config, "region", _parse_floats)
    return JobConfig(
        weights=tuple(sorted_w),
        a_re=_merged(args, config, "a_re", float, 0.0),
        a_im=_merged(args, config, "a_im", float, 0.0),
        region=Rectangle(*region) if region else None,
        precision=EvalPrecision(
            target_abs_err=_merged(args, config, "target_abs_err", float, 1e-13),
            max_terms=_merged(args, config, "max_terms", int, 1 << 18)),
        t_grid=tuple(_merged(args, config, "t_grid", _parse_floats,
                             [50.0, 100.0])),
        y=_merged(args, config, "y", float, 2.0),
        output_dir=Path(_merged(args, config, "output_dir", str, "symzeta-out")),
        cache_dir=_merged(args, config, "cache_dir", str),
    )


def _fmt_c(value: complex) -> str:
    return f"re={value.real:.15g} im={value.imag:.15g}"


def cmd_eval(args) -> int:
    job = _build_job(args)
    z, a = job.z, job.a
    s = complex(args.s, args.s_im)
    val = eval_sym(z, s)
    print(f"sym({s.real:g}{s.imag:+g}i): {_fmt_c(val)} "
          f"(per-factor abs err <= {job.precision.target_abs_err:g})")
    print(f"G: {_fmt_c(eval_G(z, a, s))}")
    models = [args.model] if args.model else ["right", "left"]
    for name in models:
        fn = asymptotic_right if name == "right" else asymptotic_left_strip
        try:
            m = fn(z, s)
            rel = abs(val - m) / abs(m) if m != 0 else float("inf")
            print(f"model {name}: {_fmt_c(m)} (rel dev {rel:.3g})")
        except OutsideRegime as exc:
            print(f"model {name}: n/a ({exc})")
    return EXIT_OK


def cmd_expand(args) -> int:
    job = _build_job(args)
    doc = expansion_as_json(job.z.expansion)
    text = json.dumps(doc, indent=1, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return EXIT_OK


def _resolve_rect(job: JobConfig) -> "Rectangle":
    if job.region is not None:
        return job.region
    return counting_rectangle(job.z, job.a, job.y, max(job.t_grid))


def _locate_cached(job: JobConfig, rect):
    cache = ResultCache(ResultCache.resolve_dir(job.cache_dir, job.output_dir))
    key = ResultCache.key(job.z, job.a, rect, job.precision)
    points = cache.load(key)
    if points is None:
        points = locate_apoints(job.z, job.a, rect)
        cache.store(key, points, meta={
            "weights": list(job.weights),
            "a": {"re": job.a_re, "im": job.a_im},
            "region": [rect.sigma_min, rect.sigma_max, rect.t_min, rect.t_max],
            "version": __version__})
    return points, key


def cmd_locate(args) -> int:
    job = _build_job(args)
    rect = _resolve_rect(job)
    out = job.output_dir
    out.mkdir(parents=True, exist_ok=True)
    points, key = _locate_cached(job, rect)
    jsonl = out / "apoints.jsonl"
    write_points_jsonl(points, jsonl)
    summary = out / "apoints_summary.csv"
    with open(summary, "w") as fh:
        fh.write("n_points,total_multiplicity,max_residual,"
                 "sigma_min,sigma_max,t_min,t_max,cache_key\n")
        n = len(points)
        total = sum(p.multiplicity for p in points)
        worst = max((p.residual for p in points), default=0.0)
        fh.write(f"{n},{total},{worst:.17g},{rect.sigma_min:.17g},"
                 f"{rect.sigma_max:.17g},{rect.t_min:.17g},"
                 f"{rect.t_max:.17g},{key}\n")
    print(f"located {len(points)} points -> {jsonl}")
    return EXIT_OK


def cmd_count(args) -> int:
    job = _build_job(args)
    rect = _resolve_rect(job)
    res = count_apoints(job.z, job.a, rect)
    print(f"count={res.count} raw={_fmt_c(res.raw_integral)} "
          f"residual={res.integer_residual:.3g}")
    return EXIT_OK


def cmd_report(args) -> int:
    job = _build_job(args)
    z, a, y = job.z, job.a, job.y
    out = job.output_dir
    out.mkdir(parents=True, exist_ok=True)
    if args.apoints:
        points = read_points_jsonl(args.apoints)
    else:
        rect = _resolve_rect(job)
        if rect.t_max < max(job.t_grid):
            raise ValueError(
                f"region height {rect.t_max} is below the largest report "
                f"height {max(job.t_grid)}; counts would be incomplete")
        cache = ResultCache(ResultCache.resolve_dir(job.cache_dir, out))
        key = ResultCache.key(z, a, rect, job.precision)
        points = cache.load(key)
        if points is None:
            if not args.locate_missing:
                raise MissingPoints(
                    "no cached a-points for this configuration; run "
                    "'locate' first or pass --apoints/--locate-missing")
            points, _ = _locate_cached(job, rect)

    t_grid = sorted(job.t_grid)
    counts = compare_counts(z, a, y, t_grid, apoints=points)
    sums = [weighted_sums(points, z.weights, y, T) for T in t_grid]
    t_top = t_grid[-1]
    deltas = sorted(set([0.25, 0.5, 1.0]
                        + [math.log(math.log(t_top)) ** 2 / math.log(t_top)]))
    tails = [tail_density(points, z.weights, d, t_top) for d in deltas]

    write_count_reports(counts, out / "counts.csv")
    write_sum_reports(sums, out / "sums.csv")
    write_tail_reports(tails, out / "tails.csv")
    write_plot_data([(r.T, r.computed_count) for r in counts],
                    out / "count_vs_T.txt")
    write_plot_data([(r.T, r.discrepancy_over_logT) for r in counts],
                    out / "discrepancy_over_logT.txt")
    write_plot_data([(r.T, abs(r.sum_crit) / (r.T * math.log(r.T)))
                     for r in sums], out / "sum_crit_scaled.txt")
    write_plot_data([(r.delta, float(r.tail_count)) for r in tails],
                    out / "tail_counts.txt")
    made = ["counts.csv", "sums.csv", "tails.csv", "count_vs_T.txt",
            "discrepancy_over_logT.txt", "sum_crit_scaled.txt",
            "tail_counts.txt"]
    if not args.no_figures:
        render_count_figure(counts, out / "counts.png")
        render_sum_figure(sums, out / "sums.png")
        render_tail_figure(tails, out / "tails.png")
        render_apoints_figure(points, out / "apoints.png",
                              title=f"weights={list(z.weights.values)} "
                                    f"a={a.a:g}")
        made += ["counts.png", "sums.png", "tails.png", "apoints.png"]
    print(f"wrote {', '.join(made)} in {out}")
    return EXIT_OK


def cmd_scan_free(args) -> int:
    job = _build_job(args)
    lo, hi = _parse_floats(args.t_range)
    c1 = scan_free_right(job.z, job.a, (lo, hi))
    print(f"C1_hat={c1:.17g} (verified empty: "
          f"[{c1:g}, {c1 + 20:g}] x [{lo:g}, {hi:g}])")
    return EXIT_OK


def _add_common(p):
    p.add_argument("--config", help="key = value config document")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("--a-re", dest="a_re", type=float, help="target real part")
    p.add_argument("--a-im", dest="a_im", type=float, help="target imag part")
    p.add_argument("--region",
                   help="sigma_min,sigma_max,t_min,t_max search rectangle")
    p.add_argument("--t-grid", dest="t_grid", help="report heights, e.g. 50,100")
    p.add_argument("--y", type=float, help="left edge of the counting window")
    p.add_argument("--target-abs-err", dest="target_abs_err", type=float)
    p.add_argument("--max-terms", dest="max_terms", type=int)
    p.add_argument("--output-dir", dest="output_dir")
    p.add_argument("--cache-dir", dest="cache_dir",
                   help="overrides $SYMZETA_CACHE_DIR")


def build_parser() -> _Parser:
    parser = _Parser(prog="symzeta", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the symmetric sum at a point")
    _add_common(p)
    p.add_argument("--s", type=float, required=True, help="re(s)")
    p.add_argument("--s-im", dest="s_im", type=float, default=0.0, help="im(s)")
    p.add_argument("--model", choices=["right", "left"])
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", help="dump the partition expansion as JSON")
    _add_common(p)
    p.add_argument("--out", help="write the JSON document here")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("locate", help="locate a-points in a rectangle")
    _add_common(p)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("count", help="winding-number count in a rectangle")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("report", help="counting/sum/tail reports + figures")
    _add_common(p)
    p.add_argument("--apoints", help="read points from this JSON-lines file")
    p.add_argument("--locate-missing", action="store_true",
                   help="run the locator when the cache misses")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("scan-free", help="empirical a-point-free abscissa")
    _add_common(p)
    p.add_argument("--t-range", dest="t_range", required=True,
                   help="t_lo,t_hi sampling heights")
    p.set_defaults(func=cmd_scan_free)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SymZetaError as exc:
        print(f"symzeta: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as exc:
        print(f"symzeta: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
