"""Disk cache for located a-point sets.

Keys hash the weights, target, rectangle, precision, and package version,
so any of those changing invalidates the entry.  Corrupted entries are
treated as misses with a warning.  Writes are atomic (tmp + rename); a
cache hit reproduces the stored list byte-for-byte on re-serialization.
"""

import hashlib
import json
import logging
import os
from pathlib import Path

from . import __version__
from .locator import APoint, Rectangle
from .special import EvalPrecision
from .symmetric import SymZeta, TargetValue

logger = logging.getLogger(__name__)

ENV_CACHE_DIR = "SYMZETA_CACHE_DIR"


def point_record(p: APoint) -> dict:
    return {"beta": p.beta, "gamma": p.gamma,
            "multiplicity": p.multiplicity, "residual": p.residual}


def point_from_record(rec: dict) -> APoint:
    return APoint(beta=float(rec["beta"]), gamma=float(rec["gamma"]),
                  multiplicity=int(rec["multiplicity"]),
                  residual=float(rec["residual"]))


def write_points_jsonl(points, path):
    with open(path, "w") as fh:
        for p in points:
            fh.write(json.dumps(point_record(p), sort_keys=True) + "\n")


def read_points_jsonl(path) -> list[APoint]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(point_from_record(json.loads(line)))
    return out


class ResultCache:
    """File-per-key JSON store for APoint lists."""

    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def resolve_dir(explicit=None, output_dir=None) -> Path:
        if explicit:
            return Path(explicit)
        env = os.environ.get(ENV_CACHE_DIR)
        if env:
            return Path(env)
        base = Path(output_dir) if output_dir else Path(".")
        return base / "cache"

    @staticmethod
    def key(z: SymZeta, a: TargetValue, rect: Rectangle,
            prec: EvalPrecision) -> str:
        doc = {
            "weights": list(z.weights.values),
            "a": {"re": a.a.real, "im": a.a.imag},
            "region": [rect.sigma_min, rect.sigma_max, rect.t_min, rect.t_max],
            "precision": [prec.target_abs_err, prec.max_terms],
            "version": __version__,
        }
        blob = json.dumps(doc, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:24]

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def load(self, key: str):
        path = self._path(key)
        if not path.exists():
            return None
        try:
            doc = json.loads(path.read_text())
            return [point_from_record(rec) for rec in doc["points"]]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            logger.warning("cache entry %s is corrupted (%s); recomputing",
                           path, exc)
            return None

    def store(self, key: str, points, meta=None):
        doc = {"meta": meta or {}, "points": [point_record(p) for p in points]}
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True, indent=1))
        os.replace(tmp, self._path(key))
