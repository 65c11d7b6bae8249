"""Evaluation of the symmetric multiple-zeta sum and its normalizations.

The workhorse is the merged partition expansion: a short signed sum of
products of single zeta values, which converges wherever the factors do.
The defining permutation multi-sum is kept only as the brute-force oracle
(:func:`multisum_oracle`) for cross-checking inside its absolute-convergence
domain.

``G`` is the normalized function whose zeros are exactly the a-points:
``f/(B M^s)`` when the target is exactly zero, ``(f - a)/(-a)`` otherwise.

Complex points are plain ``complex`` values.  :class:`SymZeta` is immutable
after construction and every evaluator here is a pure function, so
instances are safe to share across threads.
"""

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import AtAPoint, NearPole, OutsideConvergenceRegion, OutsideRegime
from .partitions import HoffmanTerm, Weights, hoffman_expand
from .special import DEFAULT_PRECISION, EvalPrecision, zeta_many

__all__ = [
    "SymZeta",
    "TargetValue",
    "make_sym_zeta",
    "eval_sym",
    "eval_sym_deriv",
    "eval_G",
    "eval_logderiv_G",
    "multisum_oracle",
    "asymptotic_right",
    "asymptotic_left_strip",
    "OracleValue",
]

_POLE_GUARD = 1e-10


@dataclass(frozen=True)
class TargetValue:
    """Right-hand side of the a-point equation; a = 0 exactly selects the
    zero-counting normalization of G."""

    a: complex

    @property
    def is_zero(self) -> bool:
        return self.a == 0


@dataclass(frozen=True)
class SymZeta:
    """Immutable evaluator state: weights, merged expansion, precision."""

    weights: Weights
    expansion: tuple[HoffmanTerm, ...]
    prec: EvalPrecision

    @property
    def unique_sums(self) -> tuple[float, ...]:
        return tuple(sorted({c for t in self.expansion for c in t.block_sums}))


def make_sym_zeta(values, prec: EvalPrecision = DEFAULT_PRECISION) -> SymZeta:
    w = Weights.from_values(values)
    return SymZeta(weights=w, expansion=tuple(hoffman_expand(w)), prec=prec)


def _check_poles(z: SymZeta, s_arr: np.ndarray):
    for c in z.unique_sums:
        bad = np.abs(c * s_arr - 1.0) < _POLE_GUARD
        if np.any(bad):
            raise NearPole(1.0 / c)


def _kahan_add(total, comp, term):
    y = term - comp
    t = total + y
    comp = (t - total) - y
    return t, comp


def eval_terms_many(z: SymZeta, s_arr: np.ndarray, want_deriv: bool = False):
    """Expansion value (and derivative) at an array of points.

    Terms are accumulated with compensated summation: the coefficients
    alternate in sign and near a zero of G the cancellation is severe.
    """
    s_arr = np.asarray(s_arr, dtype=complex)
    _check_poles(z, s_arr)
    factors = {}
    for c in z.unique_sums:
        if want_deriv:
            v, d = zeta_many(c * s_arr, z.prec, want_deriv=True)
            factors[c] = (v, d)
        else:
            factors[c] = (zeta_many(c * s_arr, z.prec), None)

    total = np.zeros(s_arr.shape, dtype=complex)
    comp = np.zeros(s_arr.shape, dtype=complex)
    dtotal = np.zeros(s_arr.shape, dtype=complex) if want_deriv else None
    dcomp = np.zeros(s_arr.shape, dtype=complex) if want_deriv else None
    for term in z.expansion:
        prod = np.full(s_arr.shape, float(term.coefficient), dtype=complex)
        for c in term.block_sums:
            prod = prod * factors[c][0]
        total, comp = _kahan_add(total, comp, prod)
        if want_deriv:
            # product rule: sum_k c_k zeta'(c_k s) prod_{j != k} zeta(c_j s)
            dterm = np.zeros(s_arr.shape, dtype=complex)
            for k, ck in enumerate(term.block_sums):
                piece = np.full(s_arr.shape, float(term.coefficient), dtype=complex)
                for j, cj in enumerate(term.block_sums):
                    piece = piece * (factors[cj][1] * cj if j == k else factors[cj][0])
                dterm = dterm + piece
            dtotal, dcomp = _kahan_add(dtotal, dcomp, dterm)
    if want_deriv:
        return total, dtotal
    return total


def cancellation_scale(z: SymZeta, s) -> float:
    """Sum of |coefficient| * prod |zeta(c_k s)| over the expansion terms:
    the magnitude against which the evaluated value cancels.  The
    double-precision noise floor of the expansion value is roughly this
    scale times 1e-15."""
    s_arr = np.array([complex(s)])
    out = 0.0
    factors = {c: np.abs(zeta_many(c * s_arr, z.prec))[0] for c in z.unique_sums}
    for term in z.expansion:
        mag = abs(term.coefficient)
        for c in term.block_sums:
            mag *= factors[c]
        out += mag
    return float(out)


def eval_sym(z: SymZeta, s) -> complex:
    """Value of the symmetric sum via the merged expansion."""
    return complex(eval_terms_many(z, np.array([complex(s)]))[0])


def eval_sym_deriv(z: SymZeta, s) -> complex:
    """Derivative of the symmetric sum (term-wise product rule)."""
    _, d = eval_terms_many(z, np.array([complex(s)]), want_deriv=True)
    return complex(d[0])


def G_many(z: SymZeta, a: TargetValue, s_arr: np.ndarray) -> np.ndarray:
    s_arr = np.asarray(s_arr, dtype=complex)
    vals = eval_terms_many(z, s_arr)
    if a.is_zero:
        w = z.weights
        return vals * np.exp(-s_arr * math.log(w.M)) / w.B
    return (vals - a.a) / (-a.a)


def eval_G(z: SymZeta, a: TargetValue, s) -> complex:
    """Normalized function G; G(s) = 0 exactly at the a-points."""
    return complex(G_many(z, a, np.array([complex(s)]))[0])


def logderiv_G_many(z: SymZeta, a: TargetValue, s_arr: np.ndarray,
                    check: bool = True) -> np.ndarray:
    s_arr = np.asarray(s_arr, dtype=complex)
    vals, derivs = eval_terms_many(z, s_arr, want_deriv=True)
    if a.is_zero:
        if check and np.any(np.abs(G_many(z, a, s_arr)) < 1e-12):
            raise AtAPoint("G vanishes at an evaluation point")
        return derivs / vals - math.log(z.weights.M)
    if check:
        denom_scale = np.abs(vals - a.a) / abs(a.a)
        if np.any(denom_scale < 1e-12):
            raise AtAPoint("G vanishes at an evaluation point")
    return derivs / (vals - a.a)


def eval_logderiv_G(z: SymZeta, a: TargetValue, s) -> complex:
    """G'/G at one point; requires |G| >= 1e-12 there."""
    return complex(logderiv_G_many(z, a, np.array([complex(s)]))[0])


class OracleValue(NamedTuple):
    """Brute-force truncated multi-sum value with its truncation estimate.

    The estimate is heuristic but documented: three times the sum of the
    changes under two successive cutoff halvings (Richardson-style
    differences; the two-level sum guards against a single difference
    dipping through phase cancellation at complex arguments) plus a
    floating-point floor.
    """

    value: complex
    trunc_estimate: float


def _distinct_orderings(values):
    return sorted(set(itertools.permutations(values)), reverse=True)


def multisum_oracle(w: Weights, s, cutoff: int) -> OracleValue:
    """Truncated defining multi-sum over all weight orderings.

    Sums 1/(n_1^{e_1} ... n_r^{e_r}) over 1 <= n_1 < ... < n_r <= cutoff
    for every distinct ordering (each weighted by the permutation count B),
    via nested prefix sums.  Only valid inside the absolute-convergence
    domain: re((a_{tau(l)} + ... + a_{tau(r)}) s) > r - l + 1 for every
    ordering tau and every l.
    """
    s = complex(s)
    r = w.r
    orderings = _distinct_orderings(w.values)
    for tau in orderings:
        suffix = 0.0
        for l in range(r, 0, -1):
            suffix += tau[l - 1]
            if (suffix * s).real <= r - l + 1:
                raise OutsideConvergenceRegion(
                    f"re({suffix} * s) <= {r - l + 1} for ordering {tau}")
    if cutoff < 4:
        raise ValueError("cutoff too small")

    m = np.arange(1, cutoff + 1, dtype=float)
    logm = np.log(m)
    total = 0.0 + 0.0j
    total_half = 0.0 + 0.0j
    total_quarter = 0.0 + 0.0j
    half_ix = cutoff // 2 - 1
    quarter_ix = cutoff // 4 - 1
    for tau in orderings:
        prefix = np.exp(-(tau[0] * s) * logm)
        np.cumsum(prefix, out=prefix)
        for e in tau[1:]:
            vec = np.exp(-(e * s) * logm)
            vec[1:] *= prefix[:-1]
            vec[0] = 0.0
            prefix = np.cumsum(vec)
        total += prefix[-1]
        total_half += prefix[half_ix]
        total_quarter += prefix[quarter_ix]
    total *= w.B
    total_half *= w.B
    total_quarter *= w.B
    est = (3.0 * (abs(total - total_half) + abs(total_half - total_quarter))
           + 1e-15 * (1.0 + abs(total)))
    return OracleValue(value=complex(total), trunc_estimate=float(est))


def asymptotic_right(z: SymZeta, s) -> complex:
    """Leading right-half-plane model B * M^s (valid once a_r * sigma > 2)."""
    s = complex(s)
    w = z.weights
    if w.values[-1] * s.real <= 2.0:
        raise OutsideRegime("right-half-plane model requires a_r * sigma > 2")
    return w.B * complex(np.exp(s * math.log(w.M)))


def asymptotic_left_strip(z: SymZeta, s) -> complex:
    """Left-strip model prod_j zeta(a_j s) (negative sigma, t at least 10)."""
    s = complex(s)
    if s.real >= 0.0 or abs(s.imag) < 10.0:
        raise OutsideRegime("left-strip model requires sigma < 0 and |t| >= 10")
    vals = zeta_many(np.array([a * s for a in z.weights.values]), z.prec)
    return complex(np.prod(vals))
