"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line.  Criteria 7 and 10 assert desk-scale emptiness claims that are
numerically false (verified independently with an arbitrary-precision
oracle; see the failure messages); they are implemented exactly as stated
rather than weakened, and fail honestly.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import math
from contextlib import contextmanager

import numpy as np

from symzeta.locator import (
    Rectangle,
    count_apoints,
    locate_apoints,
    scan_free_right,
    verify_cluster,
)
from symzeta.reports import compare_counts, tail_density, weighted_sums
from symzeta.special import log_chi_many, zeta, zeta_many
from symzeta.symmetric import (
    TargetValue,
    eval_sym,
    eval_terms_many,
    make_sym_zeta,
    multisum_oracle,
)


@contextmanager
def criterion(number, name):
    try:
        yield
    except AssertionError:
        print(f"ACCEPTANCE {number:02d} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number:02d} {name}: PASS")


def test_criterion_01_hoffman_identity(z11, z111):
    with criterion(1, "expansion matches hand-derived closed forms"):
        rng = np.random.default_rng(101)
        pts = rng.uniform(-10, 10, 100) + 1j * rng.uniform(1, 50, 100)
        vals = eval_terms_many(z11, pts)
        direct = zeta_many(pts) ** 2 - zeta_many(2 * pts)
        assert float(np.abs(vals - direct).max()) <= 1e-10

        pts3 = rng.uniform(-10, 10, 50) + 1j * rng.uniform(1, 50, 50)
        vals3 = eval_terms_many(z111, pts3)
        z1, z2, z3 = zeta_many(pts3), zeta_many(2 * pts3), zeta_many(3 * pts3)
        direct3 = z1 * z1 * z1 + (-3.0) * z2 * z1 + 2.0 * z3
        assert float(np.abs(vals3 - direct3).max()) <= 1e-9


def test_criterion_02_multisum_oracle(z11, z21, z111):
    with criterion(2, "expansion matches the brute-force multi-sum"):
        rng = np.random.default_rng(202)
        for z, cutoff in ((z11, 1500), (z21, 1500), (z111, 400)):
            for _ in range(20):
                s = complex(rng.uniform(1.3, 3.5), rng.uniform(-3.0, 3.0))
                got = multisum_oracle(z.weights, s, cutoff)
                dev = abs(got.value - eval_sym(z, s))
                assert dev <= got.trunc_estimate + 1e-8


def test_criterion_03_special_function_floor():
    with criterion(3, "zeta floor, functional equation, first zero"):
        assert abs(zeta(2.0) - math.pi ** 2 / 6.0) <= 1e-12
        sig = np.linspace(-5.0, 6.0, 23)
        t = np.linspace(2.0, 100.0, 25)
        s = (sig[:, None] + 1j * t[None, :]).ravel()
        resid = np.abs(zeta_many(s)
                       - np.exp(log_chi_many(s)) * zeta_many(1.0 - s))
        assert float(resid.max()) <= 1e-8
        assert abs(zeta(complex(0.5, 14.134725142))) <= 1e-6


def test_criterion_04_winding_integrality(z11):
    with criterion(4, "winding integrality and locate/count agreement"):
        rng = np.random.default_rng(404)
        targets = [TargetValue(0), TargetValue(1.0), TargetValue(1 + 1j)]
        for k in range(20):
            a = targets[k % 3]
            lo_s = rng.uniform(-5.0, 10.0 - 1.5)
            lo_t = rng.uniform(1.0, 100.0 - 2.0)
            rect = Rectangle(
                lo_s, min(10.0, lo_s + rng.uniform(1.5, 9.0)),
                lo_t, min(100.0, lo_t + rng.uniform(2.0, 8.0)))
            res = count_apoints(z11, a, rect)
            assert res.count >= 0
            assert res.integer_residual <= 1e-3
            pts = locate_apoints(z11, a, rect)
            assert sum(p.multiplicity for p in pts) == res.count


def test_criterion_05_free_half_plane(z11, z21):
    with criterion(5, "a-point-free half-plane certified by contour"):
        triples = [
            (z11, TargetValue(0), (1.0, 20.0)),
            (z11, TargetValue(100.0), (5.0, 15.0)),
            (z21, TargetValue(1 + 1j), (1.0, 20.0)),
        ]
        for z, a, t_range in triples:
            c1_hat = scan_free_right(z, a, t_range)
            band = Rectangle(c1_hat, c1_hat + 20.0, t_range[0], t_range[1])
            assert count_apoints(z, a, band).count == 0


def test_criterion_06_trivial_clusters(z11):
    with criterion(6, "one a-point per cluster disk over the stable range"):
        scan_top = 12
        for target, expected_n_min in ((TargetValue(0), 1),
                                       (TargetValue(0.5), 8)):
            counts = {n: verify_cluster(z11, target, n, 0.25).count
                      for n in range(1, scan_top + 1)}
            stable = [n for n in range(1, scan_top + 1)
                      if all(counts[m] == 1 for m in range(n, scan_top + 1))]
            assert stable, f"no stable disk range for target {target.a}"
            n_min = stable[0]
            # frozen from the arbitrary-precision oracle: for target 0.5
            # the disks n <= 7 are empty (|zeta(2s)| < |a| on their rims)
            assert n_min == expected_n_min, (target.a, counts)
            for n in range(n_min, scan_top + 1):
                assert counts[n] == 1
                assert verify_cluster(z11, target, n, 0.125).count == 1
            if target.is_zero:
                assert set(range(6, 11)).issubset(set(stable))
            print(f"   cluster stable range for a={target.a:g}: "
                  f"n >= {n_min} (scan top {scan_top})")


def test_criterion_07_strip_freeness(z11):
    with criterion(7, "strip [-2,-0.5] x [50,200] has no a-points"):
        for a in (TargetValue(0), TargetValue(3 + 2j)):
            res = count_apoints(z11, a, Rectangle(-2.0, -0.5, 50.0, 200.0))
            assert res.count == 0, (
                f"strip contains {res.count} a-points for a={a.a} "
                "(genuine: independently confirmed by an arbitrary-precision "
                "oracle, e.g. the zero near -0.710036+53.91465i; the strip "
                "only empties for t beyond roughly 400, far above this "
                "window; see the decisions ledger)")


def test_criterion_08_counting_formula(z11, a_zero, located_11):
    with criterion(8, "counting formula discrepancy scale at T=50,100,200"):
        rect, points = located_11
        assert rect.sigma_min == -5.0
        reports = compare_counts(z11, a_zero, 5.0, [50.0, 100.0, 200.0],
                                 apoints=points)
        ratios = []
        for rep in reports:
            assert abs(rep.discrepancy_over_logT) <= 25.0
            ratios.append(abs(rep.discrepancy_over_logT))
            print(f"   T={rep.T:g}: count={rep.computed_count} "
                  f"main={rep.main_term:.3f} disc/logT="
                  f"{rep.discrepancy_over_logT:+.3f}")
        for prev, cur in zip(ratios, ratios[1:]):
            assert cur <= 3.0 * max(prev, 1e-9)


def test_criterion_09_weighted_sums(z21, located_11, located_21):
    with criterion(9, "weighted-sum identities and scaled trends"):
        # exact algebraic identities on the located (2,1) set
        _, pts21 = located_21
        y = 0.75  # keeps the desk-scale left transition band outside
        two_pi = 2.0 * math.pi
        center = z21.weights.r / (2.0 * z21.weights.A)
        reps = {}
        for T in (100.0, 200.0):
            rep = weighted_sums(pts21, z21.weights, y, T)
            reps[T] = rep
            assert abs(rep.sum_half - (rep.sum_littlewood
                                       - two_pi * (y + 0.5) * rep.count)) <= 1e-9
            assert abs(rep.sum_crit - (rep.sum_littlewood
                                       - two_pi * (y + center) * rep.count)) <= 1e-9
            ratio = rep.sum_half / (T * math.log(T))
            assert -1.0 <= ratio <= 0.0, (T, ratio)
            print(f"   T={T:g}: sum_half/(TlogT)={ratio:+.4f} "
                  f"|sum_crit|/(TlogT)="
                  f"{abs(rep.sum_crit) / (T * math.log(T)):.4f}")
        crit_scaled = [abs(reps[T].sum_crit) / (T * math.log(T))
                       for T in (100.0, 200.0)]
        assert crit_scaled[1] < crit_scaled[0]

        # balanced-weights case: predicted_half vanishes, sums stay O(T)
        _, pts11 = located_11
        w11 = make_sym_zeta((1.0, 1.0)).weights
        for T in (100.0, 200.0):
            rep = weighted_sums(pts11, w11, 5.0, T)
            assert rep.predicted_half == 0.0
            assert abs(rep.sum_half) <= 5.0 * T


def test_criterion_10_tail_density(z11, a_zero, located_11):
    with criterion(10, "tail beyond beta=1 empty and monotone in delta"):
        _, points = located_11
        w = z11.weights
        # monotone in delta (nested tails)
        deltas = [0.1, 0.25, 0.5, 1.0, 2.0]
        counts = [tail_density(points, w, d, 100.0).tail_count
                  for d in deltas]
        assert counts == sorted(counts, reverse=True)
        special = (math.log(math.log(100.0)) ** 2) / math.log(100.0)
        rep_special = tail_density(points, w, special, 100.0)
        print(f"   delta=(loglogT)^2/logT={special:.4f}: "
              f"tail={rep_special.tail_count} "
              f"scaled={rep_special.scaled_count:.4f}")

        tail = tail_density(points, w, 0.5, 100.0)  # beta > 1, gamma < 100
        contour = count_apoints(z11, a_zero, Rectangle(1.0, 6.0, 0.5, 100.0))
        # located tail and independent contour agree on the same region
        assert tail.tail_count == contour.count
        assert contour.count == 0, (
            f"{contour.count} a-points have beta > 1 below T=100 (genuine: "
            "confirmed by an arbitrary-precision oracle; domination by the "
            "leading term only begins near sigma = 2, not sigma = 1; see "
            "the decisions ledger)")
