"""Partition enumeration and the signed expansion, checked against an
independent Bell-number recurrence and hand-expanded small cases."""

import math

import pytest

from symzeta.errors import RankTooLarge
from symzeta.partitions import (
    HoffmanTerm,
    Weights,
    b_constant,
    enumerate_partitions,
    expansion_as_json,
    hoffman_expand,
    m_constant,
)


def bell_numbers(n_max):
    # independent oracle: B_{n+1} = sum_k C(n, k) B_k
    bells = [1]
    for n in range(n_max):
        bells.append(sum(math.comb(n, k) * bells[k] for k in range(n + 1)))
    return bells


def test_partition_counts_match_bell():
    bells = bell_numbers(10)
    for r in range(2, 9):
        assert len(enumerate_partitions(r)) == bells[r]


def test_small_enumerations():
    assert enumerate_partitions(2) == [((1, 2),), ((1,), (2,))]
    assert len(enumerate_partitions(3)) == 5
    assert len(enumerate_partitions(5)) == 52


def test_partitions_canonical_and_distinct():
    parts = enumerate_partitions(6)
    assert len(set(parts)) == len(parts)
    for part in parts:
        flat = [i for block in part for i in block]
        assert sorted(flat) == list(range(1, 7))
        # blocks ordered by smallest element, each block sorted
        firsts = [block[0] for block in part]
        assert firsts == sorted(firsts)
        for block in part:
            assert list(block) == sorted(block)


def test_rank_cap():
    with pytest.raises(RankTooLarge):
        enumerate_partitions(11)
    with pytest.raises(ValueError):
        enumerate_partitions(1)


def test_expand_pair():
    w = Weights.from_values((1.0, 1.0))
    assert hoffman_expand(w) == [
        HoffmanTerm(coefficient=1, block_sums=(1.0, 1.0)),
        HoffmanTerm(coefficient=-1, block_sums=(2.0,)),
    ]


def test_expand_triple():
    w = Weights.from_values((1.0, 1.0, 1.0))
    assert hoffman_expand(w) == [
        HoffmanTerm(coefficient=1, block_sums=(1.0, 1.0, 1.0)),
        HoffmanTerm(coefficient=-3, block_sums=(2.0, 1.0)),
        HoffmanTerm(coefficient=2, block_sums=(3.0,)),
    ]


def test_expand_mixed():
    w = Weights.from_values((2.0, 1.0))
    assert hoffman_expand(w) == [
        HoffmanTerm(coefficient=1, block_sums=(2.0, 1.0)),
        HoffmanTerm(coefficient=-1, block_sums=(3.0,)),
    ]


def test_block_sums_total_matches_weight_total():
    import random

    rnd = random.Random(5)
    for _ in range(20):
        r = rnd.randint(2, 6)
        vals = sorted((rnd.uniform(0.3, 4.0) for _ in range(r)), reverse=True)
        w = Weights.from_values(vals)
        for term in hoffman_expand(w):
            assert abs(math.fsum(term.block_sums) - w.A) <= 1e-12


def test_b_constant_examples():
    assert b_constant(Weights.from_values((1.0, 1.0))) == 2
    assert b_constant(Weights.from_values((2.0, 1.0))) == 1
    assert b_constant(Weights.from_values((3.0, 1.0, 1.0, 1.0))) == 6


def test_b_constant_extremes():
    import random

    rnd = random.Random(9)
    for r in range(2, 7):
        same = Weights.from_values([1.7] * r)
        assert b_constant(same) == math.factorial(r)
        distinct = Weights.from_values(sorted(
            (rnd.uniform(0.2, 5.0) + 0.01 * i for i in range(r)), reverse=True))
        assert b_constant(distinct) == 1


def test_m_constant_examples():
    assert abs(m_constant(Weights.from_values((1.0, 1.0))) - 0.5) <= 1e-15
    assert abs(m_constant(Weights.from_values((2.0, 1.0))) - 0.5) <= 1e-15
    assert abs(m_constant(Weights.from_values((1.0, 1.0, 1.0))) - 1.0 / 6.0) <= 1e-15


def test_m_constant_in_unit_interval():
    import random

    rnd = random.Random(13)
    for _ in range(20):
        r = rnd.randint(2, 7)
        w = Weights.from_values([rnd.uniform(0.2, 3.0) for _ in range(r)])
        assert 0.0 < m_constant(w) <= 1.0


def test_weights_validation():
    with pytest.raises(ValueError):
        Weights.from_values((1.0,))
    with pytest.raises(ValueError):
        Weights.from_values((1.0, -2.0))
    w = Weights.from_values((1.0, 3.0, 2.0))
    assert w.values == (3.0, 2.0, 1.0)  # auto-sorted non-increasing


def test_expansion_json_document():
    w = Weights.from_values((2.0, 1.0))
    doc = expansion_as_json(hoffman_expand(w))
    assert doc == [
        {"coefficient": 1, "block_sums": [2.0, 1.0]},
        {"coefficient": -1, "block_sums": [3.0]},
    ]
