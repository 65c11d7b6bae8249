"""Set partitions of {1,..,r} and the signed expansion of the symmetric
multiple-zeta sum into products of single zeta factors.

A partition is represented canonically as a tuple of blocks, each block a
sorted tuple of indices, with blocks ordered by their smallest element.
Each partition with l blocks contributes the signed term

    (-1)^(r-l) * prod_k (|P_k| - 1)!  *  prod_k zeta(c_k s),

where c_k is the sum of the weights indexed by block P_k.  Terms whose
block-sum multisets coincide are merged by adding coefficients.
"""

import math
from dataclasses import dataclass

from .errors import RankTooLarge

__all__ = [
    "Weights",
    "HoffmanTerm",
    "SetPartition",
    "enumerate_partitions",
    "hoffman_expand",
    "b_constant",
    "m_constant",
    "expansion_as_json",
]

# A set partition: blocks sorted by smallest element, indices 1-based.
SetPartition = tuple[tuple[int, ...], ...]

_MAX_RANK = 10  # Bell(10) = 115975; desk-scale cap

# merging tolerance for block sums built from user-supplied float weights
_MERGE_DECIMALS = 12


@dataclass(frozen=True)
class Weights:
    """Weight tuple (a_1 >= ... >= a_r > 0) with its derived constants.

    ``A`` is the weight total, ``B`` the number of permutations fixing the
    sorted tuple, and ``M = 1 / (1^a_1 * 2^a_2 * ... * r^a_r)`` the
    leading-term base of the right-half-plane model.
    """

    values: tuple[float, ...]
    A: float
    B: int
    M: float

    @classmethod
    def from_values(cls, values) -> "Weights":
        vals = tuple(sorted((float(v) for v in values), reverse=True))
        if len(vals) < 2:
            raise ValueError("at least two weights are required")
        if vals[-1] <= 0.0:
            raise ValueError("weights must be positive")
        return cls(values=vals, A=math.fsum(vals), B=_b_of(vals), M=_m_of(vals))

    @property
    def r(self) -> int:
        return len(self.values)


def _b_of(vals) -> int:
    b = 1
    run = 1
    for i in range(1, len(vals)):
        if vals[i] == vals[i - 1]:
            run += 1
            b *= run
        else:
            run = 1
    return b


def _m_of(vals) -> float:
    # log space: M = exp(-sum a_j log j), j = 1..r
    return math.exp(-math.fsum(a * math.log(j) for j, a in enumerate(vals, start=1)))


def b_constant(w: Weights) -> int:
    """Number of weight permutations that reproduce the sorted tuple:
    the product of (group size)! over groups of equal weights."""
    return _b_of(w.values)


def m_constant(w: Weights) -> float:
    """M = 1/(1^a_1 * ... * r^a_r), computed in log space; lies in (0, 1]."""
    return _m_of(w.values)


def enumerate_partitions(r: int) -> list[SetPartition]:
    """All set partitions of {1,..,r} in canonical form.

    Generated by inserting each element either into an existing block or
    into a fresh block, which yields the canonical order directly and
    exactly Bell(r) partitions without duplicates.
    """
    if r > _MAX_RANK:
        raise RankTooLarge(f"r={r} exceeds the enumeration cap of {_MAX_RANK}")
    if r < 2:
        raise ValueError("r must be at least 2")
    out: list[SetPartition] = []
    blocks: list[list[int]] = []

    def place(k: int):
        if k > r:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(k)
            place(k + 1)
            b.pop()
        blocks.append([k])
        place(k + 1)
        blocks.pop()

    place(1)
    return out


@dataclass(frozen=True)
class HoffmanTerm:
    """One merged term of the expansion: coefficient * prod_k zeta(c_k s)."""

    coefficient: int
    block_sums: tuple[float, ...]  # sorted descending; sums to the weight total


def hoffman_expand(w: Weights) -> list[HoffmanTerm]:
    """Signed partition expansion of the symmetric sum, with terms of equal
    block-sum multisets merged (tolerance 1e-12 on each sum after sorting).

    Ordering is deterministic: more blocks first, then lexicographically
    descending block sums.
    """
    r = w.r
    merged: dict[tuple, list] = {}
    for part in enumerate_partitions(r):
        l = len(part)
        coeff = (-1) ** (r - l)
        sums = []
        for block in part:
            coeff *= math.factorial(len(block) - 1)
            sums.append(math.fsum(w.values[i - 1] for i in block))
        sums.sort(reverse=True)
        key = tuple(round(c, _MERGE_DECIMALS) for c in sums)
        slot = merged.get(key)
        if slot is None:
            merged[key] = [coeff, tuple(sums)]
        else:
            slot[0] += coeff
    terms = [
        HoffmanTerm(coefficient=c, block_sums=sums)
        for c, sums in merged.values()
        if c != 0
    ]
    terms.sort(key=lambda t: (-len(t.block_sums), tuple(-c for c in t.block_sums)))
    return terms


def expansion_as_json(terms) -> list[dict]:
    """JSON-ready document for an expansion: [{coefficient, block_sums}]."""
    return [
        {"coefficient": t.coefficient, "block_sums": list(t.block_sums)}
        for t in terms
    ]
