"""Exterior powers of the third wedge of a 6-space, as GL(6) decompositions.

The third wedge of C^6 has dimension 20 and weights the indicator vectors of
3-element subsets of {1..6}.  Exterior powers are decomposed exactly: the
dominant weight multiplicities come from enumerating p-subsets, and
irreducible pieces are split off greedily with Kostka numbers.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from math import comb

from .partitions import Weight, weyl_dim
from .schur import Decomposition, kostka

WEDGE_RANK = 20
TOP_WEIGHT = (10, 10, 10, 10, 10, 10)


def wedge3_weights() -> list[Weight]:
    """The 20 weights of the third wedge of C^6, in lexicographic subset order."""
    out = []
    for triple in combinations(range(6), 3):
        w = [0] * 6
        for i in triple:
            w[i] = 1
        out.append(tuple(w))
    return out


@cache
def _dominant_multiplicities(p: int) -> dict[Weight, int]:
    """Multiplicity of each dominant weight in the p-th exterior power.

    Sums of p-subsets are accumulated only when already weakly decreasing;
    per-coordinate sums stay below 16, so six 4-bit fields per weight are safe.
    """
    packed = [sum(1 << (4 * i) for i in triple) for triple in combinations(range(6), 3)]
    counts: dict[Weight, int] = {}
    for subset in combinations(packed, p):
        s = sum(subset)
        w = (
            s & 15,
            (s >> 4) & 15,
            (s >> 8) & 15,
            (s >> 12) & 15,
            (s >> 16) & 15,
            (s >> 20) & 15,
        )
        if w[0] >= w[1] >= w[2] >= w[3] >= w[4] >= w[5]:
            counts[w] = counts.get(w, 0) + 1
    return counts


@cache
def decompose_wedge_power(p: int) -> Decomposition:
    """Exact irreducible GL(6) decomposition of the p-th exterior power.

    Greedy character subtraction: repeatedly take the lexicographically
    largest dominant weight with nonzero residual multiplicity (which is
    dominance-maximal, hence a highest weight) and subtract its Kostka row.
    """
    if not 0 <= p <= WEDGE_RANK:
        raise ValueError(f"exterior power degree out of range: {p}")
    residual = dict(_dominant_multiplicities(p))
    out: Decomposition = {}
    while residual:
        lam = max(residual)
        mult = residual[lam]
        out[lam] = mult
        for mu in list(residual):
            k = kostka(lam, mu)
            if not k:
                continue
            left = residual[mu] - mult * k
            if left < 0:
                raise ArithmeticError(f"negative residual at {mu} while splitting {lam}")
            if left:
                residual[mu] = left
            else:
                del residual[mu]
    dim = sum(n * weyl_dim(6, w) for w, n in out.items())
    if dim != comb(WEDGE_RANK, p):
        raise ArithmeticError(f"dimension mismatch in wedge power {p}: {dim}")
    return out


@cache
def koszul_factor_table() -> tuple[Decomposition, ...]:
    """Columns p = 0..20 of the Koszul factor table.

    Columns up to 10 are computed directly; column 10+k is column 10-k with
    every weight raised by k (the top wedge is the tenth determinant power).
    """
    columns = [decompose_wedge_power(p) for p in range(11)]
    for k in range(1, 11):
        columns.append(
            {tuple(x + k for x in w): n for w, n in columns[10 - k].items()}
        )
    return tuple(columns)
