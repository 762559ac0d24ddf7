"""Borel-Weil-Bott on Gr(6,10): cohomology of irreducible homogeneous bundles.

A bundle is indexed by a dominant length-4 weight (quotient side) and a
dominant length-6 weight (tautological side); entries are listed quotient
side first.  Twists O(-d) are pushed into the tautological side as mu + d
before calling, since the determinant of the tautological bundle is O(-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import Weight, check_dominant, weyl_dim

RHO = (9, 8, 7, 6, 5, 4, 3, 2, 1, 0)
DIM_GR = 24


@dataclass(frozen=True)
class BottCohomology:
    degree: int
    gl10_weight: Weight
    dim: int


@cache
def bott(lam: Weight, mu: Weight) -> BottCohomology | None:
    """The single nonzero cohomology of the bundle (lam | mu), or None.

    Add the staircase (9,...,0) to the concatenated weight; a repeated entry
    means the bundle is acyclic.  Otherwise the degree is the inversion count
    of the shifted vector and the cohomology is the GL(10) representation of
    highest weight sort(shifted) - staircase.
    """
    lam = check_dominant(lam, 4)
    mu = check_dominant(mu, 6)
    w = lam + mu
    v = tuple(w[i] + RHO[i] for i in range(10))
    if len(set(v)) < 10:
        return None
    inversions = sum(v[i] < v[j] for i in range(10) for j in range(i + 1, 10))
    weight = tuple(x - RHO[i] for i, x in enumerate(sorted(v, reverse=True)))
    return BottCohomology(inversions, weight, weyl_dim(10, weight))
