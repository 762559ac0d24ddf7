"""Dominant GL(n) weights: parsing, duality, canonical forms, Weyl dimensions.

A weight is a weakly decreasing tuple of integers (negative entries allowed).
Length 4 indexes Schur functors of the rank-4 quotient bundle, length 6 the
rank-6 tautological bundle, length 10 the GL(10) representations produced by
Borel-Weil-Bott.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

Weight = tuple[int, ...]


def is_dominant(w: Weight) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_dominant(w, length: int | None = None) -> Weight:
    """Validate and normalise a weight argument; raises ValueError otherwise."""
    w = tuple(int(x) for x in w)
    if length is not None and len(w) != length:
        raise ValueError(f"expected a weight of length {length}, got {w}")
    if not w:
        raise ValueError("empty weight")
    if not is_dominant(w):
        raise ValueError(f"weight entries must be weakly decreasing: {w}")
    return w


def parse_weight(text: str, length: int | None = None) -> Weight:
    """Parse a comma-separated weight string such as "3,2,1,0"."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight string: {text!r}") from None
    return check_dominant(entries, length)


def format_weight(w: Weight) -> str:
    return ",".join(str(x) for x in w)


def dual(w: Weight) -> Weight:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-x for x in reversed(w))


def shifted_dual(w: Weight) -> Weight:
    """Dual weight shifted so the top entry matches the input's top entry.

    For (m,t,s,0) this is (m, m-s, m-t, 0); the two index the same bundle up
    to a determinant twist.
    """
    top = w[0]
    return tuple(top - x for x in reversed(w))


@dataclass(frozen=True)
class CanonicalQPartition:
    """Normal form (m,t,s,0) with m >= t+s for a length-4 weight.

    ``twist`` records minus the power of O(1) factored out while normalising,
    so that the endomorphism bundle of the original Schur functor is that of
    the canonical one.
    """

    m: int
    t: int
    s: int
    twist: int = 0

    def __post_init__(self):
        if not (self.m >= self.t >= self.s >= 0 and self.m >= self.t + self.s):
            raise ValueError(f"not a canonical triple: {(self.m, self.t, self.s)}")

    @property
    def weight(self) -> Weight:
        return (self.m, self.t, self.s, 0)

    @property
    def dual_weight(self) -> Weight:
        return shifted_dual(self.weight)


def canonicalize(lam: Weight) -> CanonicalQPartition:
    """Reduce a length-4 weight to (m,t,s,0) with m >= t+s.

    First subtracts the last entry (a determinant twist), then replaces the
    result by its shifted dual when the top entry is smaller than the sum of
    the middle two.  Ties (m == t+s) keep the input.
    """
    lam = check_dominant(lam, 4)
    base = lam[3]
    w = tuple(x - base for x in lam)
    extracted = base
    if w[0] < w[1] + w[2]:
        w = shifted_dual(w)
        extracted += w[0]
    return CanonicalQPartition(w[0], w[1], w[2], -extracted)


@cache
def weyl_dim(n: int, w: Weight) -> int:
    """Dimension of the irreducible GL(n) representation of highest weight w.

    Exact product formula; invariant under w -> w + d and under dualisation.
    """
    w = check_dominant(w, n)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl product not integral for {w}")
    return dim
