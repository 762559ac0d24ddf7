"""Twisted Koszul complexes on Gr(6,10): first page, rank overrides, chase.

The structure sheaf of the fourfold is resolved by the exterior powers of the
third wedge of the tautological bundle.  Twisting by an irreducible bundle
and taking cohomology termwise gives a first page whose entry at (p, q) is
the degree-q cohomology of the p-th term; a potential differential at page r
connects (p, q) to (p-r, q-r+1) and raises the total degree q-p by one.

When two nonzero entries sit in differential position the chase alone cannot
decide the rank of the connecting map; such positions are reported as
conflicts unless an externally justified override supplies the rank.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .bwb import bott
from .partitions import Weight, check_dominant
from .plethysm import WEDGE_RANK, koszul_factor_table

Position = tuple[int, int]
MAX_DEGREE = 4


@dataclass(frozen=True)
class RankOverride:
    """Externally asserted rank of one potential differential.

    ``q_weight`` and ``twist`` identify the summand (twist is the power of
    O(1), so a bundle twisted by O(-3) has twist -3).
    """

    q_weight: Weight
    twist: int
    source: Position
    target: Position
    rank: int
    note: str = ""

    def __post_init__(self):
        p, q = self.source
        pp, qq = self.target
        if not (p > pp and (q - qq) == (p - pp) - 1):
            raise ValueError(
                f"illegal differential position {self.source} -> {self.target}"
            )
        if self.rank < 0:
            raise ValueError("override rank must be nonnegative")

    @property
    def page(self) -> int:
        return self.source[0] - self.target[0]


class OverrideError(ValueError):
    """An override is inconsistent with the page it is applied to."""


@dataclass(frozen=True)
class TwistedComplex:
    """Terms of the Koszul resolution twisted by Sigma_q_weight Q(-twist)."""

    q_weight: Weight
    twist: int
    terms: tuple[tuple[tuple[Weight, int], ...], ...]


def build_complex(lam: Weight, d: int) -> TwistedComplex:
    """Koszul resolution of Sigma_lam Q tensor O(-d) restricted to the fourfold.

    Term p carries the factor-table column p with every tautological-side
    weight raised by d.
    """
    lam = check_dominant(lam, 4)
    table = koszul_factor_table()
    terms = tuple(
        tuple(sorted(((tuple(x + d for x in mu), mult) for mu, mult in col.items()), reverse=True))
        for col in table
    )
    return TwistedComplex(lam, d, terms)


@dataclass(frozen=True)
class E1Entry:
    dim: int
    constituents: tuple[tuple[Weight, int], ...]


@dataclass(frozen=True)
class E1Page:
    q_weight: Weight
    twist: int
    entries: tuple[tuple[Position, E1Entry], ...]

    def as_dict(self) -> dict[Position, E1Entry]:
        return dict(self.entries)

    @property
    def euler(self) -> int:
        return sum((-1) ** (q - p) * e.dim for (p, q), e in self.entries)


def e1_page(cx: TwistedComplex) -> E1Page:
    """Apply Borel-Weil-Bott to every factor and aggregate per position."""
    dims: dict[Position, int] = {}
    parts: dict[Position, list[tuple[Weight, int]]] = {}
    for p, factors in enumerate(cx.terms):
        for mu, mult in factors:
            res = bott(cx.q_weight, mu)
            if res is None:
                continue
            pos = (p, res.degree)
            dims[pos] = dims.get(pos, 0) + mult * res.dim
            parts.setdefault(pos, []).append((res.gl10_weight, mult))
    entries = tuple(
        (pos, E1Entry(dims[pos], tuple(parts[pos]))) for pos in sorted(dims)
    )
    return E1Page(cx.q_weight, cx.twist, entries)


@dataclass(frozen=True)
class Conflict:
    source: Position
    target: Position
    page: int
    cap: int


@dataclass(frozen=True)
class ChaseResult:
    """Cohomology of the restricted bundle in degrees 0..4.

    ``values[n]`` is an exact dimension when lo == hi, otherwise a sound
    (possibly loose) interval obtained by letting every unresolved rank vary
    independently over [0, cap].
    """

    values: tuple[tuple[int, int], ...]
    conflicts: tuple[Conflict, ...]
    euler: int

    @property
    def exact(self) -> bool:
        return not self.conflicts

    def dims(self) -> tuple[int, ...]:
        if not self.exact:
            raise ValueError("chase is indeterminate")
        return tuple(lo for lo, _ in self.values)

    def bounded_degrees(self) -> tuple[int, ...]:
        return tuple(n for n, (lo, hi) in enumerate(self.values) if lo != hi)


def chase(page: E1Page, overrides=()) -> ChaseResult:
    """Process differential pages in increasing order, applying overrides.

    A potential differential between live entries either has its rank
    supplied by an override (both endpoints are reduced by it) or is recorded
    as a conflict, widening both endpoints' intervals by the maximal possible
    rank.  Processing in page order lets an early override kill later
    potential differentials from the same source.
    """
    matching = [
        ov
        for ov in overrides
        if ov.q_weight == page.q_weight and ov.twist == -page.twist
    ]
    by_pos = {(ov.source, ov.target): ov for ov in matching}
    bounds: dict[Position, list[int]] = {
        pos: [entry.dim, entry.dim] for pos, entry in page.entries
    }
    euler = page.euler
    conflicts: list[Conflict] = []
    consumed = set()

    for r in range(1, WEDGE_RANK + 1):
        for pos in sorted(bounds):
            p, q = pos
            target = (p - r, q - r + 1)
            if target not in bounds:
                continue
            src = bounds[pos]
            tgt = bounds[target]
            ov = by_pos.get((pos, target))
            if ov is not None:
                consumed.add((pos, target))
                if ov.rank > src[1] or ov.rank > tgt[1]:
                    raise OverrideError(
                        f"override rank {ov.rank} at {pos}->{target} exceeds "
                        f"entry dimensions {src[1]}, {tgt[1]}"
                    )
                for entry in (src, tgt):
                    entry[0] = max(0, entry[0] - ov.rank)
                    entry[1] -= ov.rank
            elif src[1] == 0 or tgt[1] == 0:
                continue
            else:
                cap = min(src[1], tgt[1])
                conflicts.append(Conflict(pos, target, r, cap))
                src[0] = max(0, src[0] - cap)
                tgt[0] = max(0, tgt[0] - cap)

    for key, ov in by_pos.items():
        if key not in consumed and ov.rank > 0:
            raise OverrideError(
                f"override at {ov.source}->{ov.target} does not match any "
                f"pair of entries on the page"
            )

    check = sum((-1) ** (q - p) * hi for (p, q), (lo, hi) in bounds.items())
    if check != euler:
        raise ArithmeticError("chase broke the Euler characteristic")

    if not conflicts:
        stray = {pos: hi for pos, (lo, hi) in bounds.items()
                 if hi and not 0 <= pos[1] - pos[0] <= MAX_DEGREE}
        if stray:
            raise ArithmeticError(
                f"determinate chase left cohomology outside degrees 0..4: {stray}"
            )

    values = []
    for n in range(MAX_DEGREE + 1):
        lo = sum(b[0] for (p, q), b in bounds.items() if q - p == n)
        hi = sum(b[1] for (p, q), b in bounds.items() if q - p == n)
        values.append((lo, hi))
    return ChaseResult(tuple(values), tuple(conflicts), euler)


@cache
def chase_summand(q_weight: Weight, twist: int, overrides=()) -> ChaseResult:
    """Cohomology of Sigma_q_weight Q tensor O(twist) on the fourfold."""
    page = e1_page(build_complex(q_weight, -twist))
    return chase(page, overrides)


def _override_from_json(obj) -> RankOverride:
    return RankOverride(
        q_weight=tuple(obj["q_weight"]),
        twist=int(obj["twist"]),
        source=(int(obj["source"]["p"]), int(obj["source"]["q"])),
        target=(int(obj["target"]["p"]), int(obj["target"]["q"])),
        rank=int(obj["rank"]),
        note=obj.get("note", ""),
    )


def _override_to_json(ov: RankOverride) -> dict:
    return {
        "q_weight": list(ov.q_weight),
        "twist": ov.twist,
        "source": {"p": ov.source[0], "q": ov.source[1]},
        "target": {"p": ov.target[0], "q": ov.target[1]},
        "rank": ov.rank,
        "note": ov.note,
    }


PRESETS = {"paper-4.2": "overrides_paper42.json"}


@cache
def get_preset(name: str) -> tuple[RankOverride, ...]:
    if name not in PRESETS:
        raise ValueError(f"unknown override preset: {name!r}")
    text = resources.files("dvschur.data").joinpath(PRESETS[name]).read_text()
    return tuple(_override_from_json(obj) for obj in json.loads(text)["overrides"])


def load_overrides(source: str) -> tuple[RankOverride, ...]:
    """Resolve a preset name or a JSON file path to an override tuple."""
    if source in PRESETS:
        return get_preset(source)
    try:
        with open(source) as fh:
            data = json.load(fh)
    except OSError:
        raise ValueError(f"unknown override preset: {source!r}") from None
    items = data["overrides"] if isinstance(data, dict) else data
    return tuple(_override_from_json(obj) for obj in items)
