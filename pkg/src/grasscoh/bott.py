"""Borel-Weil-Bott on G(1,4) and cohomology tables.

For ``w = (a1, a2 | b1, b2, b3)`` put ``v = w + DELTA``.  A repeated entry
in ``v`` kills all cohomology; otherwise the only nonzero group sits in
degree ``#{i < j : v_i < v_j}`` and is the GL(5) irreducible with highest
weight ``sorted(v, reverse=True) - DELTA``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .virtual import VirtualBundle
from .weights import V_DIM, GLWeight, LeviWeight, twist, weyl_dim

DELTA: GLWeight = (4, 3, 2, 1, 0)
DIM_G = 6


@dataclass(frozen=True)
class BottResult:
    degree: int
    weight: GLWeight
    dim: int


@lru_cache(maxsize=1 << 16)
def bott(w: LeviWeight) -> BottResult | None:
    """Cohomology of the irreducible bundle ``w``; ``None`` when it all vanishes.

    >>> bott(LeviWeight.of(0, -1, 1, 0, 0))
    BottResult(degree=1, weight=(0, 0, 0, 0, 0), dim=1)
    """
    v = tuple(p + d for p, d in zip(w.parts, DELTA))
    if len(set(v)) < V_DIM:
        return None
    inversions = sum(1 for i in range(V_DIM) for j in range(i + 1, V_DIM) if v[i] < v[j])
    mu = tuple(p - d for p, d in zip(sorted(v, reverse=True), DELTA))
    return BottResult(inversions, mu, weyl_dim(mu))


def chi_irreducible(w: LeviWeight) -> int:
    r = bott(w)
    return 0 if r is None else (-1) ** r.degree * r.dim


def cohomology_vector(b: VirtualBundle) -> tuple[int, ...]:
    """(h^0, ..., h^6) of an effective virtual bundle."""
    if not b.is_effective():
        raise ValueError(f"cohomology table of a non-effective virtual bundle {b!r}")
    h = [0] * (DIM_G + 1)
    for w, m in b.items():
        r = bott(w)
        if r is not None:
            h[r.degree] += m * r.dim
    return tuple(h)


def chi(b: VirtualBundle) -> int:
    return sum(m * chi_irreducible(w) for w, m in b.items())


class Interval(NamedTuple):
    lo: int
    hi: int

    def __str__(self):
        return f"{self.lo}..{self.hi}"


Entry = Union[int, Interval]


def entry_from_values(values: Iterable[int]) -> Entry:
    vals = sorted(set(values))
    if not vals:
        raise ValueError("empty set of attainable values")
    if len(vals) == 1:
        return vals[0]
    return Interval(vals[0], vals[-1])


def entry_bounds(e: Entry) -> tuple[int, int]:
    if isinstance(e, Interval):
        return e.lo, e.hi
    return e, e


def is_exact(e: Entry) -> bool:
    return not isinstance(e, Interval)


@dataclass(frozen=True)
class CohRow:
    h: tuple[Entry, ...]
    chi: int

    def __post_init__(self):
        if len(self.h) != DIM_G + 1:
            raise ValueError("a cohomology row has seven entries")
        lo = sum((-1) ** i * entry_bounds(e)[i % 2] for i, e in enumerate(self.h))
        hi = sum((-1) ** i * entry_bounds(e)[1 - i % 2] for i, e in enumerate(self.h))
        if not lo <= self.chi <= hi:
            raise ValueError(f"chi {self.chi} outside the range [{lo}, {hi}] of {self.h}")

    @property
    def exact(self) -> bool:
        return all(is_exact(e) for e in self.h)

    def intermediate(self) -> tuple[Entry, ...]:
        return self.h[1:DIM_G]


@dataclass
class CohTable:
    rows: dict[int, CohRow] = field(default_factory=dict)

    def __getitem__(self, l: int) -> CohRow:
        return self.rows[l]

    def twists(self) -> list[int]:
        return sorted(self.rows)


def coh_virtual(b: VirtualBundle, twists: Iterable[int]) -> CohTable:
    if not b.is_effective():
        raise ValueError("negative multiplicities have no cohomology table; use chi()")
    table = CohTable()
    for l in twists:
        bl = b.twist(l)
        table.rows[l] = CohRow(cohomology_vector(bl), chi(bl))
    return table


def critical_twists(w: LeviWeight) -> list[int]:
    """Twists at which a Q-coordinate of ``w + DELTA`` meets an Sd-coordinate."""
    v = [p + d for p, d in zip(w.parts, DELTA)]
    return [b - a for a in v[:2] for b in v[2:]]


def twist_hull(w: LeviWeight) -> tuple[int, int]:
    """A twist window outside of which ``w(l)`` has cohomology only in degree 0 or 6.

    For ``l > hi`` both Q-coordinates of ``v`` exceed every Sd-coordinate
    (no inversions, degree 0); for ``l < lo`` they are below all of them
    (six inversions, degree 6).
    """
    crit = critical_twists(w)
    return min(crit) - 1, max(crit) + 1


def intermediate_support(w: LeviWeight) -> set[tuple[int, int, int]]:
    """All ``(l, degree, dim)`` with ``H^degree(w(l)) != 0`` and ``1 <= degree <= 5``."""
    lo, hi = twist_hull(w)
    for l, expected in ((lo - 1, DIM_G), (hi + 1, 0)):
        r = bott(twist(w, l))
        if r is None or r.degree != expected:
            raise RuntimeError(f"twist hull of {w} failed to certify at l={l}: {r}")
    out = set()
    for l in range(lo, hi + 1):
        r = bott(twist(w, l))
        if r is not None and 1 <= r.degree <= DIM_G - 1:
            out.add((l, r.degree, r.dim))
    return out


def clear_caches() -> None:
    bott.cache_clear()
