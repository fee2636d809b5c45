"""Littlewood-Richardson coefficients and GL(k) tensor products.

Coefficients are computed by enumerating LR skew tableaux directly.  The
inputs here are tiny (|mu| rarely above 8), so the exponential enumeration
is never a bottleneck.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

from .weights import gl_weight

Partition = tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    p = gl_weight(parts)
    if p and p[-1] < 0:
        raise ValueError(f"partition {p} has negative parts")
    return tuple(x for x in p if x)


def _lattice_ok(counts: list[int], value: int) -> bool:
    # counts already includes `value`; a lattice word never has more
    # (value)'s than (value-1)'s in any prefix.
    return value == 1 or counts[value - 1] <= counts[value - 2]


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    lam_full = lam + (0,) * (len(nu) - len(lam))
    # skew cells in reverse reading order: rows top to bottom, right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_full[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(mu)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        hi = filling.get((r, c + 1), len(mu))  # rows weakly increase left to right
        lo = filling.get((r - 1, c), 0) + 1  # columns strictly increase downward
        for v in range(lo, hi + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            counts[v - 1] += 1
            if _lattice_ok(counts, v):
                filling[(r, c)] = v
                total += place(idx + 1)
                del filling[(r, c)]
            counts[v - 1] -= 1
        return total

    return place(0)


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of s_nu in s_lam * s_mu.

    >>> lr_coeff((2, 1), (2, 1), (3, 2, 1))
    2
    """
    return _lr(partition(lam), partition(mu), partition(nu))


def _partitions_between(lam: Partition, size: int, max_len: int, bound: Partition) -> Iterator[Partition]:
    """Partitions nu of ``size`` with at most ``max_len`` parts, lam <= nu <= bound."""
    lam_full = lam + (0,) * (max_len - len(lam))

    def rec(i: int, remaining: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == max_len:
            if remaining == 0:
                yield ()
            return
        top = min(prev, remaining, bound[i] if i < len(bound) else 0)
        for part in range(top, lam_full[i] - 1, -1):
            for rest in rec(i + 1, remaining - part, part):
                yield (part,) + rest

    for nu in rec(0, size, size):
        yield tuple(x for x in nu if x)


def schur_product(lam: Sequence[int], mu: Sequence[int], max_len: int) -> Counter:
    """s_lam * s_mu truncated to partitions with at most ``max_len`` rows."""
    lam, mu = partition(lam), partition(mu)
    size = sum(lam) + sum(mu)
    m1 = mu[0] if mu else 0
    lam_full = lam + (0,) * (max_len - len(lam))
    bound = tuple(p + m1 for p in lam_full)
    out: Counter = Counter()
    if len(lam) > max_len or len(mu) > max_len:
        return out
    for nu in _partitions_between(lam, size, max_len, bound):
        c = _lr(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def product_gl(w1: Sequence[int], w2: Sequence[int], k: int | None = None) -> Counter:
    """Decompose the GL(k) tensor product of two irreducibles.

    Negative weights are handled by shifting each factor by a power of the
    determinant, multiplying partitions, and shifting back.

    >>> dict(product_gl((1, 0), (1, 0)))
    {(2, 0): 1, (1, 1): 1}
    """
    w1, w2 = gl_weight(w1), gl_weight(w2)
    if len(w1) != len(w2):
        raise ValueError(f"weights {w1} and {w2} have different lengths")
    if k is not None and len(w1) != k:
        raise ValueError(f"weights must have length {k}")
    k = len(w1)
    c1 = -min(w1 + (0,))
    c2 = -min(w2 + (0,))
    lam = partition(tuple(p + c1 for p in w1))
    mu = partition(tuple(p + c2 for p in w2))
    out: Counter = Counter()
    for nu, mult in schur_product(lam, mu, k).items():
        full = nu + (0,) * (k - len(nu))
        out[tuple(p - c1 - c2 for p in full)] += mult
    return out


def clear_caches() -> None:
    _lr.cache_clear()
