"""Dominant weights of GL(2), GL(3), GL(5) and the Levi factor GL(2) x GL(3).

A :class:`LeviWeight` ``(a1, a2 | b1, b2, b3)`` names the irreducible
homogeneous bundle ``Sigma^a Q (x) Sigma^b Sd`` on G(1,4), where ``Q`` is the
rank-2 universal quotient and ``Sd`` the rank-3 universal sub-bundle.
``O(1) = det Q`` is ``(1, 1 | 0, 0, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

GLWeight = tuple[int, ...]

Q_RANK = 2
S_RANK = 3
V_DIM = Q_RANK + S_RANK


class WeightError(ValueError):
    pass


def gl_weight(parts: Sequence[int], n: int | None = None) -> GLWeight:
    """Validate and freeze a GL(n) dominant weight."""
    w = tuple(int(p) for p in parts)
    if n is not None and len(w) != n:
        raise WeightError(f"expected a GL({n}) weight, got {w}")
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise WeightError(f"weight {w} is not weakly decreasing")
    return w


def weyl_dim(mu: Sequence[int]) -> int:
    """Dimension of the irreducible GL(n) representation of highest weight ``mu``.

    >>> weyl_dim((2, 1, 0))
    8
    """
    mu = gl_weight(mu)
    n = len(mu)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, (mu, num, den)
    return q


def dual_weight(w: Sequence[int]) -> GLWeight:
    return tuple(-p for p in reversed(gl_weight(w)))


def shift(w: Sequence[int], c: int) -> GLWeight:
    return tuple(p + c for p in w)


def is_constant(w: Sequence[int]) -> bool:
    return all(p == w[0] for p in w)


@dataclass(frozen=True, order=True)
class LeviWeight:
    alpha: GLWeight
    beta: GLWeight

    def __post_init__(self):
        object.__setattr__(self, "alpha", gl_weight(self.alpha, Q_RANK))
        object.__setattr__(self, "beta", gl_weight(self.beta, S_RANK))

    @classmethod
    def of(cls, *parts: int) -> LeviWeight:
        """``LeviWeight.of(1, 0, 0, 0, 0)`` is Q."""
        return cls(parts[:Q_RANK], parts[Q_RANK:])

    @property
    def parts(self) -> GLWeight:
        return self.alpha + self.beta

    def __str__(self):
        a = ",".join(map(str, self.alpha))
        b = ",".join(map(str, self.beta))
        return f"({a}|{b})"


def dual_levi(w: LeviWeight) -> LeviWeight:
    return LeviWeight(dual_weight(w.alpha), dual_weight(w.beta))


def twist(w: LeviWeight, l: int) -> LeviWeight:
    """Tensor with ``O(l)``: adds ``l`` to both Q-parts."""
    return LeviWeight(shift(w.alpha, l), w.beta)


def rank_levi(w: LeviWeight) -> int:
    return weyl_dim(w.alpha) * weyl_dim(w.beta)
