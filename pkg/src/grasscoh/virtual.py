"""Virtual bundles: integer combinations of irreducible homogeneous bundles.

Keys are canonical LeviWeights.  Because ``det Q (x) det Sd`` is trivial,
``(a | b)`` and ``(a + c | b + c)`` name the same bundle; the canonical
representative has ``b3 == 0``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

from .lr import product_gl
from .weights import Q_RANK, S_RANK, LeviWeight, dual_levi, rank_levi, shift, twist


def canonical(w: LeviWeight) -> LeviWeight:
    c = -w.beta[-1]
    if c == 0:
        return w
    return LeviWeight(shift(w.alpha, c), shift(w.beta, c))


class VirtualBundle(Mapping[LeviWeight, int]):
    """Finite formal sum of irreducibles with integer multiplicities."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[LeviWeight, int] | Iterable[tuple[LeviWeight, int]] = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, m in items:
            acc[canonical(w)] += m
        self._terms = {w: m for w, m in sorted(acc.items()) if m}
        self._hash = None

    @classmethod
    def irreducible(cls, w: LeviWeight, mult: int = 1) -> VirtualBundle:
        return cls({w: mult})

    @classmethod
    def trivial(cls, n: int = 1) -> VirtualBundle:
        return cls({LeviWeight((0, 0), (0, 0, 0)): n})

    def __getitem__(self, w):
        return self._terms[canonical(w)]

    def __contains__(self, w):
        return isinstance(w, LeviWeight) and canonical(w) in self._terms

    def __iter__(self) -> Iterator[LeviWeight]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, VirtualBundle):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "VirtualBundle(0)"
        body = " + ".join(f"{m}*{w}" if m != 1 else str(w) for w, m in self._terms.items())
        return f"VirtualBundle({body})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{m}*{w}" if m != 1 else str(w) for w, m in self._terms.items())

    def __add__(self, other: VirtualBundle) -> VirtualBundle:
        return VirtualBundle(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> VirtualBundle:
        return VirtualBundle({w: -m for w, m in self._terms.items()})

    def __sub__(self, other: VirtualBundle) -> VirtualBundle:
        return self + (-other)

    def scale(self, n: int) -> VirtualBundle:
        return VirtualBundle({w: n * m for w, m in self._terms.items()})

    def __mul__(self, other: VirtualBundle) -> VirtualBundle:
        """Tensor product, decomposed with Littlewood-Richardson on each Levi factor."""
        if not isinstance(other, VirtualBundle):
            return NotImplemented
        acc: Counter = Counter()
        for w1, m1 in self._terms.items():
            for w2, m2 in other._terms.items():
                alphas = product_gl(w1.alpha, w2.alpha, Q_RANK)
                betas = product_gl(w1.beta, w2.beta, S_RANK)
                for a, ma in alphas.items():
                    for b, mb in betas.items():
                        acc[LeviWeight(a, b)] += m1 * m2 * ma * mb
        return VirtualBundle(acc)

    def dual(self) -> VirtualBundle:
        return VirtualBundle({dual_levi(w): m for w, m in self._terms.items()})

    def twist(self, l: int) -> VirtualBundle:
        return VirtualBundle({twist(w, l): m for w, m in self._terms.items()})

    def rank(self) -> int:
        return sum(m * rank_levi(w) for w, m in self._terms.items())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def single(self) -> LeviWeight | None:
        """The irreducible if this is exactly one copy of one, else None."""
        if len(self._terms) == 1:
            (w, m), = self._terms.items()
            if m == 1:
                return w
        return None


def line_bundle(l: int = 0) -> VirtualBundle:
    return VirtualBundle.trivial().twist(l)
