"""Hirzebruch-Riemann-Roch on G(1,4): an Euler characteristic independent of Bott.

Characteristic classes are truncated polynomials in ``c1 = c1(Q)`` and
``c2 = c2(Q)`` with exact rational coefficients.  The universal sequence
forces ``c(Sd) = 1 / c(Q)``, so symmetric functions of the Chern roots of
``Sd`` are rewritten through that inverse.  Integration maps
``c1 -> sigma_1`` and ``c2 -> sigma_(1,1)`` into the Schubert basis of the
2 x 3 box and reads off the coefficient of the point class ``sigma_(3,3)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

import sympy

from .lr import partition, schur_product
from .virtual import VirtualBundle
from .weights import S_RANK, LeviWeight, gl_weight

TOP = 6
BOX = (3, 3)  # partitions with at most 2 rows and 3 columns


# --- Chow classes in the Schubert basis --------------------------------------


class ChowClass(dict):
    """Map from Schubert partitions (l1, l2) to rational coefficients."""

    def __init__(self, terms=()):
        super().__init__()
        for lam, c in dict(terms).items():
            lam = _box_key(lam)
            if c:
                self[lam] = self.get(lam, 0) + Fraction(c)
        for lam in [k for k, v in self.items() if v == 0]:
            del self[lam]

    @classmethod
    def sigma(cls, *lam: int) -> ChowClass:
        return cls({lam: 1})

    def __add__(self, other: ChowClass) -> ChowClass:
        acc = Counter(self)
        acc.update(other)
        return ChowClass(acc)

    def scale(self, c) -> ChowClass:
        return ChowClass({k: c * v for k, v in self.items()})

    def __mul__(self, other: ChowClass) -> ChowClass:
        return schubert_mul(self, other)

    def degree_part(self, d: int) -> ChowClass:
        return ChowClass({k: v for k, v in self.items() if sum(k) == d})


def _box_key(lam) -> tuple[int, int]:
    lam = tuple(lam) + (0, 0)
    key = (int(lam[0]), int(lam[1]))
    if not BOX[0] >= key[0] >= key[1] >= 0 or any(lam[2:]):
        raise ValueError(f"{lam} is not a Schubert index in the 2 x 3 box")
    return key


@lru_cache(maxsize=None)
def _sigma_product(lam: tuple[int, int], mu: tuple[int, int]) -> tuple[tuple[tuple[int, int], int], ...]:
    out = []
    for nu, c in schur_product(partition(lam), partition(mu), 2).items():
        nu = nu + (0,) * (2 - len(nu))
        if nu[0] <= BOX[0]:
            out.append((nu, c))
    return tuple(out)


def schubert_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    acc: Counter = Counter()
    for lam, x in a.items():
        for mu, y in b.items():
            for nu, c in _sigma_product(lam, mu):
                acc[nu] += x * y * c
    return ChowClass(acc)


def integrate(a: ChowClass) -> Fraction:
    return Fraction(a.get(BOX, 0))


# --- truncated polynomials in c1, c2 ----------------------------------------


class ChernPoly(dict):
    """Polynomial in (c1, c2), keys ``(i, j)`` for ``c1^i c2^j``, degree i + 2j <= 6."""

    def __init__(self, terms=()):
        super().__init__()
        for (i, j), c in dict(terms).items():
            if c and i + 2 * j <= TOP:
                self[(i, j)] = self.get((i, j), 0) + Fraction(c)

    @classmethod
    def const(cls, c) -> ChernPoly:
        return cls({(0, 0): c})

    def __add__(self, other: ChernPoly) -> ChernPoly:
        acc: Counter = Counter(self)
        acc.update(other)
        return ChernPoly(acc)

    def scale(self, c) -> ChernPoly:
        return ChernPoly({k: c * v for k, v in self.items()})

    def __mul__(self, other: ChernPoly) -> ChernPoly:
        acc: defaultdict = defaultdict(Fraction)
        for (i1, j1), x in self.items():
            for (i2, j2), y in other.items():
                if i1 + i2 + 2 * (j1 + j2) <= TOP:
                    acc[(i1 + i2, j1 + j2)] += x * y
        return ChernPoly(acc)

    def degree_part(self, d: int) -> ChernPoly:
        return ChernPoly({k: v for k, v in self.items() if k[0] + 2 * k[1] == d})

    def to_chow(self) -> ChowClass:
        acc = ChowClass()
        for (i, j), c in self.items():
            acc = acc + _monomial_class(i, j).scale(c)
        return acc


@lru_cache(maxsize=None)
def _monomial_class(i: int, j: int) -> ChowClass:
    out = ChowClass.sigma(0, 0)
    for _ in range(i):
        out = out * ChowClass.sigma(1, 0)
    for _ in range(j):
        out = out * ChowClass.sigma(1, 1)
    return out


def _power(p: ChernPoly, n: int) -> ChernPoly:
    out = ChernPoly.const(1)
    for _ in range(n):
        out = out * p
    return out


def _exp(p: ChernPoly) -> ChernPoly:
    """exp of a polynomial without constant term."""
    assert (0, 0) not in p
    out = ChernPoly.const(1)
    term = ChernPoly.const(1)
    for k in range(1, TOP + 1):
        term = (term * p).scale(Fraction(1, k))
        out = out + term
    return out


C1 = ChernPoly({(1, 0): 1})
C2 = ChernPoly({(0, 1): 1})


@lru_cache(maxsize=None)
def _sub_chern_classes() -> tuple[ChernPoly, ...]:
    """c_k(Sd) for k = 0..3, the graded pieces of 1 / (1 + c1 + c2)."""
    u = C1 + C2  # 1 / (1 + u) = sum (-u)^k
    inv = ChernPoly()
    for k in range(TOP + 1):
        inv = inv + _power(u, k).scale((-1) ** k)
    return tuple(inv.degree_part(d) for d in range(S_RANK + 1))


# --- Chern characters of Schur functors -------------------------------------


def _ssyt_contents(shape: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Content vectors of all semistandard tableaux of ``shape`` in letters 1..n."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * n

    def rec(k: int):
        if k == len(cells):
            yield tuple(counts)
            return
        r, c = cells[k]
        lo = max(filling.get((r, c - 1), 1), filling.get((r - 1, c), 0) + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            counts[v - 1] += 1
            yield from rec(k + 1)
            counts[v - 1] -= 1
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def weight_multiset(mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weights (with multiplicity) of the GL(n) irreducible of highest weight ``mu``."""
    mu = gl_weight(mu)
    n = len(mu)
    c = -min(mu + (0,))
    shape = partition(tuple(p + c for p in mu))
    acc: Counter = Counter(tuple(x - c for x in content) for content in _ssyt_contents(shape, n))
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _monomial_to_elementary(kappa: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """The monomial symmetric function m_kappa in n variables as a polynomial in e_1..e_n."""
    xs = sympy.symbols(f"z1:{n + 1}")
    exps = tuple(kappa) + (0,) * (n - len(kappa))
    orbit = {tuple(p) for p in sympy.utilities.iterables.multiset_permutations(list(exps))}
    m = sum(sympy.Mul(*[x**k for x, k in zip(xs, e)]) for e in orbit)
    sym, rem, defs = sympy.polys.polyfuncs.symmetrize(sympy.expand(m), *xs, formal=True)
    assert rem == 0
    es = [s for s, _ in defs]
    out = []
    for monom, coeff in sympy.Poly(sym, *es).terms():
        out.append((tuple(int(k) for k in monom), Fraction(int(coeff.p), int(coeff.q))))
    return tuple(out)


def _partitions(d: int, max_len: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, max_len - 1, first):
            yield (first,) + rest


def _multinomial(d: int, kappa: tuple[int, ...]) -> int:
    out = factorial(d)
    for k in kappa:
        out //= factorial(k)
    return out


@lru_cache(maxsize=None)
def _ch_in_elementary(mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """ch of the Schur functor ``mu`` of a rank-n bundle, in its Chern classes."""
    n = len(mu)
    weights = weight_multiset(mu)
    acc: defaultdict = defaultdict(Fraction)
    for d in range(TOP + 1):
        for kappa in _partitions(d, n):
            coef = 0
            for m, mult in weights:
                term = mult
                for mi, ki in zip(m, kappa):
                    term *= mi**ki
                coef += term
            if coef == 0:
                continue
            coef = Fraction(coef * _multinomial(d, kappa), factorial(d))
            for e_exp, c in _monomial_to_elementary(kappa, n):
                acc[e_exp] += coef * c
    return tuple((k, v) for k, v in acc.items() if v)


def _substitute(expansion, classes: tuple[ChernPoly, ...]) -> ChernPoly:
    out = ChernPoly()
    for e_exp, c in expansion:
        term = ChernPoly.const(c)
        for k, power in enumerate(e_exp, start=1):
            term = term * _power(classes[k], power)
        out = out + term
    return out


@lru_cache(maxsize=None)
def _ch_quotient_part(alpha: tuple[int, ...]) -> ChernPoly:
    return _substitute(_ch_in_elementary(alpha), (ChernPoly.const(1), C1, C2))


@lru_cache(maxsize=None)
def _ch_sub_part(beta: tuple[int, ...]) -> ChernPoly:
    return _substitute(_ch_in_elementary(beta), _sub_chern_classes())


def ch_poly(b: VirtualBundle) -> ChernPoly:
    out = ChernPoly()
    for w, m in b.items():
        out = out + (_ch_quotient_part(w.alpha) * _ch_sub_part(w.beta)).scale(m)
    return out


def chern_character(b: VirtualBundle) -> ChowClass:
    return ch_poly(b).to_chow()


@lru_cache(maxsize=None)
def _log_todd_coefficients() -> tuple[Fraction, ...]:
    """Taylor coefficients of log(z / (1 - exp(-z))) through z^6."""
    z = sympy.Symbol("z")
    series = sympy.series(sympy.log(z / (1 - sympy.exp(-z))), z, 0, TOP + 1).removeO()
    out = []
    for k in range(TOP + 1):
        c = sympy.Rational(series.coeff(z, k))
        out.append(Fraction(int(c.p), int(c.q)))
    return tuple(out)


TANGENT = LeviWeight((1, 0), (0, 0, -1))  # S (x) Q


@lru_cache(maxsize=None)
def todd_tangent() -> ChernPoly:
    """td(T_G) = exp(sum_k l_k p_k) with power sums p_k = k! ch_k of the Chern roots."""
    ch_t = ch_poly(VirtualBundle.irreducible(TANGENT))
    coeffs = _log_todd_coefficients()
    log_td = ChernPoly()
    for k in range(1, TOP + 1):
        log_td = log_td + ch_t.degree_part(k).scale(coeffs[k] * factorial(k))
    return _exp(log_td)


def chi_hrr(b: VirtualBundle) -> int:
    """Euler characteristic by Hirzebruch-Riemann-Roch; exact."""
    value = integrate((ch_poly(b) * todd_tangent()).degree_part(TOP).to_chow())
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral HRR Euler characteristic {value} for {b!r}")
    return int(value)


def clear_caches() -> None:
    _sigma_product.cache_clear()
    _monomial_class.cache_clear()
