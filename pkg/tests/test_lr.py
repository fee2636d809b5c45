import functools
import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from grasscoh.lr import lr_coeff, partition, product_gl, schur_product
from grasscoh.weights import weyl_dim

X = sympy.symbols("x1:5")


@functools.lru_cache(maxsize=None)
def schur_poly(lam, xs=X):
    """Bialternant formula, an independent route to Schur polynomials."""
    n = len(xs)
    if len(lam) > n:
        return sympy.Poly(0, *xs)
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    return sympy.Poly(sympy.cancel(num / den), *xs)


def partitions(size, max_len=4, largest=None):
    largest = size if largest is None else largest
    if size == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(size, largest), 0, -1):
        for rest in partitions(size - first, max_len - 1, first):
            yield (first,) + rest


def expand_in_schur(poly, size):
    """Peel off leading monomials to write a symmetric polynomial in the Schur basis."""
    coeffs = {}
    remaining = poly
    while not remaining.is_zero:
        lead = max(remaining.monoms())
        c = remaining.coeff_monomial(lead)
        nu = tuple(p for p in lead if p)
        coeffs[nu] = c
        remaining = remaining - schur_poly(nu) * c
    assert all(sum(nu) == size for nu in coeffs)
    return coeffs


PAIRS = [
    (lam, mu)
    for a in range(1, 4)
    for b in range(1, 7 - a)
    if a >= b
    for lam in partitions(a)
    for mu in partitions(b)
]


@pytest.mark.parametrize("lam,mu", PAIRS)
def test_lr_against_schur_polynomials(lam, mu):
    product = schur_poly(lam) * schur_poly(mu)
    oracle = expand_in_schur(product, sum(lam) + sum(mu))
    for nu in partitions(sum(lam) + sum(mu)):
        assert lr_coeff(lam, mu, nu) == oracle.get(nu, 0), nu
    assert dict(schur_product(lam, mu, 4)) == oracle


def test_lr_examples():
    assert lr_coeff((1,), (1,), (2,)) == 1
    assert lr_coeff((1,), (1,), (1, 1)) == 1
    assert lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coeff((3, 3), (1,), (4, 3)) == 1


def test_lr_wrong_size_is_zero():
    assert lr_coeff((2,), (1,), (2, 2)) == 0


def test_product_examples():
    assert dict(product_gl((1, 0), (1, 0))) == {(2, 0): 1, (1, 1): 1}
    assert dict(product_gl((0, -2), (1, 0))) == {(1, -2): 1, (0, -1): 1}
    assert dict(product_gl((1, 0, 0), (1, 0, 0))) == {(2, 0, 0): 1, (1, 1, 0): 1}


def test_product_truncates_rows():
    # wedge^3 of a rank-2 space vanishes
    assert (1, 1, 1) not in schur_product((1, 1), (1,), 2)


def test_partition_rejects_negative():
    with pytest.raises(ValueError):
        partition((1, -1))


def dominant(n, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True)))


gl_pair = st.integers(2, 3).flatmap(lambda n: st.tuples(dominant(n), dominant(n)))


@settings(max_examples=150)
@given(gl_pair)
def test_product_symmetry(pair):
    w1, w2 = pair
    assert product_gl(w1, w2) == product_gl(w2, w1)


@settings(max_examples=150)
@given(gl_pair)
def test_dimension_conservation(pair):
    w1, w2 = pair
    total = sum(m * weyl_dim(nu) for nu, m in product_gl(w1, w2).items())
    assert total == weyl_dim(w1) * weyl_dim(w2)


@settings(max_examples=100)
@given(gl_pair, st.integers(-4, 4))
def test_shift_equivariance(pair, c):
    w1, w2 = pair
    shifted = product_gl(tuple(p + c for p in w1), w2)
    expected = {tuple(p + c for p in nu): m for nu, m in product_gl(w1, w2).items()}
    assert dict(shifted) == expected


def test_full_grid_dimension_conservation():
    weights = [w for w in itertools.product(range(-2, 3), repeat=2) if w[0] >= w[1]]
    for w1, w2 in itertools.product(weights, repeat=2):
        assert sum(m * weyl_dim(nu) for nu, m in product_gl(w1, w2).items()) == weyl_dim(w1) * weyl_dim(w2)
