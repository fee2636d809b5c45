from fractions import Fraction
import math

import pytest

from grasscoh.bott import chi as chi_bott
from grasscoh.chow import (
    C1,
    ChernPoly,
    ChowClass,
    ch_poly,
    chern_character,
    chi_hrr,
    integrate,
    todd_tangent,
    weight_multiset,
)
from grasscoh.expr import bundle
from grasscoh.verify import random_bundles
from grasscoh.virtual import VirtualBundle
from grasscoh.weights import weyl_dim

BOX = [(a, b) for a in range(4) for b in range(a + 1)]
s1 = ChowClass.sigma(1)


def test_pieri_examples():
    assert s1 * s1 == ChowClass({(2, 0): 1, (1, 1): 1})
    assert ChowClass.sigma(3, 2) * s1 == ChowClass.sigma(3, 3)
    assert ChowClass.sigma(3, 0) * s1 == ChowClass.sigma(3, 1)


def test_degree_of_grassmannian():
    # standard Young tableaux of shape (3, 3), by the hook length formula
    hooks = [4, 3, 2, 3, 2, 1]
    expected = math.factorial(6) // math.prod(hooks)
    power = ChowClass.sigma(0)
    for _ in range(6):
        power = power * s1
    assert expected == 5
    assert power == ChowClass.sigma(3, 3).scale(5)
    assert integrate(power) == 5


@pytest.mark.parametrize("lam", BOX)
@pytest.mark.parametrize("mu", BOX)
def test_nondegenerate_pairing(lam, mu):
    complement = (3 - lam[1], 3 - lam[0])
    expected = 1 if mu == complement else 0
    assert integrate((ChowClass.sigma(*lam) * ChowClass.sigma(*mu)).degree_part(6)) == expected


def test_box_is_enforced():
    with pytest.raises(ValueError):
        ChowClass.sigma(4)


def test_ch_basics():
    assert chern_character(bundle("O")) == ChowClass.sigma(0)
    assert ch_poly(bundle("Q")).degree_part(1) == C1
    assert chern_character(bundle("Q")).degree_part(1) == s1


@pytest.mark.parametrize("text", ["O", "Q", "Sd", "S * Q(2)", "sym2(Q) + 3 Sd(-1)", "wedge2(S)"])
def test_rank_is_degree_zero(text):
    b = bundle(text)
    assert ch_poly(b).degree_part(0) == ChernPoly.const(b.rank())


def test_weight_multiset_counts():
    for mu in [(2, 1, 0), (1, 0, 0, 0, 0), (2, 0), (1, 1, -1)]:
        assert sum(m for _, m in weight_multiset(mu)) == weyl_dim(mu)


def test_todd_starts_with_one():
    assert todd_tangent().degree_part(0) == ChernPoly.const(1)
    # td_1 = c1(T_G) / 2 = 5 sigma_1 / 2
    assert todd_tangent().degree_part(1) == C1.scale(Fraction(5, 2))


def hilbert_polynomial(l):
    return Fraction((l + 1) * (l + 2) ** 2 * (l + 3) ** 2 * (l + 4), 144)


@pytest.mark.parametrize("l", range(-8, 9))
def test_line_bundles_follow_hilbert_polynomial(l):
    assert chi_hrr(bundle(f"O({l})")) == hilbert_polynomial(l)
    assert chi_bott(bundle(f"O({l})")) == hilbert_polynomial(l)


def test_examples():
    assert chi_hrr(bundle("O")) == 1
    assert chi_hrr(bundle("O(1)")) == 10
    assert chi_hrr(bundle("O(-1)")) == 0
    assert chi_hrr(bundle("O(-5)")) == 1


def test_random_bundles_agree_with_bott():
    for b in random_bundles(100, seed=7):
        assert chi_hrr(b) == chi_bott(b), b


def test_virtual_difference():
    b = bundle("sym2(Q) + Q(1)") - bundle("Sd(-2)")
    assert chi_hrr(b) == chi_bott(b)
    assert chi_hrr(VirtualBundle()) == 0
