import itertools

import pytest

from grasscoh.bott import Interval, chi as chi_bott, cohomology_vector, entry_bounds
from grasscoh.chow import chi_hrr
from grasscoh.expr import bundle
from grasscoh.les import (
    BUILTIN_DEFINITIONS,
    Defined,
    Engine,
    ExtensionSpec,
    InconsistentPresentationError,
    MixedBundle,
    Registry,
    builtin_registry,
    coh_extension,
    coh_named,
    cohomology,
    ext_dim,
    intermediate_entries,
    intermediate_window,
    project_les,
)

F = Defined(0)


@pytest.fixture(scope="module")
def engine():
    return Engine()


def h(engine, text, l=0):
    return engine.row(engine.registry.resolve(text).twist(l)).h


def test_ranks():
    reg = builtin_registry()
    assert {n: reg[n].rank for n in reg.names()} == {"M": 12, "K": 7, "E": 18}


def test_rank_additivity_of_every_presentation():
    reg = builtin_registry()
    for name in reg.names():
        nb = reg[name]
        for p in nb.presentations:
            r = [nb.rank if isinstance(s, Defined) else reg.rank(s) for s in p.slots]
            assert r[1] == r[0] + r[2], (name, p)


def test_coh_named_examples(engine):
    assert coh_named("K", bundle("Q"), -2, engine).h == (0, 0, 1, 0, 0, 0, 0)
    assert coh_named("K", bundle("Sd"), 0, engine).h == (0, 5, 0, 0, 0, 0, 0)


def test_m_against_both_presentations(engine):
    row = coh_named("M", bundle("O"), 0, engine)
    assert row.chi == 15 - chi_bott(bundle("sym2(Q)"))
    assert row.chi == 5 * chi_bott(bundle("Sd")) - chi_bott(bundle("S(-1)"))
    assert row.h == (0,) * 7
    # Ext^1(O, M~) = H^1(M~)
    assert h(engine, "M~")[1] == 0


def test_ext_examples(engine):
    assert ext_dim("S", "K", 1, engine) == 5
    assert ext_dim("K~", "K", 1, engine) == 5
    assert ext_dim("K~", "S", 1, engine) == 0
    assert ext_dim("O", "M~", 1, engine) == 0
    assert ext_dim("O(-1)", "sym2(Qd)", 1, engine) == 0


def test_ext_into_e1(engine):
    values = {f: ext_dim(f, "E(1)", 1, engine) for f in ("K(1)", "Q", "K~", "S")}
    assert values == {"K(1)": 1, "Q": 5, "K~": 25, "S": 5}


def test_h0_k1(engine):
    assert h(engine, "K(1)")[0] == 25
    assert h(engine, "E(1)")[0] == 0


@pytest.mark.parametrize("name", ["O", "Q", "S", "Sd", "K", "K~", "E", "E~", "M", "M~"])
def test_no_intermediate_cohomology(engine, name):
    win, entries = intermediate_entries(name, engine)
    assert win.certified
    assert entries == []


def test_window_for_k_q(engine):
    win = intermediate_window("K", bundle("Q"), engine)
    assert win.certified and win.lo <= -2 <= win.hi
    _, entries = intermediate_entries("K * Q", engine)
    assert entries == [(-2, 2, 1)]


TEST_BUNDLES = ["O", "Q", "Sd", "S", "Q * Sd", "sym2(Q)", "Qd * S"]


@pytest.mark.parametrize("name", ["K", "M", "E", "K~", "E~"])
@pytest.mark.parametrize("t", TEST_BUNDLES)
def test_serre_symmetry(engine, name, t):
    reg = engine.registry
    b = reg.resolve(f"{name} * ({t})")
    for l in range(-7, 3):
        row = engine.row(b.twist(l))
        dual_row = engine.row(b.dual().twist(-5 - l))
        assert row.chi == dual_row.chi
        for i in range(7):
            assert row.h[i] == dual_row.h[6 - i]


@pytest.mark.parametrize("text", ["K * E", "K~ * E(1)", "E * Sd(1)", "M~(-1) * Q", "E * E~", "K * K"])
def test_chi_three_ways(engine, text):
    b = engine.registry.resolve(text)
    k = engine.registry.k_class(b)
    assert engine.registry.rank(b) == k.rank()
    assert engine.chi(b) == chi_bott(k) == chi_hrr(k)


@pytest.mark.parametrize("text", ["K", "E", "M", "K * Q", "E * Sd", "K~ * E(1)", "E * Q"])
def test_exact_rows_match_chi(engine, text):
    b = engine.registry.resolve(text)
    for l in range(-6, 3):
        row = engine.row(b.twist(l))
        if row.exact:
            assert sum((-1) ** i * x for i, x in enumerate(row.h)) == row.chi


def single_presentation_registries():
    """Every registry that keeps exactly one presentation of each named bundle."""
    choices = [range(len(p)) for _, p in BUILTIN_DEFINITIONS]
    for pick in itertools.product(*choices):
        yield Registry([(n, [p[i]]) for (n, p), i in zip(BUILTIN_DEFINITIONS, pick)])


@pytest.mark.parametrize("text", ["K * Q", "K * Sd", "M", "E * Q", "E * Sd"])
def test_presentations_agree(engine, text):
    full = engine.registry.resolve(text)
    rows = {l: engine.row(full.twist(l)) for l in range(-5, 2)}
    for reg in single_presentation_registries():
        partial = Engine(reg)
        b = reg.resolve(text)
        for l, row in rows.items():
            other = partial.row(b.twist(l))
            assert other.chi == row.chi
            for exact, loose in zip(row.h, other.h):
                lo, hi = entry_bounds(loose)
                assert lo <= exact <= hi


def test_project_les_examples():
    z = frozenset({0})
    zeros = [z] * 7
    one = [frozenset({1})] + [z] * 6
    # 0 -> O -> O -> ? -> 0 forces zero cohomology on the right
    out = project_les([one, one, None])
    assert out[2] == zeros
    # unknown middle bounded by the sum of its neighbours
    out = project_les([one, None, one])
    assert out[1][0] == frozenset({2})


def test_six_term_sequence(engine):
    reg = engine.registry
    terms = [reg.resolve(t) for t in ["Q(-5)", "5 O(-4)", "10 O(-3)", "5 Q(-3)", "15 O(-1)", "M~(-1)"]]
    assert sum((-1) ** k * reg.rank(t) for k, t in enumerate(terms)) == 0
    for test in ["O", "Q", "Sd", "S * Q", "K", "E"]:
        tb = reg.resolve(test)
        for l in range(-6, 3):
            assert sum((-1) ** k * engine.chi(t * tb.twist(l)) for k, t in enumerate(terms)) == 0


def test_extension_type_one(engine):
    spec = ExtensionSpec(sub=(("K", 1),), quotient=(("S", 1),))
    for l in range(-6, 7):
        row = coh_extension(spec, None, l, engine)
        assert row.h[1:6] == (0,) * 5


def test_extension_type_three(engine):
    pieces = (("K", 1), ("S", 1), ("K~", 1), ("E(1)", 1), ("Sd", 1), ("Q", 1))
    spec = ExtensionSpec(sub=pieces[:3], quotient=pieces[3:])
    assert coh_extension(spec, None, 0, engine).h[1:6] == (0,) * 5


def test_trivial_extension(engine):
    row = coh_extension(ExtensionSpec(quotient=(("O", 1),)), None, 0, engine)
    assert row.h == tuple(cohomology_vector(bundle("O")))


def test_extension_spec_validation():
    with pytest.raises(ValueError):
        ExtensionSpec()
    with pytest.raises(ValueError):
        ExtensionSpec(sub=(("K", -1),))


def test_extension_can_leave_intervals(engine):
    # 0 -> Q (x) Sd(-1) -> ? -> O -> 0: the connecting map H^0(O) -> H^1 is not determined
    row = coh_extension(ExtensionSpec(sub=(("Q * Sd(-1)", 1),), quotient=(("O", 1),)), None, 0, engine)
    assert row.h[0] == Interval(0, 1)
    assert row.h[1] == Interval(0, 1)


def test_registry_rejects_rank_disagreement():
    with pytest.raises(ValueError):
        Registry([("X", [("O", "3 O", F), (F, "Q", "O")])])


def test_registry_rejects_taken_names():
    with pytest.raises(ValueError):
        Registry([("Q", [("O", "2 O", F)])])


def test_inconsistent_presentations_are_detected():
    # both give a line bundle, but the Euler characteristics differ
    reg = Registry([("X", [("O", "2 O", F), (F, "Q", "O(1)")])])
    with pytest.raises(InconsistentPresentationError):
        Engine(reg).row(reg.resolve("X"))


def test_user_defined_bundle():
    reg = builtin_registry().extended("N", [("O(-1)", "5 O", F)])
    e = Engine(reg)
    assert reg["N"].rank == 4
    assert e.row(reg.resolve("N")).h == (5, 0, 0, 0, 0, 0, 0)


def test_mixed_bundle_algebra(engine):
    reg = engine.registry
    k = MixedBundle.of_named("K")
    assert k.dual().dual() == k
    assert reg.resolve("K * Q + K * Q") == reg.resolve("2 (K * Q)")
    assert reg.resolve("(K + Q)(1)") == reg.resolve("K(1) + Q(1)")
    assert cohomology("K * Q", -2, engine).h[2] == 1
