"""Reproduction suites and the theorem-hypothesis classifier.

Every "for all twists" statement is discharged on a certified window (see
:class:`grasscoh.les.Window`); reports carry the window they used.
"""

from __future__ import annotations

import random
import traceback
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from .bott import DIM_G, Entry, Interval, chi as chi_bott, entry_bounds
from .chow import ChowClass, chi_hrr, integrate
from .expr import bundle
from .virtual import VirtualBundle
from .weights import LeviWeight
from .les import Engine, MixedBundle, Window, default_engine, ext_dim, intermediate_entries


class Status(str, Enum):
    EXACT = "ExactMatch"
    CONSISTENT = "ConsistentWithinInterval"
    MISMATCH = "Mismatch"
    INDETERMINATE = "Indeterminate"


@dataclass
class ClaimResult:
    claim: str
    computed: object
    expected: object
    status: Status
    location: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status.value,
            "computed": _jsonable(self.computed),
            "expected": _jsonable(self.expected),
            "location": self.location,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def status(self) -> Status:
        statuses = {c.status for c in self.claims}
        if Status.MISMATCH in statuses:
            return Status.MISMATCH
        if statuses & {Status.CONSISTENT, Status.INDETERMINATE}:
            return Status.CONSISTENT
        return Status.EXACT

    def first_mismatch(self) -> ClaimResult | None:
        return next((c for c in self.claims if c.status is Status.MISMATCH), None)

    def extend(self, other: VerificationReport) -> None:
        self.claims.extend(other.claims)


def _jsonable(x):
    if isinstance(x, Interval):
        return [x.lo, x.hi]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def compare(computed: Entry, expected: int) -> Status:
    if isinstance(computed, Interval):
        return Status.CONSISTENT if computed.lo <= expected <= computed.hi else Status.MISMATCH
    return Status.EXACT if computed == expected else Status.MISMATCH


def _guarded(report: VerificationReport, claim: str, location: str, expected, fn: Callable[[], tuple[object, Status]]) -> None:
    try:
        computed, status = fn()
        report.claims.append(ClaimResult(claim, computed, expected, status, location))
    except Exception as exc:  # a broken engine is a failed claim, not a crash
        detail = "".join(traceback.format_exception_only(type(exc), exc)).strip()
        report.claims.append(ClaimResult(claim, None, expected, Status.MISMATCH, location, detail))


# --- intermediate cohomology table ------------------------------------------

TABLE_LOCATION = "table of nonzero intermediate cohomology"

# (bundle, twist, degree, value)
TABLE_ENTRIES: list[tuple[str, int, int, int]] = [
    ("Q * Sd", -1, 1, 1),
    ("S * Q", -5, 5, 1),
    ("Sd * Sd", -1, 2, 1),
    ("K * Q", -2, 2, 1),
    ("K * Sd", -2, 3, 1),
    ("K~ * Q", -4, 4, 1),
    ("K~ * Sd", -4, 5, 1),
    ("E * Q", -2, 3, 1),
    ("E * Sd", -2, 4, 1),
    ("K * Sd", 0, 1, 5),
    ("E * Q", 0, 1, 5),
    ("E * Sd", 0, 2, 5),
    ("E * Sd", 1, 1, 5),
]
TABLE_BUNDLES = ("Q", "S", "Sd", "K", "K~", "E")
TABLE_TENSORS = ("Q", "Sd")


def table_families(engine: Engine) -> list[tuple[str, MixedBundle]]:
    """The distinct bundles ``F (x) T`` for the table's F and T."""
    out: list[tuple[str, MixedBundle]] = []
    for f in TABLE_BUNDLES:
        for t in TABLE_TENSORS:
            text = f"{f} * {t}"
            b = engine.registry.resolve(text)
            if all(b != seen for _, seen in out):
                out.append((text, b))
    return out


def _entry_claim(engine: Engine, text: str, l: int, i: int, value: int):
    computed = engine.row(engine.registry.resolve(text).twist(l)).h[i]
    return computed, compare(computed, value)


def _exclusivity(engine: Engine, b: MixedBundle):
    expected = {(l, i, v) for t, l, i, v in TABLE_ENTRIES if engine.registry.resolve(t) == b}
    win, entries = intermediate_entries(b, engine)
    found = {(l, i, e) for l, i, e in entries}
    computed = {"window": [win.lo, win.hi], "certified": win.certified, "support": sorted(found, key=lambda x: (x[0], x[1]))}
    if not win.certified:
        return computed, Status.INDETERMINATE
    exact = {x for x in found if not isinstance(x[2], Interval)}
    loose = found - exact
    if not loose:
        return computed, Status.EXACT if exact == expected else Status.MISMATCH
    # intervals must be able to reproduce the listed support and nothing else forced
    pinned = {(l, i) for l, i, _ in expected}
    for l, i, e in loose:
        lo, hi = entry_bounds(e)
        target = next((v for el, ei, v in expected if (el, ei) == (l, i)), 0)
        if not lo <= target <= hi:
            return computed, Status.MISMATCH
    if any((l, i) not in {(x[0], x[1]) for x in found} for l, i in pinned):
        return computed, Status.MISMATCH
    if {x for x in exact if (x[0], x[1]) not in pinned}:
        return computed, Status.MISMATCH
    return computed, Status.CONSISTENT


def verify_table13(engine: Engine | None = None) -> VerificationReport:
    engine = engine or default_engine()
    report = VerificationReport("table13")
    for text, l, i, value in TABLE_ENTRIES:
        name = f"h^{i}({text}({l})) = {value}"
        _guarded(report, name, TABLE_LOCATION, value, lambda t=text, l=l, i=i, v=value: _entry_claim(engine, t, l, i, v))
    for text, b in table_families(engine):
        expected = sorted((l, i, v) for t, l, i, v in TABLE_ENTRIES if t == text or _same(engine, t, b))
        _guarded(report, f"only listed intermediate cohomology for {text}", TABLE_LOCATION, expected, lambda b=b: _exclusivity(engine, b))
    return report


def _same(engine: Engine, text: str, b: MixedBundle) -> bool:
    return engine.registry.resolve(text) == b


# --- structural statements --------------------------------------------------


def _value_claim(value, expected) -> tuple[object, Status]:
    return value, Status.EXACT if value == expected else Status.MISMATCH


def _ext_claim(engine: Engine, f: str, g: str, i: int, expected: int):
    e = ext_dim(f, g, i, engine)
    return e, compare(e, expected)


def _nonzero_claim(engine: Engine, f: str, g: str, i: int):
    e = ext_dim(f, g, i, engine)
    lo, hi = entry_bounds(e)
    if lo > 0:
        return e, Status.EXACT
    return e, Status.CONSISTENT if hi > 0 else Status.MISMATCH


def no_intermediate(engine: Engine, text: str) -> tuple[object, Status]:
    win, entries = intermediate_entries(text, engine)
    computed = {"window": [win.lo, win.hi], "certified": win.certified, "entries": entries}
    if not win.certified:
        return computed, Status.INDETERMINATE
    if not entries:
        return computed, Status.EXACT
    if all(isinstance(e, Interval) and e.lo == 0 for _, _, e in entries):
        return computed, Status.CONSISTENT
    return computed, Status.MISMATCH


SIX_TERM = ["Q(-5)", "5 O(-4)", "10 O(-3)", "5 Q(-3)", "15 O(-1)", "M~(-1)"]
SIX_TERM_TESTS = ["O", "Q", "Sd", "S", "Q * Sd", "sym2(Q)", "K", "E"]


def six_term_check(engine: Engine) -> tuple[object, Status]:
    """Alternating rank and chi sums along the six-term resolution of M~(-1)."""
    reg = engine.registry
    terms = [reg.resolve(t) for t in SIX_TERM]
    rank_sum = sum((-1) ** k * reg.rank(t) for k, t in enumerate(terms))
    chi_sums = {}
    for test in SIX_TERM_TESTS:
        tb = reg.resolve(test)
        for l in range(-7, 3):
            s = sum((-1) ** k * engine.chi(t * tb.twist(l)) for k, t in enumerate(terms))
            if s:
                chi_sums[f"{test}({l})"] = s
    computed = {"rank_sum": rank_sum, "nonzero_chi_sums": chi_sums}
    return computed, Status.EXACT if rank_sum == 0 and not chi_sums else Status.MISMATCH


IDENTITIES = [
    ("wedge2(Q)", "O(1)"),
    ("wedge3(S)", "O(1)"),
    ("wedge2(Sd)", "S(-1)"),
    ("wedge2(S)", "Sd(1)"),
    ("sym2(Qd)", "sym2(Q)(-2)"),
    ("Q * Q", "sym2(Q) + O(1)"),
]


def verify_structure(engine: Engine | None = None) -> VerificationReport:
    engine = engine or default_engine()
    reg = engine.registry
    report = VerificationReport("structure")
    for name, r in (("M", 12), ("K", 7), ("E", 18)):
        _guarded(report, f"rank {name} = {r}", f"definition of {name}", r, lambda n=name, r=r: _value_claim(reg[n].rank, r))
    for f, g, value, where in (
        ("S", "K", 5, "Ext^1(S, K) = V*"),
        ("K~", "K", 5, "Ext^1(K~, K) = V"),
        ("K~", "S", 0, "Ext^1(K~, S) = 0"),
        ("O", "M~", 0, "splitting of the pull-back along M~"),
        ("O(-1)", "sym2(Qd)", 0, "splitting of the pull-back along S^2 Qd"),
    ):
        _guarded(report, f"dim Ext^1({f}, {g}) = {value}", where, value, lambda f=f, g=g, v=value: _ext_claim(engine, f, g, 1, v))
    for f in ("K(1)", "Q", "K~", "S"):
        _guarded(report, f"Ext^1({f}, E(1)) != 0", "nonzero extension groups of E(1)", "> 0", lambda f=f: _nonzero_claim(engine, f, "E(1)", 1))
    for text in ("O", "Q", "S", "Sd", "K", "K~", "E"):
        _guarded(report, f"{text} has no intermediate cohomology", "universal and named bundles are ACM", [], lambda t=text: no_intermediate(engine, t))
    _guarded(report, "six-term sequence: alternating rank and chi vanish", "resolution of M~(-1)", 0, lambda: six_term_check(engine))
    _guarded(
        report,
        "h^0(K(1)) <= 25",
        "K(1) generated by V (x) V*",
        "<= 25",
        lambda: (lambda h: (h, Status.EXACT if entry_bounds(h)[1] <= 25 else Status.MISMATCH if entry_bounds(h)[0] > 25 else Status.CONSISTENT))(engine.row(reg.resolve("K(1)")).h[0]),
    )
    for lhs, rhs in IDENTITIES:
        _guarded(report, f"{lhs} = {rhs}", "natural isomorphisms", rhs, lambda a=lhs, b=rhs: _value_claim(repr(bundle(a)), repr(bundle(b))))
    for text, value in (("O", 1), ("O(1)", 10), ("O(-5)", 1)):
        _guarded(report, f"chi({text}) = {value} by Bott and by HRR", "Euler characteristic", value, lambda t=text, v=value: _chi_pair(t, v))
    _guarded(report, "degree of G(1,4): integral of sigma_1^6 = 5", "Schubert calculus", 5, _degree_claim)
    _guarded(report, "chi by Bott equals chi by HRR on the table families", "Euler characteristic", {}, lambda: _family_chi(engine))
    _guarded(report, "chi by Bott equals chi by HRR on random bundles", "Euler characteristic", {}, _random_chi)
    return report


FAMILY_TWISTS = range(-6, 4)


def _family_chi(engine: Engine):
    bad = {}
    for text, b in table_families(engine):
        k = engine.registry.k_class(b)
        for l in FAMILY_TWISTS:
            pair = (engine.chi(b.twist(l)), chi_hrr(k.twist(l)))
            if pair[0] != pair[1]:
                bad[f"{text}({l})"] = list(pair)
    return bad, Status.EXACT if not bad else Status.MISMATCH


def random_bundles(n: int = 100, seed: int = 0) -> list[VirtualBundle]:
    """``n`` irreducibles with weight entries in [-4, 4], each twisted by some l in [-5, 5]."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        alpha = sorted((rng.randint(-4, 4) for _ in range(2)), reverse=True)
        beta = sorted((rng.randint(-4, 4) for _ in range(3)), reverse=True)
        w = LeviWeight(tuple(alpha), tuple(beta))
        out.append(VirtualBundle.irreducible(w).twist(rng.randint(-5, 5)))
    return out


def _random_chi(n: int = 100, seed: int = 0):
    bad = {}
    for b in random_bundles(n, seed):
        pair = (chi_bott(b), chi_hrr(b))
        if pair[0] != pair[1]:
            bad[repr(b)] = list(pair)
    return bad, Status.EXACT if not bad else Status.MISMATCH


def _chi_pair(text: str, value: int):
    b = bundle(text)
    pair = (chi_bott(b), chi_hrr(b))
    return pair, Status.EXACT if pair == (value, value) else Status.MISMATCH


def _degree_claim():
    s = ChowClass.sigma(0, 0)
    for _ in range(6):
        s = s * ChowClass.sigma(1, 0)
    return _value_claim(integrate(s), 5)


# --- classifier -------------------------------------------------------------

LEVELS = ("2.1", "2.2", "2.3", "2.4", "3.1", "3.2", "3.3")
B_DEGREES: dict[str, tuple[int, ...]] = {
    "2.1": (1, 2, 3, 4, 5),
    "2.2": (1, 2, 3, 4, 5),
    "2.3": (1, 2, 3, 4),
    "2.4": (2, 3, 4),
    "3.1": (3, 4),
    "3.2": (3,),
    "3.3": (),
}
C_LEVELS = ("2.1",)


@dataclass(frozen=True)
class Witness:
    condition: str  # "a", "b" or "c"
    tensor: str  # the bundle tensored with F
    l: int
    i: int
    value: Entry

    def as_dict(self) -> dict:
        return {"condition": self.condition, "tensor": self.tensor, "l": self.l, "i": self.i, "value": _jsonable(self.value)}


@dataclass
class LevelOutcome:
    level: str
    status: str  # "satisfied", "failed" or "indeterminate"
    witness: Witness | None = None


@dataclass
class Classification:
    expr: str
    level: str | None
    outcomes: list[LevelOutcome]
    windows: dict[str, list[int]]

    @property
    def indeterminate(self) -> bool:
        return any(o.status == "indeterminate" for o in self.outcomes)

    def failures(self) -> list[LevelOutcome]:
        stop = LEVELS.index(self.level) if self.level else len(LEVELS)
        return [o for o in self.outcomes[:stop] if o.status != "satisfied"]

    def as_dict(self) -> dict:
        return {
            "expr": self.expr,
            "level": self.level,
            "outcomes": [
                {"level": o.level, "status": o.status, "witness": o.witness.as_dict() if o.witness else None} for o in self.outcomes
            ],
            "windows": self.windows,
        }


@dataclass
class _Scan:
    window: Window
    entries: list[tuple[int, int, Entry]]


def _scan(engine: Engine, b: MixedBundle, degrees: Iterable[int]) -> _Scan:
    win, entries = intermediate_entries(b, engine, degrees)
    return _Scan(win, entries)


def _check(scan: _Scan, condition: str, tensor: str, degrees: Iterable[int]) -> tuple[str, Witness | None]:
    degrees = set(degrees)
    relevant = sorted(((i, l, e) for l, i, e in scan.entries if i in degrees))
    for i, l, e in relevant:
        if entry_bounds(e)[0] > 0:
            return "failed", Witness(condition, tensor, l, i, e)
    if relevant and degrees:
        i, l, e = relevant[0]
        return "indeterminate", Witness(condition, tensor, l, i, e)
    if degrees and not scan.window.certified:
        return "indeterminate", None
    return "satisfied", None


def classify(f, engine: Engine | None = None) -> Classification:
    """Strongest level whose hypotheses ``f`` satisfies, with witnesses against stronger ones."""
    engine = engine or default_engine()
    text = f if isinstance(f, str) else repr(f)
    b = f if isinstance(f, MixedBundle) else engine.registry.resolve(f)
    tensors = {"O": b, "Q": b * engine.registry.resolve("Q"), "Sd": b * engine.registry.resolve("Sd")}
    scans = {k: _scan(engine, v, range(1, DIM_G)) for k, v in tensors.items()}
    outcomes = []
    for level in LEVELS:
        checks = [("a", "O", range(1, DIM_G)), ("b", "Q", B_DEGREES[level])]
        if level in C_LEVELS:
            checks.append(("c", "Sd", (1,)))
        status, witness = "satisfied", None
        for cond, tensor, degrees in checks:
            s, w = _check(scans[tensor], cond, tensor, degrees)
            if s == "failed":
                status, witness = s, w
                break
            if s == "indeterminate" and status == "satisfied":
                status, witness = s, w
        outcomes.append(LevelOutcome(level, status, witness))
    level = next((o.level for o in outcomes if o.status == "satisfied"), None)
    windows = {k: [s.window.lo, s.window.hi] for k, s in scans.items()}
    return Classification(text, level, outcomes, windows)


def vanishes(f, tensor: str, degrees: Iterable[int], engine: Engine | None = None) -> bool | None:
    """Whether ``H^i(f (x) tensor (l)) = 0`` for all l and the given degrees; None if undecided."""
    engine = engine or default_engine()
    b = engine.registry.resolve(f) * engine.registry.resolve(tensor)
    status, _ = _check(_scan(engine, b, degrees), "-", tensor, degrees)
    return {"satisfied": True, "failed": False}.get(status)


EXPECTED_CLASSES: list[tuple[str, str, Witness | None]] = [
    ("O", "2.1", None),
    ("Q", "2.2", Witness("c", "Sd", -1, 1, 1)),
    ("S", "2.3", Witness("b", "Q", -5, 5, 1)),
    ("Sd", "2.4", Witness("b", "Q", -1, 1, 1)),
    ("K", "3.1", Witness("b", "Q", -2, 2, 1)),
    ("K~", "3.2", Witness("b", "Q", -4, 4, 1)),
    ("E", "3.3", Witness("b", "Q", -2, 3, 1)),
]


def _classify_claim(engine: Engine, text: str, level: str, witness: Witness | None):
    c = classify(text, engine)
    fails = c.failures()
    got_witness = fails[-1].witness if fails else None
    computed = {"level": c.level, "witness": got_witness.as_dict() if got_witness else None}
    if c.indeterminate and c.level != level:
        return computed, Status.INDETERMINATE
    ok = c.level == level and got_witness == witness
    return computed, Status.EXACT if ok else Status.MISMATCH


def verify_classify(engine: Engine | None = None) -> VerificationReport:
    engine = engine or default_engine()
    report = VerificationReport("classify")
    for text, level, witness in EXPECTED_CLASSES:
        expected = {"level": level, "witness": witness.as_dict() if witness else None}
        _guarded(report, f"classify({text}) = {level}", "characterization theorems", expected, lambda t=text, lv=level, w=witness: _classify_claim(engine, t, lv, w))
    return report


SUITES: dict[str, Callable[[Engine | None], VerificationReport]] = {
    "table13": verify_table13,
    "structure": verify_structure,
    "classify": verify_classify,
}


def run_suite(name: str, engine: Engine | None = None) -> VerificationReport:
    if name == "all":
        report = VerificationReport("all")
        for suite in SUITES.values():
            report.extend(suite(engine))
        return report
    return SUITES[name](engine)
