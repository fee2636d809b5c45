"""Cohomology of bundles defined by short exact sequences.

A named bundle ``F`` (M, K, E, or user-defined) is given by one or more
short exact sequences ``0 -> X0 -> X1 -> X2 -> 0`` in which one slot is
``F(m)`` and the other two are expressions in irreducibles and other named
bundles.  Tensoring with an irreducible ``W`` keeps the sequence exact, and
its long exact sequence in cohomology constrains ``h^i(F (x) W)``.

The long exact sequence of ``0 -> A -> B -> C -> 0`` reads, degree by degree,
``a_i = z_{i-1} + x_i``, ``b_i = x_i + y_i``, ``c_i = y_i + z_i`` where
``x, y, z`` are the ranks of the three kinds of maps and ``z_{-1} = z_6 = 0``.
That is a chain ``u_0, ..., u_21`` of non-negative unknowns with
``u_k + u_{k+1}`` prescribed at 21 positions, so the exact set of values each
dimension can take given the others is found by one forward and one backward
reachability pass.  Every presentation of ``F``, and every presentation of
its Serre dual ``F~ (x) W~ (-5)``, contributes such a chain; the attainable
sets are intersected until nothing changes.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import expr as ex
from .bott import DIM_G, CohRow, bott, chi_irreducible, entry_from_values, twist_hull
from .virtual import VirtualBundle, canonical
from .weights import LeviWeight, dual_levi, twist

CANONICAL_TWIST = -5  # omega_G = O(-5)
NDEG = DIM_G + 1

Factor = tuple[str, bool]  # (name, dualized)
Domain = frozenset  # attainable values of one cohomology dimension


class InconsistentPresentationError(RuntimeError):
    """The presentations of a named bundle admit no common cohomology."""


class ResolutionError(ValueError):
    pass


# --- mixed bundles ----------------------------------------------------------


class MixedBundle:
    """Sum of terms ``F1 (x) ... (x) Fk (x) V`` with named ``Fi`` and virtual ``V``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[tuple[Factor, ...], VirtualBundle] | None = None):
        acc: dict[tuple[Factor, ...], VirtualBundle] = {}
        for factors, v in (terms or {}).items():
            key = tuple(sorted(factors))
            acc[key] = acc[key] + v if key in acc else v
        self.terms = {k: v for k, v in sorted(acc.items()) if len(v)}
        self._hash = None

    @classmethod
    def of_virtual(cls, v: VirtualBundle) -> MixedBundle:
        return cls({(): v})

    @classmethod
    def of_named(cls, name: str, dual: bool = False) -> MixedBundle:
        return cls({((name, dual),): VirtualBundle.trivial()})

    def __add__(self, other: MixedBundle) -> MixedBundle:
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return MixedBundle(acc)

    def __mul__(self, other: MixedBundle) -> MixedBundle:
        acc: dict[tuple[Factor, ...], VirtualBundle] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                v = v1 * v2
                acc[key] = acc[key] + v if key in acc else v
        return MixedBundle(acc)

    def dual(self) -> MixedBundle:
        return MixedBundle({tuple((n, not d) for n, d in k): v.dual() for k, v in self.terms.items()})

    def twist(self, l: int) -> MixedBundle:
        return MixedBundle({k: v.twist(l) for k, v in self.terms.items()})

    def scale(self, n: int) -> MixedBundle:
        return MixedBundle({k: v.scale(n) for k, v in self.terms.items()})

    @property
    def is_virtual(self) -> bool:
        return all(not k for k in self.terms)

    def virtual(self) -> VirtualBundle:
        if not self.is_virtual:
            raise ResolutionError("bundle involves named bundles")
        return self.terms.get((), VirtualBundle())

    def names(self) -> set[str]:
        return {n for k in self.terms for n, _ in k}

    def __eq__(self, other):
        return isinstance(other, MixedBundle) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __repr__(self):
        parts = []
        for k, v in self.terms.items():
            names = " * ".join(n + ("~" if d else "") for n, d in k)
            parts.append(f"{names} * {v!r}" if names else repr(v))
        return "MixedBundle(" + " + ".join(parts) + ")"

    def __str__(self):
        parts = []
        for k, v in self.terms.items():
            names = " * ".join(n + ("~" if d else "") for n, d in k)
            body = str(v) if len(v) == 1 else f"({v})"
            parts.append(f"{names} * {body}" if names else str(v))
        return " + ".join(parts) if parts else "0"


# --- presentations ----------------------------------------------------------


@dataclass(frozen=True)
class Defined:
    """The slot holding the bundle being defined, twisted by ``O(twist)``."""

    twist: int = 0


Slot = Union[MixedBundle, Defined]
SUB, MIDDLE, QUOTIENT = 0, 1, 2


@dataclass(frozen=True)
class Presentation:
    """``0 -> slots[0] -> slots[1] -> slots[2] -> 0`` with exactly one Defined slot."""

    slots: tuple[Slot, Slot, Slot]

    def __post_init__(self):
        if sum(isinstance(s, Defined) for s in self.slots) != 1:
            raise ValueError("a presentation has exactly one defined slot")

    @property
    def position(self) -> int:
        return next(i for i, s in enumerate(self.slots) if isinstance(s, Defined))

    @property
    def defined_twist(self) -> int:
        return self.slots[self.position].twist

    def dual(self) -> Presentation:
        """Dual sequence ``0 -> X2~ -> X1~ -> X0~ -> 0``."""
        return Presentation(tuple(Defined(-s.twist) if isinstance(s, Defined) else s.dual() for s in reversed(self.slots)))

    def pieces(self) -> list[tuple[int, MixedBundle]]:
        return [(i, s) for i, s in enumerate(self.slots) if not isinstance(s, Defined)]


@dataclass(frozen=True)
class NamedBundle:
    name: str
    presentations: tuple[Presentation, ...]
    rank: int


class Registry:
    """Immutable collection of named bundles, each defined in terms of earlier ones."""

    def __init__(self, definitions: Iterable[tuple[str, Sequence[Sequence[str | Defined]]]] = ()):
        self._bundles: dict[str, NamedBundle] = {}
        self._order: dict[str, int] = {}
        for name, pres in definitions:
            self._add(name, pres)

    def _add(self, name: str, pres_specs: Sequence[Sequence[str | Defined]]) -> None:
        if name in self._bundles or name in ex.GENERATORS or name in ex.FUNCS:
            raise ValueError(f"name {name!r} is already taken")
        if not pres_specs:
            raise ValueError(f"{name} needs at least one presentation")
        presentations = []
        ranks = set()
        for spec in pres_specs:
            slots = tuple(s if isinstance(s, Defined) else self.resolve(s) for s in spec)
            p = Presentation(slots)
            presentations.append(p)
            r = [0 if isinstance(s, Defined) else self.rank(s) for s in p.slots]
            pos = p.position
            ranks.add(r[1] - r[0] - r[2] if pos != MIDDLE else r[0] + r[2])
        if len(ranks) != 1:
            raise ValueError(f"presentations of {name} disagree on its rank: {sorted(ranks)}")
        (rank,) = ranks
        if rank <= 0:
            raise ValueError(f"{name} would have rank {rank}")
        used = set().union(*(s.names() for p in presentations for _, s in p.pieces()))
        self._order[name] = 1 + max((self._order[n] for n in used), default=-1)
        self._bundles[name] = NamedBundle(name, tuple(presentations), rank)

    def __getitem__(self, name: str) -> NamedBundle:
        return self._bundles[name]

    def __contains__(self, name: str) -> bool:
        return name in self._bundles

    def names(self) -> list[str]:
        return list(self._bundles)

    def extended(self, name: str, presentations: Sequence[Sequence[str | Defined]]) -> Registry:
        new = Registry()
        new._bundles = dict(self._bundles)
        new._order = dict(self._order)
        new._add(name, presentations)
        return new

    def rank(self, b: MixedBundle) -> int:
        total = 0
        for k, v in b.terms.items():
            r = v.rank()
            for n, _ in k:
                r *= self._bundles[n].rank
            total += r
        return total

    def k_class(self, b: MixedBundle) -> VirtualBundle:
        """Grothendieck class of ``b``, each named bundle replaced via its first presentation."""
        total = VirtualBundle()
        for factors, v in b.terms.items():
            term = v
            for name, dual in factors:
                term = term * self._named_class(name, dual)
            total = total + term
        return total

    def _named_class(self, name: str, dual: bool) -> VirtualBundle:
        p = self._bundles[name].presentations[0]
        if dual:
            p = p.dual()
        c = [VirtualBundle() if isinstance(s, Defined) else self.k_class(s) for s in p.slots]
        cls = c[0] + c[2] if p.position == MIDDLE else c[1] - c[0] - c[2]
        return cls.twist(-p.defined_twist)

    def parse(self, text: str) -> ex.Expr:
        return ex.parse(text, named=self._bundles)

    def resolve(self, e: ex.Expr | str) -> MixedBundle:
        """Normal form of an expression that may mention named bundles."""
        if isinstance(e, str):
            e = self.parse(e)
        if isinstance(e, ex.Named):
            if e.name not in self._bundles:
                raise ResolutionError(f"unknown named bundle {e.name}")
            return MixedBundle.of_named(e.name)
        if isinstance(e, ex.Gen):
            return MixedBundle.of_virtual(ex.normalize(e))
        if isinstance(e, ex.Twist):
            return self.resolve(e.expr).twist(e.l)
        if isinstance(e, ex.Dual):
            return self.resolve(e.expr).dual()
        if isinstance(e, ex.Tensor):
            return self.resolve(e.left) * self.resolve(e.right)
        if isinstance(e, ex.Sum):
            return self.resolve(e.left) + self.resolve(e.right)
        if isinstance(e, ex.Scale):
            return self.resolve(e.expr).scale(e.n)
        # Schur functors only apply to named-free expressions
        return MixedBundle.of_virtual(ex.normalize(e))


F = Defined(0)

BUILTIN_DEFINITIONS = [
    # M is built from 0 -> S(-1) -> Sd (x) V -> M -> 0 and 0 -> M -> S^2 V (x) O -> S^2 Q -> 0
    ("M", [("S(-1)", "5 Sd", F), (F, "15 O", "sym2(Q)")]),
    # K is built from 0 -> S^2 Qd -> Qd (x) V* -> K -> 0 and 0 -> K -> wedge^2 V* (x) O -> wedge^2 S -> 0
    ("K", [("sym2(Qd)", "5 Qd", F), (F, "10 O", "wedge2(S)")]),
    (
        "E",
        [
            # E(1) is the kernel of V (x) V* (x) O -> K(1)
            (Defined(1), "25 O", "K(1)"),
            # the pull-back of the two sequences above along Qd (x) V* -> K, whose middle splits
            (F, "sym2(Qd) + 25 O(-1)", "5 Qd"),
            # kernel of V (x) V* (x) O -> Q (x) V* -> K(1), by the snake lemma
            ("5 Sd(-1)", F, "sym2(Qd)"),
        ],
    ),
]


def builtin_registry() -> Registry:
    return Registry(BUILTIN_DEFINITIONS)


# --- long exact sequence projection -----------------------------------------


def _is_range(s: frozenset) -> bool:
    return len(s) == max(s) - min(s) + 1


def _minus(d: frozenset, f: frozenset) -> frozenset:
    """{x - y >= 0 : x in d, y in f}."""
    if not d or not f:
        return frozenset()
    if _is_range(d) and _is_range(f):
        lo, hi = max(0, min(d) - max(f)), max(d) - min(f)
        return frozenset(range(lo, hi + 1))
    return frozenset(x - y for x in d for y in f if x >= y)


def _plus_within(f: frozenset, g: frozenset, d: frozenset) -> frozenset:
    """{x + y : x in f, y in g} intersected with d."""
    if not f or not g:
        return frozenset()
    if _is_range(f) and _is_range(g):
        lo, hi = min(f) + min(g), max(f) + max(g)
        return frozenset(x for x in d if lo <= x <= hi)
    return frozenset(x + y for x in f for y in g) & d


def project_les(slots: Sequence[Sequence[Domain] | None]) -> list[list[Domain]]:
    """Attainable dimensions of ``0 -> A -> B -> C -> 0`` given the others.

    ``slots`` holds three lists of seven domains (for A, B, C); a ``None``
    slot is unconstrained.  Returns the three projected lists.
    """
    doms: list[Domain | None] = []
    for i in range(NDEG):
        for s in slots:
            doms.append(None if s is None else frozenset(s[i]))
    n = len(doms)
    for k, d in enumerate(doms):
        if d is None:
            left = max(doms[k - 1]) if k > 0 else 0
            right = max(doms[k + 1]) if k + 1 < n else 0
            doms[k] = frozenset(range(left + right + 1))
    fwd = [frozenset({0})]
    for k in range(n):
        fwd.append(_minus(doms[k], fwd[k]))
    bwd: list[frozenset] = [frozenset()] * (n + 1)
    bwd[n] = frozenset({0})
    for k in range(n - 1, -1, -1):
        bwd[k] = _minus(doms[k], bwd[k + 1])
    out = [_plus_within(fwd[k], bwd[k + 1], doms[k]) for k in range(n)]
    return [[out[3 * i + j] for i in range(NDEG)] for j in range(3)]


def _minkowski(a: Sequence[Domain], b: Sequence[Domain]) -> list[Domain]:
    out = []
    for x, y in zip(a, b):
        if _is_range(x) and _is_range(y):
            out.append(frozenset(range(min(x) + min(y), max(x) + max(y) + 1)))
        else:
            out.append(frozenset(p + q for p in x for q in y))
    return out


def _scaled(a: Sequence[Domain], m: int) -> list[Domain]:
    return [frozenset(m * x for x in d) for d in a]


ZERO_DOMAINS: tuple[Domain, ...] = (frozenset({0}),) * NDEG


# --- the engine -------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    domains: tuple[Domain, ...]
    chi: int

    def row(self) -> CohRow:
        return CohRow(tuple(entry_from_values(d) for d in self.domains), self.chi)


@dataclass(frozen=True)
class Window:
    """Twists outside ``[lo, hi]`` carry no intermediate cohomology, when certified."""

    lo: int
    hi: int
    above: bool = True
    below: bool = True

    @property
    def certified(self) -> bool:
        return self.above and self.below

    def union(self, other: Window) -> Window:
        return Window(min(self.lo, other.lo), max(self.hi, other.hi), self.above and other.above, self.below and other.below)

    def widened(self, by: int = 1) -> Window:
        return Window(self.lo - by, self.hi + by, self.above, self.below)


_Constraint = tuple[int, list, bool]  # (defined position, slot domains, reversed degrees)


class Engine:
    """Cohomology of mixed bundles, memoized per irreducible cell.

    The memo only ever stores values that are pure functions of their keys,
    so concurrent readers at worst recompute a cell.
    """

    def __init__(self, registry: Registry | None = None):
        self.registry = registry if registry is not None else builtin_registry()
        self._cells: dict[tuple, Cell] = {}
        self._windows: dict[tuple, Window] = {}
        self._local = threading.local()

    # pieces of all presentations of every factor, tensored so the defined slot is the cell
    def _expansions(self, factors: tuple[Factor, ...], w: LeviWeight) -> list[tuple[int, list[tuple[int, MixedBundle]]]]:
        out = []
        seen = set()
        for j, (name, dual) in enumerate(factors):
            if (name, dual) in seen:
                continue
            seen.add((name, dual))
            rest = factors[:j] + factors[j + 1 :]
            for p in self.registry[name].presentations:
                if dual:
                    p = p.dual()
                r = MixedBundle({rest: VirtualBundle.irreducible(twist(w, -p.defined_twist))})
                out.append((p.position, [(i, s * r) for i, s in p.pieces()]))
        return out

    def domains(self, b: MixedBundle) -> list[Domain]:
        acc = list(ZERO_DOMAINS)
        for factors, v in b.terms.items():
            if not v.is_effective():
                raise ResolutionError(f"no cohomology table for non-effective {b!r}")
            for w, m in v.items():
                if factors:
                    d = _scaled(self.cell(factors, w).domains, m)
                else:
                    r = bott(w)
                    d = list(ZERO_DOMAINS)
                    if r is not None:
                        d[r.degree] = frozenset({m * r.dim})
                acc = _minkowski(acc, d)
        return acc

    def chi(self, b: MixedBundle) -> int:
        total = 0
        for factors, v in b.terms.items():
            for w, m in v.items():
                total += m * (self.cell(factors, w).chi if factors else chi_irreducible(w))
        return total

    def cell(self, factors: tuple[Factor, ...], w: LeviWeight) -> Cell:
        w = canonical(w)
        key = (factors, w)
        hit = self._cells.get(key)
        if hit is not None:
            return hit
        active = self._local.__dict__.setdefault("active", set())
        if key in active:
            raise ResolutionError(f"cyclic definition while resolving {factors} (x) {w}")
        active.add(key)
        try:
            result = self._solve(factors, w)
        finally:
            active.discard(key)
        self._cells[key] = result
        return result

    def _solve(self, factors: tuple[Factor, ...], w: LeviWeight) -> Cell:
        constraints: list[_Constraint] = []
        chis = set()
        for pos, pieces in self._expansions(factors, w):
            slot_doms: list = [None] * 3
            slot_chi = [0, 0, 0]
            for i, piece in pieces:
                slot_doms[i] = self.domains(piece)
                slot_chi[i] = self.chi(piece)
            constraints.append((pos, slot_doms, False))
            chis.add(slot_chi[1] - slot_chi[0] - slot_chi[2] if pos != MIDDLE else slot_chi[0] + slot_chi[2])
        dual_factors = tuple(sorted((n, not d) for n, d in factors))
        w_dual = twist(dual_levi(w), CANONICAL_TWIST)
        for pos, pieces in self._expansions(dual_factors, w_dual):
            slot_doms = [None] * 3
            for i, piece in pieces:
                slot_doms[i] = self.domains(piece)
            constraints.append((pos, slot_doms, True))
        if len(chis) != 1:
            raise InconsistentPresentationError(f"presentations of {factors} (x) {w} disagree on chi: {sorted(chis)}")
        (chi_value,) = chis

        h: list[Domain] | None = None
        changed = True
        while changed:
            changed = False
            for pos, slot_doms, rev in constraints:
                current = None if h is None else (h[::-1] if rev else h)
                doms = list(slot_doms)
                doms[pos] = current
                projected = project_les(doms)[pos]
                if rev:
                    projected = projected[::-1]
                new = projected if h is None else [a & b for a, b in zip(h, projected)]
                if any(not d for d in new):
                    raise InconsistentPresentationError(f"no cohomology of {factors} (x) {w} fits every presentation")
                if new != h:
                    h = new
                    changed = True
        h = _chi_prune(h, chi_value)
        return Cell(tuple(h), chi_value)

    def window(self, factors: tuple[Factor, ...], w: LeviWeight) -> Window:
        """Certified twist window of the family ``factors (x) w(l)``."""
        w = canonical(w)
        key = (factors, w)
        hit = self._windows.get(key)
        if hit is not None:
            return hit
        result = None
        above = below = False
        for pos, pieces in self._expansions(factors, w):
            win = None
            for _, piece in pieces:
                pw = self.mixed_window(piece)
                if pw is not None:
                    win = pw if win is None else win.union(pw)
            if win is None:  # every piece vanishes
                win = Window(0, 0)
            above |= pos != SUB and win.above
            below |= pos != QUOTIENT and win.below
            result = win if result is None else result.union(win)
        result = Window(result.lo, result.hi, above, below).widened(1)
        self._windows[key] = result
        return result

    def mixed_window(self, b: MixedBundle) -> Window | None:
        win = None
        for factors, v in b.terms.items():
            for w in v:
                if factors:
                    pw = self.window(factors, w)
                else:
                    pw = Window(*twist_hull(w))
                win = pw if win is None else win.union(pw)
        return win

    def row(self, b: MixedBundle) -> CohRow:
        return CohRow(tuple(entry_from_values(d) for d in self.domains(b)), self.chi(b))

    def extension_row(self, sub: MixedBundle, quotient: MixedBundle) -> CohRow:
        """Bounds for any extension ``0 -> sub -> G -> quotient -> 0``."""
        proj = project_les([self.domains(sub), None, self.domains(quotient)])[MIDDLE]
        return CohRow(tuple(entry_from_values(d) for d in proj), self.chi(sub) + self.chi(quotient))

    def clear(self) -> None:
        self._cells.clear()
        self._windows.clear()


def _chi_prune(h: list[Domain], chi_value: int) -> list[Domain]:
    """Drop values no choice of the other degrees can complete to ``chi``."""
    signed = [frozenset((-1) ** i * x for x in d) for i, d in enumerate(h)]
    lo = sum(min(s) for s in signed)
    hi = sum(max(s) for s in signed)
    out = []
    for i, s in enumerate(signed):
        rest_lo, rest_hi = lo - min(s), hi - max(s)
        keep = frozenset(x for x in s if rest_lo <= chi_value - x <= rest_hi)
        if not keep:
            raise InconsistentPresentationError(f"chi {chi_value} unreachable from {h}")
        out.append(frozenset((-1) ** i * x for x in keep))
    return out


# --- public operations ------------------------------------------------------

_DEFAULT_ENGINE: Engine | None = None
_DEFAULT_LOCK = threading.Lock()


def default_engine() -> Engine:
    global _DEFAULT_ENGINE
    with _DEFAULT_LOCK:
        if _DEFAULT_ENGINE is None:
            _DEFAULT_ENGINE = Engine()
        return _DEFAULT_ENGINE


def reset_default_engine() -> None:
    global _DEFAULT_ENGINE
    with _DEFAULT_LOCK:
        _DEFAULT_ENGINE = None


def _as_mixed(x: MixedBundle | VirtualBundle | str | ex.Expr, engine: Engine) -> MixedBundle:
    if isinstance(x, MixedBundle):
        return x
    if isinstance(x, VirtualBundle):
        return MixedBundle.of_virtual(x)
    return engine.registry.resolve(x)


def cohomology(b, l: int = 0, engine: Engine | None = None) -> CohRow:
    """Row ``h^0..h^6`` and chi of ``b(l)``; entries are exact or intervals."""
    engine = engine or default_engine()
    return engine.row(_as_mixed(b, engine).twist(l))


def coh_named(f: str | NamedBundle, t: VirtualBundle, l: int, engine: Engine | None = None) -> CohRow:
    engine = engine or default_engine()
    name = f.name if isinstance(f, NamedBundle) else f
    if not t.is_effective():
        raise ValueError("the test bundle must have non-negative multiplicities")
    return engine.row(MixedBundle.of_named(name) * MixedBundle.of_virtual(t.twist(l)))


def ext_dim(f, g, i: int, engine: Engine | None = None):
    """dim Ext^i(F, G) = h^i(F~ (x) G)."""
    engine = engine or default_engine()
    b = _as_mixed(f, engine).dual() * _as_mixed(g, engine)
    return engine.row(b).h[i]


@dataclass(frozen=True)
class ExtensionSpec:
    """A generic extension ``0 -> (+) sub -> G -> (+) quotient -> 0``."""

    sub: tuple[tuple[str, int], ...] = ()
    quotient: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        mults = [m for _, m in self.sub + self.quotient]
        if any(m < 0 for m in mults) or not any(mults):
            raise ValueError("multiplicities must be non-negative and not all zero")

    def _sum(self, parts, engine: Engine) -> MixedBundle:
        acc = MixedBundle()
        for text, m in parts:
            if m:
                acc = acc + engine.registry.resolve(text).scale(m)
        return acc


def coh_extension(spec: ExtensionSpec, t: VirtualBundle | None = None, l: int = 0, engine: Engine | None = None) -> CohRow:
    engine = engine or default_engine()
    tt = MixedBundle.of_virtual((t if t is not None else VirtualBundle.trivial()).twist(l))
    return engine.extension_row(spec._sum(spec.sub, engine) * tt, spec._sum(spec.quotient, engine) * tt)


def intermediate_window(b, t: VirtualBundle | None = None, engine: Engine | None = None) -> Window:
    """Certified window for ``b (x) t``; ``b`` may be a name, expression or bundle."""
    engine = engine or default_engine()
    if isinstance(b, NamedBundle):
        b = b.name
    mixed = _as_mixed(b, engine)
    if t is not None:
        mixed = mixed * MixedBundle.of_virtual(t)
    win = engine.mixed_window(mixed)
    return win if win is not None else Window(0, 0)


def intermediate_entries(b, engine: Engine | None = None, degrees: Iterable[int] = range(1, DIM_G)):
    """Scan the certified window of ``b``.

    Returns ``(window, entries)`` where ``entries`` lists ``(l, i, entry)``
    for every twist in the window and degree in ``degrees`` whose entry is
    not exactly zero.  Outside the window every listed degree vanishes when
    ``window.certified`` holds.
    """
    engine = engine or default_engine()
    mixed = _as_mixed(b, engine)
    win = engine.mixed_window(mixed) or Window(0, 0)
    degrees = list(degrees)
    entries = []
    for l in range(win.lo, win.hi + 1):
        row = engine.row(mixed.twist(l))
        for i in degrees:
            if row.h[i] != 0:
                entries.append((l, i, row.h[i]))
    return win, entries
