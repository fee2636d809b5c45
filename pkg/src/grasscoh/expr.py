"""Bundle expressions: AST, parser, printer and normalization to VirtualBundle.

Surface syntax::

    expr   := term { "+" term }
    term   := factor { "*" factor }
    factor := [ integer ] atom
    atom   := primary { "~" | "(" signed-integer ")" }
    primary:= base | "(" expr ")" | func "(" expr ")"
    base   := O | Q | Qd | S | Sd | <named bundle>
    func   := sym2 | wedge2 | wedge3 | dual

``S`` is the rank-3 bundle with ``H^0 = V*`` and ``Sd`` its dual, the
universal sub-bundle.  Postfix ``~`` dualizes and ``(n)`` twists by ``O(n)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .virtual import VirtualBundle
from .weights import LeviWeight, is_constant

GENERATORS: dict[str, LeviWeight] = {
    "O": LeviWeight((0, 0), (0, 0, 0)),
    "Q": LeviWeight((1, 0), (0, 0, 0)),
    "Qd": LeviWeight((0, -1), (0, 0, 0)),
    "Sd": LeviWeight((0, 0), (1, 0, 0)),
    "S": LeviWeight((0, 0), (0, 0, -1)),
}
DEFAULT_NAMED = ("K", "M", "E")
FUNCS = ("sym2", "wedge2", "wedge3", "dual")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PlethysmError(ValueError):
    """Schur functor applied to something other than a (twisted) generator."""


class ZeroBundleError(ValueError):
    """Exterior power beyond the rank."""


# --- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Twist:
    expr: "Expr"
    l: int


@dataclass(frozen=True)
class Dual:
    expr: "Expr"


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Scale:
    n: int
    expr: "Expr"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("scale multiplicity must be at least 1")


@dataclass(frozen=True)
class Sym2:
    expr: "Expr"


@dataclass(frozen=True)
class Wedge2:
    expr: "Expr"


@dataclass(frozen=True)
class Wedge3:
    expr: "Expr"


Expr = Union[Gen, Named, Twist, Dual, Tensor, Sum, Scale, Sym2, Wedge2, Wedge3]
_FUNC_NODES = {"sym2": Sym2, "wedge2": Wedge2, "wedge3": Wedge3, "dual": Dual}


# --- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*~()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, named: Iterable[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.named = set(named)

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value or kind == "end":
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[1] == "+":
            self.take()
            e = Sum(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek()[1] == "*":
            self.take()
            e = Tensor(e, self.factor())
        return e

    def factor(self) -> Expr:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            n = int(val)
            if n < 1:
                raise ParseError("multiplicity must be at least 1", pos)
            return Scale(n, self.atom())
        return self.atom()

    def atom(self) -> Expr:
        e = self.primary()
        while True:
            kind, val, pos = self.peek()
            if val == "~":
                self.take()
                e = Dual(e)
            elif val == "(":
                self.take()
                e = Twist(e, self.signed_int())
                self.expect(")")
            else:
                return e

    def signed_int(self) -> int:
        sign = 1
        kind, val, pos = self.peek()
        if val in "+-" and kind == "op":
            self.take()
            sign = -1 if val == "-" else 1
            kind, val, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer twist", pos)
        self.take()
        return sign * int(val)

    def primary(self) -> Expr:
        kind, val, pos = self.take()
        if val == "(" and kind == "op":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "ident":
            if val in FUNCS:
                self.expect("(")
                e = self.expr()
                self.expect(")")
                return _FUNC_NODES[val](e)
            if val in GENERATORS:
                return Gen(val)
            if val in self.named:
                return Named(val)
            raise ParseError(f"unknown identifier {val!r}", pos)
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"expected a bundle, found {found}", pos)


def parse(text: str, named: Iterable[str] = DEFAULT_NAMED) -> Expr:
    """Parse a bundle expression.

    >>> parse("Q * Sd(-1)")
    Tensor(left=Gen(name='Q'), right=Twist(expr=Gen(name='Sd'), l=-1))
    """
    return _Parser(text, named).parse()


def pretty(e: Expr) -> str:
    """Fully parenthesized text that parses back to ``e``."""
    if isinstance(e, (Gen, Named)):
        return e.name
    if isinstance(e, Twist):
        return f"{_atomic(e.expr)}({e.l})"
    if isinstance(e, Dual):
        return f"{_atomic(e.expr)}~"
    if isinstance(e, Tensor):
        return f"{_tensor_operand(e.left)} * {_tensor_operand(e.right, right=True)}"
    if isinstance(e, Sum):
        right = pretty(e.right)
        if isinstance(e.right, Sum):
            right = f"({right})"
        return f"{pretty(e.left)} + {right}"
    if isinstance(e, Scale):
        return f"{e.n} {_atomic(e.expr)}"
    for name, cls in _FUNC_NODES.items():
        if isinstance(e, cls) and name != "dual":
            return f"{name}({pretty(e.expr)})"
    raise TypeError(f"not an expression: {e!r}")


def _atomic(e: Expr) -> str:
    if isinstance(e, (Gen, Named, Twist, Dual, Sym2, Wedge2, Wedge3)):
        return pretty(e)
    return f"({pretty(e)})"


def _tensor_operand(e: Expr, right: bool = False) -> str:
    if isinstance(e, Sum) or (right and isinstance(e, Tensor)):
        return f"({pretty(e)})"
    return pretty(e)


# --- normalization ----------------------------------------------------------


def _split_line(w: tuple[int, ...]) -> tuple[int, str] | None:
    """Write a GL(n) weight as ``c + std`` / ``c + std*`` / ``c``; None otherwise."""
    if is_constant(w):
        return w[0], "line"
    c = w[-1]
    if w[0] == c + 1 and all(p == c for p in w[1:]):
        return c, "std"
    c = w[0]
    if w[-1] == c - 1 and all(p == c for p in w[:-1]):
        return c, "dual"
    return None


def _schur_of_standard(kind: str, n: int, power: int, wedge: bool) -> tuple[int, ...]:
    if kind == "line":
        base = (0,) * n
    elif wedge:
        if power > n:
            raise ZeroBundleError(f"wedge{power} of a rank-{n} bundle is zero")
        base = (1,) * power + (0,) * (n - power)
    else:
        base = (power,) + (0,) * (n - 1)
    return base if kind != "dual" else tuple(-p for p in reversed(base))


def _plethysm(b: VirtualBundle, power: int, wedge: bool) -> VirtualBundle:
    w = b.single()
    label = f"{'wedge' if wedge else 'sym'}{power}"
    if w is None:
        raise PlethysmError(f"{label} is only supported on a single (twisted) generator, got {b!r}")
    sa, sb = _split_line(w.alpha), _split_line(w.beta)
    if sa is None or sb is None or (sa[1] != "line" and sb[1] != "line"):
        raise PlethysmError(f"{label} of {w} needs plethysm beyond the generators")
    if sa[1] == "line" and sb[1] == "line":
        if wedge and power > 1:
            raise ZeroBundleError(f"{label} of a line bundle is zero")
        return VirtualBundle.irreducible(LeviWeight(tuple(power * p for p in w.alpha), tuple(power * p for p in w.beta)))
    (ca, ka), (cb, kb) = sa, sb
    alpha = tuple(power * ca + p for p in _schur_of_standard(ka, 2, power, wedge))
    beta = tuple(power * cb + p for p in _schur_of_standard(kb, 3, power, wedge))
    return VirtualBundle.irreducible(LeviWeight(alpha, beta))


def normalize(e: Expr) -> VirtualBundle:
    """Normal form of an expression free of named bundles.

    >>> normalize(parse("Q * Q")) == normalize(parse("sym2(Q) + O(1)"))
    True
    """
    if isinstance(e, Gen):
        return VirtualBundle.irreducible(GENERATORS[e.name])
    if isinstance(e, Named):
        raise ValueError(f"named bundle {e.name} has no virtual normal form; resolve it with grasscoh.les")
    if isinstance(e, Twist):
        return normalize(e.expr).twist(e.l)
    if isinstance(e, Dual):
        return normalize(e.expr).dual()
    if isinstance(e, Tensor):
        return normalize(e.left) * normalize(e.right)
    if isinstance(e, Sum):
        return normalize(e.left) + normalize(e.right)
    if isinstance(e, Scale):
        return normalize(e.expr).scale(e.n)
    if isinstance(e, Sym2):
        return _plethysm(normalize(e.expr), 2, wedge=False)
    if isinstance(e, Wedge2):
        return _plethysm(normalize(e.expr), 2, wedge=True)
    if isinstance(e, Wedge3):
        return _plethysm(normalize(e.expr), 3, wedge=True)
    raise TypeError(f"not an expression: {e!r}")


def bundle(text: str) -> VirtualBundle:
    """Parse and normalize in one step."""
    return normalize(parse(text, named=()))


def rank(b: VirtualBundle) -> int:
    return b.rank()
