"""Text form of trace-form functions.

Grammar::

    spec  := 'Tr' '(' term ('+' term)* ')'
    term  := [coeff] 'x' '^' INT
    coeff := ('xi' | 'ξ') '^' INT          power of the fixed primitive element
           | '[' INT (',' INT)* ']'        coordinate vector, little-endian

Examples: ``Tr(x^34 + x^2)``, ``Tr(xi^10 x^22 + x^4)``, ``Tr([0,0,1,1] x^22)``.
Columns in error messages are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import FieldCtx
from .walsh import PFunction


class FunctionSpecError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"parse error at column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Term:
    exponent: int
    xi_power: int | None = None              # None and coords None means coefficient 1
    coords: tuple[int, ...] | None = None

    def __str__(self) -> str:
        mono = f"x^{self.exponent}"
        if self.coords is not None:
            return f"[{','.join(map(str, self.coords))}] {mono}"
        if self.xi_power is not None:
            return f"xi^{self.xi_power} {mono}"
        return mono


@dataclass(frozen=True)
class FunctionSpec:
    terms: tuple[Term, ...]

    def __str__(self) -> str:
        return f"Tr({' + '.join(map(str, self.terms))})"

    def to_function(self, ctx: FieldCtx) -> PFunction:
        pairs = []
        for t in self.terms:
            if t.coords is not None:
                if len(t.coords) != ctx.n:
                    raise ValueError(f"coefficient {list(t.coords)} needs {ctx.n} coordinates")
                coeff = ctx(t.coords)
            elif t.xi_power is not None:
                coeff = ctx.xi ** t.xi_power
            else:
                coeff = ctx.one
            pairs.append((coeff, t.exponent))
        return PFunction.trace_form(ctx, pairs, label=str(self))


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>Tr|xi|ξ|x)|(?P<sym>[()\[\]^+,]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        while True:
            m = _TOKEN.match(text, self.pos)
            if not m or m.end() == self.pos:
                rest = text[self.pos:]
                if rest.strip():
                    col = self.pos + len(rest) - len(rest.lstrip()) + 1
                    raise FunctionSpecError(f"unexpected character {rest.strip()[0]!r}", col)
                break
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind) + 1))
            self.pos = m.end()
        self.tokens.append(("end", "", len(text) + 1))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FunctionSpecError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take(kind="int")[1])

    def term(self) -> Term:
        tok = self.peek()
        xi_power = coords = None
        if tok[1] in ("xi", "ξ"):
            self.take()
            self.take("^")
            xi_power = self.integer()
            if xi_power == 0:
                xi_power = None
        elif tok[1] == "[":
            self.take()
            vals = [self.integer()]
            while self.peek()[1] == ",":
                self.take()
                vals.append(self.integer())
            self.take("]")
            coords = tuple(vals)
        self.take("x")
        self.take("^")
        return Term(self.integer(), xi_power, coords)

    def spec(self) -> FunctionSpec:
        self.take("Tr")
        self.take("(")
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take()
            terms.append(self.term())
        self.take(")")
        self.take(kind="end")
        return FunctionSpec(tuple(terms))


def parse_function_spec(text: str) -> FunctionSpec:
    return _Parser(text).spec()
