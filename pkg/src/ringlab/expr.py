"""Constructor-expression syntax: ``M(2, Zmod(2))``, ``H(0, 1, Zmod(2))`` ...

Grammar::

    expr := INT | NAME | NAME '(' [expr (',' expr)*] ')'

The top level must be a call.  Bare names are only meaningful as
arguments (``alpha0``, ``id``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError


@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Name:
    ident: str
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return self.ident


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple = ()
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


RingExpr = Call

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),])")


def _tokens(text):
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            line, col = (line + 1, 1) if ch == "\n" else (line, col + 1)
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        yield m.lastgroup, m.group(), (line, col)
        col += m.end() - pos
        pos = m.end()
    yield "end", "", (line, col)


class _Parser:
    def __init__(self, text):
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        kind, value, (line, col) = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"{msg}, found {found}", line, col)

    def expr(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Num(int(value), pos)
        if kind != "name":
            self.fail("expected a constructor, name or integer")
        self.take()
        if self.peek()[1] != "(":
            return Name(value, pos)
        self.take()
        args = []
        if self.peek()[1] == ")":
            self.take()
            return Call(value, (), pos)
        while True:
            args.append(self.expr())
            sep = self.peek()[1]
            if sep == ",":
                self.take()
            elif sep == ")":
                self.take()
                return Call(value, tuple(args), pos)
            else:
                self.fail("expected ',' or ')'")


def parse(text: str) -> Call:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.fail("trailing input")
    if not isinstance(node, Call):
        line, col = node.pos
        raise ParseError("expression must be a constructor call", line, col)
    return node
