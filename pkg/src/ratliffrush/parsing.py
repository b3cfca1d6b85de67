"""Text format for monomial ideals.

::

    vars: x, y, z             # optional; fixes the variable order
    x^3, y^3, z^3, x*y*z

Generators are comma separated and may span lines.  A monomial is ``1`` or
factors ``name`` / ``name^k`` joined by ``*``.  Without a ``vars`` header the
variables are ordered by first appearance.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .monomial import MonomialIdeal

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[*^,\n])"
)
_HEADER = re.compile(r"^\s*vars\s*:(?P<body>.*)$")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class IdealSpec:
    variables: tuple
    generators: tuple  # of dict name -> exponent

    def to_ideal(self) -> MonomialIdeal:
        idx = {v: i for i, v in enumerate(self.variables)}
        rows = []
        for g in self.generators:
            e = [0] * len(self.variables)
            for name, k in g.items():
                e[idx[name]] += k
            rows.append(e)
        return MonomialIdeal(rows, n=len(self.variables))

    @classmethod
    def from_ideal(cls, I: MonomialIdeal, variables) -> "IdealSpec":
        variables = tuple(variables)
        gens = tuple({v: e for v, e in zip(variables, g) if e} for g in I.gens)
        return cls(variables, gens)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokens(text: str, first_line: int):
    line, col0 = first_line, 0
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        col = pos - col0 + 1
        if mt is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = mt.lastgroup
        if kind != "ws":
            yield kind, mt.group(), line, col
        if mt.group() == "\n":
            line += 1
            col0 = mt.end()
        pos = mt.end()
    yield "end", "", line, pos - col0 + 1


def parse_ideal(text: str) -> IdealSpec:
    lines = [_strip_comment(l) for l in text.split("\n")]
    header = None
    start = 0
    for i, l in enumerate(lines):
        if not l.strip():
            continue
        mh = _HEADER.match(l)
        if mh:
            names = [v.strip() for v in mh.group("body").split(",")]
            for v in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise ParseError(f"bad variable name {v!r}", i + 1, 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name in header", i + 1, 1)
            header = names
            start = i + 1
        break
    body = "\n".join(lines[start:])
    toks = list(_tokens(body, start + 1))
    variables: list = list(header) if header else []
    gens: list = []
    pos = 0

    def peek():
        return toks[pos]

    def skip_newlines():
        nonlocal pos
        while toks[pos][1] == "\n":
            pos += 1

    def factor(g: dict):
        nonlocal pos
        kind, val, line, col = peek()
        if kind == "int" and val == "1":
            pos += 1
            return
        if kind != "name":
            raise ParseError(f"expected variable name, got {val or 'end of input'!r}", line, col)
        pos += 1
        if header is not None and val not in header:
            raise ParseError(f"unknown variable {val!r}", line, col)
        if val not in variables:
            variables.append(val)
        k = 1
        if peek()[1] == "^":
            pos += 1
            kind, num, line, col = peek()
            if kind != "int":
                raise ParseError(f"expected exponent, got {num or 'end of input'!r}", line, col)
            k = int(num)
            if k < 0:
                raise ParseError("negative exponent", line, col)
            pos += 1
        g[val] = g.get(val, 0) + k

    skip_newlines()
    if peek()[0] == "end":
        raise ParseError("no generators", peek()[2], peek()[3])
    while True:
        skip_newlines()
        g: dict = {}
        factor(g)
        while peek()[1] == "*":
            pos += 1
            factor(g)
        gens.append(g)
        skip_newlines()
        kind, val, line, col = peek()
        if kind == "end":
            break
        if val != ",":
            raise ParseError(f"expected ',' or '*', got {val!r}", line, col)
        pos += 1
    if not variables:
        raise ParseError("no variables; add a 'vars:' header", 1, 1)
    ordered = tuple(variables)
    return IdealSpec(ordered, tuple({v: g[v] for v in ordered if v in g} for g in gens))


def format_monomial(m, variables) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, m) if e]
    return "*".join(parts) or "1"


def _format_map(g: dict, variables) -> str:
    parts = [v if g[v] == 1 else f"{v}^{g[v]}" for v in variables if v in g]
    return "*".join(parts) or "1"


def serialize(spec: IdealSpec) -> str:
    head = "vars: " + ", ".join(spec.variables)
    return head + "\n" + ", ".join(_format_map(g, spec.variables) for g in spec.generators) + "\n"


def format_ideal(I: MonomialIdeal, variables) -> str:
    return "<" + ", ".join(format_monomial(g, variables) for g in I.gens) + ">"


def default_variables(n: int) -> tuple:
    if n <= 3:
        return ("x", "y", "z")[:n]
    if n == 4:
        return ("x", "y", "z", "w")
    return tuple(f"x{i + 1}" for i in range(n))
