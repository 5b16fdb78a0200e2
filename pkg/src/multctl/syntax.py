"""Surface syntax for monomial ideals and rationals.

Grammar (whitespace is insignificant)::

    ideal  := "<" term ("," term)* ">" | "<0>"
    term   := "1" | factor ("*" factor)*
    factor := varname ("^" uint)?

Rationals are written ``p/q`` or ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .monomial import MonomialIdeal, minimalize


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[<>,*^]))")


@dataclass(frozen=True)
class IdealExpression:
    variables: tuple[str, ...]
    generators: tuple[tuple[tuple[str, int], ...], ...]  # each term: ((var, exp), ...)
    is_zero: bool = False

    def to_ideal(self) -> MonomialIdeal:
        n = len(self.variables)
        if self.is_zero:
            return MonomialIdeal.zero(n)
        index = {v: i for i, v in enumerate(self.variables)}
        exps = []
        for term in self.generators:
            e = [0] * n
            for var, k in term:
                e[index[var]] += k
            exps.append(e)
        return minimalize(exps, n)


def default_names(arity: int, prefix: str | None = None) -> tuple[str, ...]:
    if prefix is not None:
        return tuple(f"{prefix}{i}" for i in range(1, arity + 1))
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple(f"x{i}" for i in range(1, arity + 1))


def parse_variables(text: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ParseError(f"bad variable name {v!r}")
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names")
    return names


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_expression(text: str, variables: Sequence[str] | None = None) -> IdealExpression:
    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i]

    def expect(sym):
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}, found {val or 'end of input'!r}", text, pos)
        i += 1

    declared = tuple(variables) if variables is not None else None
    seen: list[str] = []

    expect("<")
    kind, val, pos = peek()
    if kind == "int" and val == "0" and toks[i + 1][1] == ">":
        i += 2
        if peek()[0] != "end":
            raise ParseError("trailing input", text, peek()[2])
        return IdealExpression(declared or (), (), is_zero=True)

    terms = []
    while True:
        kind, val, pos = peek()
        if kind == "int":
            if val != "1":
                raise ParseError(f"a constant term must be 1, found {val}", text, pos)
            i += 1
            terms.append(())
        else:
            factors = []
            while True:
                kind, val, pos = peek()
                if kind != "name":
                    raise ParseError(f"expected a variable, found {val or 'end of input'!r}", text, pos)
                if declared is not None and val not in declared:
                    raise ParseError(f"unknown variable {val!r}", text, pos)
                if val not in seen:
                    seen.append(val)
                i += 1
                exp = 1
                if peek()[:2] == ("sym", "^"):
                    i += 1
                    kind, num, npos = peek()
                    if kind != "int":
                        raise ParseError("expected an exponent", text, npos)
                    if num.startswith("-"):
                        raise ParseError("negative exponent", text, npos)
                    exp = int(num)
                    i += 1
                factors.append((val, exp))
                if peek()[:2] == ("sym", "*"):
                    i += 1
                    continue
                break
            terms.append(tuple(factors))
        kind, val, pos = peek()
        if (kind, val) == ("sym", ","):
            i += 1
            continue
        expect(">")
        break
    if peek()[0] != "end":
        raise ParseError("trailing input", text, peek()[2])
    names = declared if declared is not None else tuple(seen)
    return IdealExpression(names, tuple(terms))


def parse_ideal(text: str, variables: Sequence[str] | None = None) -> MonomialIdeal:
    """Parse ``text`` into a canonical ideal; variable order follows ``variables``."""
    return parse_expression(text, variables).to_ideal()


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not re.fullmatch(r"-?\d+(?:/\d+)?", s):
        raise ParseError(f"not a rational: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def render_monomial(w: Sequence[int], names: Sequence[str]) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, w) if k]
    return "*".join(parts) if parts else "1"


def render_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = default_names(I.arity)
    if len(names) != I.arity:
        raise ValueError(f"{len(names)} names for arity {I.arity}")
    if I.is_zero:
        return "<0>"
    gens = sorted(I.generators, reverse=True)
    return "<" + ", ".join(render_monomial(g, names) for g in gens) + ">"


def render_rational(x) -> str:
    return str(Fraction(x))
