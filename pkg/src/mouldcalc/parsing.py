"""Lie-expression grammar for the command line.

::

    expr   := term (("+" | "-") term)*
    term   := [rational "*"] atom | "-" term
    atom   := "x" | "y" INT | "y(" INT ("," INT)* ")" | "[" expr "," expr "]" | "(" expr ")"

``y3`` names y for the residue 3 of a single cyclic factor; ``y(1,2)`` gives
the residue vector for products.  Plain words are written by juxtaposing
atoms, e.g. ``x y0``, which denotes the product in the free algebra.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebra import format_rational
from .groups import Group
from .lie import X, NCPoly, lie_bracket

__all__ = ["parse_lie", "format_ncpoly", "format_word"]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<y>y\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)|y-?\d+)"
                    r"|(?P<sym>[x\[\],+\-*()]))")


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Lie expression at {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", Fraction(m.group("num"))))
        elif m.group("y"):
            body = m.group("y")[1:].strip("()")
            out.append(("y", tuple(int(v) for v in body.split(","))))
        else:
            out.append(("sym", m.group("sym")))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, group, tokens):
        self.G = group
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"unexpected token {tok[1]!r} in Lie expression")
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.term()
        coef = Fraction(1)
        if self.peek()[0] == "num":
            coef = self.take()[1]
            self.take("sym", "*")
        prod = self.atom()
        while self.peek()[0] == "y" or self.peek() in (("sym", "x"), ("sym", "["), ("sym", "(")):
            prod = prod * self.atom()
        return prod.scale(coef)

    def atom(self):
        kind, val = self.peek()
        if kind == "y":
            self.take()
            res = val
            if len(self.G.moduli) == 0:
                idx = 0
            elif len(res) == 1 and len(self.G.moduli) > 1:
                raise ValueError("y<k> shorthand needs a single cyclic factor; use y(r1,...)")
            else:
                idx = self.G.index_of(res)
            return NCPoly.y(self.G, idx)
        if (kind, val) == ("sym", "x"):
            self.take()
            return NCPoly.x(self.G)
        if (kind, val) == ("sym", "["):
            self.take()
            a = self.expr()
            self.take("sym", ",")
            b = self.expr()
            self.take("sym", "]")
            return lie_bracket(a, b)
        if (kind, val) == ("sym", "("):
            self.take()
            a = self.expr()
            self.take("sym", ")")
            return a
        raise ValueError(f"unexpected token {val!r} in Lie expression")


def parse_lie(text: str, group: Group) -> NCPoly:
    p = _Parser(group, _tokens(text))
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in Lie expression: {p.toks[p.i][1]!r}")
    return out


def _letter(G, a):
    if a == X:
        return "x"
    r = G.residues[a - 1]
    if len(r) == 0:
        return "y0"
    if len(r) == 1:
        return f"y{r[0]}"
    return "y(" + ",".join(str(v) for v in r) + ")"


def format_word(G, w) -> str:
    return " ".join(_letter(G, a) for a in w) if w else "1"


def format_ncpoly(h: NCPoly) -> str:
    """Canonical printing: words ordered by length, then lexicographically."""
    if not h.terms:
        return "0"
    parts = []
    for w in sorted(h.terms, key=lambda w: (len(w), w)):
        c = h.terms[w]
        body = format_word(h.group, w)
        if c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = f"{format_rational(c)}*{body}"
        parts.append(s)
    return " + ".join(parts).replace("+ -", "- ")
