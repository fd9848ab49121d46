"""Element expressions: parsing, printing, and the action on walk symbols.

Grammar (whitespace-insensitive)::

    element   := "0" | [signs] term { signs term }
    signs     := ("+" | "-") { "+" | "-" }
    term      := [coeff ["*"]] factorseq
    coeff     := natural ["/" natural]        (fractions only in rational mode)
    factorseq := factor { "." factor }
    factor    := "@" vertexId | edgeId | edgeId "'"

A factor sequence is a product of generators: ``@v`` is the vertex ``v``,
``e`` the edge and ``e'`` its adjoint.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, edge, edge_star, vertex
from .errors import ParseError
from .graph import Graph, Walk

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/.@'])
""", re.VERBOSE)


@dataclass(frozen=True)
class Factor:
    kind: str   # "v", "e" or "e*"
    name: str

    def __str__(self):
        if self.kind == "v":
            return "@" + self.name
        return self.name + ("'" if self.kind == "e*" else "")


@dataclass(frozen=True)
class RawTerm:
    coeff: int | Fraction
    factors: tuple[Factor, ...]


def _tokenize(src):
    pos, line, col = 0, 1, 1
    out = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            out.append((kind if kind != "op" else text, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    out.append(("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, src, graph, rational):
        self.toks = _tokenize(src)
        self.i = 0
        self.g = graph
        self.rational = rational

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind}, found {what!r}", tok[2], tok[3])
        self.i += 1
        return tok

    def error(self, msg):
        tok = self.toks[self.i]
        raise ParseError(msg, tok[2], tok[3])

    def signs(self):
        s = 1
        seen = False
        while self.peek() in "+-" and self.peek() != "eof":
            if self.take()[0] == "-":
                s = -s
            seen = True
        return s, seen

    def element(self):
        if (self.peek() == "num" and self.toks[self.i][1] == "0"
                and self.toks[self.i + 1][0] == "eof"):
            return []
        terms = []
        s, _ = self.signs()
        terms.append(self.term(s))
        while self.peek() != "eof":
            s, seen = self.signs()
            if not seen:
                self.error("expected '+' or '-' between terms")
            terms.append(self.term(s))
        return terms

    def term(self, sign):
        coeff = 1
        if self.peek() == "num":
            coeff = int(self.take()[1])
            if self.peek() == "/":
                tok = self.take()
                if not self.rational:
                    raise ParseError("fractional coefficients need rational mode", tok[2], tok[3])
                den = int(self.take("num")[1])
                if den == 0:
                    raise ParseError("zero denominator", tok[2], tok[3])
                coeff = Fraction(coeff, den)
            if self.peek() == "*":
                self.take()
        factors = [self.factor()]
        while self.peek() == ".":
            self.take()
            factors.append(self.factor())
        return RawTerm(sign * coeff, tuple(factors))

    def factor(self):
        if self.peek() == "@":
            self.take()
            tok = self.take("id")
            if self.g is not None and not self.g.has_vertex(tok[1]):
                raise ParseError(f"unknown vertex {tok[1]!r}", tok[2], tok[3])
            return Factor("v", tok[1])
        if self.peek() != "id":
            self.error("expected a vertex '@v' or an edge id")
        tok = self.take("id")
        if self.g is not None and not self.g.has_edge(tok[1]):
            raise ParseError(f"unknown edge {tok[1]!r}", tok[2], tok[3])
        if self.peek() == "'":
            self.take()
            return Factor("e*", tok[1])
        return Factor("e", tok[1])


def parse_raw(src: str, graph: Graph | None = None, rational=False) -> list[RawTerm]:
    """Parse to a list of raw terms (no algebra relations applied)."""
    return _Parser(src, graph, rational).element()


def evaluate(raw: list[RawTerm], g: Graph) -> Element:
    total = Element(g)
    for t in raw:
        prod = None
        for f in t.factors:
            if f.kind == "v":
                gen = vertex(g, f.name)
            elif f.kind == "e":
                gen = edge(g, f.name)
            else:
                gen = edge_star(g, f.name)
            prod = gen if prod is None else prod * gen
        total = total + prod.scale(t.coeff)
    return total


def parse_element(src: str, g: Graph, rational=False) -> Element:
    return evaluate(parse_raw(src, g, rational), g)


def format_monomial(p: Walk, q: Walk) -> str:
    if not p.edges and not q.edges:
        return "@" + p.start
    parts = list(p.edges) + [e + "'" for e in reversed(q.edges)]
    return ".".join(parts)


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(x.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        body = format_monomial(*m)
        if a != 1:
            body = f"{a}*{body}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- action on walk symbols ------------------------------------------------------

def _act(g: Graph, f: Factor, p: Walk) -> Walk | None:
    if f.kind == "v":
        return p if p.start == f.name else None
    e = g.edge(f.name)
    if f.kind == "e":
        if e.dst != p.start:
            return None
        return Walk(e.src, (f.name,) + p.edges, p.end)
    if p.edges and p.edges[0] == f.name:
        return Walk(e.dst, p.edges[1:], p.end)
    return None


def path_action(raw: list[RawTerm], p: Walk, g: Graph) -> dict[Walk, int]:
    """Apply raw terms to the symbol ``X_p`` of the free module on walks.

    A vertex keeps symbols whose walk starts there, an edge prepends itself,
    an adjoint edge strips a matching first edge.  Factors act right to left.
    The result maps walks to coefficients (zeros dropped).  This acts on raw
    terms only; it is not used to decide equality in the algebra.
    """
    acc = defaultdict(int)
    for t in raw:
        w = p
        for f in reversed(t.factors):
            w = _act(g, f, w)
            if w is None:
                break
        if w is not None:
            acc[w] += t.coeff
    return {w: c for w, c in acc.items() if c != 0}
