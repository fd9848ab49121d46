"""Exact arithmetic in Leavitt path algebras of finite graphs.

Elements are finite combinations of monomials ``p q*`` (walks ``p``, ``q``
with a common terminal vertex) with ``int`` or ``Fraction`` coefficients.
An :class:`Element` stores one *representation*; identical monomials are
merged but no relation is applied.  ``==`` is equality in the algebra.

Equality rests on one fact: monomials whose right walks form a
prefix-independent set are linearly independent (multiply on the right by
one of the right walks and use independence of paths).  Expanding right
walks through ``v = sum_{e in o^-1(v)} e e*`` until they are independent
therefore gives a faithful comparison.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .basis import PrefixBasis, extend_to_basis
from .errors import BasisError, GraphError, LPAError
from .graph import Graph, Walk


class Monomial(NamedTuple):
    left: Walk
    right: Walk


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _mul_pair(m1, m2):
    """(p q*)(r s*) as a single monomial, or None when the product vanishes."""
    (p, q), (r, s) = m1, m2
    if q.start != r.start:
        return None
    nq, nr = len(q.edges), len(r.edges)
    if nq <= nr:
        if r.edges[:nq] != q.edges:
            return None
        if nq == nr:
            return Monomial(p, s)
        # r = q u, result (p u) s*
        return Monomial(Walk(p.start, p.edges + r.edges[nq:], r.end), s)
    if q.edges[:nr] != r.edges:
        return None
    # q = r u, result p (s u)*
    return Monomial(p, Walk(s.start, s.edges + q.edges[nr:], q.end))


class Element:
    """A finite linear combination of monomials over a fixed graph."""

    __slots__ = ("graph", "terms", "_canon")

    def __init__(self, graph: Graph, terms: Mapping | Iterable = ()):
        self.graph = graph
        acc = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            p, q = m
            if p.end != q.end:
                continue  # p q* = 0 when terminals differ
            acc[Monomial(p, q)] += c
        self.terms = {m: _norm(c) for m, c in acc.items() if c != 0}
        self._canon = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, graph):
        return cls(graph)

    @classmethod
    def monomial(cls, graph, p: Walk, q: Walk, coeff=1):
        return cls(graph, {Monomial(p, q): coeff})

    # -- inspection ---------------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def is_empty(self):
        """True iff the stored representation has no terms (stronger than == 0)."""
        return not self.terms

    def left_walks(self) -> set[Walk]:
        return {m.left for m in self.terms}

    def right_walks(self) -> set[Walk]:
        return {m.right for m in self.terms}

    def right_degree(self) -> int:
        return max((len(m.right) for m in self.terms), default=0)

    def is_rooted(self) -> bool:
        r = self.graph.root
        return all(m.left.start == r and m.right.start == r for m in self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (t[0].left.sort_key(), t[0].right.sort_key()))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("elements live over different graphs")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return Element(self.graph, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.graph, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def scale(self, k):
        return Element(self.graph, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        acc = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_pair(m1, m2)
                if m is not None:
                    acc[m] += c1 * c2
        return Element(self.graph, acc)

    def __rmul__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    def __pow__(self, n):
        if n < 1:
            raise ValueError("only positive powers are supported")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def star(self) -> "Element":
        return Element(self.graph, {Monomial(m.right, m.left): c for m, c in self.terms.items()})

    # -- equality -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not independent_right_form(self).terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        if other.graph is not self.graph and other.graph != self.graph:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(canonical(self).terms.items()))

    def __str__(self):
        from .expr import format_element
        return format_element(self)

    def __repr__(self):
        return f"Element({self})"


# -- generators ---------------------------------------------------------------

def vertex(g: Graph, v) -> Element:
    e = g.empty(v)
    return Element.monomial(g, e, e)


def edge(g: Graph, eid) -> Element:
    w = g.walk_from_edges([eid])
    return Element.monomial(g, w, g.empty(w.end))


def edge_star(g: Graph, eid) -> Element:
    return edge(g, eid).star()


def path(g: Graph, p: Walk) -> Element:
    return Element.monomial(g, p, g.empty(p.end))


def unit(g: Graph) -> Element:
    """The unit of the rooted algebra, written as ``sum_{e in o^-1(R)} e e*``."""
    terms = {}
    for eid in g.out_edges(g.root):
        w = g.walk_from_edges([eid])
        terms[Monomial(w, w)] = 1
    if not terms:
        raise GraphError(f"root {g.root} is a sink")
    return Element(g, terms)


def mul_monomial(g: Graph, m1: Monomial, m2: Monomial) -> Element:
    m = _mul_pair(m1, m2)
    return Element(g) if m is None else Element(g, {m: 1})


def from_matrix(g: Graph, rows: Iterable[Walk], cols: Iterable[Walk], matrix) -> Element:
    """``sum K[i, j] rows[i] cols[j]*``."""
    rows, cols = list(rows), list(cols)
    terms = {}
    for i, b in enumerate(rows):
        for j, c in enumerate(cols):
            k = int(matrix[i][j])
            if k:
                terms[Monomial(b, c)] = k
    return Element(g, terms)


def basis_sum(B: Iterable[Walk], g: Graph) -> Element:
    """``sum_{b in B} b b*``."""
    return Element(g, {Monomial(b, b): 1 for b in B})


# -- rewriting ------------------------------------------------------------------

def _expand_step(g, m, c, acc):
    p, q = m
    outs = g.out_edges(q.end)
    if not outs:
        raise GraphError(f"cannot expand at sink {q.end}")
    for eid in outs:
        t = g.terminus(eid)
        acc[Monomial(Walk(p.start, p.edges + (eid,), t),
                     Walk(q.start, q.edges + (eid,), t))] += c


def expand_monomial(g: Graph, m: Monomial, c=1) -> Element:
    """One rewrite ``p q* -> sum_e (p e)(q e)*`` at the common terminal."""
    acc = defaultdict(int)
    _expand_step(g, m, c, acc)
    return Element(g, acc)


def expand_right(x: Element, L: int) -> Element:
    """Rewrite ``x`` so that every right walk has length exactly ``L``."""
    if L < x.right_degree():
        raise LPAError(f"level {L} is below the right degree {x.right_degree()}")
    g = x.graph
    layer = dict(x.terms)
    for level in range(L):
        nxt = defaultdict(int)
        for m, c in layer.items():
            if len(m.right) > level:
                nxt[m] += c
            else:
                _expand_step(g, m, c, nxt)
        layer = nxt
    return Element(g, layer)


def independent_right_form(x: Element) -> Element:
    """An equivalent representation whose right walks are prefix-independent.

    The coefficients of such a representation are uniquely determined by
    the element, so it is empty exactly when ``x == 0``.
    """
    g = x.graph
    terms = dict(x.terms)
    while True:
        inner = set()
        for m in terms:
            q = m.right
            for i in range(len(q.edges)):
                inner.add((q.start, q.edges[:i]))
        todo = [m for m in terms if (m.right.start, m.right.edges) in inner]
        if not todo:
            return Element(g, terms)
        acc = defaultdict(int)
        for m, c in terms.items():
            acc[m] += c
        for m in todo:
            c = acc.pop(m)
            _expand_step(g, m, c, acc)
        terms = {m: c for m, c in acc.items() if c != 0}


def equals_elements(x: Element, y: Element) -> bool:
    return x == y


def canonical(x: Element) -> Element:
    """Representation-independent normal form.

    Expand to uniform right length, then contract complete families
    ``{(p e)(q e)* : e in o^-1(T(q))}`` with a common coefficient, level by
    level from the top.
    """
    if x._canon is not None:
        return x._canon
    g = x.graph
    L = x.right_degree()
    terms = dict(expand_right(x, L).terms)
    for level in range(L, 0, -1):
        groups = defaultdict(dict)
        for m, c in terms.items():
            p, q = m
            if len(q.edges) != level or not p.edges or p.edges[-1] != q.edges[-1]:
                continue
            e = q.edges[-1]
            o = g.origin(e)
            parent = Monomial(Walk(p.start, p.edges[:-1], o), Walk(q.start, q.edges[:-1], o))
            groups[parent][e] = c
        for parent, fam in groups.items():
            outs = g.out_edges(parent.right.end)
            if len(fam) != len(outs):
                continue
            vals = set(fam.values())
            if len(vals) != 1:
                continue
            for e in outs:
                t = g.terminus(e)
                del terms[Monomial(Walk(parent.left.start, parent.left.edges + (e,), t),
                                   Walk(parent.right.start, parent.right.edges + (e,), t))]
            terms[parent] = vals.pop()
    out = Element(g, terms)
    out._canon = out
    x._canon = out
    return out


def left_basis_form(x: Element, B: PrefixBasis) -> Element:
    """Rewrite ``x`` so that all left walks lie in ``B``.

    Each ``m n*`` becomes ``sum_{r : m r in B} (m r)(n r)*``; every left walk
    of ``x`` must be a prefix of some element of ``B``.
    """
    g = x.graph
    acc = defaultdict(int)
    below = {}
    for b in B.walks:
        for i in range(len(b.edges) + 1):
            below.setdefault(b.edges[:i], []).append(b)
    for (m, n), c in x.terms.items():
        if m.start != B.start:
            raise BasisError(f"left walk {m} does not start at {B.start}")
        ext = below.get(m.edges)
        if not ext:
            raise BasisError(f"left walk {m} is not a prefix of any basis element")
        k = len(m.edges)
        for b in ext:
            tail = b.edges[k:]
            acc[Monomial(b, Walk(n.start, n.edges + tail, b.end))] += c
    return Element(g, acc)


def right_basis_form(x: Element, B: PrefixBasis) -> Element:
    return left_basis_form(x.star(), B).star()


def _check_probe(x: Element, p: Walk):
    for m in x.terms:
        for w in m:
            if p.is_prefix_of(w) and len(p) < len(w):
                raise LPAError(f"{p} is a proper prefix of {w}")


def prefix_probe(x: Element, p: Walk):
    """Sum of the coefficients ``k_{m,n}`` over monomials with ``m, n <= p``.

    ``p`` must not be a proper prefix of any walk occurring in ``x``.  The
    value is read off the stored representation and is not an invariant of
    the element once left and right walks can be prefix-comparable: the zero
    element ``a (a a)* - (a a)(a a a)* - (a b)(a a b)*`` on the rose gives 1
    at ``p = a a b``.  :func:`diagonal_prefix_probe` is the invariant part.
    """
    _check_probe(x, p)
    total = 0
    for (m, n), c in x.terms.items():
        if m.is_prefix_of(p) and n.is_prefix_of(p):
            total += c
    return total


def diagonal_prefix_probe(x: Element, p: Walk):
    """Sum of ``k_{m,m}`` over monomials ``m m*`` with ``m <= p``.

    Under the same condition on ``p`` this is the coefficient of the vertex
    ``T(p)`` in ``p* x p`` (the other terms are nonzero-length paths, their
    adjoints, or zero), so it depends only on the element and vanishes on 0.
    """
    _check_probe(x, p)
    return sum(c for (m, n), c in x.terms.items() if m == n and m.is_prefix_of(p))


# -- basic elements ------------------------------------------------------------

@dataclass(frozen=True)
class BasicWitness:
    left_basis: PrefixBasis
    right_basis: PrefixBasis
    representation: Element


def _antichain(walks) -> bool:
    keys = {(w.start, w.edges) for w in walks}
    for w in walks:
        for i in range(len(w.edges)):
            if (w.start, w.edges[:i]) in keys:
                return False
    return True


def _conflicted(walks):
    inner = set()
    for w in walks:
        for i in range(len(w.edges)):
            inner.add((w.start, w.edges[:i]))
    return {w for w in walks if (w.start, w.edges) in inner}


def is_basic_up_to(x: Element, depth: int, max_states: int = 20000) -> BasicWitness | None:
    """Search for a representation with independent left and right walks.

    Explores up to ``depth`` single-monomial rewrites, starting from the
    canonical form and from the given representation.  Returns a witness
    (bases extending the left and right walk sets) or ``None`` when nothing
    was found, which does not prove the element is not basic.
    """
    g = x.graph
    if not x.is_rooted():
        return None

    def witness(terms):
        rep = Element(g, terms)
        return BasicWitness(extend_to_basis(g, rep.left_walks()),
                            extend_to_basis(g, rep.right_walks()), rep)

    def goal(terms):
        return _antichain({m.left for m in terms}) and _antichain({m.right for m in terms})

    starts = []
    for t in (canonical(x).terms, x.terms):
        key = frozenset(t.items())
        if key not in {frozenset(s.items()) for s in starts}:
            starts.append(t)
    seen = set()
    frontier = []
    for t in starts:
        if goal(t):
            return witness(t)
        key = frozenset(t.items())
        seen.add(key)
        frontier.append(t)
    for _ in range(depth):
        nxt = []
        for terms in frontier:
            lefts = _conflicted({m.left for m in terms})
            rights = _conflicted({m.right for m in terms})
            for m in terms:
                if m.left not in lefts and m.right not in rights:
                    continue
                acc = defaultdict(int, terms)
                c = acc.pop(m)
                _expand_step(g, m, c, acc)
                new = {k: v for k, v in acc.items() if v != 0}
                key = frozenset(new.items())
                if key in seen:
                    continue
                if goal(new):
                    return witness(new)
                seen.add(key)
                nxt.append(new)
                if len(seen) > max_states:
                    return None
        frontier = nxt
        if not frontier:
            break
    return None
