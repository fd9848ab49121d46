"""Prefix bases (complete prefix codes) of walks from a fixed vertex."""

from __future__ import annotations

from typing import Iterable

from .errors import BasisError
from .graph import Graph, Walk


def _key_set(walks):
    return {p.edges for p in walks}


def _independent(walks) -> bool:
    keys = _key_set(walks)
    if len(keys) != len(walks):
        return False
    for p in walks:
        for i in range(len(p.edges)):
            if p.edges[:i] in keys:
                return False
    return True


def _covers(g: Graph, keys: set, start: str, depth: int) -> bool:
    # every walk of length `depth` from `start` has a prefix in `keys`
    stack = [g.empty(start)]
    while stack:
        p = stack.pop()
        if p.edges in keys:
            continue
        if len(p.edges) >= depth:
            return False
        stack.extend(g.children(p))
    return True


def is_basis(g: Graph, walks: Iterable[Walk], start=None) -> bool:
    """True iff ``walks`` is a finite maximal prefix-independent set.

    All walks must start at ``start`` (the root by default).  Maximality is
    tested as: every walk of length ``max |b|`` has a prefix in the set,
    which is equivalent for finite graphs without sinks.
    """
    start = g.root if start is None else start
    walks = list(walks)
    if not walks or any(p.start != start for p in walks):
        return False
    if not _independent(walks):
        return False
    depth = max(len(p) for p in walks)
    return _covers(g, _key_set(walks), start, depth)


class PrefixBasis:
    """An immutable prefix basis, stored in canonical (length-lex) order."""

    __slots__ = ("graph", "start", "walks", "_index")

    def __init__(self, graph: Graph, walks: Iterable[Walk], start=None, check=True):
        start = graph.root if start is None else start
        walks = tuple(sorted(set(walks), key=Walk.sort_key))
        if check and not is_basis(graph, walks, start):
            raise BasisError("not a basis: " + ", ".join(map(str, walks)))
        self.graph = graph
        self.start = start
        self.walks = walks
        self._index = {p.edges: p for p in walks}

    @classmethod
    def trivial(cls, graph: Graph, start=None):
        return cls(graph, [graph.empty(start)], start, check=False)

    def __iter__(self):
        return iter(self.walks)

    def __len__(self):
        return len(self.walks)

    def __contains__(self, p):
        return isinstance(p, Walk) and p.start == self.start and self._index.get(p.edges) == p

    def __eq__(self, other):
        if not isinstance(other, PrefixBasis):
            return NotImplemented
        return self.start == other.start and self.walks == other.walks

    def __hash__(self):
        return hash((self.start, self.walks))

    def __repr__(self):
        return "PrefixBasis{" + ", ".join(map(str, self.walks)) + "}"

    def prefix_of(self, p: Walk) -> Walk | None:
        """The element of the basis that is a prefix of ``p``, if any."""
        if p.start != self.start:
            return None
        for i in range(len(p.edges) + 1):
            b = self._index.get(p.edges[:i])
            if b is not None:
                return b
        return None

    def covers(self, p: Walk) -> bool:
        """True iff ``p`` lies in the cofinite subspace generated by the basis."""
        return self.prefix_of(p) is not None


def simple_expand(B: PrefixBasis, p: Walk) -> PrefixBasis:
    """Replace ``p`` by all of its one-edge extensions."""
    if p not in B:
        raise BasisError(f"{p} is not in the basis")
    g = B.graph
    walks = [b for b in B.walks if b != p] + g.children(p)
    return PrefixBasis(g, walks, B.start, check=False)


def common_refinement(B1: PrefixBasis, B2: PrefixBasis) -> PrefixBasis:
    """The coarsest basis refining both: the longer walk of each comparable pair."""
    if B1.start != B2.start:
        raise BasisError("bases start at different vertices")
    out = set()
    for b in B1.walks:
        c = B2.prefix_of(b)
        if c is not None:
            out.add(b)
    for c in B2.walks:
        b = B1.prefix_of(c)
        if b is not None:
            out.add(c)
    return PrefixBasis(B1.graph, out, B1.start, check=False)


def refine_to_cover(B: PrefixBasis, walks: Iterable[Walk]) -> PrefixBasis:
    """Expand ``B`` until every given walk is a prefix of some basis element."""
    g = B.graph
    current = set(B.walks)
    index = {p.edges: p for p in current}
    for w in walks:
        if w.start != B.start:
            raise BasisError(f"walk {w} does not start at {B.start}")
        while True:
            below = None
            for i in range(len(w.edges)):
                below = index.get(w.edges[:i])
                if below is not None:
                    break
            if below is None:
                break
            current.discard(below)
            del index[below.edges]
            for c in g.children(below):
                current.add(c)
                index[c.edges] = c
    return PrefixBasis(g, current, B.start, check=False)


def extend_to_basis(g: Graph, walks: Iterable[Walk], start=None) -> PrefixBasis:
    """Complete a prefix-independent set of walks to a basis.

    Adds every walk of length ``max |w|`` that has no prefix in the set; the
    given walks must be mutually independent.
    """
    start = g.root if start is None else start
    walks = list(walks)
    if not walks:
        return PrefixBasis.trivial(g, start)
    if not _independent(walks):
        raise BasisError("walks are not prefix-independent")
    keys = _key_set(walks)
    depth = max(len(p) for p in walks)
    out = list(walks)
    stack = [g.empty(start)]
    while stack:
        p = stack.pop()
        if p.edges in keys:
            continue
        if len(p.edges) == depth:
            out.append(p)
            continue
        stack.extend(g.children(p))
    return PrefixBasis(g, out, start, check=False)
