"""Higman-Thompson group elements of the unfolding tree.

An element is handled through a representative: a terminal-preserving
bijection between two prefix bases, acting on longer walks by
``phi(b s) = phi(b) s``.
"""

from __future__ import annotations

import json
from typing import Mapping

from .algebra import Element, Monomial
from .basis import PrefixBasis, common_refinement, is_basis
from .errors import RepError
from .graph import Graph, ValidationReport, Walk


class HTRep:
    """A representative ``phi: S(B) -> S(B')`` given by its values on ``B``."""

    __slots__ = ("graph", "mapping", "_index")

    def __init__(self, graph: Graph, mapping: Mapping[Walk, Walk]):
        self.graph = graph
        self.mapping = dict(sorted(mapping.items(), key=lambda kv: kv[0].sort_key()))
        self._index = {b.edges: b for b in self.mapping}

    @classmethod
    def identity(cls, graph: Graph):
        e = graph.empty()
        return cls(graph, {e: e})

    @classmethod
    def from_permutation(cls, B: PrefixBasis, images):
        """``B.walks[i] -> images[i]``."""
        return cls(B.graph, dict(zip(B.walks, images)))

    @property
    def domain(self) -> PrefixBasis:
        return PrefixBasis(self.graph, self.mapping.keys(), check=False)

    @property
    def codomain(self) -> PrefixBasis:
        return PrefixBasis(self.graph, self.mapping.values(), check=False)

    def __call__(self, p: Walk) -> Walk:
        return apply_ht(self, p)

    def __eq__(self, other):
        if not isinstance(other, HTRep):
            return NotImplemented
        return equals_ht(self, other)

    def __hash__(self):
        # equal classes share a minimal representative's domain size only up to
        # refinement, so hash on something invariant
        return hash(self.graph.root)

    def __repr__(self):
        pairs = ", ".join(f"{b}->{c}" for b, c in self.mapping.items())
        return f"HTRep({pairs})"

    def inverse(self):
        return inverse_ht(self)

    def __mul__(self, other):
        return compose_ht(self, other)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"domain": [str(b) for b in self.mapping],
                "map": {str(b): str(c) for b, c in self.mapping.items()}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def rep_from_json(data, g: Graph) -> HTRep:
    if not isinstance(data, dict) or set(data) != {"domain", "map"}:
        raise RepError("representative file must be an object with keys domain, map")
    dom, mp = data["domain"], data["map"]
    if not isinstance(dom, list) or not isinstance(mp, dict):
        raise RepError("'domain' must be an array and 'map' an object")
    if set(dom) != set(mp) or len(dom) != len(set(dom)):
        raise RepError("'map' keys must be exactly the domain walks")
    try:
        mapping = {g.walk(s): g.walk(mp[s]) for s in dom}
    except Exception as exc:
        raise RepError(f"bad walk in representative: {exc}") from None
    return HTRep(g, mapping)


def load_rep(path, g: Graph) -> HTRep:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise RepError(f"{path}: malformed JSON: {exc}") from None
    return rep_from_json(data, g)


def validate_rep(r: HTRep) -> ValidationReport:
    g = r.graph
    problems = []
    dom = list(r.mapping)
    img = list(r.mapping.values())
    if not is_basis(g, dom):
        problems.append("domain is not a basis")
    if len(set(img)) != len(img):
        problems.append("map is not injective")
    if not is_basis(g, set(img)):
        problems.append("codomain is not a basis")
    for b, c in r.mapping.items():
        if b.end != c.end:
            problems.append(f"terminal mismatch: T({b}) = {b.end} but T({c}) = {c.end}")
    return ValidationReport(problems)


def expand_rep_at(r: HTRep, q: Walk) -> HTRep:
    """Restrict to the simple expansion of the domain at ``q``."""
    if q not in r.mapping:
        raise RepError(f"{q} is not in the domain")
    g = r.graph
    target = r.mapping[q]
    mapping = {b: c for b, c in r.mapping.items() if b != q}
    for eid in g.out_edges(q.end):
        mapping[g.extend(q, eid)] = g.extend(target, eid)
    return HTRep(g, mapping)


def apply_ht(r: HTRep, p: Walk) -> Walk:
    if p.start == r.graph.root:
        for i in range(len(p.edges) + 1):
            b = r._index.get(p.edges[:i])
            if b is not None:
                return r.mapping[b].then(b.residual(p))
    raise RepError(f"{p} is outside the domain of the representative")


def refine_domain(r: HTRep, C: PrefixBasis) -> HTRep:
    """Expand ``r`` until its domain is ``C`` (which must refine the domain)."""
    target = set(C.walks)
    while True:
        extra = [b for b in r.mapping if b not in target]
        if not extra:
            return r
        for b in extra:
            if len(b) >= max(len(c) for c in target):
                raise RepError("basis does not refine the domain")
            r = expand_rep_at(r, b)


def refine_codomain(r: HTRep, C: PrefixBasis) -> HTRep:
    target = set(C.walks)
    while True:
        inv = {c: b for b, c in r.mapping.items()}
        extra = [c for c in inv if c not in target]
        if not extra:
            return r
        for c in extra:
            if len(c) >= max(len(t) for t in target):
                raise RepError("basis does not refine the codomain")
            r = expand_rep_at(r, inv[c])


def compose_ht(f: HTRep, g: HTRep) -> HTRep:
    """``f o g``: apply ``g`` first."""
    if f.graph != g.graph:
        raise RepError("representatives over different graphs")
    C = common_refinement(g.codomain, f.domain)
    g2 = refine_codomain(g, C)
    f2 = refine_domain(f, C)
    return HTRep(f.graph, {b: f2.mapping[c] for b, c in g2.mapping.items()})


def inverse_ht(r: HTRep) -> HTRep:
    return HTRep(r.graph, {c: b for b, c in r.mapping.items()})


def equals_ht(f: HTRep, g: HTRep) -> bool:
    if f.graph != g.graph:
        return False
    C = common_refinement(f.domain, g.domain)
    return refine_domain(f, C).mapping == refine_domain(g, C).mapping


def is_identity(r: HTRep) -> bool:
    return equals_ht(r, HTRep.identity(r.graph))


def embed_ht(r: HTRep) -> Element:
    """``sum_{b in B} phi(b) b*``."""
    return Element(r.graph, {Monomial(c, b): 1 for b, c in r.mapping.items()})


def contract_minimal(r: HTRep) -> HTRep:
    """Undo expansions wherever a full sibling family maps to a full sibling family."""
    g = r.graph
    mapping = dict(r.mapping)
    changed = True
    while changed:
        changed = False
        parents = {}
        for b in mapping:
            if b.edges:
                o = g.origin(b.edges[-1])
                parents.setdefault(Walk(b.start, b.edges[:-1], o), []).append(b)
        for q, kids in sorted(parents.items(), key=lambda kv: kv[0].sort_key()):
            outs = g.out_edges(q.end)
            if len(kids) != len(outs):
                continue
            imgs = [mapping[k] for k in kids]
            if any(not c.edges or c.edges[-1] != k.edges[-1] for k, c in zip(kids, imgs)):
                continue
            heads = {(c.start, c.edges[:-1]) for c in imgs}
            if len(heads) != 1:
                continue
            c0 = imgs[0]
            head = Walk(c0.start, c0.edges[:-1], q.end)
            for k in kids:
                del mapping[k]
            mapping[q] = head
            changed = True
            break
    return HTRep(g, mapping)
