"""Rooted directed multigraphs and walks.

A walk is stored without a back-reference to its graph: it keeps its origin
vertex, its edge-id sequence and its terminal vertex.  Walks are created
through :class:`Graph` methods, which check composability.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphError, WalkError

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, slots=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True, slots=True)
class Walk:
    """A finite walk; ``edges == ()`` is the empty walk at ``start``."""

    start: str
    edges: tuple[str, ...]
    end: str

    def __len__(self):
        return len(self.edges)

    @property
    def is_empty(self):
        return not self.edges

    def sort_key(self):
        # length first, then lexicographic on edge ids
        return (len(self.edges), self.edges, self.start)

    def then(self, other: "Walk") -> "Walk":
        """Concatenation ``self . other``; empty walks act as identities."""
        if self.end != other.start:
            raise WalkError(f"cannot concatenate {self} (ends at {self.end}) "
                            f"with {other} (starts at {other.start})")
        if not other.edges:
            return self
        if not self.edges:
            return other
        return Walk(self.start, self.edges + other.edges, other.end)

    def is_prefix_of(self, other: "Walk") -> bool:
        n = len(self.edges)
        return (self.start == other.start and n <= len(other.edges)
                and other.edges[:n] == self.edges)

    def residual(self, other: "Walk") -> "Walk":
        """The walk ``r`` with ``other == self.then(r)``."""
        if not self.is_prefix_of(other):
            raise WalkError(f"{self} is not a prefix of {other}")
        return Walk(self.end, other.edges[len(self.edges):], other.end)

    def __str__(self):
        if not self.edges:
            return "@" + self.start
        return ".".join(self.edges)

    def __repr__(self):
        return f"Walk({self})"


class Relation(enum.Enum):
    EQUAL = "equal"
    PREFIX = "p-proper-prefix"      # p < q
    EXTENDS = "q-proper-prefix"     # q < p
    INCOMPARABLE = "incomparable"


def prefix_compare(p: Walk, q: Walk) -> tuple[Relation, Walk | None]:
    """Compare two walks in the prefix order.

    Returns the relation and, when the walks are comparable, the residual
    walk taking the shorter one to the longer one.
    """
    if p.start != q.start:
        return Relation.INCOMPARABLE, None
    n, m = len(p.edges), len(q.edges)
    if n <= m and q.edges[:n] == p.edges:
        r = Walk(p.end, q.edges[n:], q.end)
        return (Relation.EQUAL if n == m else Relation.PREFIX), r
    if m < n and p.edges[:m] == q.edges:
        return Relation.EXTENDS, Walk(q.end, p.edges[m:], p.end)
    return Relation.INCOMPARABLE, None


def concat(p: Walk, q: Walk) -> Walk:
    return p.then(q)


@dataclass
class ValidationReport:
    """Outcome of a validation; truthy when there are no problems."""

    problems: list[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "invalid: " + "; ".join(self.problems)


@dataclass(frozen=True)
class Graph:
    """A finite rooted directed multigraph.

    The constructor only checks what is needed to keep lookups well defined
    (known endpoints, root present); the remaining invariants are reported by
    :func:`validate_graph`.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    root: str

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        vs = set(self.vertices)
        if self.root not in vs:
            raise GraphError(f"root {self.root!r} is not a vertex")
        for e in self.edges:
            if e.src not in vs or e.dst not in vs:
                raise GraphError(f"edge {e.id!r} has an unknown endpoint")

    @classmethod
    def from_edges(cls, root, edges, vertices=None):
        """Build from ``(id, src, dst)`` triples; vertices default to those used."""
        es = tuple(Edge(*t) for t in edges)
        if vertices is None:
            seen = [root]
            for e in es:
                for v in (e.src, e.dst):
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        return cls(tuple(vertices), es, root)

    @cached_property
    def _edge_map(self):
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self):
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in out.items()}

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_map[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def has_edge(self, eid):
        return eid in self._edge_map

    def has_vertex(self, v):
        return v in self._out

    def origin(self, eid):
        return self.edge(eid).src

    def terminus(self, eid):
        return self.edge(eid).dst

    def out_edges(self, v) -> tuple[str, ...]:
        """Edges leaving ``v`` in sorted id order."""
        return self._out[v]

    # -- walks ---------------------------------------------------------------

    def empty(self, v=None) -> Walk:
        v = self.root if v is None else v
        if v not in self._out:
            raise GraphError(f"unknown vertex {v!r}")
        return Walk(v, (), v)

    def walk_from_edges(self, edges: Iterable[str], start=None) -> Walk:
        edges = tuple(edges)
        if not edges:
            return self.empty(start)
        first = self.edge(edges[0])
        if start is not None and first.src != start:
            raise WalkError(f"walk {'.'.join(edges)} does not start at {start}")
        cur = first.dst
        for eid in edges[1:]:
            e = self.edge(eid)
            if e.src != cur:
                raise WalkError(f"edges do not compose in {'.'.join(edges)}")
            cur = e.dst
        return Walk(first.src, edges, cur)

    def walk(self, text: str) -> Walk:
        """Parse ``"@v"`` or a dot-joined edge sequence."""
        text = text.strip()
        if text.startswith("@"):
            return self.empty(text[1:])
        if not text:
            raise WalkError("empty walk string")
        return self.walk_from_edges(text.split("."))

    def extend(self, p: Walk, eid: str) -> Walk:
        e = self.edge(eid)
        if e.src != p.end:
            raise WalkError(f"edge {eid} does not leave {p.end}")
        return Walk(p.start, p.edges + (eid,), e.dst)

    def children(self, p: Walk) -> list[Walk]:
        return [self.extend(p, e) for e in self.out_edges(p.end)]

    def walks_of_length(self, v, n) -> Iterator[Walk]:
        """All walks of length exactly ``n`` starting at ``v``."""
        layer = [self.empty(v)]
        for _ in range(n):
            layer = [c for p in layer for c in self.children(p)]
        return iter(layer)

    def walks_up_to(self, v, n) -> list[Walk]:
        out, layer = [], [self.empty(v)]
        for _ in range(n + 1):
            out.extend(layer)
            layer = [c for p in layer for c in self.children(p)]
        return out

    def reachable(self, v) -> set[str]:
        seen, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for eid in self._out[u]:
                w = self.terminus(eid)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "from": e.src, "to": e.dst} for e in self.edges],
            "root": self.root,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def graph_from_json(data) -> Graph:
    if not isinstance(data, dict):
        raise GraphError("graph file must hold a JSON object")
    unknown = set(data) - {"vertices", "edges", "root"}
    if unknown:
        raise GraphError(f"unknown keys in graph file: {sorted(unknown)}")
    missing = {"vertices", "edges", "root"} - set(data)
    if missing:
        raise GraphError(f"missing keys in graph file: {sorted(missing)}")
    vertices, edges, root = data["vertices"], data["edges"], data["root"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be an array of strings")
    if not isinstance(root, str):
        raise GraphError("'root' must be a string")
    if not isinstance(edges, list):
        raise GraphError("'edges' must be an array")
    es = []
    for item in edges:
        if not isinstance(item, dict) or set(item) != {"id", "from", "to"}:
            raise GraphError("each edge must be an object with keys id, from, to")
        if not all(isinstance(item[k], str) for k in ("id", "from", "to")):
            raise GraphError("edge fields must be strings")
        es.append(Edge(item["id"], item["from"], item["to"]))
    return Graph(tuple(vertices), tuple(es), root)


def load_graph(path) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: malformed JSON: {exc}") from None
    return graph_from_json(data)


def validate_graph(g: Graph) -> ValidationReport:
    problems = []
    if len(set(g.vertices)) != len(g.vertices):
        problems.append("duplicate vertex ids")
    ids = [e.id for e in g.edges]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        problems.append(f"duplicate edge ids: {', '.join(dup)}")
    bad = [x for x in list(g.vertices) + ids if not IDENT.match(x)]
    if bad:
        problems.append(f"ids not of the form [A-Za-z_][A-Za-z0-9_]*: {', '.join(sorted(set(bad)))}")
    unreachable = sorted(set(g.vertices) - g.reachable(g.root))
    if unreachable:
        problems.append(f"unreachable from root {g.root}: {', '.join(unreachable)}")
    sinks = [v for v in g.vertices if not g.out_edges(v)]
    if sinks:
        problems.append(f"sinks: {', '.join(sinks)}")
    return ValidationReport(problems)


def require_valid(g: Graph):
    report = validate_graph(g)
    if not report:
        raise GraphError(f"graph is {report}")
