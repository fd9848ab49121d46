"""Graph reductions that preserve the rooted integral algebra.

* :func:`build_gm` contracts a graph onto a vertex set ``M`` that contains
  the root and meets every cycle; the new edges are the walks between
  ``M``-vertices that avoid ``M`` internally.
* :func:`build_collapse` absorbs the out-edges of ``w`` into ``v`` through
  an injection ``theta`` and adds one new edge ``v -> w``.

Both come with explicit isomorphisms of rooted algebras, which transport
Higman-Thompson elements through :func:`transport_ht`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Mapping

from .algebra import Element, Monomial, edge, vertex
from .basis import PrefixBasis
from .errors import ReductionError
from .graph import Edge, Graph, ValidationReport, Walk, validate_graph
from .thompson import HTRep, embed_ht
from .unitary import theta


# -- generator maps ----------------------------------------------------------------

def apply_generator_map(images: Mapping[str, Element], source: Graph, target: Graph,
                        x: Element) -> Element:
    """Extend an assignment of edges (and optionally vertices) to ``x``.

    ``images`` maps edge ids of ``source`` to elements of ``target``; vertex
    ids missing from it map to the target vertex of the same name.
    Monomial ``p q*`` goes to ``img(p) img(q)*``.
    """
    def vimg(v):
        if v in images:
            return images[v]
        if not target.has_vertex(v):
            raise ReductionError(f"vertex {v} has no image")
        return vertex(target, v)

    cache = {}

    def walk_img(p):
        if p in cache:
            return cache[p]
        out = vimg(p.start)
        for eid in p.edges:
            out = out * images[eid]
        cache[p] = out
        return out

    total = Element(target)
    for (p, q), c in x.terms.items():
        total = total + (walk_img(p) * walk_img(q).star()).scale(c)
    return total


def validate_star_hom(images: Mapping[str, Element], source: Graph, target: Graph) -> ValidationReport:
    """Check that the generator images satisfy every defining relation.

    Covers orthogonality of vertex images, ``e* f = delta t(e)``,
    ``o(e) e = e t(e) = e``, ``v = sum e e*`` at every non-sink, and that
    the root goes to the root of the target.
    """
    problems = []

    def vimg(v):
        return images[v] if v in images else vertex(target, v)

    V = {v: vimg(v) for v in source.vertices}
    E = {e.id: images[e.id] for e in source.edges}
    for v in source.vertices:
        if V[v].star() != V[v]:
            problems.append(f"vertex {v}: image is not self-adjoint")
        for w in source.vertices:
            prod = V[v] * V[w]
            if v == w and prod != V[v]:
                problems.append(f"vertex {v}: image is not idempotent")
            elif v != w and not prod.is_zero():
                problems.append(f"vertices {v}, {w}: images not orthogonal")
    for e in source.edges:
        for f in source.edges:
            prod = E[e.id].star() * E[f.id]
            want = V[e.dst] if e.id == f.id else Element(target)
            if prod != want:
                problems.append(f"relation {e.id}'.{f.id} fails")
        if V[e.src] * E[e.id] != E[e.id] or E[e.id] * V[e.dst] != E[e.id]:
            problems.append(f"edge {e.id}: vertex absorption fails")
    for v in source.vertices:
        outs = source.out_edges(v)
        if not outs:
            continue
        s = Element(target)
        for eid in outs:
            s = s + E[eid] * E[eid].star()
        if s != V[v]:
            problems.append(f"vertex {v}: sum of e e* over outgoing edges fails")
    if V[source.root] != vertex(target, target.root):
        problems.append("root does not map to the root")
    return ValidationReport(problems)


# -- contraction onto a vertex set -----------------------------------------------

def _find_cycle(g: Graph, allowed: set):
    """A cycle inside the subgraph induced on ``allowed``, as edge ids, or None."""
    state = {}
    for s in sorted(allowed):
        if s in state:
            continue
        state[s] = 1
        path_v, path_e = [s], []
        iters = [iter(g.out_edges(s))]
        while iters:
            v = path_v[-1]
            for eid in iters[-1]:
                w = g.terminus(eid)
                if w not in allowed:
                    continue
                if state.get(w) == 1:
                    return path_e[path_v.index(w):] + [eid]
                if w not in state:
                    state[w] = 1
                    path_v.append(w)
                    path_e.append(eid)
                    iters.append(iter(g.out_edges(w)))
                    break
            else:
                state[v] = 2
                path_v.pop()
                iters.pop()
                if path_e:
                    path_e.pop()
    return None


@dataclass(frozen=True)
class ReductionGM:
    source: Graph
    keep: frozenset
    target: Graph
    edge_dictionary: dict   # target edge id -> walk in source


def _fresh_ids(walks, taken=()):
    ids, used = {}, set(taken)
    for w in walks:
        base = "_".join(w.edges)
        name, k = base, 2
        while name in used:
            name, k = f"{base}_{k}", k + 1
        used.add(name)
        ids[w] = name
    return ids


def _walks_to_keep(g: Graph, keep: set, v) -> list[Walk]:
    """Walks from ``v`` of length >= 1 that end in ``keep`` and avoid it internally."""
    out, stack = [], [g.empty(v)]
    while stack:
        p = stack.pop()
        for c in g.children(p):
            if c.end in keep:
                out.append(c)
            else:
                stack.append(c)
    return sorted(out, key=Walk.sort_key)


def build_gm(g: Graph, keep) -> ReductionGM:
    keep = set(keep)
    if g.root not in keep:
        raise ReductionError(f"root {g.root} must be kept")
    unknown = keep - set(g.vertices)
    if unknown:
        raise ReductionError(f"unknown vertices: {sorted(unknown)}")
    cyc = _find_cycle(g, set(g.vertices) - keep)
    if cyc is not None:
        raise ReductionError(f"cycle {'.'.join(cyc)} avoids the kept vertices")
    walks = []
    for m in g.vertices:
        if m in keep:
            walks.extend(_walks_to_keep(g, keep, m))
    walks.sort(key=Walk.sort_key)
    ids = _fresh_ids(walks)
    edges = tuple(Edge(ids[w], w.start, w.end) for w in walks)
    target = Graph(tuple(v for v in g.vertices if v in keep), edges, g.root)
    report = validate_graph(target)
    if not report:
        raise ReductionError(f"contracted graph is {report}")
    return ReductionGM(g, frozenset(keep), target, {ids[w]: w for w in walks})


def translate_from_gm(r: ReductionGM, x: Element) -> Element:
    """Read every contracted edge as its defining walk."""
    g = r.source
    d = r.edge_dictionary

    def lift(p):
        w = g.empty(p.start)
        for eid in p.edges:
            w = w.then(d[eid])
        return w

    return Element(g, {Monomial(lift(p), lift(q)): c for (p, q), c in x.terms.items()})


def _pushdown(r: ReductionGM, x: Element) -> Element:
    g = r.source
    cache = {}
    acc = defaultdict(int)
    for (p, q), c in x.terms.items():
        v = p.end
        if v in r.keep:
            acc[Monomial(p, q)] += c
            continue
        if v not in cache:
            cache[v] = _walks_to_keep(g, set(r.keep), v)
        for s in cache[v]:
            acc[Monomial(p.then(s), q.then(s))] += c
    return Element(g, acc)


def corollary_basis_at(r: ReductionGM, v) -> PrefixBasis:
    """The first-return walks from ``v`` into the kept set, as a basis at ``v``."""
    walks = _walks_to_keep(r.source, set(r.keep), v)
    return PrefixBasis(r.source, walks, start=v, check=False)


def translate_to_gm(r: ReductionGM, x: Element) -> Element:
    """Inverse of :func:`translate_from_gm` on the rooted algebra."""
    if not x.is_rooted():
        raise ReductionError("element is not rooted")
    y = _pushdown(r, x)
    back = {w.edges: eid for eid, w in r.edge_dictionary.items()}
    g, t = r.source, r.target

    def split(p):
        ids, cur = [], []
        for eid in p.edges:
            cur.append(eid)
            if g.terminus(eid) in r.keep:
                key = tuple(cur)
                if key not in back:
                    raise ReductionError(f"walk {p} does not decompose over kept vertices")
                ids.append(back[key])
                cur = []
        if cur:
            raise ReductionError(f"walk {p} does not end in a kept vertex")
        return t.walk_from_edges(ids, start=p.start)

    return Element(t, {Monomial(split(p), split(q)): c for (p, q), c in y.terms.items()})


# -- absorbing the out-edges of one vertex into another ---------------------------

@dataclass(frozen=True)
class ReductionCollapse:
    source: Graph
    w: str
    v: str
    theta: dict       # edge out of w -> edge out of v
    target: Graph
    new_edge: str


def build_collapse(g: Graph, w, v, theta_map: Mapping[str, str]) -> ReductionCollapse:
    if w == v:
        raise ReductionError("w and v must be distinct")
    for x in (w, v):
        if not g.has_vertex(x):
            raise ReductionError(f"unknown vertex {x}")
    outs_w = set(g.out_edges(w))
    if set(theta_map) != outs_w:
        raise ReductionError(f"theta must be defined exactly on the edges leaving {w}")
    imgs = list(theta_map.values())
    if len(set(imgs)) != len(imgs):
        raise ReductionError("theta is not injective")
    for e, d in theta_map.items():
        if not g.has_edge(d) or g.origin(d) != v:
            raise ReductionError(f"theta({e}) = {d} does not leave {v}")
        if g.terminus(d) != g.terminus(e):
            raise ReductionError(f"theta({e}) = {d} has terminus {g.terminus(d)}, "
                                 f"expected {g.terminus(e)}")
    removed = set(imgs)
    taken = {e.id for e in g.edges}
    name, k = f"f_{v}_{w}", 2
    while name in taken:
        name, k = f"f_{v}_{w}_{k}", k + 1
    edges = tuple(e for e in g.edges if e.id not in removed) + (Edge(name, v, w),)
    target = Graph(g.vertices, edges, g.root)
    report = validate_graph(target)
    if not report:
        raise ReductionError(f"resulting graph is {report}")
    return ReductionCollapse(g, w, v, dict(theta_map), target, name)


def collapse_images(r: ReductionCollapse) -> dict[str, Element]:
    t = r.target
    inv = {d: e for e, d in r.theta.items()}
    f = edge(t, r.new_edge)
    return {e.id: (f * edge(t, inv[e.id])) if e.id in inv else edge(t, e.id)
            for e in r.source.edges}


def collapse_inverse_images(r: ReductionCollapse) -> dict[str, Element]:
    g = r.source
    out = {}
    for e in r.target.edges:
        if e.id == r.new_edge:
            s = Element(g)
            for a, d in r.theta.items():
                s = s + edge(g, d) * edge(g, a).star()
            out[e.id] = s
        else:
            out[e.id] = edge(g, e.id)
    return out


def _integral_out(x, y):
    if x.is_integral() and not y.is_integral():
        raise ReductionError("integral input produced a non-integral image")
    return y


def collapse_iso(r: ReductionCollapse, x: Element) -> Element:
    return _integral_out(x, apply_generator_map(collapse_images(r), r.source, r.target, x))


def collapse_iso_inverse(r: ReductionCollapse, x: Element) -> Element:
    return _integral_out(x, apply_generator_map(collapse_inverse_images(r), r.target, r.source, x))


# -- transport ---------------------------------------------------------------------

def transport_ht(forward: Callable[[Element], Element], target: Graph, rep: HTRep) -> HTRep:
    """Push a Higman-Thompson element through an algebra isomorphism.

    Embeds ``rep`` as a unitary, maps it, and strips the diagonal part on
    the target side.  Raises ``NotUnitary`` if the image is not unitary.
    """
    y = forward(embed_ht(rep))
    if y.graph != target:
        raise ReductionError("forward map does not land on the target graph")
    return theta(y)[0]


def generator_map(images, source, target) -> Callable[[Element], Element]:
    return lambda x: apply_generator_map(images, source, target, x)

