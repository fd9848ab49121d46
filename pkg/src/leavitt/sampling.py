"""Random graphs, bases, elements and group elements for experiments and tests.

Every function takes a :class:`random.Random` instance so results are
reproducible from a seed.
"""

from __future__ import annotations

import random

from .algebra import Element, Monomial, expand_monomial
from .basis import PrefixBasis, simple_expand
from .graph import Graph, Walk
from .thompson import HTRep, compose_ht


def random_graph(rng: random.Random, max_vertices=4, max_edges=8) -> Graph:
    """A random rooted sink-free multigraph, every vertex reachable from the root."""
    n = rng.randint(1, max_vertices)
    names = ["R"] + [f"v{i}" for i in range(1, n)]
    edges = []
    # spanning arborescence from the root
    for i in range(1, n):
        edges.append((names[rng.randrange(i)], names[i]))
    for v in names:
        if not any(s == v for s, _ in edges):
            edges.append((v, rng.choice(names)))
    while len(edges) < max_edges and (len(edges) < n + 1 or rng.random() < 0.4):
        edges.append((rng.choice(names), rng.choice(names)))
    edges = edges[:max_edges]
    triples = [(f"e{i}", s, t) for i, (s, t) in enumerate(edges)]
    return Graph.from_edges("R", triples, vertices=names)


def random_basis(rng: random.Random, g: Graph, steps=5, start=None) -> PrefixBasis:
    """Apply up to ``steps`` random simple expansions to the trivial basis."""
    B = PrefixBasis.trivial(g, start)
    for _ in range(rng.randint(0, steps)):
        B = simple_expand(B, rng.choice(B.walks))
    return B


def random_walk(rng: random.Random, g: Graph, start=None, max_len=3, length=None) -> Walk:
    n = rng.randint(0, max_len) if length is None else length
    p = g.empty(start)
    for _ in range(n):
        p = g.extend(p, rng.choice(g.out_edges(p.end)))
    return p


def random_walk_to(rng: random.Random, g: Graph, end, start=None, max_len=3, tries=30):
    """A random walk ending at ``end``, or None if none was hit."""
    for _ in range(tries):
        p = random_walk(rng, g, start, max_len)
        if p.end == end:
            return p
    return None


def random_element(rng: random.Random, g: Graph, terms=3, max_len=3, coeffs=(-3, 3)) -> Element:
    """A random rooted integral element."""
    acc = {}
    for _ in range(rng.randint(1, terms)):
        p = random_walk(rng, g, max_len=max_len)
        q = random_walk_to(rng, g, p.end, max_len=max_len) or p
        k = 0
        while k == 0:
            k = rng.randint(*coeffs)
        m = Monomial(p, q)
        acc[m] = acc.get(m, 0) + k
    return Element(g, acc)


def random_rewrite(rng: random.Random, x: Element, steps=3) -> Element:
    """Apply random ``p q* -> sum (p e)(q e)*`` rewrites to single monomials."""
    g = x.graph
    terms = dict(x.terms)
    for _ in range(steps):
        if not terms:
            break
        m = rng.choice(sorted(terms, key=lambda t: (t.left.sort_key(), t.right.sort_key())))
        c = terms.pop(m)
        for m2, c2 in expand_monomial(g, m, c).terms.items():
            terms[m2] = terms.get(m2, 0) + c2
        terms = {k: v for k, v in terms.items() if v != 0}
    return Element(g, terms)


def random_permutation_rep(rng: random.Random, g: Graph, steps=4) -> HTRep:
    """A terminal-preserving permutation of a random basis."""
    B = random_basis(rng, g, steps)
    by_end = {}
    for b in B.walks:
        by_end.setdefault(b.end, []).append(b)
    mapping = {}
    for group in by_end.values():
        img = group[:]
        rng.shuffle(img)
        mapping.update(zip(group, img))
    return HTRep(g, mapping)


def random_rep(rng: random.Random, g: Graph, factors=3, steps=4) -> HTRep:
    """A product of random basis permutations; domain and codomain usually differ."""
    r = HTRep.identity(g)
    for _ in range(rng.randint(1, factors)):
        r = compose_ht(random_permutation_rep(rng, g, steps), r)
    return r


def random_diagonal(rng: random.Random, g: Graph, steps=4) -> Element:
    B = random_basis(rng, g, steps)
    return Element(g, {Monomial(b, b): rng.choice((1, -1)) for b in B.walks})


def random_signed_unitary(rng: random.Random, g: Graph, steps=4):
    """``(B, C, K, x)`` with ``x = sum K[i, j] B[i] C[j]*`` unitary."""
    r = random_rep(rng, g, steps=steps)
    C = r.domain.walks
    B = r.codomain.walks
    idx = {b: i for i, b in enumerate(B)}
    K = [[0] * len(C) for _ in B]
    for j, c in enumerate(C):
        K[idx[r.mapping[c]]][j] = rng.choice((1, -1))
    terms = {Monomial(B[i], C[j]): K[i][j] for i in range(len(B)) for j in range(len(C)) if K[i][j]}
    return B, C, K, Element(g, terms)
