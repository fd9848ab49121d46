"""Randomized algebraic identities driven by hypothesis seeds."""

import random

from hypothesis import given, settings, strategies as st

from leavitt import (canonical, compose_ht, embed_ht, equals_ht, format_element, inverse_ht,
                     parse_element, theta, unit)
from leavitt.sampling import random_element, random_graph, random_rep, random_rewrite

from oracles import oracle_equal, terms_of, word_product

seeds = st.integers(min_value=0, max_value=2**32 - 1)
fast = settings(max_examples=40, deadline=None)


def setup(seed, **kw):
    rng = random.Random(seed)
    return rng, random_graph(rng, **kw)


@fast
@given(seeds)
def test_canonical_idempotent_and_equal(seed):
    rng, g = setup(seed)
    x = random_element(rng, g)
    c = canonical(x)
    assert canonical(c).terms == c.terms
    assert oracle_equal(g, terms_of(c), terms_of(x))


@fast
@given(seeds)
def test_rewrites_preserve_equality(seed):
    rng, g = setup(seed)
    x = random_element(rng, g)
    y = random_rewrite(rng, x, steps=rng.randint(1, 5))
    assert x == y
    assert hash(x) == hash(y)


@fast
@given(seeds)
def test_product_associative_and_matches_words(seed):
    rng, g = setup(seed, max_vertices=3, max_edges=6)
    x, y, z = (random_element(rng, g, terms=2, max_len=2) for _ in range(3))
    assert terms_of(x * y) == word_product(g, terms_of(x), terms_of(y))
    assert (x * y) * z == x * (y * z)


@fast
@given(seeds)
def test_star_is_antimultiplicative(seed):
    rng, g = setup(seed)
    x, y = random_element(rng, g), random_element(rng, g)
    assert (x * y).star() == y.star() * x.star()


@fast
@given(seeds)
def test_parse_print_identity(seed):
    rng, g = setup(seed)
    x = random_element(rng, g)
    assert parse_element(format_element(x), g).terms == x.terms


@fast
@given(seeds)
def test_embedding_is_a_homomorphism(seed):
    rng, g = setup(seed)
    f, h = random_rep(rng, g), random_rep(rng, g)
    assert embed_ht(compose_ht(f, inverse_ht(h))) == embed_ht(f) * embed_ht(h).star()
    x = embed_ht(f)
    assert x * x.star() == unit(g)


@fast
@given(seeds)
def test_theta_inverts_embedding(seed):
    rng, g = setup(seed)
    f = random_rep(rng, g)
    r, d = theta(embed_ht(f))
    assert equals_ht(r, f)
    assert d == unit(g)
