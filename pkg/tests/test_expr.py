import random

import pytest

from leavitt import (Element, Monomial, ParseError, format_element, parse_element, parse_raw,
                     path_action)
from leavitt.sampling import random_element, random_graph


def test_signed_terms(rose):
    x = parse_element("a.b' + -1 b.a'", rose)
    assert x.terms == {Monomial(rose.walk("a"), rose.walk("b")): 1,
                       Monomial(rose.walk("b"), rose.walk("a")): -1}
    assert x == parse_element("a.b' - b.a'", rose)
    assert x == parse_element("-b.a' + a.b'", rose)


def test_vertex_literal(rose):
    x = parse_element("@R", rose)
    assert format_element(x) == "@R"


def test_unknown_id_has_position(rose):
    with pytest.raises(ParseError) as info:
        parse_element("2*a.c'", rose)
    assert info.value.column == 5 and info.value.line == 1


@pytest.mark.parametrize("src", ["", "a..b", "a +", "2*", "a.b''", "1/2*a", "(a)", "@", "a b"])
def test_syntax_errors(rose, src):
    with pytest.raises(ParseError):
        parse_element(src, rose)


def test_multiline_position(rose):
    with pytest.raises(ParseError) as info:
        parse_element("a.a'\n + zz", rose)
    assert info.value.line == 2


def test_rational_mode(rose):
    x = parse_element("1/2*a - 3/4*b", rose, rational=True)
    assert format_element(x) == "1/2*a - 3/4*b"


def test_zero(rose):
    assert parse_element("0", rose).is_empty()
    assert format_element(Element(rose)) == "0"


def test_print_parse_round_trip():
    rng = random.Random(21)
    for _ in range(200):
        g = random_graph(rng)
        x = random_element(rng, g)
        y = parse_element(format_element(x), g)
        assert y.terms == x.terms
        assert format_element(y) == format_element(x)


def test_path_action_examples(rose):
    w = rose.walk
    assert path_action(parse_raw("a", rose), w("b"), rose) == {w("a.b"): 1}
    assert path_action(parse_raw("a'", rose), w("a.b"), rose) == {w("b"): 1}
    assert path_action(parse_raw("a'", rose), w("b"), rose) == {}
