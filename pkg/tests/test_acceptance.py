"""Acceptance suite: twelve criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.

Tolerances: every comparison is exact.  Coefficients are Python integers or
``fractions.Fraction`` values, so equality is decided with zero tolerance;
the sample counts and the seed of each criterion are fixed below.
"""

from __future__ import annotations

import io
import json
import pathlib
import random
import sys

HERE = pathlib.Path(__file__).resolve().parent
if str(HERE) not in sys.path:
    sys.path.insert(0, str(HERE))

import pytest

from leavitt import (Element, HTRep, Monomial, NotUnitary, PrefixBasis, basis_sum,
                     build_collapse, build_gm, canonical, classify_unitary,
                     collapse_iso, collapse_iso_inverse, compose_ht, du_split, DUObstruction,
                     DUSplit, edge, edge_star, embed_ht, equals_ht, expand_monomial,
                     format_element, inverse_ht, is_basic_up_to, is_diagonal_unitary,
                     is_identity, is_symmetric, is_unitary, load_graph, parse_element, path,
                     prefix_probe, diagonal_prefix_probe, refine_to_cover, simple_expand, symmetric_basic_check,
                     symmetric_left_form_check, theta, transport_ht, translate_from_gm,
                     translate_to_gm, unit, validate_star_hom, vertex)
from leavitt.cli import main as cli_main
from leavitt.reduce import collapse_images
from leavitt.sampling import (random_basis, random_diagonal, random_element, random_graph,
                              random_rep, random_rewrite, random_signed_unitary)

from oracles import (action_vector, all_walks_up_to, brute_is_basis, doubled_plus_part,
                     oracle_equal, oracle_zero, rank_of, terms_of, walks_of_length,
                     walks_up_to, word_product)

DATA = HERE / "data"
TOLERANCE = 0  # exact arithmetic throughout

CRITERIA = {}
RESULTS = {}


def criterion(n, title):
    def wrap(fn):
        CRITERIA[n] = (title, fn)
        return fn
    return wrap


def run_criterion(n):
    title, fn = CRITERIA[n]
    try:
        detail = fn()
        RESULTS[n] = (True, detail or "")
    except AssertionError as exc:
        RESULTS[n] = (False, str(exc) or "assertion failed")
    except Exception as exc:  # recorded as a failure, not a crash of the runner
        RESULTS[n] = (False, f"{type(exc).__name__}: {exc}")
    return RESULTS[n]


def summary_lines():
    out = []
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {n:2d}: {CRITERIA[n][0]}"
        if detail:
            line += f"  [{detail}]"
        out.append(line)
    return out


def G(name):
    return load_graph(DATA / f"{name}.json")


# -- 1 --------------------------------------------------------------------------------

def _identity_suite(g):
    checks = 0
    zero = Element(g)
    for v in g.vertices:
        for w in g.vertices:
            got = vertex(g, v) * vertex(g, w)
            assert got == (vertex(g, v) if v == w else zero), f"{v}{w}"
            checks += 1
    for e in g.edges:
        E, Es = edge(g, e.id), edge_star(g, e.id)
        assert vertex(g, e.src) * E == E and E * vertex(g, e.dst) == E
        assert Es * vertex(g, e.src) == Es and vertex(g, e.dst) * Es == Es
        for v in g.vertices:
            if v != e.src:
                assert (vertex(g, v) * E) == 0
            if v != e.dst:
                assert (E * vertex(g, v)) == 0
        for f in g.edges:
            got = Es * edge(g, f.id)
            assert got == (vertex(g, e.dst) if e.id == f.id else zero), f"{e.id}'{f.id}"
            checks += 1
    for v in g.vertices:
        outs = g.out_edges(v)
        s = zero
        for eid in outs:
            s = s + edge(g, eid) * edge_star(g, eid)
        assert s == vertex(g, v), f"CK2 at {v}"
        checks += 1
    walks = all_walks_up_to(g, 2)
    for q in walks:
        for p in walks:
            got = path(g, q).star() * path(g, p)
            if q.start != p.start:
                want = zero
            elif q.is_prefix_of(p):
                want = path(g, q.residual(p))
            elif p.is_prefix_of(q):
                want = path(g, p.residual(q)).star()
            else:
                want = zero
            assert got.terms == want.terms, f"{q}* {p}"
            ref = word_product(g, {(q.__class__(q.end, (), q.end), q): 1},
                               {(p, p.__class__(p.end, (), p.end)): 1})
            assert terms_of(got) == ref, f"word oracle {q}* {p}"
            checks += 1
    for p in walks:
        for q in walks:
            if p.end != q.end:
                assert (path(g, p) * path(g, q).star()) == 0, f"{p} {q}*"
                checks += 1
    roots = walks_up_to(g, 2)
    monos = [(p, q) for p in roots for q in roots if p.end == q.end]
    for m1 in monos:
        x = Element.monomial(g, *m1)
        for m2 in monos:
            y = Element.monomial(g, *m2)
            assert terms_of(x * y) == word_product(g, {m1: 1}, {m2: 1}), f"{m1} {m2}"
            checks += 1
    return checks


@criterion(1, "generator identities, q*p rule, terminal mismatch (walks <= 2, 3 fixtures)")
def c1():
    total = sum(_identity_suite(G(n)) for n in ("rose", "g", "two_vertex"))
    return f"{total} exact checks"


# -- 2 --------------------------------------------------------------------------------

@criterion(2, "sum of b b* over a basis equals the unit (200 random bases)")
def c2():
    rng = random.Random(2002)
    for i in range(200):
        g = random_graph(rng, max_vertices=4, max_edges=8)
        B = random_basis(rng, g, steps=5)
        assert brute_is_basis(g, B.walks), f"sample {i}: not a basis"
        s = basis_sum(B.walks, g)
        assert s == unit(g), f"sample {i}"
        assert oracle_equal(g, terms_of(s), terms_of(unit(g))), f"sample {i} (oracle)"
    return "200/200"


# -- 3 --------------------------------------------------------------------------------

def _zero_element(rng, g):
    if rng.random() < 0.5:
        x = random_element(rng, g)
        return random_rewrite(rng, x, steps=rng.randint(1, 4)) - x
    acc = []
    for _ in range(rng.randint(1, 3)):
        m = next(iter(random_element(rng, g, terms=1).terms))
        k = rng.choice((-2, -1, 1, 2))
        acc.append((m, k))
        acc.extend((m2, -c) for m2, c in expand_monomial(g, m, k).terms.items())
    return Element(g, acc)


@criterion(3, "zero elements vanish, prefix probe vanishes, independence ranks")
def c3():
    rng = random.Random(3003)
    probes = 0
    nonempty = 0
    literal_bad = []
    for i in range(100):
        g = random_graph(rng)
        z = _zero_element(rng, g)
        nonempty += bool(z.terms)
        assert canonical(z).is_empty(), f"sample {i}: canonical form not empty"
        assert oracle_zero(g, terms_of(z)), f"sample {i}: oracle"
        walks = {w for m in z.terms for w in m}
        for p in walks_up_to(g, 4):
            if any(p.is_prefix_of(w) and len(p) < len(w) for w in walks):
                continue
            assert diagonal_prefix_probe(z, p) == 0, f"sample {i}: diagonal probe at {p}"
            if prefix_probe(z, p) != 0:
                literal_bad.append((i, str(p)))
            probes += 1
    assert nonempty > 50, "too few non-trivial zero representations"
    # ranks over Q of the cylinder action
    fam = 0
    for i in range(40):
        g = random_graph(rng)
        pool = all_walks_up_to(g, 3)
        k = rng.randint(2, min(8, len(pool)))
        chosen = rng.sample(pool, k)
        elems = []
        for p in chosen:
            e = Element.monomial(g, p, g.empty(p.end))
            elems.append(e.star() if rng.random() < 0.5 else e)
        elems = list({frozenset(terms_of(e).items()): e for e in elems}.values())
        L = 3
        probe = [w for v in g.vertices for w in walks_of_length(g, L, v)]
        r = rank_of([action_vector(g, terms_of(e), probe) for e in elems])
        assert r == len(elems), f"family {i}: rank {r} < {len(elems)}"
        B = random_basis(rng, g, steps=4)
        cols = rng.sample(B.walks, rng.randint(1, len(B)))
        lefts = [q for q in all_walks_up_to(g, 2) if q.start == g.root]
        monos = []
        for c in cols:
            ps = [p for p in lefts if p.end == c.end]
            if ps:
                monos.append(Element.monomial(g, rng.choice(ps), c))
        L = max(len(c) for c in B.walks)
        probe = walks_of_length(g, L)
        assert rank_of([action_vector(g, terms_of(m), probe) for m in monos]) == len(monos)
        fam += 2
    # the oracle does detect a genuine dependence
    rose = G("rose")
    dep = [unit(rose), vertex(rose, "R")]
    assert rank_of([action_vector(rose, terms_of(e), walks_of_length(rose, 1)) for e in dep]) == 1
    # fixed counterexample to the literal probe statement
    z = parse_element("a.a'.a' - a.a.a'.a'.a' - a.b.b'.a'.a'", rose)
    assert z == 0 and oracle_zero(rose, terms_of(z))
    p = rose.walk("a.a.b")
    literal = prefix_probe(z, p)
    assert diagonal_prefix_probe(z, p) == 0
    ok = (f"100 zero elements, {probes} probes where the diagonal probe vanishes, "
          f"{fam} rank families")
    if literal_bad or literal != 0:
        first = f"first: sample {literal_bad[0][0]} at {literal_bad[0][1]}" if literal_bad else "none"
        raise AssertionError(
            f"literal probe nonzero on zero elements: {len(literal_bad)}/{probes} random probes "
            f"({first}) and {literal} on a(aa)* - aa(aaa)* - ab(aab)* at a.a.b; "
            f"everything else holds: {ok}")
    return ok


# -- 4 --------------------------------------------------------------------------------

@criterion(4, "embedding is a unitary-valued injective homomorphism (100 pairs)")
def c4():
    rng = random.Random(4004)
    trivial_hits = 0
    for i in range(100):
        g = random_graph(rng)
        f, h = random_rep(rng, g), random_rep(rng, g)
        x = embed_ht(f)
        assert is_unitary(x), f"sample {i}: not unitary"
        assert embed_ht(compose_ht(f, inverse_ht(h))) == x * embed_ht(h).star(), f"sample {i}"
        # injectivity on a mixture of trivial and non-trivial classes
        r = compose_ht(f, inverse_ht(f)) if i % 2 else f
        if embed_ht(r) == unit(g):
            trivial_hits += 1
            assert is_identity(r), f"sample {i}: unit image but not identity"
            assert _acts_trivially(g, r), f"sample {i}: oracle"
        else:
            assert not _acts_trivially(g, r), f"sample {i}: identity with non-unit image"
    assert trivial_hits >= 50
    return f"100 pairs, {trivial_hits} identity classes"


def _acts_trivially(g, r):
    """Brute force: ``r`` fixes every walk of length ``max |b|``."""
    L = max(len(b) for b in list(r.mapping) + list(r.mapping.values()))
    dom = {b.edges: c for b, c in r.mapping.items()}
    for w in walks_of_length(g, L):
        for i in range(L + 1):
            if w.edges[:i] in dom:
                c = dom[w.edges[:i]]
                if c.edges + w.edges[i:] != w.edges:
                    return False
                break
    return True


# -- 5 --------------------------------------------------------------------------------

@criterion(5, "classification reconstructs 100 signed-permutation unitaries, rejects 20")
def c5():
    rng = random.Random(5005)
    for i in range(100):
        g = random_graph(rng)
        Bw, Cw, K, x = random_signed_unitary(rng, g)
        cl = classify_unitary(x)
        assert oracle_equal(g, terms_of(cl.element()), terms_of(x)), f"sample {i}"
        M = cl.matrix
        assert (abs(M).sum(axis=0) == 1).all() and (abs(M).sum(axis=1) == 1).all()
        assert brute_is_basis(g, cl.left_basis) and brute_is_basis(g, cl.right_basis)
        # same group element and same signs as the input triple
        row = {j: next(k for k in range(len(Bw)) if K[k][j]) for j in range(len(Cw))}
        rep_in = HTRep(g, {c: Bw[row[j]] for j, c in enumerate(Cw)})
        diag_in = Element(g, {Monomial(c, c): K[row[j]][j] for j, c in enumerate(Cw)})
        rep_out, diag_out = theta(x)
        assert equals_ht(rep_in, rep_out), f"sample {i}: permutation part"
        assert diag_in == diag_out, f"sample {i}: sign part"
    seen = {}
    rejected = 0
    while rejected < 20:
        g = random_graph(rng)
        kind = rejected % 4
        _, _, _, u = random_signed_unitary(rng, g)
        if kind == 0:
            y = random_element(rng, g)
        elif kind == 1:
            y = u.scale(2)
        elif kind == 2:
            m = next(iter(u.terms))
            y = Element(g, {k: c for k, c in u.terms.items() if k != m})
        else:
            y = u + random_element(rng, g, terms=1)
        if y * y.star() == unit(g) and y.star() * y == unit(g):
            continue
        try:
            classify_unitary(y)
        except NotUnitary as exc:
            assert exc.check in {"rooted", "integral", "nonzero", "row", "column",
                                 "right-basis", "orthogonal"}
            seen[exc.check] = seen.get(exc.check, 0) + 1
            rejected += 1
            continue
        raise AssertionError(f"non-unitary {y} accepted")
    return "100 reconstructed; rejected by " + ", ".join(f"{k}:{v}" for k, v in sorted(seen.items()))


# -- 6 --------------------------------------------------------------------------------

@criterion(6, "theta inverts the embedding (100 reps); kernel is the diagonal group (50)")
def c6():
    rng = random.Random(6006)
    for i in range(100):
        g = random_graph(rng)
        r = random_rep(rng, g)
        rep, diag = theta(embed_ht(r))
        assert equals_ht(rep, r), f"sample {i}"
        assert diag == unit(g)
    kernel = 0
    for i in range(50):
        g = random_graph(rng)
        f = random_rep(rng, g)
        r = compose_ht(f, inverse_ht(f)) if i % 2 else f
        d = random_diagonal(rng, g)
        u = embed_ht(r) * d if rng.random() < 0.5 else d * embed_ht(r)
        in_kernel = is_identity(theta(u)[0])
        assert in_kernel == is_diagonal_unitary(u), f"sample {i}"
        assert in_kernel == _acts_trivially(g, r), f"sample {i}: oracle"
        kernel += in_kernel
    return f"100 round trips; {kernel}/50 in the kernel"


# -- 7 --------------------------------------------------------------------------------

@criterion(7, "diagonal splits (20 x 20) and obstructions for 20 non-diagonal unitaries")
def c7():
    rng = random.Random(7007)
    for i in range(20):
        g = random_graph(rng)
        x = random_diagonal(rng, g)
        assert is_diagonal_unitary(x)
        for j in range(20):
            y = random_element(rng, g)
            res = du_split(x, y)
            assert isinstance(res, DUSplit), f"sample {i}/{j}"
            assert res.plus.is_integral() and res.minus.is_integral()
            assert res.plus + res.minus == y
            assert x * res.plus == res.plus
            assert x * res.minus == -res.minus
    rational = 0
    n = 0
    while n < 20:
        g = random_graph(rng)
        _, _, _, x = random_signed_unitary(rng, g)
        if is_diagonal_unitary(x):
            continue
        res = du_split(x, unit(g))
        assert isinstance(res, DUObstruction), f"non-diagonal sample {n}"
        assert res.witness == Element.monomial(g, res.b0, res.b0)
        assert res.coeff.denominator == 2
        # oracle: 2 y+ = y0 + x y0 would act with even coefficients
        xt = terms_of(x)
        coeffs = doubled_plus_part(g, xt, res.b0, 0)
        assert any(c % 2 for c in coeffs), f"sample {n}: no odd coefficient"
        y0 = {(res.b0, res.b0): 1}
        x2y0 = word_product(g, xt, word_product(g, xt, y0))
        assert res.rational == oracle_equal(g, x2y0, y0)
        rational += res.rational
        n += 1
    return f"400 splits; 20 parity obstructions ({rational} with a rational split)"


# -- 8 --------------------------------------------------------------------------------

def _random_symmetric_basic(rng, g):
    D = random_basis(rng, g, steps=4)
    ws = D.walks
    terms = {}
    for i, b in enumerate(ws):
        for j in range(i, len(ws)):
            c = ws[j]
            if b.end != c.end or rng.random() < 0.5:
                continue
            k = rng.randint(-3, 3)
            if k:
                terms[Monomial(b, c)] = k
                terms[Monomial(c, b)] = k
    if not terms:
        terms[Monomial(ws[0], ws[0])] = 1
    return Element(g, terms)


def _antichain(ws):
    keys = {w.edges for w in ws}
    return all(w.edges[:i] not in keys for w in ws for i in range(len(w.edges)))


@criterion(8, "symmetric basic elements give one basis and symmetric K; left-form symmetry")
def c8():
    rng = random.Random(8008)
    rewritten = 0
    done = 0
    while done < 100:
        g = random_graph(rng)
        x = _random_symmetric_basic(rng, g)
        if rng.random() < 0.5:
            y = random_rewrite(rng, x, steps=rng.randint(1, 3))
            if _antichain(y.left_walks()) and _antichain(y.right_walks()):
                x, rewritten = y, rewritten + 1
        D, K = symmetric_basic_check(x)
        assert (K == K.T).all(), f"sample {done}"
        assert brute_is_basis(g, D.walks)
        back = Element(g, {Monomial(D.walks[i], D.walks[j]): int(K[i, j])
                           for i in range(len(D)) for j in range(len(D)) if K[i, j]})
        assert back == x, f"sample {done}: reconstruction"
        done += 1
    for i in range(100):
        g = random_graph(rng)
        z = random_element(rng, g)
        x = canonical(z + z.star())
        assert is_symmetric(x)
        B = refine_to_cover(PrefixBasis.trivial(g), x.left_walks())
        for _ in range(rng.randint(0, 2)):
            B = simple_expand(B, rng.choice(B.walks))
        assert symmetric_left_form_check(x, B), f"left form {i}"
    return f"100 basic ({rewritten} with distinct left/right walk sets), 100 left forms"


# -- 9 --------------------------------------------------------------------------------

@criterion(9, "contraction onto M = {R}: rose, round trips (100), transport (50 pairs)")
def c9():
    g = G("g")
    r = build_gm(g, ["R"])
    t = r.target
    assert t.vertices == ("R",) and len(t.edges) == 2
    assert all(e.src == "R" and e.dst == "R" for e in t.edges)
    assert sorted(str(w) for w in r.edge_dictionary.values()) == ["a", "e.g"]
    rng = random.Random(9009)
    for i in range(100):
        x = random_element(rng, g)
        y = translate_to_gm(r, x)
        assert translate_from_gm(r, y) == x, f"sample {i}"
        u = random_element(rng, t)
        assert translate_to_gm(r, translate_from_gm(r, u)).terms == u.terms, f"sample {i} back"
    fwd = lambda x: translate_to_gm(r, x)
    for i in range(50):
        f, h = random_rep(rng, g), random_rep(rng, g)
        lhs = transport_ht(fwd, t, compose_ht(f, h))
        rhs = compose_ht(transport_ht(fwd, t, f), transport_ht(fwd, t, h))
        assert equals_ht(lhs, rhs), f"pair {i}"
    return "G_M has 2 petals; 200 round trips; 50 pairs"


# -- 10 -------------------------------------------------------------------------------

@criterion(10, "collapse w = u into v = R: relations, round trips (100), transport (50)")
def c10():
    g = G("collapse")
    r = build_collapse(g, "u", "R", {"b": "a"})
    report = validate_star_hom(collapse_images(r), r.source, r.target)
    assert report.ok, "; ".join(report.problems)
    rng = random.Random(10010)
    for i in range(100):
        x = random_element(rng, g)
        y = collapse_iso(r, x)
        assert y.is_integral()
        back = collapse_iso_inverse(r, y)
        assert back.is_integral() and back == x, f"sample {i}"
        u = random_element(rng, r.target)
        assert collapse_iso(r, collapse_iso_inverse(r, u)) == u, f"sample {i} back"
    fwd = lambda x: collapse_iso(r, x)
    for i in range(50):
        f, h = random_rep(rng, g), random_rep(rng, g)
        lhs = transport_ht(fwd, r.target, compose_ht(f, h))
        rhs = compose_ht(transport_ht(fwd, r.target, f), transport_ht(fwd, r.target, h))
        assert equals_ht(lhs, rhs), f"pair {i}"
    return "relations pass; 200 round trips; 50 pairs"


# -- 11 -------------------------------------------------------------------------------

@criterion(11, "non-basic sentinel p + p.p on the one-loop graph")
def c11():
    g = G("one_loop")
    x = parse_element("p + p.p", g)
    try:
        classify_unitary(x)
    except NotUnitary as exc:
        check = exc.check
    else:
        raise AssertionError("p + p.p was classified")
    w = is_basic_up_to(x, 6)
    assert w is None, "search claims a basic representation"
    return f"rejected by check {check!r}; isBasicUpTo(6) = unknown"


# -- 12 -------------------------------------------------------------------------------

def _cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    old = sys.stderr
    sys.stderr = err
    try:
        code = cli_main(list(argv), out=out)
    finally:
        sys.stderr = old
    return code, out.getvalue()


EXIT_MATRIX = [
    ([], 2),
    (["nf", "a"], 2),
    (["--graph", "rose", "bogus"], 2),
    (["--graph", "rose", "eq", "a"], 2),
    (["--graph", "rose", "eq", "a", "a"], 0),
    (["--graph", "rose", "nf", "a.zz"], 1),
    (["--graph", "rose", "nf", "a..b"], 1),
    (["--graph", "rose", "nf", "1/2*a"], 1),
    (["--graph", "rose", "--rational", "nf", "1/2*a"], 0),
    (["--graph", "rose", "theta", "a.b'"], 1),
    (["--graph", "rose", "ht-validate", "bad_rep"], 1),
    (["--graph", "rose", "ht-validate", "swap"], 0),
    (["--graph", "rose", "ht-compose", "swap", "malformed"], 1),
    (["--graph", "malformed", "nf", "a"], 1),
    (["--graph", "nowhere", "nf", "a"], 1),
    (["--graph", "g", "reduce-gm", "--keep", "R"], 0),
    (["--graph", "cycle_avoiding", "reduce-gm", "--keep", "R"], 1),
    (["--graph", "collapse", "collapse", "--w", "u", "--v", "R", "--theta", "b=a"], 0),
    (["--graph", "collapse", "collapse", "--w", "u", "--v", "R", "--theta", "b=e"], 1),
    (["--graph", "g", "transport", "g_swap", "--keep", "R"], 0),
]

EXPECTED_MACHINE = [
    (["--graph", "rose", "--machine", "eq", "a.a' + b.b'", "@R"],
     '{"command":"eq","result":true}\n'),
    (["--graph", "rose", "--machine", "theta", "a.b' + b.a'"],
     '{"command":"theta","rep":{"domain":["a","b"],"map":{"a":"b","b":"a"}},"diagonal":"@R"}\n'),
    (["--graph", "g", "--machine", "reduce-gm", "--keep", "R"],
     '{"command":"reduce-gm","graph":{"vertices":["R"],"edges":[{"id":"a","from":"R","to":"R"},'
     '{"id":"e_g","from":"R","to":"R"}],"root":"R"},"dictionary":{"a":"a","e_g":"e.g"}}\n'),
]


def _resolve(argv):
    out = []
    for i, a in enumerate(argv):
        prev = argv[i - 1] if i else ""
        is_file = prev == "--graph" or a in {"bad_rep", "swap", "malformed", "g_swap"}
        out.append(str(DATA / f"{a}.json") if is_file else a)
    return out


@criterion(12, "CLI: 200 print/parse round trips, exit-code matrix, three machine examples")
def c12():
    rng = random.Random(12012)
    for i in range(200):
        g = random_graph(rng)
        x = random_element(rng, g)
        s = format_element(x)
        y = parse_element(s, g)
        assert y.terms == x.terms and format_element(y) == s, f"round trip {i}: {s}"
    for argv, want in EXIT_MATRIX:
        code, _ = _cli(*_resolve(argv))
        assert code == want, f"{argv}: exit {code}, expected {want}"
    for argv, want in EXPECTED_MACHINE:
        code, out = _cli(*_resolve(argv))
        assert code == 0 and out == want, f"{argv}: got {out!r}"
        json.loads(out)
    human = _cli(*_resolve(["--graph", "rose", "eq", "a.a' + b.b'", "@R"]))
    assert human == (0, "true\n")
    return f"200 round trips, {len(EXIT_MATRIX)} exit codes, 3 exact outputs"


# -- pytest glue ------------------------------------------------------------------------

# Criterion 3 asks the literal prefix-probe sum to vanish on zero elements.
# That statement is false (see the fixed counterexample in c3), so the
# criterion is expected to report FAIL; strict, so a pass would be flagged.
KNOWN_FALSE = {3: "the literal prefix-probe sum is not an invariant of the element"}


@pytest.mark.parametrize("n", [
    pytest.param(n, marks=pytest.mark.xfail(strict=True, reason=KNOWN_FALSE[n]))
    if n in KNOWN_FALSE else n
    for n in range(1, 13)])
def test_criterion(n):
    ok, detail = run_criterion(n)
    assert ok, f"criterion {n}: {detail}"


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        run_criterion(n)
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
