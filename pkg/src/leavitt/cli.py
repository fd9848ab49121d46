"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad file, bad expression,
failed precondition), 2 on a usage error.  With ``--machine`` every result
is printed as one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import canonical
from .errors import LPAError
from .expr import format_element, format_monomial, parse_element
from .graph import load_graph, validate_graph
from .reduce import (build_collapse, build_gm, collapse_iso, transport_ht,
                     translate_to_gm)
from .thompson import (compose_ht, contract_minimal, embed_ht, equals_ht, inverse_ht,
                       load_rep, validate_rep)
from .unitary import (DUObstruction, classify_unitary, du_split, is_diagonal_unitary,
                      is_unitary, theta)


class Session:
    def __init__(self, graph, rational=False, machine=False, out=None):
        self.graph = graph
        self.rational = rational
        self.machine = machine
        self.out = out or sys.stdout

    def element(self, src):
        return parse_element(src, self.graph, rational=self.rational)

    def emit(self, command, human, **fields):
        if self.machine:
            print(json.dumps({"command": command, **fields}, separators=(",", ":")),
                  file=self.out)
        else:
            print(human, file=self.out)


def _fmt(x):
    return format_element(canonical(x))


def _rep_text(r):
    return ", ".join(f"{b}->{c}" for b, c in r.mapping.items())


def _parse_theta(spec):
    out = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise LPAError(f"bad theta entry {part!r}; expected e=d")
        e, d = part.split("=", 1)
        out[e.strip()] = d.strip()
    return out


def _keep(spec):
    return [v.strip() for v in spec.split(",") if v.strip()]


def _reduction(s, args):
    if args.keep is not None:
        if args.w or args.v or args.theta:
            raise LPAError("give either --keep or --w/--v/--theta")
        r = build_gm(s.graph, _keep(args.keep))
        return r.target, lambda x: translate_to_gm(r, x)
    if not (args.w and args.v and args.theta):
        raise LPAError("transport needs --keep or all of --w, --v, --theta")
    r = build_collapse(s.graph, args.w, args.v, _parse_theta(args.theta))
    return r.target, lambda x: collapse_iso(r, x)


def cmd_validate_graph(s, args):
    report = validate_graph(s.graph)
    s.emit("validate-graph", str(report), valid=report.ok, problems=report.problems)
    return 0 if report else 1


def cmd_nf(s, args):
    x = s.element(args.expr)
    s.emit("nf", _fmt(x), result=_fmt(x))
    return 0


def cmd_eq(s, args):
    res = s.element(args.x) == s.element(args.y)
    s.emit("eq", "true" if res else "false", result=res)
    return 0


def cmd_binary(name, op):
    def run(s, args):
        z = op(s.element(args.x), s.element(args.y))
        s.emit(name, _fmt(z), result=_fmt(z))
        return 0
    return run


def cmd_star(s, args):
    z = s.element(args.expr).star()
    s.emit("star", _fmt(z), result=_fmt(z))
    return 0


def cmd_is_unitary(s, args):
    res = is_unitary(s.element(args.expr))
    s.emit("is-unitary", "true" if res else "false", result=res)
    return 0


def cmd_classify(s, args):
    cl = classify_unitary(s.element(args.expr))
    s.emit("classify-unitary", str(cl), **cl.to_json())
    return 0


def cmd_theta(s, args):
    rep, diag = theta(s.element(args.expr))
    rep = contract_minimal(rep)
    d = _fmt(diag)
    s.emit("theta", f"rep: {_rep_text(rep)}\ndiagonal: {d}", rep=rep.to_json(), diagonal=d)
    return 0


def cmd_du_test(s, args):
    res = is_diagonal_unitary(s.element(args.expr))
    s.emit("du-test", "true" if res else "false", result=res)
    return 0


def cmd_du_split(s, args):
    res = du_split(s.element(args.x), s.element(args.y))
    if isinstance(res, DUObstruction):
        w = _fmt(res.witness)
        mono = format_monomial(*res.monomial)
        human = (f"no split: witness {w} (coefficient {res.coeff} at {mono} in (y0 + x y0)/2; "
                 f"rational split {'exists' if res.rational else 'does not exist'})")
        s.emit("du-split", human, split=False, witness=w, monomial=mono,
               coefficient=str(res.coeff), rational_split=res.rational)
        return 0
    p, m = _fmt(res.plus), _fmt(res.minus)
    s.emit("du-split", f"plus: {p}\nminus: {m}", split=True, plus=p, minus=m)
    return 0


def cmd_ht_validate(s, args):
    report = validate_rep(load_rep(args.file, s.graph))
    s.emit("ht-validate", str(report), valid=report.ok, problems=report.problems)
    return 0 if report else 1


def _checked_rep(s, path):
    r = load_rep(path, s.graph)
    report = validate_rep(r)
    if not report:
        raise LPAError(f"{path}: representative is {report}")
    return r


def _emit_rep(s, name, r):
    r = contract_minimal(r)
    s.emit(name, r.dumps(), rep=r.to_json())


def cmd_ht_compose(s, args):
    _emit_rep(s, "ht-compose", compose_ht(_checked_rep(s, args.f), _checked_rep(s, args.g)))
    return 0


def cmd_ht_inverse(s, args):
    _emit_rep(s, "ht-inverse", inverse_ht(_checked_rep(s, args.f)))
    return 0


def cmd_ht_eq(s, args):
    res = equals_ht(_checked_rep(s, args.f), _checked_rep(s, args.g))
    s.emit("ht-eq", "true" if res else "false", result=res)
    return 0


def cmd_ht_embed(s, args):
    x = embed_ht(_checked_rep(s, args.f))
    s.emit("ht-embed", _fmt(x), result=_fmt(x))
    return 0


def cmd_reduce_gm(s, args):
    r = build_gm(s.graph, _keep(args.keep))
    s.emit("reduce-gm", r.target.dumps(), graph=r.target.to_json(),
           dictionary={k: str(w) for k, w in r.edge_dictionary.items()})
    return 0


def cmd_collapse(s, args):
    r = build_collapse(s.graph, args.w, args.v, _parse_theta(args.theta))
    s.emit("collapse", r.target.dumps(), graph=r.target.to_json(), new_edge=r.new_edge)
    return 0


def cmd_transport(s, args):
    rep = _checked_rep(s, args.file)
    target, forward = _reduction(s, args)
    out = contract_minimal(transport_ht(forward, target, rep))
    s.emit("transport", out.dumps(), rep=out.to_json(), graph=target.to_json())
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="lpa", description=__doc__.splitlines()[0])
    p.add_argument("--graph", help="graph file (JSON)")
    p.add_argument("--rational", action="store_true", help="allow rational coefficients")
    p.add_argument("--machine", action="store_true", help="one JSON object per result line")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional, **kw):
        sp = sub.add_parser(name, **kw)
        for a in positional:
            sp.add_argument(a)
        sp.set_defaults(run=fn)
        return sp

    add("validate-graph", cmd_validate_graph)
    add("nf", cmd_nf, "expr", help="print the canonical form")
    add("eq", cmd_eq, "x", "y")
    add("mul", cmd_binary("mul", lambda x, y: x * y), "x", "y")
    add("add", cmd_binary("add", lambda x, y: x + y), "x", "y")
    add("star", cmd_star, "expr")
    add("is-unitary", cmd_is_unitary, "expr")
    add("classify-unitary", cmd_classify, "expr")
    add("theta", cmd_theta, "expr")
    add("du-test", cmd_du_test, "expr")
    add("du-split", cmd_du_split, "x", "y")
    add("ht-validate", cmd_ht_validate, "file")
    add("ht-compose", cmd_ht_compose, "f", "g")
    add("ht-inverse", cmd_ht_inverse, "f")
    add("ht-eq", cmd_ht_eq, "f", "g")
    add("ht-embed", cmd_ht_embed, "f")
    sp = add("reduce-gm", cmd_reduce_gm)
    sp.add_argument("--keep", required=True, help="comma-separated vertex ids")
    sp = add("collapse", cmd_collapse)
    sp.add_argument("--w", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--theta", required=True, help="e1=d1,e2=d2")
    sp = add("transport", cmd_transport, "file")
    sp.add_argument("--keep")
    sp.add_argument("--w")
    sp.add_argument("--v")
    sp.add_argument("--theta")
    return p


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out or sys.stdout
    if args.graph is None:
        parser.print_usage(sys.stderr)
        print("lpa: error: --graph is required", file=sys.stderr)
        return 2
    try:
        g = load_graph(args.graph)
        session = Session(g, args.rational, args.machine, out)
        if args.command != "validate-graph":
            report = validate_graph(g)
            if not report:
                raise LPAError(f"graph is {report}")
        return args.run(session, args)
    except (LPAError, OSError, UnicodeDecodeError) as exc:
        if args.machine:
            print(json.dumps({"command": args.command, "error": str(exc)},
                             separators=(",", ":")), file=out)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
