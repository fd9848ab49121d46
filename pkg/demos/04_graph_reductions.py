# Two graph moves that keep the rooted integral algebra, and hence the
# Higman-Thompson group, unchanged.

from leavitt import (Graph, HTRep, build_collapse, build_gm, collapse_iso, collapse_iso_inverse,
                     parse_element, transport_ht, translate_from_gm, translate_to_gm)

g = Graph.from_edges("R", [("a", "R", "R"), ("e", "R", "v"), ("g", "v", "R")])
r = build_gm(g, ["R"])
print("G_M:", r.target.dumps())
print("dictionary:", {k: str(w) for k, w in r.edge_dictionary.items()})

x = parse_element("e.e' + a.g'.e'", g)
y = translate_to_gm(r, x)
print(x, "->", y, "->", translate_from_gm(r, y))

sw = HTRep(g, {g.walk("a"): g.walk("e.g"), g.walk("e.g"): g.walk("a")})
print("transported swap:", transport_ht(lambda z: translate_to_gm(r, z), r.target, sw))

h = Graph.from_edges("R", [("a", "R", "R"), ("e", "R", "u"), ("b", "u", "R")])
c = build_collapse(h, "u", "R", {"b": "a"})
print("collapsed:", c.target.dumps())
z = parse_element("a.b'.e' + e.b.a'", h)
print(z, "->", collapse_iso(c, z), "->", collapse_iso_inverse(c, collapse_iso(c, z)))
