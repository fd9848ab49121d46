# Diagonal unitaries split every element into +1 and -1 parts; other
# unitaries do not.

from leavitt import Graph, du_split, is_diagonal_unitary, parse_element, unit
from leavitt.expr import format_monomial

rose = Graph.from_edges("R", [("a", "R", "R"), ("b", "R", "R")])

d = parse_element("a.a' - b.b'", rose)
y = parse_element("a.b' + 2*b.a.a' + @R", rose)
print("diagonal?", is_diagonal_unitary(d))
s = du_split(d, y)
print("y+ =", s.plus)
print("y- =", s.minus)
print("checks:", s.plus + s.minus == y, d * s.plus == s.plus, d * s.minus == -s.minus)

swap = parse_element("a.b' + b.a'", rose)
obs = du_split(swap, unit(rose))
print("swap is diagonal?", is_diagonal_unitary(swap))
print("witness", obs.witness, "forces coefficient", obs.coeff, "at", format_monomial(*obs.monomial))
