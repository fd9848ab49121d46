# Arithmetic in the rooted algebra of the two-petal rose.
#
# Run from the repository root:  python3 demos/01_rose_arithmetic.py

from leavitt import (Graph, canonical, expand_right, format_element, parse_element, unit)

rose = Graph.from_edges("R", [("a", "R", "R"), ("b", "R", "R")])

x = parse_element("a.b' + b.a'", rose)      # a b* + b a*
print("x        =", x)
print("x x      =", x * x)                   # a a* + b b*
print("== unit? ", x * x == unit(rose))
print("nf(x x)  =", canonical(x * x))        # @R, the root vertex

# the same element at right length 2, and back
y = expand_right(parse_element("a.b'", rose), 2)
print("a b* at level 2:", y)
print("contracted:     ", format_element(canonical(y)))

# a zero element that does not look like one
z = parse_element("a.a'.a' - a.a.a'.a'.a' - a.b.b'.a'.a'", rose)
print("z =", z, "  z == 0:", z == 0)
