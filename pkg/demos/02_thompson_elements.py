# Higman-Thompson elements of the binary tree as unitaries.

import numpy as np

from leavitt import (Graph, HTRep, classify_unitary, compose_ht, contract_minimal, embed_ht,
                     inverse_ht, is_identity, theta)

rose = Graph.from_edges("R", [("a", "R", "R"), ("b", "R", "R")])
w = rose.walk

# the generator x0 of Thompson's group F, as a map between bases
x0 = HTRep(rose, {w("a.a"): w("a"), w("a.b"): w("b.a"), w("b"): w("b.b")})
x1 = HTRep(rose, {w("a"): w("a"), w("b.a.a"): w("b.a"), w("b.a.b"): w("b.b.a"),
                  w("b.b"): w("b.b.b")})
print("x0      :", x0)
print("x0^-1 x1 x0 :", contract_minimal(compose_ht(inverse_ht(x0), compose_ht(x1, x0))))

u = embed_ht(x0)
print("embedded:", u)
cl = classify_unitary(u)
print(cl)
K = cl.matrix
print("K K^T = I:", bool((K @ K.T == np.eye(len(K), dtype=K.dtype)).all()))

rep, diag = theta(u)
print("theta recovers x0:", rep == x0, " diagonal:", diag)
print("x0 x0^-1 trivial:", is_identity(compose_ht(x0, inverse_ht(x0))))
