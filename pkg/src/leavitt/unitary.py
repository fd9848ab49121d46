"""Unitaries of the rooted integral algebra and their classification.

Over the integers every unitary is ``sum K[b, c] b c*`` for prefix bases
``B``, ``C`` and a signed permutation matrix ``K`` that only pairs walks
with equal terminals.  The permutation part is a Higman-Thompson element;
the sign part is a diagonal unitary ``sum kappa_c c c*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (Element, Monomial, _antichain, canonical,
                      independent_right_form, left_basis_form, unit)
from .basis import (PrefixBasis, common_refinement, extend_to_basis, is_basis,
                    refine_to_cover)
from .errors import LPAError, NotUnitary
from .graph import Graph, Walk
from .thompson import HTRep, is_identity


def is_unitary(x: Element) -> bool:
    if not x.is_rooted() or not x.terms:
        return False
    one = unit(x.graph)
    xs = x.star()
    return x * xs == one and xs * x == one


@dataclass(frozen=True)
class UnitaryClassification:
    """``x = sum matrix[i, j] left_basis[i] right_basis[j]*``."""

    graph: Graph
    left_basis: tuple[Walk, ...]
    right_basis: tuple[Walk, ...]
    matrix: np.ndarray

    def element(self) -> Element:
        terms = {}
        for i, j in zip(*np.nonzero(self.matrix)):
            terms[Monomial(self.left_basis[i], self.right_basis[j])] = int(self.matrix[i, j])
        return Element(self.graph, terms)

    def permutation(self) -> list[int]:
        """``perm[j]`` is the row index of the nonzero entry in column ``j``."""
        return [int(np.flatnonzero(self.matrix[:, j])[0]) for j in range(len(self.right_basis))]

    def signs(self) -> list[int]:
        perm = self.permutation()
        return [int(self.matrix[perm[j], j]) for j in range(len(perm))]

    def cycles(self) -> str:
        perm = self.permutation()
        seen, out = set(), []
        for j in range(len(perm)):
            if j in seen or perm[j] == j:
                seen.add(j)
                continue
            cyc, k = [], j
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = perm[k]
            out.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(out) or "()"

    def to_json(self):
        return {"left_basis": [str(b) for b in self.left_basis],
                "right_basis": [str(c) for c in self.right_basis],
                "permutation": self.cycles(),
                "signs": self.signs()}

    def __str__(self):
        return "\n".join([
            "B: " + ", ".join(map(str, self.left_basis)),
            "C: " + ", ".join(map(str, self.right_basis)),
            "permutation: " + self.cycles(),
            "signs: " + " ".join(f"{s:+d}" for s in self.signs()),
        ])


def classify_unitary(x: Element) -> UnitaryClassification:
    """Find bases ``B``, ``C`` and the signed permutation matrix of ``x``.

    ``B`` is the coarsest basis covering the left walks of the canonical
    form.  Raises :class:`NotUnitary` naming the first failed check; the
    checks succeed exactly for unitaries over the integers.
    """
    g = x.graph
    if not x.is_rooted():
        raise NotUnitary("rooted", "some walk does not start at the root")
    if not x.is_integral():
        raise NotUnitary("integral", "coefficients must be integers")
    x = canonical(x)
    if not x.terms:
        raise NotUnitary("nonzero")
    B = refine_to_cover(PrefixBasis.trivial(g), x.left_walks())
    y = left_basis_form(x, B)
    rows = {b: [] for b in B.walks}
    for (b, m), k in y.terms.items():
        rows[b].append((m, k))
    col_of = {}
    for b, entries in rows.items():
        if len(entries) != 1:
            raise NotUnitary("row", f"row {b} has {len(entries)} nonzero entries")
        m, k = entries[0]
        if k not in (1, -1):
            raise NotUnitary("row", f"entry at ({b}, {m}) is {k}")
        if m in col_of:
            raise NotUnitary("column", f"right walk {m} is used by two rows")
        col_of[m] = b
    if not is_basis(g, col_of):
        raise NotUnitary("right-basis", "right walks do not form a basis")
    C = PrefixBasis(g, col_of, check=False)
    K = np.zeros((len(B), len(C)), dtype=np.int64)
    ri = {b: i for i, b in enumerate(B.walks)}
    for j, c in enumerate(C.walks):
        b = col_of[c]
        K[ri[b], j] = y.terms[Monomial(b, c)]
    n = len(B)
    if K.shape != (n, n) or not (K @ K.T == np.eye(n, dtype=np.int64)).all() \
            or not (K.T @ K == np.eye(n, dtype=np.int64)).all():
        raise NotUnitary("orthogonal", "K K^T != I")
    return UnitaryClassification(g, B.walks, C.walks, K)


def theta(x: Element) -> tuple[HTRep, Element]:
    """Split a unitary as ``x = embed(rep) * diagonal``.

    ``rep`` sends each ``c`` in the right basis to the left walk paired with
    it, and ``diagonal = sum kappa_c c c*`` carries the signs.
    """
    cl = classify_unitary(x)
    perm, signs = cl.permutation(), cl.signs()
    mapping = {c: cl.left_basis[perm[j]] for j, c in enumerate(cl.right_basis)}
    diag = Element(x.graph, {Monomial(c, c): s for c, s in zip(cl.right_basis, signs)})
    return HTRep(x.graph, mapping), diag


def is_diagonal_unitary(x: Element) -> bool:
    try:
        rep, _ = theta(x)
    except NotUnitary:
        return False
    return is_identity(rep)


@dataclass(frozen=True)
class DUSplit:
    plus: Element
    minus: Element


@dataclass(frozen=True)
class DUObstruction:
    """``witness = b0 b0*`` has no decomposition into +1/-1 parts.

    Any integral decomposition ``y+ + y-`` with ``x y+ = y+`` and
    ``x y- = -y-`` forces ``2 y+ = y0 + x y0``.  ``monomial`` is a term of
    ``(y0 + x y0)/2`` (with independent right walks) whose coefficient
    ``coeff`` is not an integer, which rules that out.  ``rational`` tells
    whether a decomposition exists at least over the rationals, which
    happens iff ``x^2 y0 == y0``.
    """

    witness: Element
    b0: Walk
    image: Walk
    monomial: Monomial
    coeff: Fraction
    rational: bool


def rational_split(x: Element, y: Element):
    """The unique candidate ``(y+, y-)`` over the rationals, or ``None``.

    From ``y = y+ + y-`` and ``x y = y+ - y-`` the parts are forced to be
    ``(y +- x y)/2``; they work iff ``x^2 y == y``.
    """
    xy = x * y
    if x * xy != y:
        return None
    half = Fraction(1, 2)
    return (y + xy).scale(half), (y - xy).scale(half)


def du_split(x: Element, y: Element) -> DUSplit | DUObstruction:
    """Split ``y`` by the sign of a diagonal unitary ``x``.

    For diagonal ``x = sum kappa_b b b*`` returns ``y+ + y- == y`` with
    ``x y+ == y+`` and ``x y- == -y-``.  For any other unitary returns an
    obstruction ``b0 b0*`` (``b0`` moved by the permutation part).
    """
    rep, diag = theta(x)
    g = x.graph
    if not is_identity(rep):
        b0 = next(b for b, c in rep.mapping.items() if b != c)
        y0 = Element.monomial(g, b0, b0)
        xy0 = x * y0
        plus = independent_right_form((y0 + xy0).scale(Fraction(1, 2)))
        for m, c in plus.sorted_terms():
            if isinstance(c, Fraction):
                return DUObstruction(y0, b0, rep.mapping[b0], m, c, x * xy0 == y0)
        raise LPAError("unexpected integral split for a non-diagonal unitary")
    if not y.is_rooted():
        raise LPAError("y must be an element of the rooted algebra")
    signs = {c: k for (c, _), k in diag.terms.items()}
    B = PrefixBasis(g, signs, check=False)
    cover = refine_to_cover(B, y.left_walks())
    yb = left_basis_form(y, cover)
    plus, minus = {}, {}
    for m, k in yb.terms.items():
        (plus if signs[B.prefix_of(m.left)] == 1 else minus)[m] = k
    return DUSplit(Element(g, plus), Element(g, minus))


# -- symmetric elements -----------------------------------------------------------

def is_symmetric(x: Element) -> bool:
    return x == x.star()


def _two_sided_form(x: Element, D: PrefixBasis) -> Element | None:
    g = x.graph
    todo = dict(x.terms)
    done = {}
    inside = set(D.walks)
    while todo:
        m, c = todo.popitem()
        if m.left in inside and m.right in inside:
            done[m] = done.get(m, 0) + c
            continue
        if D.covers(m.left) or D.covers(m.right):
            return None
        for eid in g.out_edges(m.left.end):
            t = g.terminus(eid)
            k = Monomial(Walk(m.left.start, m.left.edges + (eid,), t),
                         Walk(m.right.start, m.right.edges + (eid,), t))
            todo[k] = todo.get(k, 0) + c
    return Element(g, done)


def symmetric_basic_check(x: Element):
    """For a symmetric element stored with independent left and right walks.

    Rewrites ``x`` over a single basis ``D`` on both sides (the common
    refinement of the completed left and right walk sets) and returns
    ``(D, K)`` with ``K`` the coefficient matrix, checked symmetric.
    """
    g = x.graph
    if not x.is_rooted():
        raise LPAError("element is not rooted")
    if not (_antichain(x.left_walks()) and _antichain(x.right_walks())):
        raise LPAError("representation is not basic: left or right walks are not independent")
    if not is_symmetric(x):
        raise LPAError("element is not symmetric")
    D = common_refinement(extend_to_basis(g, x.left_walks()),
                          extend_to_basis(g, x.right_walks()))
    y = _two_sided_form(x, D)
    if y is None:
        raise LPAError("no common two-sided basis form")
    idx = {b: i for i, b in enumerate(D.walks)}
    K = np.zeros((len(D), len(D)), dtype=object)
    K[:] = 0
    for (b, c), k in y.terms.items():
        K[idx[b], idx[c]] = k
    if not (K == K.T).all():
        raise LPAError("coefficient matrix is not symmetric")
    return D, K


def symmetric_left_form_check(x: Element, B: PrefixBasis) -> bool:
    """Check ``k[b, c] == k[c, b]`` for ``b, c`` in ``B`` in the left form over ``B``."""
    y = left_basis_form(x, B)
    inside = set(B.walks)
    for (b, c), k in y.terms.items():
        if c in inside and y.terms.get(Monomial(c, b), 0) != k:
            return False
    return True
