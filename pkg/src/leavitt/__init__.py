"""Exact computation in rooted Leavitt path algebras over the integers.

The main entry points:

* :mod:`leavitt.graph` and :mod:`leavitt.basis` -- rooted graphs, walks, prefix bases
* :mod:`leavitt.algebra` -- elements ``sum k p q*`` and their arithmetic
* :mod:`leavitt.thompson` -- Higman-Thompson representatives and their embedding
* :mod:`leavitt.unitary` -- classification of unitaries and the diagonal quotient
* :mod:`leavitt.reduce` -- graph reductions and transport of group elements
"""

from .errors import (BasisError, GraphError, LPAError, NotUnitary, ParseError,
                     ReductionError, RepError, WalkError)
from .graph import (Edge, Graph, Relation, ValidationReport, Walk, concat, graph_from_json,
                    load_graph, prefix_compare, validate_graph)
from .basis import (PrefixBasis, common_refinement, extend_to_basis, is_basis,
                    refine_to_cover, simple_expand)
from .algebra import (BasicWitness, Element, Monomial, basis_sum, canonical, edge,
                      edge_star, equals_elements, expand_monomial, expand_right,
                      diagonal_prefix_probe, independent_right_form, is_basic_up_to,
                      left_basis_form, mul_monomial, path, prefix_probe, unit, vertex)
from .expr import format_element, parse_element, parse_raw, path_action
from .thompson import (HTRep, apply_ht, compose_ht, contract_minimal, embed_ht,
                       equals_ht, expand_rep_at, inverse_ht, is_identity, load_rep,
                       rep_from_json, validate_rep)
from .unitary import (DUObstruction, DUSplit, UnitaryClassification, classify_unitary,
                      du_split, is_diagonal_unitary, is_symmetric, is_unitary,
                      rational_split, symmetric_basic_check, symmetric_left_form_check,
                      theta)
from .reduce import (ReductionCollapse, ReductionGM, apply_generator_map, build_collapse,
                     build_gm, collapse_iso, collapse_iso_inverse, generator_map,
                     transport_ht, translate_from_gm, translate_to_gm, validate_star_hom)

__version__ = "0.1.0"
