"""Small k-regular graphs of girth 7 from generalized quadrangles.

Finite fields, projective geometry, incidence structures and their Levi
graphs, vertex-deletion surgery with regularity-restoring matchings, and an
exhaustive girth certifier.
"""

from .constructions import (
    BuiltGraph,
    ConstructionParams,
    build,
    build_Q4,
    build_S_even_k,
    build_T2_slice,
    build_W,
    construct_thm_even_k,
    construct_thm_main_i,
    construct_thm_main_ii,
    construct_thm_rectfree,
    construct_thm_wq_even,
)
from .field import FieldElement, FieldSpec, elements, make_field
from .incidence import IncidenceStructure, LeviGraph, check_gq_axioms, levi_graph
from .verify import Certificate, cage_gap_report, certify, girth, moore_bound

__version__ = "0.1.0"

__all__ = [
    "BuiltGraph", "ConstructionParams", "build", "build_Q4", "build_S_even_k", "build_T2_slice", "build_W",
    "construct_thm_even_k", "construct_thm_main_i", "construct_thm_main_ii", "construct_thm_rectfree",
    "construct_thm_wq_even", "FieldElement", "FieldSpec", "elements", "make_field", "IncidenceStructure",
    "LeviGraph", "check_gq_axioms", "levi_graph", "Certificate", "cage_gap_report", "certify", "girth",
    "moore_bound",
]
