"""Exact computer algebra for finite generation of Ext-algebras of radical-cube-zero algebras."""

from .coeff import field_from_spec, is_root_of_unity, unity_order
from .quiver import MonomialOrder, Presentation, Quiver, parse_presentation
from .freealg import FreeElement, parse_element
from .groebner import complete_truncated, normal_form, verify_groebner
from .algebra import TruncatedAlgebra, Representation, betti_sequence, detect_periodicity, ext1_matrix
from .koszul import quadratic_dual, same_ideal
from .centre import graded_centre, graded_centre_component, is_graded_central
from .fingen import module_quotient_dims
from .benson import recognize_diagram, spectral_class
from .catalog import build_family, central_element, nakayama_qext, qext_central_criterion

__version__ = "0.1.0"

__all__ = [
    "field_from_spec",
    "is_root_of_unity",
    "unity_order",
    "MonomialOrder",
    "Presentation",
    "Quiver",
    "parse_presentation",
    "FreeElement",
    "parse_element",
    "complete_truncated",
    "normal_form",
    "verify_groebner",
    "TruncatedAlgebra",
    "Representation",
    "betti_sequence",
    "detect_periodicity",
    "ext1_matrix",
    "quadratic_dual",
    "same_ideal",
    "graded_centre",
    "graded_centre_component",
    "is_graded_central",
    "module_quotient_dims",
    "recognize_diagram",
    "spectral_class",
    "build_family",
    "central_element",
    "nakayama_qext",
    "qext_central_criterion",
]
