"""Stiefel-Whitney classes of symmetric theta bundles over real Picard tori
of Klein surfaces, computed exactly from Appell-Humbert data."""

__version__ = "0.1.0"

from .klein import TopologicalType, enumerate_types, standard_model, validate_type
from .theta import QuadraticForm, arf, enumerate_theta, is_real_theta, translate
from .appell_humbert import AHDatum, SemiCharacter, alpha_from_theta
from .real_sw import component_group, sw_table

__all__ = [
    "AHDatum",
    "QuadraticForm",
    "SemiCharacter",
    "TopologicalType",
    "alpha_from_theta",
    "arf",
    "component_group",
    "enumerate_theta",
    "enumerate_types",
    "is_real_theta",
    "standard_model",
    "sw_table",
    "translate",
    "validate_type",
]
