"""Exact invariants of free-by-cyclic groups presented by graph maps."""

from .cones import ConeOfSections, class_report, classify_class, cone_of_sections, lambda_of_class, rho_of_class
from .dsl import load, load_fixture, parse
from .graph_core import Graph, GraphMap, geometric_stretch, homological_stretch
from .invariants import InvariantBundle, compute_invariants, invariants_of, verify_relations
from .laurent import LaurentPoly
from .orientation import Orientability, classify_orientability, oriented_edge_double, verify_theorem_A
from .torus import compute_presentation, lifted_matrices, vertex_cycles

__all__ = [
    "ConeOfSections",
    "Graph",
    "GraphMap",
    "InvariantBundle",
    "LaurentPoly",
    "Orientability",
    "class_report",
    "classify_class",
    "classify_orientability",
    "compute_invariants",
    "compute_presentation",
    "cone_of_sections",
    "geometric_stretch",
    "homological_stretch",
    "invariants_of",
    "lambda_of_class",
    "lifted_matrices",
    "load",
    "load_fixture",
    "oriented_edge_double",
    "parse",
    "rho_of_class",
    "verify_relations",
    "verify_theorem_A",
    "vertex_cycles",
]
