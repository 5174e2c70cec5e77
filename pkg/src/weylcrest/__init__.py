"""Exact computations with weights of highest weight modules.

Root systems and Weyl groups live in ``rootsys``, weight arithmetic in
``weightlat``, modules and characters in ``hwmodule``, convex hulls in
``polyhedron``, weak faces in ``faces``, saturated chains in ``chains`` and
slow reference implementations in ``oracle``.
"""
from .hwmodule import (
    Family, FormalCharacter, HWModuleDesc, UnsupportedModule, WeightSet, check_wcf_hypothesis,
    counterexample_witness, fd_simple_weights, fernando_parabolic, kostant_partition,
    module_contains, module_weights, truncated_character, wt_J,
)
from .polyhedron import Polyhedron, enumerate_faces, extremal_rays_at_vertex, hull_of_module, maximizer
from .rootsys import RootSystem, WeylElement, parse_type, root_system
from .weightlat import Weight, dot_action, j_lambda, leq, support

__version__ = "0.1.0"

__all__ = [
    "Family", "FormalCharacter", "HWModuleDesc", "UnsupportedModule", "WeightSet",
    "check_wcf_hypothesis", "counterexample_witness", "fd_simple_weights", "fernando_parabolic",
    "kostant_partition", "module_contains", "module_weights", "truncated_character", "wt_J",
    "Polyhedron", "enumerate_faces", "extremal_rays_at_vertex", "hull_of_module", "maximizer",
    "RootSystem", "WeylElement", "parse_type", "root_system",
    "Weight", "dot_action", "j_lambda", "leq", "support",
]
