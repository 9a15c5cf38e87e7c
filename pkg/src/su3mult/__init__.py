"""SU(3) triple multiplicities, their chamber complex and linear symmetries."""

from .bz import BZLabelling, BZTriangle, bz_of, enumerate_fiber, eval_forms, project
from .chambers import Cell, cells, f_vector, locate
from .lattice import DynkinLabel, GLTriple, TripleLabel, dual, gl_to_su, in_lattice, su_to_gl0
from .multiplicity import (
    lr_coefficient,
    lr_tableau_oracle,
    multiplicity_det,
    multiplicity_via_min,
    su2_multiplicity,
    tensor_multiplicity,
    triple_multiplicity,
)
from .stability import stabilization_index, stable_value
from .symmetries import Symmetry, orbit, subgroup, symmetry_group

__version__ = "0.1.0"

__all__ = [
    "BZLabelling", "BZTriangle", "Cell", "DynkinLabel", "GLTriple", "Symmetry", "TripleLabel",
    "bz_of", "cells", "dual", "enumerate_fiber", "eval_forms", "f_vector",
    "gl_to_su", "in_lattice", "locate", "lr_coefficient", "lr_tableau_oracle",
    "multiplicity_det", "multiplicity_via_min", "orbit", "project", "stabilization_index",
    "stable_value", "su2_multiplicity", "su_to_gl0", "subgroup", "symmetry_group",
    "tensor_multiplicity", "triple_multiplicity",
]
