"""Exact verification of semiquasitriangular Hopf algebras, their normal
modules, the double H⋈H* and the Drinfeld element."""

from .catalog import catalog, catalog_names, structure
from .double import build_double, example_213_table
from .drinfeld import compute_drinfeld, drinfeld_report
from .field import QQ, Field
from .hopf import HopfAlgebra, check_hopf_axioms
from .report import Check, Report
from .specfile import AlgebraSpec, ModuleSpec, SpecError
from .sqt import SqtStructure, check_sqt, tensor_structure
from .suite import SuiteOptions, run_suite
from .tensor import Tensor, einsum

__version__ = "0.1.0"

__all__ = [
    "QQ", "Field", "Tensor", "einsum", "HopfAlgebra", "check_hopf_axioms", "SqtStructure",
    "check_sqt", "tensor_structure", "build_double", "example_213_table", "compute_drinfeld",
    "drinfeld_report", "AlgebraSpec", "ModuleSpec", "SpecError", "catalog", "catalog_names",
    "structure", "run_suite", "SuiteOptions", "Check", "Report",
]
