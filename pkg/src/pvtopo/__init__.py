"""Simplicial models of concurrent PV programs and of their execution spaces."""

from .analysis import StateReport, deadlocks, reachability
from .errors import (
    CyclicOrder,
    DuplicateName,
    DuplicateVertexInSimplex,
    IndexOutOfRange,
    NonPositiveCapacity,
    ParseError,
    PreconditionViolated,
    ProgramSyntaxError,
    PVTopoError,
    UndeclaredSemaphore,
    UnknownVertex,
)
from .homology import HomologyResult, IntMatrix, boundary_matrices, components, homology, smith_normal_form
from .model import (
    FilteredNecklace,
    build_product_model,
    build_program_model,
    is_valid,
    process_model,
    simplex_degree,
    vertex_degree,
)
from .necklace import (
    MapSimplex,
    Necklace,
    SSetPresentation,
    enumerate_necklaces,
    face_map,
    mapping_space,
    subnecklace,
)
from .pathcat import HomClasses, edge_paths, hom_classes
from .pv import ProgramSpec, format_program, lint_program, parse_program
from .sset import OrderedSSet, build_complex, face

__version__ = "0.1.0"

__all__ = [
    "boundary_matrices",
    "build_complex",
    "build_product_model",
    "build_program_model",
    "components",
    "CyclicOrder",
    "deadlocks",
    "DuplicateName",
    "DuplicateVertexInSimplex",
    "edge_paths",
    "enumerate_necklaces",
    "face",
    "face_map",
    "FilteredNecklace",
    "format_program",
    "hom_classes",
    "HomClasses",
    "homology",
    "HomologyResult",
    "IndexOutOfRange",
    "IntMatrix",
    "is_valid",
    "lint_program",
    "mapping_space",
    "MapSimplex",
    "Necklace",
    "NonPositiveCapacity",
    "OrderedSSet",
    "parse_program",
    "ParseError",
    "PreconditionViolated",
    "process_model",
    "ProgramSpec",
    "ProgramSyntaxError",
    "PVTopoError",
    "reachability",
    "simplex_degree",
    "smith_normal_form",
    "SSetPresentation",
    "StateReport",
    "subnecklace",
    "UndeclaredSemaphore",
    "UnknownVertex",
    "vertex_degree",
]
