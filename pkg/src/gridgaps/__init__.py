"""Grid cell model for digital objects: censuses, gaps, and identities."""

from .backend import BACKEND, available_backends
from .cellmodel import (
    Cell,
    CoordinateRangeError,
    bounds,
    cell_from,
    cofaces_of,
    cofaces_voxels,
    const_i_from_j,
    const_i_to_j,
    dimension,
    faces_of,
    half_str,
    incident,
    voxel_cell,
)
from .curves import CurveCheck, GenerationError, generate_curve, validate_curve
from .gaps import (
    ClassificationOverlapError,
    GapReport,
    csi_identity_check,
    detect_hubs,
    g0_closed_form,
    g1_closed_form,
    gap_report,
    vertex_classification,
)
from .objects import (
    CellCensus,
    DigitalObject,
    DuplicateVoxelError,
    Tandem,
    adjacent_voxels,
    b_count,
    block,
    census,
    find_tandem,
    intersection_cell,
    strictly_adjacent,
)
from .verify import (
    IncidenceStructure,
    VerdictRow,
    VerdictTable,
    degree_sum_check,
    incidence_between,
    run_identity_suite,
)
from .voxelfile import VoxelFileError, read_voxel_file, write_voxel_file

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cell",
    "CellCensus",
    "ClassificationOverlapError",
    "CoordinateRangeError",
    "CurveCheck",
    "DigitalObject",
    "DuplicateVoxelError",
    "GapReport",
    "GenerationError",
    "IncidenceStructure",
    "Tandem",
    "VerdictRow",
    "VerdictTable",
    "VoxelFileError",
    "adjacent_voxels",
    "available_backends",
    "b_count",
    "block",
    "bounds",
    "cell_from",
    "census",
    "cofaces_of",
    "cofaces_voxels",
    "const_i_from_j",
    "const_i_to_j",
    "csi_identity_check",
    "degree_sum_check",
    "detect_hubs",
    "dimension",
    "faces_of",
    "find_tandem",
    "g0_closed_form",
    "g1_closed_form",
    "gap_report",
    "generate_curve",
    "half_str",
    "incidence_between",
    "incident",
    "intersection_cell",
    "read_voxel_file",
    "run_identity_suite",
    "strictly_adjacent",
    "validate_curve",
    "vertex_classification",
    "voxel_cell",
    "write_voxel_file",
]
