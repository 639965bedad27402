"""Exact computation of curve-singularity invariants: conductors, delta
invariants, dualizing modules, Gorenstein classification and degeneracy
defects, with a catalog of worked examples checked against claimed values."""

from .defect import GlobalDefectReport, LocalDefectReport, classify, global_defect, local_defect
from .dualizing import (
    Differential,
    PolarPart,
    canonical_ideal,
    cm_type,
    conductor_level_test,
    descent_test,
    omega_min_generators,
    omega_polar_basis,
    parse_polar_part,
    rosenlicht_exponents,
)
from .errors import ConductorLabError, TruncationTooSmall
from .localring import CurveGerm, germ_from_semigroup, germ_preset
from .nodal import NodalCurve, dual_graph, nodal_h0_omega, residue_rank, sequence_bookkeeping
from .semigroup import NumericalSemigroup

__version__ = "0.1.0"

__all__ = [
    "ConductorLabError", "CurveGerm", "Differential", "GlobalDefectReport", "LocalDefectReport",
    "NodalCurve", "NumericalSemigroup", "PolarPart", "TruncationTooSmall", "canonical_ideal",
    "classify", "cm_type", "conductor_level_test", "descent_test", "dual_graph", "germ_from_semigroup",
    "germ_preset", "global_defect", "local_defect", "nodal_h0_omega", "omega_min_generators",
    "omega_polar_basis", "parse_polar_part", "residue_rank", "rosenlicht_exponents",
    "sequence_bookkeeping",
]
