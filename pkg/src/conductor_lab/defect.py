"""Local and global degeneracy defects and Gorenstein classification."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, List, Optional

from .dualizing import omega_min_generators, omega_polar_basis
from .errors import InternalInconsistency
from .localring import CurveGerm


@dataclass(frozen=True)
class LocalDefectReport:
    """Invariants of one germ.

    ``type_defect`` (CM type minus one) vanishes exactly on Gorenstein germs.
    ``conductor_gap_defect`` is ``dim`` of the conductor-level polar space
    minus ``dim`` of the regular polar space; it equals
    ``conductor_colength - delta`` and is 1 already on a node.
    """

    germ: str
    delta: int
    conductor_colength: int
    gorenstein: bool
    cm_type: int
    type_defect: int
    conductor_gap_defect: int
    paper_claim: Optional[int] = None
    agrees: Optional[bool] = None

    def to_json(self) -> dict:
        return asdict(self)


def local_defect(g: CurveGerm, paper_claim: Optional[int] = None) -> LocalDefectReport:
    polar = omega_polar_basis(g)
    dual = omega_min_generators(g, polar)
    colength = g.conductor_colength
    gap = colength - len(polar)
    if gap != colength - g.delta:
        raise InternalInconsistency(
            f"{g.name}: regular polar space has dimension {len(polar)}, delta is {g.delta}")
    type_defect = dual.cm_type - 1
    return LocalDefectReport(
        germ=g.name or f"{g.branches}-branch germ",
        delta=g.delta,
        conductor_colength=colength,
        gorenstein=g.gorenstein,
        cm_type=dual.cm_type,
        type_defect=type_defect,
        conductor_gap_defect=gap,
        paper_claim=paper_claim,
        agrees=None if paper_claim is None else paper_claim == type_defect,
    )


@dataclass(frozen=True)
class GlobalDefectReport:
    locals: List[LocalDefectReport]
    total_defect: int
    codim_delta: int
    strata: List[int] = field(default_factory=list)

    def in_stratum(self, k: int) -> bool:
        """Membership in the locus where the total defect is at least ``k``."""
        if k < 1:
            raise ValueError("strata are indexed by k >= 1")
        return self.total_defect >= k

    def to_json(self) -> dict:
        return {
            "locals": [r.to_json() for r in self.locals],
            "total_defect": self.total_defect,
            "codim_delta": self.codim_delta,
            "strata": list(self.strata),
        }


def global_defect(reports: Iterable[LocalDefectReport]) -> GlobalDefectReport:
    reports = list(reports)
    total = sum(r.type_defect for r in reports)
    return GlobalDefectReport(reports, total, total, list(range(1, total + 1)))


@dataclass(frozen=True)
class Classification:
    label: str
    colength_test: bool
    cm_type_test: bool
    type_defect_test: bool

    @property
    def gorenstein(self) -> bool:
        return self.label == "gorenstein"


def classify(g: CurveGerm, report: Optional[LocalDefectReport] = None) -> Classification:
    """Gorenstein label backed by three witnesses that must agree."""
    if report is None:
        report = local_defect(g)
    colength = g.conductor_colength == 2 * g.delta
    type_one = report.cm_type == 1
    no_defect = report.type_defect == 0
    if not colength == type_one == no_defect:
        raise InternalInconsistency(
            f"{report.germ}: colength={colength}, type one={type_one}, zero defect={no_defect}")
    return Classification("gorenstein" if colength else "non_gorenstein",
                          colength, type_one, no_defect)
