"""
측지 완비성 분류 모듈

Ricci 텐서의 계수에 따라 분기하여 Type A 모델의 측지 완비성을 판정합니다.

- 계수 0: 평탄 모델, 판정 보류 (로그 측지선 증인만 보고)
- 계수 1: ∇ρ ≠ 0 이면 본질적 불완비, ∇ρ = 0 이면 대칭 모델 M1/M2/M3 판별
- 계수 2: 로그 측지선이 있으면 불완비, 없으면 M₋,δ (0 ≤ δ < 2) 와 선형 동치인 완비 모델
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..config import config
from ..exceptions import DegenerateRicciError, InternalInconsistencyError, MisuseError
from ..geometry import (
    ChristoffelSymbols,
    Definiteness,
    invariants_sigma_psi,
    rank_signature,
    ricci,
    ricci_report,
)
from .log_geodesics import LogGeodesicSolution, log_geodesic_solutions

logger = logging.getLogger(__name__)


class Branch(str, Enum):
    FLAT_UNDETERMINED = "flat_undetermined"
    RANK1_NONSYMMETRIC = "rank1_nonsymmetric"
    RANK1_SYMMETRIC = "rank1_symmetric"
    RANK2_INCOMPLETE = "rank2_incomplete"
    RANK2_COMPLETE = "rank2_complete"


class SymmetricModel(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"

    @property
    def model_complete(self) -> bool:
        return self is SymmetricModel.M2


@dataclass(frozen=True)
class CompletenessVerdict:
    """완비성 판정 결과와 진단 정보"""
    branch: Branch
    rank: int
    definiteness: Definiteness
    model_complete: Optional[bool] = None
    essentially_complete: Optional[bool] = None
    model: Optional[SymmetricModel] = None
    delta: Optional[float] = None
    sigma: Optional[float] = None
    psi: Optional[float] = None
    witnesses: Tuple[LogGeodesicSolution, ...] = ()
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def witness(self) -> Optional[LogGeodesicSolution]:
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "branch": self.branch.value,
            "rank": self.rank,
            "definiteness": self.definiteness.value,
            "model_complete": self.model_complete,
            "essentially_complete": self.essentially_complete,
        }
        if self.model is not None:
            result["model"] = self.model.value
        if self.sigma is not None:
            result["sigma"] = self.sigma
            result["psi"] = self.psi
        if self.delta is not None:
            result["delta"] = self.delta
        result["witnesses"] = [{"a": w.a, "b": w.b} for w in self.witnesses]
        result["notes"] = list(self.notes)
        return result


def identify_symmetric_model(
    C: ChristoffelSymbols,
    tol: Optional[float] = None,
) -> SymmetricModel:
    """
    계수 1 대칭 모델을 M1, M2, M3 중 하나로 판별합니다.

    ρ 가 양의 준정부호이면 M3. 음의 준정부호 중에서는 로그 측지선이 있으면 M1,
    없으면 M2 입니다 (선형사상은 로그 측지선을 로그 측지선으로 보냅니다).
    """
    report = ricci_report(C, tol)
    if report.rank != 1 or not report.is_symmetric_space:
        raise MisuseError(
            f"계수 1 대칭 모델이 아닙니다 (rank={report.rank}, "
            f"symmetric={report.is_symmetric_space})"
        )
    if report.definiteness is Definiteness.POSITIVE_SEMI_RANK1:
        return SymmetricModel.M3
    if log_geodesic_solutions(C):
        return SymmetricModel.M1
    return SymmetricModel.M2


def recover_delta(C: ChristoffelSymbols, tol: Optional[float] = None) -> float:
    """
    완비 계수 2 모델의 δ 를 불변량에서 복원합니다.

    :param C: Rank2Complete 분기의 모델
    :param tol: Ψ = 2 일관성 검사 허용오차
    :return: δ = √((Σ+3)/2) ∈ [0, 2)
    """
    tol = config.tolerance.delta_consistency_tol if tol is None else tol
    _, definiteness = rank_signature(ricci(C))
    sigma, psi = invariants_sigma_psi(C)
    if definiteness is not Definiteness.INDEFINITE:
        raise InternalInconsistencyError(
            f"완비 계수 2 모델의 Ricci 텐서는 부정부호여야 합니다: {definiteness.value}"
        )
    if abs(psi - 2.0) >= tol * max(1.0, abs(psi)):
        raise InternalInconsistencyError(f"Ψ = {psi!r} 가 2와 일치하지 않습니다")
    square = (sigma + 3.0) / 2.0
    if square < -tol * max(1.0, abs(sigma)) or square >= 4.0:
        raise InternalInconsistencyError(f"(Σ+3)/2 = {square!r} 가 [0, 4) 범위 밖입니다")
    return math.sqrt(max(square, 0.0))


def is_linearly_isomorphic_rank2(
    C: ChristoffelSymbols,
    other: ChristoffelSymbols,
    tol: Optional[float] = None,
) -> bool:
    """정부호 분류와 (Σ, Ψ) 가 일치하면 선형 동형입니다."""
    tol = config.tolerance.delta_consistency_tol if tol is None else tol
    first_rank, first_class = rank_signature(ricci(C))
    second_rank, second_class = rank_signature(ricci(other))
    if first_rank < 2 or second_rank < 2:
        raise DegenerateRicciError(
            f"두 모델 모두 계수 2 여야 합니다 (rank={first_rank}, {second_rank})"
        )
    if first_class is not second_class:
        return False
    sigma, psi = invariants_sigma_psi(C)
    sigma_other, psi_other = invariants_sigma_psi(other)
    return (
        abs(sigma - sigma_other) <= tol * max(1.0, abs(sigma))
        and abs(psi - psi_other) <= tol * max(1.0, abs(psi))
    )


def classify(C: ChristoffelSymbols, tol: Optional[float] = None) -> CompletenessVerdict:
    """
    측지 완비성을 판정합니다.

    :param C: Christoffel 기호
    :param tol: 계수 판정 허용오차 (기본: config.tolerance.rank_tol)
    :return: CompletenessVerdict
    """
    report = ricci_report(C, tol)
    rank, definiteness = report.rank, report.definiteness

    if rank == 0:
        solutions = log_geodesic_solutions(C)
        return CompletenessVerdict(
            branch=Branch.FLAT_UNDETERMINED,
            rank=0,
            definiteness=definiteness,
            model_complete=False if solutions else None,
            witnesses=tuple(solutions),
            notes=("평탄 모델: 본질적 완비성은 판정하지 않습니다",),
        )

    if rank == 1:
        if not report.is_symmetric_space:
            return CompletenessVerdict(
                branch=Branch.RANK1_NONSYMMETRIC,
                rank=1,
                definiteness=definiteness,
                model_complete=False,
                essentially_complete=False,
                notes=(f"max|∇ρ| = {report.nabla_rho.max_abs():.6g}",),
            )
        model = identify_symmetric_model(C, tol)
        return CompletenessVerdict(
            branch=Branch.RANK1_SYMMETRIC,
            rank=1,
            definiteness=definiteness,
            model_complete=model.model_complete,
            essentially_complete=True,
            model=model,
            witnesses=tuple(log_geodesic_solutions(C)),
        )

    sigma, psi = invariants_sigma_psi(C, tol)
    solutions = log_geodesic_solutions(C)
    if solutions:
        return CompletenessVerdict(
            branch=Branch.RANK2_INCOMPLETE,
            rank=2,
            definiteness=definiteness,
            model_complete=False,
            essentially_complete=False,
            sigma=sigma,
            psi=psi,
            witnesses=tuple(solutions),
        )

    delta = recover_delta(C)
    notes: List[str] = []
    if delta > 2.0 - 1e-6:
        notes.append(f"δ = {delta:.9g} 는 완비 경계 2 에 매우 가깝습니다")
        logger.warning("δ 경계 근접: %.9g", delta)
    return CompletenessVerdict(
        branch=Branch.RANK2_COMPLETE,
        rank=2,
        definiteness=definiteness,
        model_complete=True,
        essentially_complete=True,
        delta=delta,
        sigma=sigma,
        psi=psi,
        notes=tuple(notes),
    )
