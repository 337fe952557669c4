"""
곡률 텐서 계산 모듈

Ricci 텐서 ρ, 공변미분 ∇ρ, 보조 이차형식 ρ̌ 와 불변량 Σ, Ψ 를 계산합니다.
상수 Christoffel 기호이므로 미분 항은 모두 사라지고 축약만 남습니다.

부호 규약: R_ijk^l = Γ_im^l Γ_jk^m − Γ_jm^l Γ_ik^m, ρ_jk = R_ijk^i
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..config import config
from ..exceptions import DegenerateRicciError, InputDomainError
from .christoffel import ChristoffelSymbols, RicciDerivative, SymmetricBilinear

logger = logging.getLogger(__name__)


class Definiteness(str, Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    POSITIVE_SEMI_RANK1 = "PositiveSemiRank1"
    NEGATIVE_SEMI_RANK1 = "NegativeSemiRank1"
    INDEFINITE = "Indefinite"
    ZERO = "Zero"


@dataclass(frozen=True)
class RicciReport:
    rho: SymmetricBilinear
    nabla_rho: RicciDerivative
    rank: int
    definiteness: Definiteness
    is_symmetric_space: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rho": self.rho.to_list(),
            "nabla_rho": self.nabla_rho.to_list(),
            "rank": self.rank,
            "definiteness": self.definiteness.value,
            "is_symmetric_space": self.is_symmetric_space,
        }


def _from_components(m: np.ndarray) -> SymmetricBilinear:
    # 상삼각 성분만 사용
    return SymmetricBilinear(m[0, 0], m[0, 1], m[1, 1])


def ricci(C: ChristoffelSymbols) -> SymmetricBilinear:
    """
    Ricci 텐서를 계산합니다.

    ρ_jk = Σ_{i,m} (Γ_im^i Γ_jk^m − Γ_jm^i Γ_ik^m)

    :param C: Christoffel 기호
    :return: 대칭 이차형식 ρ
    """
    g = C.gamma()
    trace = np.einsum("imi->m", g)
    rho = np.einsum("m,jkm->jk", trace, g) - np.einsum("jmi,ikm->jk", g, g)
    return _from_components(rho)


def nabla_ricci(C: ChristoffelSymbols) -> RicciDerivative:
    """∇_i ρ_jk = −Γ_ij^m ρ_mk − Γ_ik^m ρ_jm"""
    g = C.gamma()
    rho = ricci(C).matrix()
    half = np.einsum("ijm,mk->ijk", g, rho)
    return RicciDerivative(-(half + half.transpose(0, 2, 1)))


def rho_check(C: ChristoffelSymbols) -> SymmetricBilinear:
    """ρ̌_ij = Σ_{k,l} Γ_ik^l Γ_jl^k"""
    g = C.gamma()
    return _from_components(np.einsum("ikl,jlk->ij", g, g))


def rank_signature(
    rho: SymmetricBilinear,
    tol: Optional[float] = None,
) -> Tuple[int, Definiteness]:
    """
    고유값 부호로 계수(rank)와 정부호 분류를 결정합니다.

    :param rho: 대칭 2×2 행렬
    :param tol: 상대 임계값 (기본: config.tolerance.rank_tol)
    :return: (rank, definiteness)
    """
    tol = config.tolerance.rank_tol if tol is None else tol
    if tol <= 0:
        raise InputDomainError(f"tol은 양수여야 합니다: {tol}")

    threshold = tol * max(1.0, rho.norm_inf())
    eigenvalues = np.linalg.eigvalsh(rho.matrix())
    significant = [lam for lam in eigenvalues if abs(lam) > threshold]
    rank = len(significant)

    borderline = [lam for lam in eigenvalues if threshold < abs(lam) < 1e3 * threshold]
    if borderline:
        logger.debug("경계선 근처 고유값: %s (임계값 %.3e)", borderline, threshold)

    if rank == 0:
        return 0, Definiteness.ZERO
    if rank == 1:
        if significant[0] > 0:
            return 1, Definiteness.POSITIVE_SEMI_RANK1
        return 1, Definiteness.NEGATIVE_SEMI_RANK1
    if all(lam > 0 for lam in significant):
        return 2, Definiteness.POSITIVE_DEFINITE
    if all(lam < 0 for lam in significant):
        return 2, Definiteness.NEGATIVE_DEFINITE
    return 2, Definiteness.INDEFINITE


def symmetric_space_threshold(C: ChristoffelSymbols, rho: SymmetricBilinear, tol: float) -> float:
    return tol * max(1.0, C.max_abs() * rho.norm_inf())


def ricci_report(C: ChristoffelSymbols, tol: Optional[float] = None) -> RicciReport:
    tol = config.tolerance.rank_tol if tol is None else tol
    rho = ricci(C)
    nabla = nabla_ricci(C)
    rank, definiteness = rank_signature(rho, tol)
    is_symmetric = nabla.max_abs() < symmetric_space_threshold(C, rho, tol)
    return RicciReport(
        rho=rho,
        nabla_rho=nabla,
        rank=rank,
        definiteness=definiteness,
        is_symmetric_space=is_symmetric,
    )


def invariants_sigma_psi(
    C: ChristoffelSymbols,
    tol: Optional[float] = None,
) -> Tuple[float, float]:
    """
    계수 2 모델의 아핀 불변량을 계산합니다.

    :param C: Christoffel 기호
    :param tol: 계수 판정 허용오차
    :return: (Σ, Ψ) = (ρ^ij ρ̌_ij, det ρ̌ / det ρ)
    """
    rho = ricci(C)
    rank, _ = rank_signature(rho, tol)
    if rank < 2:
        raise DegenerateRicciError(
            f"Ricci 텐서의 계수가 2가 아닙니다 (rank={rank}); Σ, Ψ가 정의되지 않습니다"
        )
    check = rho_check(C)
    det = rho.det
    sigma = (rho.m22 * check.m11 - 2.0 * rho.m12 * check.m12 + rho.m11 * check.m22) / det
    psi = check.det / det
    return float(sigma), float(psi)


def ricci_pullback(rho: SymmetricBilinear, T: np.ndarray) -> SymmetricBilinear:
    """
    w = T·x 좌표에서의 Ricci 텐서: ρ′ = T⁻ᵀ ρ T⁻¹
    """
    inverse = np.linalg.inv(np.asarray(T, dtype=float))
    return SymmetricBilinear.from_matrix(inverse.T @ rho.matrix() @ inverse)
