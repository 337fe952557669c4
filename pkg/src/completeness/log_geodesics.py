"""
로그 측지선 해 탐색 모듈

σ(t) = (a, b)·log t 가 측지선이 될 조건 a = E₁(a,b), b = E₂(a,b) 의
0이 아닌 실해를 모두 찾습니다. 해가 하나라도 있으면 모델은 측지적으로 불완비입니다.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..config import config
from ..exceptions import InputDomainError
from ..geometry import CanonicalKind, CanonicalModel, ChristoffelSymbols
from .polynomials import EPolynomials, e_polynomials, equation_residual, real_roots, resultant

logger = logging.getLogger(__name__)

# E₃ ≡ 0 인 퇴화 가족의 대표 λ
FAMILY_PROBES = (0.0, 1.0, -1.0, 2.0, -2.0)

# 공통근 제외 반경 (중근 정확도 ~ sqrt(eps))
COMMON_ROOT_TOL = 1e-6


@dataclass(frozen=True)
class LogGeodesicSolution:
    """로그 측지선 (a, b)·log t. lam 은 b/a (a = 0 분기에서는 None)."""
    a: float
    b: float
    residual: float = 0.0
    lam: Optional[float] = None
    is_family: bool = False

    def __post_init__(self):
        if self.a == 0.0 and self.b == 0.0:
            raise InputDomainError("로그 측지선 해는 (0, 0)일 수 없습니다")

    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "residual": self.residual,
            "lambda": self.lam,
            "is_family": self.is_family,
        }


def _accept(C: ChristoffelSymbols, a: float, b: float, tol: float) -> Optional[float]:
    residual = equation_residual(C, a, b)
    if residual <= tol * max(1.0, a * a + b * b):
        return residual
    logger.debug("잔차 검증 실패: (a,b)=(%.6g, %.6g), residual=%.3e", a, b, residual)
    return None


def _common_roots(polys: EPolynomials, threshold: float, resultant_tol: float) -> List[float]:
    """E₁(1,λ), E₂(1,λ) 의 공통 실근. 이런 λ 는 해를 만들지 못합니다."""
    first = real_roots(polys.e1)
    second = real_roots(polys.e2)
    if first.identically_zero:
        return [] if second.identically_zero else second.values()
    if second.identically_zero:
        return first.values()
    # 두 이차식이 모두 이차이면 종결식이 0 이 아닐 때 공통근이 없음
    if polys.e1[2] != 0.0 and polys.e2[2] != 0.0:
        scale = (max(abs(c) for c in polys.e1) * max(abs(c) for c in polys.e2)) ** 2
        if abs(resultant(polys.e1, polys.e2)) > resultant_tol * scale:
            return []
    return [
        lam for lam in first.values()
        if abs(polys.e2_at(lam)) <= threshold * max(1.0, lam * lam)
    ]


def log_geodesic_solutions(
    C: ChristoffelSymbols,
    tol: Optional[float] = None,
) -> List[LogGeodesicSolution]:
    """
    0이 아닌 로그 측지선 해를 모두 반환합니다.

    (i) a ≠ 0: E₃ 의 실근 λ 중 E₁(1,λ) ≠ 0 인 것마다 (a,b) = (1, λ)/E₁(1,λ)
    (ii) a = 0: C₂₂¹ = 0, C₂₂² ≠ 0 이면 (0, 1/C₂₂²)
    (iii) E₃ ≡ 0: 대표 λ 에서 가족 해를 is_family 로 표시

    :param C: Christoffel 기호
    :param tol: 대입 검증 잔차 허용오차
    :return: λ 오름차순 해 목록 (a = 0 분기는 마지막)
    """
    tol = config.tolerance.residual_tol if tol is None else tol
    degree_tol = config.tolerance.rank_tol
    polys = e_polynomials(C)
    threshold = config.tolerance.zero_tol * (1.0 + polys.coefficient_norm())

    solutions: List[LogGeodesicSolution] = []
    cubic = real_roots(polys.e3, tol=tol * 1e-3, zero_tol=degree_tol)

    if cubic.identically_zero:
        for lam in FAMILY_PROBES:
            e1 = polys.e1_at(lam)
            if abs(e1) <= threshold * max(1.0, lam * lam):
                continue
            a, b = 1.0 / e1, lam / e1
            residual = _accept(C, a, b, tol)
            if residual is not None:
                solutions.append(LogGeodesicSolution(a, b, residual, lam, is_family=True))
    else:
        common = _common_roots(polys, threshold, config.tolerance.zero_tol)
        for root in cubic:
            lam = root.value
            if any(abs(lam - c) <= COMMON_ROOT_TOL * (1.0 + abs(c)) for c in common):
                continue
            e1 = polys.e1_at(lam)
            if abs(e1) <= threshold * max(1.0, lam * lam):
                continue
            a, b = 1.0 / e1, lam / e1
            residual = _accept(C, a, b, tol)
            if residual is not None:
                solutions.append(LogGeodesicSolution(a, b, residual, lam))

    scale3 = max(abs(c) for c in polys.e3)
    c221_vanishes = abs(C.c221) <= degree_tol * scale3 or C.c221 == 0.0
    if c221_vanishes and abs(C.c222) > threshold:
        b = 1.0 / C.c222
        residual = _accept(C, 0.0, b, tol)
        if residual is not None:
            solutions.append(LogGeodesicSolution(0.0, b, residual, None))

    solutions.sort(key=lambda s: (s.lam is None, s.lam if s.lam is not None else 0.0))
    return solutions


def canonical_witnesses(model: CanonicalModel) -> List[LogGeodesicSolution]:
    """
    정준 모델의 로그 측지선을 근의 공식으로 반환합니다 (교차 검증용).

    𝒞₊₁,δ: a = ½(−δ ± √(δ²+4)), b = 1
    𝒞₋₁,δ (δ ≥ 2): a = ½(δ ± √(δ²−4)), b = 1
    """
    C = model.symbols()
    if model.kind is CanonicalKind.M2:
        return []
    if model.kind in (CanonicalKind.M1, CanonicalKind.M3):
        pairs = [(-1.0, 0.0)]
    elif model.kind is CanonicalKind.MPLUS:
        root = math.sqrt(model.delta ** 2 + 4.0)
        pairs = [(0.5 * (-model.delta - root), 1.0), (0.5 * (-model.delta + root), 1.0)]
    else:
        disc = model.delta ** 2 - 4.0
        if disc < 0:
            return []
        root = math.sqrt(disc)
        pairs = sorted({(0.5 * (model.delta - root), 1.0), (0.5 * (model.delta + root), 1.0)})
    return [
        LogGeodesicSolution(a, b, equation_residual(C, a, b), b / a if a != 0 else None)
        for a, b in pairs
    ]
