"""
계수 2 모듈라이 곡선 데이터

(Σ, Ψ) 평면에서
- σ₊(t) = (4t² + 1/t² + 2, 4t⁴ + 4t² + 2)
- σ₋(t) = (−4t² − 1/t² + 2, 4t⁴ − 4t² + 2)
- δ 선분 (Σ, Ψ) = (−3 + 2δ², 2), 𝒞₋₁,δ 의 불변량
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import InputDomainError

SEGMENT_NOTE = (
    "delta-segment uses (Sigma, Psi) = (-3+2*delta^2, 2) from the invariant identity; "
    "the variant (-3+delta^2, 2) is not emitted"
)


class ModuliBranch(str, Enum):
    PLUS_CURVE = "PlusCurve"
    MINUS_CURVE = "MinusCurve"
    DELTA_SEGMENT = "DeltaSegment"


@dataclass(frozen=True)
class ModuliCurvePoint:
    """곡선 위의 점. DeltaSegment 에서는 t 열이 δ 를 담습니다."""
    t: float
    sigma: float
    psi: float
    branch: ModuliBranch

    def as_row(self) -> Tuple[float, float, float, str]:
        return self.t, self.sigma, self.psi, self.branch.value


def sigma_plus(t: float) -> Tuple[float, float]:
    t2 = t * t
    return 4.0 * t2 + 1.0 / t2 + 2.0, 4.0 * t2 * t2 + 4.0 * t2 + 2.0


def sigma_minus(t: float) -> Tuple[float, float]:
    t2 = t * t
    return -4.0 * t2 - 1.0 / t2 + 2.0, 4.0 * t2 * t2 - 4.0 * t2 + 2.0


def delta_segment(delta: float) -> Tuple[float, float]:
    return -3.0 + 2.0 * delta * delta, 2.0


def _range(name: str, bounds: Sequence[float]) -> Tuple[float, float]:
    if len(bounds) != 2:
        raise InputDomainError(f"{name} 는 (최소, 최대) 두 값이어야 합니다: {bounds!r}")
    low, high = float(bounds[0]), float(bounds[1])
    if not (math.isfinite(low) and math.isfinite(high)) or low > high:
        raise InputDomainError(f"{name} 범위가 잘못되었습니다: {bounds!r}")
    return low, high


def moduli_points(
    t_range: Sequence[float] = (0.25, 2.0),
    delta_range: Sequence[float] = (0.0, 3.0),
    n: int = 101,
) -> List[ModuliCurvePoint]:
    """
    σ₊, σ₋ 곡선과 δ 선분을 표본화합니다.

    :param t_range: t 범위 (양수)
    :param delta_range: δ 범위 (0 이상)
    :param n: 곡선당 표본 수
    :return: σ₊, σ₋, δ 선분 순서의 점 목록
    """
    if n < 2:
        raise InputDomainError(f"표본 수는 2 이상이어야 합니다: {n}")
    t_low, t_high = _range("t-range", t_range)
    if t_low <= 0:
        raise InputDomainError(f"t 범위는 양수여야 합니다: {t_range!r}")
    d_low, d_high = _range("delta-range", delta_range)
    if d_low < 0:
        raise InputDomainError(f"δ 범위는 0 이상이어야 합니다: {delta_range!r}")

    points: List[ModuliCurvePoint] = []
    ts = np.linspace(t_low, t_high, n)
    for branch, curve in ((ModuliBranch.PLUS_CURVE, sigma_plus), (ModuliBranch.MINUS_CURVE, sigma_minus)):
        for t in ts:
            sigma, psi = curve(float(t))
            points.append(ModuliCurvePoint(float(t), sigma, psi, branch))
    for delta in np.linspace(d_low, d_high, n):
        sigma, psi = delta_segment(float(delta))
        points.append(ModuliCurvePoint(float(delta), sigma, psi, ModuliBranch.DELTA_SEGMENT))
    return points
