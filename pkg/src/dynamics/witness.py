"""
계수 1 비대칭 모델의 불완비 측지선 증인

ker ρ 를 첫 번째 좌표 방향으로 하는 적응 좌표에서 x² 성분이 (C₂₂²)⁻¹·log t 인
측지선을 t = 1 에서 역방향으로 적분하여 유한 시간 폭주를 수치적으로 보여줍니다.
곡률 κ(t) = ρ(σ̇, σ̇) 는 탈출 시각 근처에서 t⁻² 로 발산합니다.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..exceptions import MisuseError, NumericFailureError
from ..geometry import ChristoffelSymbols, LinearMap, pushforward, ricci_report
from .integrator import IntegrationOptions, Termination, Trajectory, integrate
from .models import ConstantModel, GeodesicState

logger = logging.getLogger(__name__)

START_TIME = 1.0
END_TIME = -1.0
FIT_WINDOW = (1e-6, 1e-1)


@dataclass(frozen=True, eq=False)
class Rank1Witness:
    """폭주 궤적, 곡률 표본, 적합된 발산 지수, 적응 좌표 변환"""
    trajectory: Trajectory
    curvature: np.ndarray
    fitted_exponent: float
    frame: LinearMap
    escape_time: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "termination": self.trajectory.termination.value,
            "escape_time": self.escape_time,
            "fitted_exponent": self.fitted_exponent,
            "frame": self.frame.to_list(),
            "samples": len(self.trajectory),
        }


def adapted_frame(C: ChristoffelSymbols) -> LinearMap:
    """
    ker ρ 를 ∂₁ 로 보내는 좌표 변환 A 를 구합니다.

    :param C: 계수 1 모델
    :return: w = A·x 에서 ∂_{w¹} 가 ker ρ 를 생성
    """
    rho = ricci_report(C).rho.matrix()
    eigenvalues, eigenvectors = np.linalg.eigh(rho)
    kernel = eigenvectors[:, int(np.argmin(np.abs(eigenvalues)))]
    complement = np.array([-kernel[1], kernel[0]])
    return LinearMap.from_matrix(np.column_stack([kernel, complement])).inverse()


def _fit_exponent(t: np.ndarray, kappa: np.ndarray, escape: float) -> float:
    distance = np.abs(t - escape)
    span = abs(START_TIME - escape)
    mask = (distance >= FIT_WINDOW[0] * span) & (distance <= FIT_WINDOW[1] * span) & (kappa != 0)
    if np.count_nonzero(mask) < 3:
        raise NumericFailureError(
            f"발산 지수 적합에 필요한 표본이 부족합니다 ({np.count_nonzero(mask)}개)"
        )
    slope, _ = np.polyfit(np.log(distance[mask]), np.log(np.abs(kappa[mask])), 1)
    return float(slope)


def rank1_incomplete_witness(
    C: ChristoffelSymbols,
    opts: Optional[IntegrationOptions] = None,
    tol: Optional[float] = None,
) -> Rank1Witness:
    """
    계수 1 비대칭 모델에서 유한 시간에 폭주하는 측지선을 찾습니다.

    :param C: ∇ρ ≠ 0 인 계수 1 모델
    :param opts: 적분 옵션
    :param tol: 계수/대칭 판정 허용오차
    :return: Rank1Witness
    """
    report = ricci_report(C, tol)
    if report.rank != 1 or report.is_symmetric_space:
        raise MisuseError(
            f"계수 1 비대칭 모델이 아닙니다 (rank={report.rank}, "
            f"symmetric={report.is_symmetric_space})"
        )

    frame = adapted_frame(C)
    adapted = pushforward(C, frame)
    if adapted.c222 == 0.0:
        raise NumericFailureError("적응 좌표에서 C₂₂² = 0 입니다")

    basis = frame.inverse().matrix()
    v0 = basis[:, 1] / adapted.c222
    trajectory = integrate(
        ConstantModel(C),
        GeodesicState((0.0, 0.0), v0),
        (START_TIME, END_TIME),
        opts,
    )
    if trajectory.termination is not Termination.BLOW_UP:
        raise NumericFailureError(
            f"증인 측지선이 폭주하지 않았습니다: {trajectory.termination.value}"
        )

    rho = report.rho.matrix()
    curvature = np.einsum("ni,ij,nj->n", trajectory.v, rho, trajectory.v)
    escape = trajectory.escape_time if trajectory.escape_time is not None else 0.0
    exponent = _fit_exponent(trajectory.t, curvature, escape)
    logger.info("계수 1 증인: 탈출 %.6g, κ 지수 %.4f", escape, exponent)
    return Rank1Witness(
        trajectory=trajectory,
        curvature=curvature,
        fitted_exponent=exponent,
        frame=frame,
        escape_time=escape,
    )
