"""
측지선 부채꼴 (한 점에서 여러 방향으로 뻗는 측지선)

M₂ 와 M̃₃ 는 닫힌 형식으로, 그 외 상수 모델은 적분기로 계산합니다.
"""

import logging
import math
from dataclasses import replace
from typing import List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..exceptions import InputDomainError
from ..geometry import CanonicalKind, canonical_model
from .closed_form import closed_form_m2, closed_form_m3tilde, velocity_m2, velocity_m3tilde
from .integrator import IntegrationOptions, Termination, Trajectory, integrate
from .models import ConstantModel, GeodesicState, ModelKind, TildeM3Model

logger = logging.getLogger(__name__)


def _closed_form_pair(kind: ModelKind):
    if isinstance(kind, TildeM3Model):
        return closed_form_m3tilde, velocity_m3tilde
    if isinstance(kind, ConstantModel):
        if kind.symbols == canonical_model(CanonicalKind.M2):
            return closed_form_m2, velocity_m2
    return None


def _sampled_closed_form(position, velocity, base, tangent, times: np.ndarray) -> Trajectory:
    a, b = base
    c, d = tangent
    x = np.array([position(a, b, c, d, t) for t in times])
    v = np.array([velocity(a, b, c, d, t) for t in times])
    return Trajectory(t=times, x=x, v=v, termination=Termination.HORIZON_REACHED)


def geodesic_fan(
    kind: ModelKind,
    base: Sequence[float] = (0.0, 0.0),
    n_directions: int = 16,
    t_max: float = 2.0,
    speed: float = 1.0,
    samples: int = 200,
    opts: Optional[IntegrationOptions] = None,
    show_progress: bool = False,
) -> List[Trajectory]:
    """
    기점에서 균등한 각도로 출발하는 측지선들을 계산합니다.

    :param kind: 측지선 모델
    :param base: 기점
    :param n_directions: 방향 수
    :param t_max: 적분 시간
    :param speed: 초기 속력
    :param samples: 곡선당 표본 수
    :param opts: 적분 옵션 (닫힌 형식이 없을 때)
    :param show_progress: tqdm 진행 표시
    :return: 방향 순서의 Trajectory 목록
    """
    if n_directions < 1 or samples < 2:
        raise InputDomainError(f"n_directions ≥ 1, samples ≥ 2 이어야 합니다: {n_directions}, {samples}")
    if not (math.isfinite(t_max) and t_max > 0 and math.isfinite(speed) and speed > 0):
        raise InputDomainError(f"t_max, speed 는 양의 유한값이어야 합니다: {t_max!r}, {speed!r}")

    base = tuple(float(v) for v in base)
    times = np.linspace(0.0, t_max, samples)
    closed = _closed_form_pair(kind)
    if closed is None:
        opts = replace(IntegrationOptions() if opts is None else opts, t_eval=tuple(times[1:]))
    logger.debug("측지선 부채꼴: %s, 방향 %d, 닫힌 형식=%s", kind.label, n_directions, closed is not None)

    fan: List[Trajectory] = []
    angles = 2.0 * math.pi * np.arange(n_directions) / n_directions
    for angle in tqdm(angles, desc="fan", disable=not show_progress):
        tangent = (speed * math.cos(angle), speed * math.sin(angle))
        if closed is not None:
            fan.append(_sampled_closed_form(*closed, base, tangent, times))
        else:
            fan.append(integrate(kind, GeodesicState(base, tangent), (0.0, t_max), opts))
    return fan
