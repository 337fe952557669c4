"""
닫힌 형식 측지선과 지수 사상

M₂ 측지선: (a + c·h(t;d), b + dt), h(0;d) = 0, ḣ(t;d) = e^{dt}
M̃₃ 측지선: (a·cos(dt) + (c/d)·sin(dt), b + dt), d = 0 이면 (a + ct, b)
지수 사상은 시간 1 측지선 흐름입니다.
"""

import math
import sys
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from ..config import config
from ..exceptions import InputDomainError
from .models import GeodesicState


class ExpKind(str, Enum):
    M2 = "M2"
    TILDE_M3 = "TildeM3"


def h_function(t: float, d: float, switch_tol: Optional[float] = None) -> float:
    """
    h(t;d) = t (d = 0), (e^{dt} − 1)/d (그 외).

    |d| 가 작으면 급수 Σ d^{n−1} tⁿ / n! 를 기계 정밀도까지 더합니다.
    """
    switch_tol = config.integrator.h_switch_tol if switch_tol is None else switch_tol
    if d == 0.0:
        return float(t)
    if abs(d) >= switch_tol:
        return float(np.expm1(d * t) / d)
    term = float(t)
    total = term
    for n in range(2, 200):
        term *= d * t / n
        total += term
        if abs(term) <= sys.float_info.epsilon * abs(total):
            break
    return total


def closed_form_m2(a: float, b: float, c: float, d: float, t: float) -> np.ndarray:
    return np.array([a + c * h_function(t, d), b + d * t])


def velocity_m2(a: float, b: float, c: float, d: float, t: float) -> np.ndarray:
    return np.array([c * math.exp(d * t), d])


def closed_form_m3tilde(a: float, b: float, c: float, d: float, t: float) -> np.ndarray:
    # sin(dt)/d = t·sinc(dt/π) 이므로 d → 0 에서 연속
    return np.array([
        a * math.cos(d * t) + c * t * float(np.sinc(d * t / math.pi)),
        b + d * t,
    ])


def velocity_m3tilde(a: float, b: float, c: float, d: float, t: float) -> np.ndarray:
    return np.array([-a * d * math.sin(d * t) + c * math.cos(d * t), d])


def exp_map(
    kind: Union[ExpKind, str],
    base: Sequence[float],
    tangent: Sequence[float],
) -> np.ndarray:
    """
    지수 사상 Exp_base(tangent) 를 닫힌 형식으로 계산합니다.

    :param kind: M2 또는 TildeM3
    :param base: 기점 (a, b)
    :param tangent: 접벡터 (c, d)
    :return: 시간 1 측지선 위치
    """
    kind = ExpKind(kind)
    a, b = (float(v) for v in base)
    c, d = (float(v) for v in tangent)
    if kind is ExpKind.M2:
        return closed_form_m2(a, b, c, d, 1.0)
    return closed_form_m3tilde(a, b, c, d, 1.0)


def log_geodesic_curve(a: float, b: float, t: float) -> GeodesicState:
    """σ(t) = (a, b)·log t 의 상태 (t > 0)"""
    if not (math.isfinite(t) and t > 0):
        raise InputDomainError(f"로그 측지선은 t > 0 에서만 정의됩니다: t={t!r}")
    log_t = math.log(t)
    return GeodesicState((a * log_t, b * log_t), (a / t, b / t))
