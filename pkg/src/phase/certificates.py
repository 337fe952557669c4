"""
𝒞₋₁,δ 위상 흐름의 단조성 증명서

- 기울기: u > 0 에서 α̇ = u(−v² − u² + δuv)/v² ≤ −ε|u|, ε = 1 − δ/2
- 반경: u ≤ 0 에서 d/dt(u² + v²) = 2δuv² ≤ 0
"""

from typing import Iterable, Sequence, Tuple

import numpy as np

from ..exceptions import InputDomainError
from ..geometry import CanonicalKind, ChristoffelSymbols, canonical_model
from .field import PhaseField

RELATIVE_SLACK = 1e-12


def _samples(samples: Iterable[Sequence[float]]) -> Tuple[np.ndarray, np.ndarray]:
    array = np.asarray(list(samples), dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(array)):
        raise InputDomainError("표본에 유한하지 않은 값이 있습니다")
    return array[:, 0], array[:, 1]


def _check_delta(delta: float) -> float:
    if not (0.0 <= delta < 2.0):
        raise InputDomainError(f"δ 는 [0, 2) 범위여야 합니다: {delta!r}")
    return float(delta)


def slope_rate(delta: float, u, v):
    return np.multiply(u, -np.square(v) - np.square(u) + delta * np.multiply(u, v)) / np.square(v)


def radial_rate(C: ChristoffelSymbols, u, v):
    """d/dt(u² + v²) = 2(u·E₁ + v·E₂)"""
    du, dv = PhaseField(C)(u, v)
    return 2.0 * (np.multiply(u, du) + np.multiply(v, dv))


def slope_certificate(delta: float, samples: Iterable[Sequence[float]]) -> bool:
    """
    모든 표본에서 α̇ ≤ −(1 − δ/2)|u| 인지 검사합니다.

    :param delta: 0 ≤ δ < 2
    :param samples: u > 0, v ≠ 0 인 (u, v) 표본
    :return: 모두 만족하면 True
    """
    delta = _check_delta(delta)
    u, v = _samples(samples)
    if np.any(u <= 0) or np.any(v == 0):
        raise InputDomainError("기울기 증명서 표본은 u > 0, v ≠ 0 이어야 합니다")
    rate = slope_rate(delta, u, v)
    bound = -(1.0 - delta / 2.0) * np.abs(u)
    slack = RELATIVE_SLACK * np.maximum(np.abs(rate), np.abs(bound))
    return bool(np.all(rate <= bound + slack))


def radial_certificate(delta: float, samples: Iterable[Sequence[float]]) -> bool:
    """닫힌 왼쪽 반평면 표본에서 d/dt(u² + v²) ≤ 0 인지 검사합니다."""
    if delta < 0:
        raise InputDomainError(f"δ 는 0 이상이어야 합니다: {delta!r}")
    u, v = _samples(samples)
    C = canonical_model(CanonicalKind.MMINUS, delta)
    rate = radial_rate(C, u, v)
    slack = RELATIVE_SLACK * (np.square(u) + np.square(v)) * np.maximum(np.abs(u), np.abs(v))
    return bool(np.all(rate <= slack))
