"""
속도 위상 흐름

(u, v) = (−ẋ¹, −ẋ²) 로 두면 측지선 방정식은 이차 동차 평면 벡터장
(u̇, v̇) = (E₁(u, v), E₂(u, v)) 가 됩니다.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from ..dynamics import IntegrationOptions, IntegrationStats, Termination, integrate_system
from ..exceptions import InputDomainError
from ..geometry import ChristoffelSymbols

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseField:
    symbols: ChristoffelSymbols

    def __call__(self, u, v) -> Tuple[Any, Any]:
        """E_i(u, v) = u²C₁₁ⁱ + 2uvC₁₂ⁱ + v²C₂₂ⁱ (배열 입력 가능)"""
        C = self.symbols
        uu, uv, vv = np.multiply(u, u), np.multiply(u, v), np.multiply(v, v)
        du = C.c111 * uu + 2.0 * C.c121 * uv + C.c221 * vv
        dv = C.c112 * uu + 2.0 * C.c122 * uv + C.c222 * vv
        return du, dv

    def rhs(self, y: np.ndarray) -> np.ndarray:
        du, dv = self(y[0], y[1])
        return np.array([du, dv], dtype=float)


def phase_field_eval(C: ChristoffelSymbols, u: float, v: float) -> np.ndarray:
    return PhaseField(C).rhs(np.array([u, v], dtype=float))


@dataclass(frozen=True, eq=False)
class FlowCurve:
    """위상 평면의 흐름 곡선 (t, u, v)"""
    t: np.ndarray
    u: np.ndarray
    v: np.ndarray
    termination: Termination
    escape_time: Optional[float] = None
    stats: Optional[IntegrationStats] = None

    def __len__(self) -> int:
        return len(self.t)

    def points(self) -> np.ndarray:
        return np.column_stack([self.u, self.v])

    def rows(self) -> np.ndarray:
        return np.column_stack([self.t, self.u, self.v])

    def summary(self) -> Dict[str, Any]:
        return {
            "termination": self.termination.value,
            "escape_time": self.escape_time,
            "samples": len(self.t),
        }


def flow_integrate(
    C: ChristoffelSymbols,
    p0: Sequence[float],
    t_span: Tuple[float, float],
    opts: Optional[IntegrationOptions] = None,
) -> FlowCurve:
    """
    위상 흐름을 적분합니다. 고정점에서 출발하면 상수 곡선을 반환합니다.

    :param C: Christoffel 기호
    :param p0: 시작점 (u, v)
    :param t_span: (t₀, t₁)
    :param opts: 적분 옵션
    :return: FlowCurve
    """
    opts = IntegrationOptions() if opts is None else opts
    field = PhaseField(C)
    start = np.asarray(p0, dtype=float)
    if start.shape != (2,) or not np.all(np.isfinite(start)):
        raise InputDomainError(f"시작점은 유한한 (u, v) 여야 합니다: {p0!r}")

    if not np.any(field.rhs(start)):
        t0, t1 = float(t_span[0]), float(t_span[1])
        if not (np.isfinite(t0) and np.isfinite(t1)) or t0 == t1:
            raise InputDomainError(f"적분 구간이 퇴화되었거나 유한하지 않습니다: {t_span!r}")
        logger.debug("고정점에서 출발: %s", start)
        return FlowCurve(
            t=np.array([t0, t1]),
            u=np.full(2, start[0]),
            v=np.full(2, start[1]),
            termination=Termination.HORIZON_REACHED,
            stats=IntegrationStats(0, 0, float(np.linalg.norm(start))),
        )

    path = integrate_system(field.rhs, start, t_span, opts, velocity=slice(0, 2))
    return FlowCurve(
        t=path.t,
        u=path.y[:, 0],
        v=path.y[:, 1],
        termination=path.termination,
        escape_time=path.escape_time,
        stats=path.stats,
    )


def field_grid(
    C: ChristoffelSymbols,
    window: Sequence[float],
    n: int,
) -> np.ndarray:
    """
    창 [u_min, u_max] × [v_min, v_max] 위의 n×n 균등 표본.

    :param window: (u_min, u_max, v_min, v_max)
    :param n: 축당 표본 수 (≥ 2)
    :return: 열 (u, v, du, dv) 의 n² 행 배열, u 가 바깥 순서
    """
    if n < 2:
        raise InputDomainError(f"격자 크기는 2 이상이어야 합니다: {n}")
    u_min, u_max, v_min, v_max = (float(w) for w in window)
    if not np.all(np.isfinite([u_min, u_max, v_min, v_max])) or u_min >= u_max or v_min >= v_max:
        raise InputDomainError(f"퇴화된 창입니다: {tuple(window)!r}")
    uu, vv = np.meshgrid(np.linspace(u_min, u_max, n), np.linspace(v_min, v_max, n), indexing="ij")
    u, v = uu.ravel(), vv.ravel()
    du, dv = PhaseField(C)(u, v)
    return np.column_stack([u, v, du, dv])


def fixed_point_mask(grid: np.ndarray, tol: float = 0.0) -> np.ndarray:
    """du = dv = 0 인 격자 행"""
    grid = np.asarray(grid, dtype=float)
    return (np.abs(grid[:, 2]) <= tol) & (np.abs(grid[:, 3]) <= tol)


def quadrant_trapped(curve: FlowCurve) -> bool:
    """제4사분면(u > 0, v < 0)에 처음 들어온 뒤 v > 0 인 표본이 없으면 참"""
    inside = np.flatnonzero((curve.u > 0) & (curve.v < 0))
    if inside.size == 0:
        return True
    return not np.any(curve.v[inside[0]:] > 0)
