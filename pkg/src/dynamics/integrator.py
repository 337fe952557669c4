"""
적응형 Runge-Kutta 측지선 적분기

Dormand-Prince 5(4) 내장 쌍(scipy RK45)을 한 스텝씩 진행시키며
속도 폭주(blow-up)와 스텝 붕괴를 감지합니다. 유한 탈출 시간은
마지막 스텝들의 1/‖v‖ 를 t 에 대해 직선 근사하여 외삽합니다.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import RK45

from ..config import config
from ..exceptions import InputDomainError
from .models import GeodesicState, ModelKind

logger = logging.getLogger(__name__)


class Termination(str, Enum):
    HORIZON_REACHED = "HorizonReached"
    BLOW_UP = "BlowUp"
    STEP_UNDERFLOW = "StepUnderflow"


@dataclass(frozen=True)
class IntegrationOptions:
    """적분 옵션. 기본값은 config.integrator 에서 가져옵니다."""
    rtol: float = field(default_factory=lambda: config.integrator.rtol)
    atol: float = field(default_factory=lambda: config.integrator.atol)
    blow_up_norm: float = field(default_factory=lambda: config.integrator.blow_up_norm)
    min_step_ratio: float = field(default_factory=lambda: config.integrator.min_step_ratio)
    escape_fit_window: int = field(default_factory=lambda: config.integrator.escape_fit_window)
    max_steps: int = field(default_factory=lambda: config.integrator.max_steps)
    t_eval: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        for name in ("rtol", "atol", "blow_up_norm", "min_step_ratio"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InputDomainError(f"{name}는 양의 유한값이어야 합니다: {value!r}")
        if self.escape_fit_window < 2:
            raise InputDomainError(f"escape_fit_window는 2 이상이어야 합니다: {self.escape_fit_window}")
        if self.max_steps < 1:
            raise InputDomainError(f"max_steps는 1 이상이어야 합니다: {self.max_steps}")
        if self.t_eval is not None:
            object.__setattr__(self, "t_eval", tuple(float(t) for t in self.t_eval))

    @classmethod
    def from_config(cls, section=None, **overrides) -> "IntegrationOptions":
        """IntegratorConfig 섹션에서 옵션을 만듭니다."""
        section = config.integrator if section is None else section
        values = {
            "rtol": section.rtol,
            "atol": section.atol,
            "blow_up_norm": section.blow_up_norm,
            "min_step_ratio": section.min_step_ratio,
            "escape_fit_window": section.escape_fit_window,
            "max_steps": section.max_steps,
        }
        values.update(overrides)
        return cls(**values)

    def with_tolerance(self, tol: float) -> "IntegrationOptions":
        return replace(self, rtol=tol, atol=tol)


@dataclass(frozen=True)
class IntegrationStats:
    accepted_steps: int
    rhs_evaluations: int
    max_norm: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "accepted_steps": self.accepted_steps,
            "rhs_evaluations": self.rhs_evaluations,
            "max_norm": self.max_norm,
        }


@dataclass(frozen=True, eq=False)
class SampledPath:
    """적분 결과의 공통 표현 (시간, 상태 배열, 종료 사유)"""
    t: np.ndarray
    y: np.ndarray
    termination: Termination
    escape_time: Optional[float]
    stats: IntegrationStats


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    표본화된 측지선 (t, x, v) 과 종료 사유

    BlowUp 은 ‖v‖ 가 blow_up_norm 을 넘었거나 유한하지 않게 된 경우에만 붙습니다.
    스텝 붕괴와 스텝 상한은 속도와 무관하게 StepUnderflow 입니다.
    """
    t: np.ndarray
    x: np.ndarray
    v: np.ndarray
    termination: Termination
    escape_time: Optional[float] = None
    stats: Optional[IntegrationStats] = None

    def __len__(self) -> int:
        return len(self.t)

    @property
    def final_state(self) -> GeodesicState:
        return GeodesicState(self.x[-1], self.v[-1])

    def speeds(self) -> np.ndarray:
        return np.hypot(self.v[:, 0], self.v[:, 1])

    def rows(self) -> np.ndarray:
        """(t, x1, x2, v1, v2) 열 순서의 배열"""
        return np.column_stack([self.t, self.x, self.v])

    def summary(self) -> Dict[str, Any]:
        return {
            "termination": self.termination.value,
            "escape_time": self.escape_time,
            "samples": len(self.t),
            "stats": self.stats.to_dict() if self.stats else None,
        }


def _escape_estimate(times: Sequence[float], speeds: Sequence[float]) -> Optional[float]:
    if len(times) < 2:
        return None
    inverse = 1.0 / np.asarray(speeds, dtype=float)
    slope, intercept = np.polyfit(np.asarray(times, dtype=float), inverse, 1)
    if slope == 0.0 or not np.isfinite(slope):
        return None
    return float(-intercept / slope)


def integrate_system(
    rhs: Callable[[np.ndarray], np.ndarray],
    y0: Sequence[float],
    t_span: Tuple[float, float],
    opts: IntegrationOptions,
    velocity: slice,
) -> SampledPath:
    """
    자율 ODE y' = rhs(y) 를 적분합니다.

    :param rhs: 우변
    :param y0: 초기 상태
    :param t_span: (t₀, t₁), t₁ < t₀ 이면 역방향
    :param opts: 적분 옵션
    :param velocity: 폭주 판정에 쓰는 상태 성분
    :return: SampledPath
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not (math.isfinite(t0) and math.isfinite(t1)) or t0 == t1:
        raise InputDomainError(f"적분 구간이 퇴화되었거나 유한하지 않습니다: {t_span!r}")
    y0 = np.asarray(y0, dtype=float)
    if not np.all(np.isfinite(y0)):
        raise InputDomainError(f"초기 상태가 유한하지 않습니다: {y0!r}")

    direction = 1.0 if t1 > t0 else -1.0
    min_step = opts.min_step_ratio * abs(t1 - t0)
    solver = RK45(lambda t, y: rhs(y), t0, y0, t1, rtol=opts.rtol, atol=opts.atol)

    dense_mode = opts.t_eval is not None
    pending: List[float] = []
    if dense_mode:
        pending = sorted(
            (t for t in opts.t_eval if 0 < (t - t0) * direction <= abs(t1 - t0)),
            key=lambda t: (t - t0) * direction,
        )
    times: List[float] = [t0]
    states: List[np.ndarray] = [y0.copy()]
    fit_t = deque([t0], maxlen=opts.escape_fit_window)
    first_speed = float(np.linalg.norm(y0[velocity]))
    fit_s = deque([first_speed], maxlen=opts.escape_fit_window)
    max_norm = first_speed
    steps = 0
    termination: Optional[Termination] = None

    while solver.status == "running":
        if steps >= opts.max_steps:
            logger.warning("스텝 상한(%d) 도달: t=%.6g", opts.max_steps, solver.t)
            termination = Termination.STEP_UNDERFLOW
            break
        message = solver.step()
        if solver.status == "failed":
            logger.debug("적분기 실패: %s (t=%.6g)", message, solver.t)
            termination = Termination.STEP_UNDERFLOW
            break
        steps += 1

        y = solver.y
        speed = float(np.linalg.norm(y[velocity]))
        if not math.isfinite(speed):
            max_norm = math.inf
            termination = Termination.BLOW_UP
            break
        max_norm = max(max_norm, speed)
        fit_t.append(solver.t)
        fit_s.append(speed)

        if dense_mode:
            dense = solver.dense_output()
            while pending and (pending[0] - solver.t) * direction <= 0:
                target = pending.pop(0)
                times.append(target)
                states.append(np.asarray(dense(target), dtype=float))
        else:
            times.append(solver.t)
            states.append(y.copy())

        if speed > opts.blow_up_norm:
            termination = Termination.BLOW_UP
            break
        if solver.status == "running" and solver.step_size < min_step:
            logger.debug("스텝 붕괴: h=%.3e, ‖v‖=%.3e", solver.step_size, speed)
            termination = Termination.STEP_UNDERFLOW
            break

    if termination is None:
        termination = Termination.HORIZON_REACHED

    if (solver.t - times[-1]) * direction > 0 and np.all(np.isfinite(solver.y)):
        times.append(solver.t)
        states.append(solver.y.copy())

    escape = None
    if termination is Termination.BLOW_UP:
        escape = _escape_estimate(list(fit_t), list(fit_s))
        logger.info("속도 폭주 감지: t=%.9g, ‖v‖=%.3e, 탈출 추정=%s", solver.t, fit_s[-1], escape)

    return SampledPath(
        t=np.asarray(times),
        y=np.vstack(states),
        termination=termination,
        escape_time=escape,
        stats=IntegrationStats(steps, int(solver.nfev), max_norm),
    )


def integrate(
    kind: ModelKind,
    s0: GeodesicState,
    t_span: Tuple[float, float],
    opts: Optional[IntegrationOptions] = None,
) -> Trajectory:
    """
    측지선 방정식을 적분합니다.

    :param kind: ConstantModel 또는 TildeM3Model
    :param s0: 초기 상태 (x, v)
    :param t_span: (t₀, t₁)
    :param opts: 적분 옵션 (기본: config.integrator)
    :return: Trajectory
    """
    opts = IntegrationOptions() if opts is None else opts

    def rhs(y: np.ndarray) -> np.ndarray:
        return np.concatenate([y[2:], kind.acceleration(y[:2], y[2:])])

    path = integrate_system(rhs, s0.as_array(), t_span, opts, velocity=slice(2, 4))
    return Trajectory(
        t=path.t,
        x=path.y[:, :2],
        v=path.y[:, 2:],
        termination=path.termination,
        escape_time=path.escape_time,
        stats=path.stats,
    )
